/*
   Copyright 2026 The radrep authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef RADREP_TESTS_CORPUS_HPP
#define RADREP_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "radrep/expression.hpp"
#include "radrep/pipeline.hpp"

namespace radrep::testing {

inline ParametricCurve make_curve(const std::vector<std::string>& coordinates) {
    return parse_curve(coordinates);
}

struct CorpusEntry {
    std::string name;
    std::vector<std::string> coordinates;
    int zero_count;    // distinct zeros of omega in [0, 1]
    int max_mult;      // largest mult(omega, .) among them
};

/// Curves whose angular speed vanishes somewhere on [0, 1]: endpoint and
/// interior zeros, multiplicities 1..3, one rational-W entry and one 3D
/// entry.
inline const std::vector<CorpusEntry>& zero_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"cubic", {"t", "t^3"}, 1, 1},
        {"quartic", {"t", "t^4"}, 1, 2},
        {"quintic", {"t", "t^5"}, 1, 3},
        {"interior-cubic", {"t", "(t - 2/5)^3"}, 1, 1},
        {"interior-quartic", {"t", "(t - 1/2)^4"}, 1, 2},
        {"interior-quintic", {"t", "(t - 3/5)^5"}, 1, 3},
        {"right-cubic", {"t", "(t - 1)^3"}, 1, 1},
        {"right-quartic", {"t", "(t - 1)^4"}, 1, 2},
        {"irrational-zero", {"t", "t^4/12 - t^2/4"}, 1, 1},
        {"mixed-degree", {"t", "t^3 + t^5"}, 1, 1},
        {"space-cubic", {"t", "t^3", "t^4"}, 1, 1},
    };
    return corpus;
}

/// Curves with omega > 0 everywhere (still curved) plus straight lines.
inline const std::vector<CorpusEntry>& no_zero_corpus() {
    static const std::vector<CorpusEntry> corpus = {
        {"parabola", {"t", "t^2"}, 0, 0},
        {"rational-w", {"t/(1 + t)", "t^2"}, 0, 0},
        {"twisted", {"t", "t^2", "t^3"}, 0, 0},
    };
    return corpus;
}

} // namespace radrep::testing

#endif
