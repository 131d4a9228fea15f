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

#ifndef RADREP_ERRORS_HPP
#define RADREP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace radrep {

/// Library error with a stable machine-readable code ("SingularCurve",
/// "QuadratureError", ...). The CLI maps codes onto exit statuses; tests
/// match on them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Non-convergent quadrature keeps its best estimate so callers can decide
/// whether the degraded value is still usable.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& message, double best_estimate, double error_estimate)
        : Error("QuadratureError", message),
          best_estimate_(best_estimate),
          error_estimate_(error_estimate) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

} // namespace radrep

#endif
