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

#ifndef RADREP_EXPRESSION_HPP
#define RADREP_EXPRESSION_HPP

#include <string>

#include "radrep/rational_function.hpp"

namespace radrep {

/// Parses an expression in the variable t into an exact rational function.
/// Grammar: + - * / ^ with parentheses and unary minus; coefficients are
/// integers, fractions ("2/5") or decimals ("0.25", "1.5e-2"), all read
/// exactly. Exponents are integers. Error "ParseError" on anything else,
/// including division by an identically-zero expression.
RationalFunction parse_rational_expression(const std::string& text);

} // namespace radrep

#endif
