// Copyright 2026 The Parley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARLEY_TEXT_NUMBERS_HPP_
#define PARLEY_TEXT_NUMBERS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parley::text {

/// First decimal number ("12", "98.6") appearing in raw text. Works on the
/// un-normalized string so decimal points survive (token normalization
/// splits "98.6" into two tokens).
std::optional<double> first_number_in_raw(std::string_view raw);

/// Word-number lookup, zero..twenty plus "none" (= 0). Input must be a
/// single lowercase token.
std::optional<int> word_number(std::string_view token);

/// First number in a normalized token list: digit tokens win, then word
/// numbers. Digit tokens longer than 9 chars are ignored (overflow guard).
std::optional<double> first_number_in_tokens(
    const std::vector<std::string>& tokens);

/// Decimal formatting with trailing zeros trimmed: 98.60 -> "98.6",
/// 3.0 -> "3". Used for upload fields and dialogue rendering.
std::string format_trimmed(double value);

}  // namespace parley::text

#endif  // PARLEY_TEXT_NUMBERS_HPP_
