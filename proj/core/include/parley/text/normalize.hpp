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

#ifndef PARLEY_TEXT_NORMALIZE_HPP_
#define PARLEY_TEXT_NORMALIZE_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace parley::text {

/// Canonical token pipeline applied before any word-level comparison
/// (scoring, option matching). Steps, in order:
///   1. lowercase (ASCII; typographic apostrophes folded to ')
///   2. expand common English contractions ("let's" -> "let us")
///   3. strip punctuation to spaces
///   4. collapse whitespace and trim
///   5. drop empty tokens
/// The result is a list of [a-z0-9]+ tokens. Idempotent: normalizing the
/// joined output again yields the same tokens.
std::vector<std::string> normalize_text(std::string_view raw);

/// Single-string form of normalize_text (tokens joined by one space).
std::string normalize_join(std::string_view raw);

/// The fixed contraction table used by step 2, lowercase key -> expansion.
const std::vector<std::pair<std::string, std::string>>& contraction_table();

}  // namespace parley::text

#endif  // PARLEY_TEXT_NORMALIZE_HPP_
