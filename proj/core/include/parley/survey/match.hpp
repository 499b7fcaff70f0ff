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

#ifndef PARLEY_SURVEY_MATCH_HPP_
#define PARLEY_SURVEY_MATCH_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "parley/survey/types.hpp"

namespace parley::survey {

/// Maps a respondent utterance onto a question's options.
///
/// An option matches when every token of its normalized label occurs in the
/// utterance. When several options match, the winner is the one uttered
/// last: options are ranked by the position where an in-order traversal of
/// their label tokens last completes, with ties going to the longer label
/// (more specific) and then to instrument order. Total and deterministic;
/// utterances matching nothing map to Other (carrying the raw utterance).
///
/// single_choice questions yield Choice(best) and multi_choice questions
/// yield the set of all matching substantive options (MultiChoice). A
/// multi_choice utterance matching only a sentinel option (e.g. "Refused")
/// yields Choice(sentinel); callers canonicalize sentinels as needed.
AnswerValue match_option(const Question& q, std::string_view utterance);

/// Ranking core of match_option, exposed for the single-choice path:
/// returns the index into q.options of the best-matching option, or -1.
int best_option_match(const Question& q,
                      const std::vector<std::string>& utterance_tokens);

/// Position at which an in-order traversal of `label_tokens` over
/// `utterance` last completes (greedy, restarting after each completion),
/// or -1 when some label token never occurs.
int last_completion_position(const std::vector<std::string>& utterance,
                             const std::vector<std::string>& label_tokens);

}  // namespace parley::survey

#endif  // PARLEY_SURVEY_MATCH_HPP_
