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

#ifndef PARLEY_SURVEY_VALIDATE_HPP_
#define PARLEY_SURVEY_VALIDATE_HPP_

#include <string>
#include <vector>

#include "parley/survey/types.hpp"

namespace parley::survey {

enum class ViolationKind {
  wrong_kind,        // answer variant not allowed for the question kind
  unknown_code,      // choice code not among the question's options
  empty_multi_set,   // multi_choice with no codes
  special_in_multi,  // sentinel code mixed into a multi-choice set
  missing_answer,    // response set lacks an answer for this question
  unknown_question,  // answer for an index the survey does not define
};

struct Violation {
  ViolationKind kind;
  int question_index = 0;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string message() const;
};

/// Checks one answer against its question. Total, never throws.
ValidationResult validate_answer(const Question& q, const AnswerValue& a);

/// Completeness plus per-answer validity for a whole response set.
ValidationResult validate_response_set(const SurveyDefinition& survey,
                                       const ResponseSet& rs);

const char* to_string(ViolationKind kind);

}  // namespace parley::survey

#endif  // PARLEY_SURVEY_VALIDATE_HPP_
