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

#include "parley/survey/validate.hpp"

#include <sstream>

namespace parley::survey {

namespace {

void add(ValidationResult& result, ViolationKind kind, int index,
         std::string detail) {
  result.violations.push_back(Violation{kind, index, std::move(detail)});
}

}  // namespace

std::string ValidationResult::message() const {
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << "Q" << violations[i].question_index << " "
       << to_string(violations[i].kind);
    if (!violations[i].detail.empty()) os << ": " << violations[i].detail;
  }
  return os.str();
}

ValidationResult validate_answer(const Question& q, const AnswerValue& a) {
  ValidationResult result;
  switch (a.kind()) {
    case AnswerValue::Kind::choice: {
      if (q.find_option(a.code()) == nullptr) {
        add(result, ViolationKind::unknown_code, q.index, a.code());
      }
      break;
    }
    case AnswerValue::Kind::multi_choice: {
      if (q.kind != QuestionKind::multi_choice) {
        add(result, ViolationKind::wrong_kind, q.index,
            "multi_choice answer on a " + std::string(to_string(q.kind)) +
                " question");
        break;
      }
      if (a.codes().empty()) {
        add(result, ViolationKind::empty_multi_set, q.index, "");
        break;
      }
      for (const auto& code : a.codes()) {
        if (q.find_option(code) == nullptr) {
          add(result, ViolationKind::unknown_code, q.index, code);
        } else if (special_code_of(code) != SpecialCode::none) {
          add(result, ViolationKind::special_in_multi, q.index, code);
        }
      }
      break;
    }
    case AnswerValue::Kind::numeric: {
      if (q.kind != QuestionKind::numeric) {
        add(result, ViolationKind::wrong_kind, q.index,
            "numeric answer on a " + std::string(to_string(q.kind)) +
                " question");
      }
      break;
    }
    case AnswerValue::Kind::other:
    case AnswerValue::Kind::refused:
      // Representable on every question.
      break;
  }
  return result;
}

ValidationResult validate_response_set(const SurveyDefinition& survey,
                                       const ResponseSet& rs) {
  ValidationResult result;
  for (const auto& q : survey.questions) {
    auto it = rs.answers.find(q.index);
    if (it == rs.answers.end()) {
      add(result, ViolationKind::missing_answer, q.index, "");
      continue;
    }
    auto one = validate_answer(q, it->second);
    for (auto& v : one.violations) result.violations.push_back(std::move(v));
  }
  for (const auto& [index, answer] : rs.answers) {
    (void)answer;
    if (survey.find(index) == nullptr) {
      add(result, ViolationKind::unknown_question, index, "");
    }
  }
  return result;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::wrong_kind: return "wrong-kind";
    case ViolationKind::unknown_code: return "unknown-code";
    case ViolationKind::empty_multi_set: return "empty-multi-set";
    case ViolationKind::special_in_multi: return "special-in-multi";
    case ViolationKind::missing_answer: return "missing-answer";
    case ViolationKind::unknown_question: return "unknown-question";
  }
  return "";
}

}  // namespace parley::survey
