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

#include "parley/survey/types.hpp"

#include "parley/text/numbers.hpp"

namespace parley::survey {

SpecialCode special_code_of(std::string_view code) {
  if (code == "refused") return SpecialCode::refused;
  if (code == "dont_know") return SpecialCode::dont_know;
  if (code == "not_sure") return SpecialCode::not_sure;
  if (code == "other") return SpecialCode::other;
  return SpecialCode::none;
}

const OptionDef* Question::find_option(std::string_view code) const {
  for (const auto& opt : options) {
    if (opt.code == code) return &opt;
  }
  return nullptr;
}

const Question* SurveyDefinition::find(int index) const {
  if (index < 1 || index > static_cast<int>(questions.size())) return nullptr;
  // Load-time validation guarantees contiguous 1..N ordering.
  return &questions[static_cast<size_t>(index - 1)];
}

AnswerValue AnswerValue::choice(std::string code) {
  return AnswerValue(ChoiceTag{std::move(code)});
}
AnswerValue AnswerValue::multi(std::set<std::string> codes) {
  return AnswerValue(MultiTag{std::move(codes)});
}
AnswerValue AnswerValue::numeric(double value) {
  return AnswerValue(NumericTag{value});
}
AnswerValue AnswerValue::other(std::optional<std::string> raw_text) {
  return AnswerValue(OtherTag{std::move(raw_text)});
}
AnswerValue AnswerValue::refused() { return AnswerValue(RefusedTag{}); }

AnswerValue::Kind AnswerValue::kind() const {
  switch (data_.index()) {
    case 0: return Kind::choice;
    case 1: return Kind::multi_choice;
    case 2: return Kind::numeric;
    case 3: return Kind::other;
    default: return Kind::refused;
  }
}

const std::string& AnswerValue::code() const {
  return std::get<ChoiceTag>(data_).code;
}
const std::set<std::string>& AnswerValue::codes() const {
  return std::get<MultiTag>(data_).codes;
}
double AnswerValue::value() const { return std::get<NumericTag>(data_).value; }
const std::optional<std::string>& AnswerValue::other_text() const {
  return std::get<OtherTag>(data_).raw_text;
}

std::string AnswerValue::key() const {
  switch (kind()) {
    case Kind::choice:
      return "choice:" + code();
    case Kind::multi_choice: {
      std::string k = "multi:";
      bool first = true;
      for (const auto& c : codes()) {
        if (!first) k.push_back('+');
        k += c;
        first = false;
      }
      return k;
    }
    case Kind::numeric:
      return "numeric:" + text::format_trimmed(value());
    case Kind::other:
      return "other";
    case Kind::refused:
      return "refused";
  }
  return "";
}

const char* to_string(QuestionKind kind) {
  switch (kind) {
    case QuestionKind::single_choice: return "single_choice";
    case QuestionKind::multi_choice: return "multi_choice";
    case QuestionKind::numeric: return "numeric";
  }
  return "";
}

const char* to_string(NumericUnit unit) {
  switch (unit) {
    case NumericUnit::count_of_persons: return "count_of_persons";
    case NumericUnit::degrees_fahrenheit: return "degrees_fahrenheit";
  }
  return "";
}

std::optional<QuestionKind> question_kind_from(std::string_view s) {
  if (s == "single_choice") return QuestionKind::single_choice;
  if (s == "multi_choice") return QuestionKind::multi_choice;
  if (s == "numeric") return QuestionKind::numeric;
  return std::nullopt;
}

std::optional<NumericUnit> numeric_unit_from(std::string_view s) {
  if (s == "count_of_persons") return NumericUnit::count_of_persons;
  if (s == "degrees_fahrenheit") return NumericUnit::degrees_fahrenheit;
  return std::nullopt;
}

}  // namespace parley::survey
