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

#ifndef PARLEY_SURVEY_TYPES_HPP_
#define PARLEY_SURVEY_TYPES_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace parley::survey {

/// One response option of a question. Codes are stable snake_case slugs
/// (not letters), so stored records survive option reordering. `special`
/// marks the REFUSED / DON'T KNOW / NOT SURE / OTHER sentinels.
struct OptionDef {
  std::string code;
  std::string label;
  bool special = false;
};

/// Sentinel identity of an option, derived from its code.
enum class SpecialCode { none, refused, dont_know, not_sure, other };

SpecialCode special_code_of(std::string_view code);
inline SpecialCode special_code_of(const OptionDef& opt) {
  return special_code_of(opt.code);
}

enum class QuestionKind { single_choice, multi_choice, numeric };

enum class NumericUnit { count_of_persons, degrees_fahrenheit };

struct Question {
  int index = 0;
  std::string text;
  QuestionKind kind = QuestionKind::single_choice;
  std::vector<OptionDef> options;
  std::optional<NumericUnit> unit;
  /// For day-range bucket questions: integer day count -> option code.
  std::map<int, std::string> day_bucket_map;
  /// Extra guidance appended to this question's line in the phone-agent
  /// prompt (e.g. an inline response-option list).
  std::string agent_hint;
  /// Option code a bare affirmative ("Yes.") resolves to, when the
  /// instrument's labeling convention defines one for this question.
  std::string bare_yes_target;

  const OptionDef* find_option(std::string_view code) const;
  bool has_day_buckets() const { return !day_bucket_map.empty(); }
};

struct SurveyDefinition {
  std::string id;
  std::string title;
  /// Purpose clause used in the phone-agent prompt header.
  std::string purpose;
  std::vector<Question> questions;  // contiguous indices 1..N

  const Question* find(int index) const;
};

/// A single answer. Substantive choices carry option codes; numeric
/// questions carry decimals; OTHER and REFUSED are the analyzer sentinels.
/// "Don't know" / "Not sure" are ordinary option codes, not variants.
class AnswerValue {
 public:
  enum class Kind { choice, multi_choice, numeric, other, refused };

  AnswerValue() : data_(RefusedTag{}) {}

  static AnswerValue choice(std::string code);
  static AnswerValue multi(std::set<std::string> codes);
  static AnswerValue numeric(double value);
  static AnswerValue other(std::optional<std::string> raw_text = std::nullopt);
  static AnswerValue refused();

  Kind kind() const;
  const std::string& code() const;              // choice only
  const std::set<std::string>& codes() const;   // multi_choice only
  double value() const;                         // numeric only
  const std::optional<std::string>& other_text() const;  // other only

  /// Canonical short form, e.g. "choice:fair", "numeric:98.6", "refused".
  /// OTHER collapses to "other" regardless of free text (used for vote
  /// tallies and diagnostics).
  std::string key() const;

  bool operator==(const AnswerValue& rhs) const { return data_ == rhs.data_; }
  bool operator!=(const AnswerValue& rhs) const { return !(*this == rhs); }

 private:
  struct ChoiceTag {
    std::string code;
    bool operator==(const ChoiceTag&) const = default;
  };
  struct MultiTag {
    std::set<std::string> codes;
    bool operator==(const MultiTag&) const = default;
  };
  struct NumericTag {
    double value;
    bool operator==(const NumericTag&) const = default;
  };
  struct OtherTag {
    std::optional<std::string> raw_text;
    bool operator==(const OtherTag&) const = default;
  };
  struct RefusedTag {
    bool operator==(const RefusedTag&) const = default;
  };
  using Data =
      std::variant<ChoiceTag, MultiTag, NumericTag, OtherTag, RefusedTag>;

  explicit AnswerValue(Data data) : data_(std::move(data)) {}
  Data data_;
};

/// Complete mapping question index -> answer for one respondent; both
/// synthesized ground truth and extracted predictions use this shape.
struct ResponseSet {
  std::string survey_id;
  std::string respondent_id;
  std::map<int, AnswerValue> answers;

  bool operator==(const ResponseSet&) const = default;
  bool same_answers(const ResponseSet& rhs) const {
    return survey_id == rhs.survey_id && answers == rhs.answers;
  }
};

const char* to_string(QuestionKind kind);
const char* to_string(NumericUnit unit);
std::optional<QuestionKind> question_kind_from(std::string_view s);
std::optional<NumericUnit> numeric_unit_from(std::string_view s);

}  // namespace parley::survey

#endif  // PARLEY_SURVEY_TYPES_HPP_
