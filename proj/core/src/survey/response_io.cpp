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

#include "parley/survey/response_io.hpp"

#include "parley/error.hpp"

namespace parley::survey {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json answer_to_json(const AnswerValue& a) {
  ordered_json j;
  switch (a.kind()) {
    case AnswerValue::Kind::choice:
      j["kind"] = "choice";
      j["code"] = a.code();
      break;
    case AnswerValue::Kind::multi_choice:
      j["kind"] = "multi_choice";
      j["codes"] = a.codes();
      break;
    case AnswerValue::Kind::numeric:
      j["kind"] = "numeric";
      j["value"] = a.value();
      break;
    case AnswerValue::Kind::other:
      j["kind"] = "other";
      if (a.other_text()) j["text"] = *a.other_text();
      break;
    case AnswerValue::Kind::refused:
      j["kind"] = "refused";
      break;
  }
  return j;
}

AnswerValue answer_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "choice") return AnswerValue::choice(j.at("code").get<std::string>());
  if (kind == "multi_choice") {
    return AnswerValue::multi(j.at("codes").get<std::set<std::string>>());
  }
  if (kind == "numeric") return AnswerValue::numeric(j.at("value").get<double>());
  if (kind == "other") {
    std::optional<std::string> text;
    if (j.contains("text")) text = j.at("text").get<std::string>();
    return AnswerValue::other(std::move(text));
  }
  if (kind == "refused") return AnswerValue::refused();
  throw ParseError("unknown answer kind \"" + kind + "\"");
}

ordered_json response_set_to_json(const ResponseSet& rs) {
  ordered_json j;
  j["survey_id"] = rs.survey_id;
  j["respondent_id"] = rs.respondent_id;
  ordered_json answers = ordered_json::object();
  for (const auto& [index, answer] : rs.answers) {
    answers[std::to_string(index)] = answer_to_json(answer);
  }
  j["answers"] = std::move(answers);
  return j;
}

ResponseSet response_set_from_json(const json& j) {
  ResponseSet rs;
  rs.survey_id = j.at("survey_id").get<std::string>();
  rs.respondent_id = j.value("respondent_id", "");
  for (const auto& [key, value] : j.at("answers").items()) {
    int index = 0;
    try {
      index = std::stoi(key);
    } catch (const std::exception&) {
      throw ParseError("response set: non-integer question index \"" + key +
                       "\"");
    }
    rs.answers.emplace(index, answer_from_json(value));
  }
  return rs;
}

}  // namespace parley::survey
