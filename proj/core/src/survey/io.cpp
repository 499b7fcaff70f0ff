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

#include "parley/survey/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "parley/error.hpp"

namespace parley::survey {

using nlohmann::ordered_json;

namespace {

Question parse_question(const ordered_json& jq) {
  Question q;
  q.index = jq.at("index").get<int>();
  q.text = jq.at("text").get<std::string>();
  const auto kind_s = jq.at("kind").get<std::string>();
  auto kind = question_kind_from(kind_s);
  if (!kind) {
    throw ParseError("question " + std::to_string(q.index) +
                     ": unknown kind \"" + kind_s + "\"");
  }
  q.kind = *kind;

  if (jq.contains("unit")) {
    const auto unit_s = jq.at("unit").get<std::string>();
    auto unit = numeric_unit_from(unit_s);
    if (!unit) {
      throw ParseError("question " + std::to_string(q.index) +
                       ": unknown unit \"" + unit_s + "\"");
    }
    q.unit = *unit;
  }
  if (jq.contains("agent_hint")) {
    q.agent_hint = jq.at("agent_hint").get<std::string>();
  }
  if (jq.contains("bare_yes_target")) {
    q.bare_yes_target = jq.at("bare_yes_target").get<std::string>();
  }

  std::set<std::string> seen_codes;
  for (const auto& jo : jq.at("options")) {
    OptionDef opt;
    opt.code = jo.at("code").get<std::string>();
    opt.label = jo.at("label").get<std::string>();
    opt.special = jo.value("special", false);
    if (opt.label.empty()) {
      throw ValidationError("question " + std::to_string(q.index) +
                            ": empty option label");
    }
    if (!seen_codes.insert(opt.code).second) {
      throw ValidationError("question " + std::to_string(q.index) +
                            ": duplicate option code \"" + opt.code + "\"");
    }
    q.options.push_back(std::move(opt));
  }

  if (jq.contains("day_bucket_map")) {
    for (const auto& [day_s, code] : jq.at("day_bucket_map").items()) {
      int day = 0;
      try {
        day = std::stoi(day_s);
      } catch (const std::exception&) {
        throw ParseError("question " + std::to_string(q.index) +
                         ": day_bucket_map key \"" + day_s +
                         "\" is not an integer");
      }
      q.day_bucket_map[day] = code.get<std::string>();
    }
    for (const auto& [day, code] : q.day_bucket_map) {
      const auto* opt = q.find_option(code);
      if (opt == nullptr) {
        throw ValidationError("question " + std::to_string(q.index) +
                              ": day_bucket_map day " + std::to_string(day) +
                              " points at unknown code \"" + code + "\"");
      }
    }
  }
  if (!q.bare_yes_target.empty() && q.find_option(q.bare_yes_target) == nullptr) {
    throw ValidationError("question " + std::to_string(q.index) +
                          ": bare_yes_target \"" + q.bare_yes_target +
                          "\" is not an option code");
  }
  return q;
}

}  // namespace

SurveyDefinition parse_survey(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("survey document: ") + e.what());
  }

  SurveyDefinition survey;
  try {
    survey.id = doc.at("id").get<std::string>();
    survey.title = doc.at("title").get<std::string>();
    survey.purpose = doc.value("purpose", "");
    for (const auto& jq : doc.at("questions")) {
      survey.questions.push_back(parse_question(jq));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("survey document: ") + e.what());
  }

  for (size_t i = 0; i < survey.questions.size(); ++i) {
    if (survey.questions[i].index != static_cast<int>(i) + 1) {
      throw ValidationError("non-contiguous indices: expected " +
                            std::to_string(i + 1) + ", found " +
                            std::to_string(survey.questions[i].index));
    }
  }
  if (survey.questions.empty()) {
    throw ValidationError("survey has no questions");
  }
  return survey;
}

SurveyDefinition load_survey(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read survey file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_survey(buf.str());
}

std::string serialize_survey(const SurveyDefinition& survey) {
  ordered_json doc;
  doc["id"] = survey.id;
  doc["title"] = survey.title;
  if (!survey.purpose.empty()) doc["purpose"] = survey.purpose;
  doc["questions"] = ordered_json::array();
  for (const auto& q : survey.questions) {
    ordered_json jq;
    jq["index"] = q.index;
    jq["text"] = q.text;
    jq["kind"] = to_string(q.kind);
    if (q.unit) jq["unit"] = to_string(*q.unit);
    if (!q.agent_hint.empty()) jq["agent_hint"] = q.agent_hint;
    if (!q.bare_yes_target.empty()) jq["bare_yes_target"] = q.bare_yes_target;
    jq["options"] = ordered_json::array();
    for (const auto& opt : q.options) {
      ordered_json jo;
      jo["code"] = opt.code;
      jo["label"] = opt.label;
      if (opt.special) jo["special"] = true;
      jq["options"].push_back(std::move(jo));
    }
    if (!q.day_bucket_map.empty()) {
      ordered_json jmap = ordered_json::object();
      for (const auto& [day, code] : q.day_bucket_map) {
        jmap[std::to_string(day)] = code;
      }
      jq["day_bucket_map"] = std::move(jmap);
    }
    doc["questions"].push_back(std::move(jq));
  }
  return doc.dump(2) + "\n";
}

}  // namespace parley::survey
