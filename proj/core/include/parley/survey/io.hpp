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

#ifndef PARLEY_SURVEY_IO_HPP_
#define PARLEY_SURVEY_IO_HPP_

#include <filesystem>
#include <string>

#include "parley/survey/types.hpp"

namespace parley::survey {

/// Loads and validates a survey definition document.
/// Throws ParseError on malformed JSON / unknown kinds and ValidationError
/// on invariant violations (non-contiguous indices, duplicate codes, ...).
SurveyDefinition load_survey(const std::filesystem::path& path);

/// Same, from an in-memory JSON string.
SurveyDefinition parse_survey(const std::string& json_text);

/// Inverse of load_survey: emits the documented JSON schema (2-space
/// indent). parse_survey(serialize_survey(s)) == s.
std::string serialize_survey(const SurveyDefinition& survey);

}  // namespace parley::survey

#endif  // PARLEY_SURVEY_IO_HPP_
