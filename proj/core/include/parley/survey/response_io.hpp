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

#ifndef PARLEY_SURVEY_RESPONSE_IO_HPP_
#define PARLEY_SURVEY_RESPONSE_IO_HPP_

#include <nlohmann/json.hpp>

#include "parley/survey/types.hpp"

namespace parley::survey {

nlohmann::ordered_json answer_to_json(const AnswerValue& a);
AnswerValue answer_from_json(const nlohmann::json& j);

nlohmann::ordered_json response_set_to_json(const ResponseSet& rs);
ResponseSet response_set_from_json(const nlohmann::json& j);

}  // namespace parley::survey

#endif  // PARLEY_SURVEY_RESPONSE_IO_HPP_
