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

#include "parley/text/numbers.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>

namespace parley::text {

namespace {

const std::unordered_map<std::string_view, int> kWordNumbers = {
    {"zero", 0},     {"none", 0},      {"one", 1},       {"two", 2},
    {"three", 3},    {"four", 4},      {"five", 5},      {"six", 6},
    {"seven", 7},    {"eight", 8},     {"nine", 9},      {"ten", 10},
    {"eleven", 11},  {"twelve", 12},   {"thirteen", 13}, {"fourteen", 14},
    {"fifteen", 15}, {"sixteen", 16},  {"seventeen", 17},{"eighteen", 18},
    {"nineteen", 19},{"twenty", 20},
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::optional<double> first_number_in_raw(std::string_view raw) {
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!is_digit(raw[i])) continue;
    size_t j = i;
    while (j < raw.size() && is_digit(raw[j])) ++j;
    if (j + 1 < raw.size() && raw[j] == '.' && is_digit(raw[j + 1])) {
      ++j;
      while (j < raw.size() && is_digit(raw[j])) ++j;
    }
    if (j - i > 12) {  // absurd run of digits; skip it
      i = j;
      continue;
    }
    return std::strtod(std::string(raw.substr(i, j - i)).c_str(), nullptr);
  }
  return std::nullopt;
}

std::optional<int> word_number(std::string_view token) {
  auto it = kWordNumbers.find(token);
  if (it == kWordNumbers.end()) return std::nullopt;
  return it->second;
}

std::optional<double> first_number_in_tokens(
    const std::vector<std::string>& tokens) {
  for (const auto& tok : tokens) {
    if (!tok.empty() && is_digit(tok[0])) {
      if (tok.size() > 9) continue;
      bool all = true;
      for (char c : tok) all = all && is_digit(c);
      if (all) return static_cast<double>(std::strtol(tok.c_str(), nullptr, 10));
    }
    if (auto w = word_number(tok)) return static_cast<double>(*w);
  }
  return std::nullopt;
}

std::string format_trimmed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s(buf);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    size_t last = s.find_last_not_of('0');
    if (last == dot) last -= 1;
    s.erase(last + 1);
  }
  return s;
}

}  // namespace parley::text
