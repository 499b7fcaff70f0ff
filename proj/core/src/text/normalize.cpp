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

#include "parley/text/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace parley::text {

namespace {

// Expansion happens after lowercasing, so keys are lowercase. The table is
// applied to whole apostrophe-words only, never to substrings.
const std::vector<std::pair<std::string, std::string>> kContractions = {
    {"ain't", "am not"},       {"aren't", "are not"},
    {"can't", "cannot"},       {"could've", "could have"},
    {"couldn't", "could not"}, {"didn't", "did not"},
    {"doesn't", "does not"},   {"don't", "do not"},
    {"hadn't", "had not"},     {"hasn't", "has not"},
    {"haven't", "have not"},   {"he'd", "he would"},
    {"he'll", "he will"},      {"he's", "he is"},
    {"how's", "how is"},       {"i'd", "i would"},
    {"i'll", "i will"},        {"i'm", "i am"},
    {"i've", "i have"},        {"isn't", "is not"},
    {"it'd", "it would"},      {"it'll", "it will"},
    {"it's", "it is"},         {"let's", "let us"},
    {"might've", "might have"},{"mustn't", "must not"},
    {"needn't", "need not"},   {"shan't", "shall not"},
    {"she'd", "she would"},    {"she'll", "she will"},
    {"she's", "she is"},       {"should've", "should have"},
    {"shouldn't", "should not"},{"that's", "that is"},
    {"there's", "there is"},   {"they'd", "they would"},
    {"they'll", "they will"},  {"they're", "they are"},
    {"they've", "they have"},  {"wasn't", "was not"},
    {"we'd", "we would"},      {"we'll", "we will"},
    {"we're", "we are"},       {"we've", "we have"},
    {"weren't", "were not"},   {"what's", "what is"},
    {"when's", "when is"},     {"where's", "where is"},
    {"who's", "who is"},       {"won't", "will not"},
    {"would've", "would have"},{"wouldn't", "would not"},
    {"you'd", "you would"},    {"you'll", "you will"},
    {"you're", "you are"},     {"you've", "you have"},
};

const std::unordered_map<std::string, std::string>& contraction_map() {
  static const std::unordered_map<std::string, std::string> map(
      kContractions.begin(), kContractions.end());
  return map;
}

// Lowercases ASCII and folds the UTF-8 right single quote (U+2019) to '.
std::string fold_lower(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c == 0xE2 && i + 2 < raw.size() &&
        static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
        static_cast<unsigned char>(raw[i + 2]) == 0x99) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

bool is_token_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& contraction_table() {
  return kContractions;
}

std::vector<std::string> normalize_text(std::string_view raw) {
  const std::string lowered = fold_lower(raw);

  // Expand contractions on whitespace-delimited words; surrounding
  // punctuation is ignored when looking the word up and preserved around
  // the expansion (it is stripped in the next step anyway).
  std::string expanded;
  expanded.reserve(lowered.size() + 8);
  size_t i = 0;
  const auto& table = contraction_map();
  while (i < lowered.size()) {
    if (std::isspace(static_cast<unsigned char>(lowered[i]))) {
      expanded.push_back(' ');
      ++i;
      continue;
    }
    size_t j = i;
    while (j < lowered.size() &&
           !std::isspace(static_cast<unsigned char>(lowered[j]))) {
      ++j;
    }
    std::string_view word(lowered.data() + i, j - i);
    size_t b = 0;
    size_t e = word.size();
    while (b < e && !is_token_char(static_cast<unsigned char>(word[b])) &&
           word[b] != '\'') {
      ++b;
    }
    while (e > b && !is_token_char(static_cast<unsigned char>(word[e - 1])) &&
           word[e - 1] != '\'') {
      --e;
    }
    const std::string core(word.substr(b, e - b));
    auto it = table.find(core);
    expanded.append(word.substr(0, b));
    if (it != table.end()) {
      expanded.append(it->second);
    } else {
      expanded.append(core);
    }
    expanded.append(word.substr(e));
    i = j;
  }

  // Strip punctuation to spaces and collect tokens.
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : expanded) {
    if (is_token_char(c)) {
      cur.push_back(static_cast<char>(c));
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

std::string normalize_join(std::string_view raw) {
  const auto tokens = normalize_text(raw);
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace parley::text
