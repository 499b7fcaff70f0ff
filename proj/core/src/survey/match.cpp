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

#include "parley/survey/match.hpp"

#include <algorithm>
#include <unordered_set>

#include "parley/text/normalize.hpp"

namespace parley::survey {

namespace {

bool all_tokens_present(const std::vector<std::string>& utterance,
                        const std::vector<std::string>& label_tokens) {
  std::unordered_set<std::string_view> seen(utterance.begin(), utterance.end());
  for (const auto& t : label_tokens) {
    if (!seen.count(t)) return false;
  }
  return true;
}

int last_token_occurrence(const std::vector<std::string>& utterance,
                          const std::vector<std::string>& label_tokens) {
  std::unordered_set<std::string_view> wanted(label_tokens.begin(),
                                              label_tokens.end());
  for (int i = static_cast<int>(utterance.size()) - 1; i >= 0; --i) {
    if (wanted.count(utterance[static_cast<size_t>(i)])) return i;
  }
  return -1;
}

struct Ranked {
  int option_index = -1;
  int position = -1;
  size_t label_len = 0;

  bool better_than(const Ranked& rhs) const {
    if (position != rhs.position) return position > rhs.position;
    if (label_len != rhs.label_len) return label_len > rhs.label_len;
    return false;  // equal rank: instrument order wins (first kept)
  }
};

std::vector<Ranked> rank_matches(const Question& q,
                                 const std::vector<std::string>& utterance) {
  std::vector<Ranked> out;
  for (size_t i = 0; i < q.options.size(); ++i) {
    const auto label_tokens = text::normalize_text(q.options[i].label);
    if (label_tokens.empty()) continue;
    if (!all_tokens_present(utterance, label_tokens)) continue;
    int pos = last_completion_position(utterance, label_tokens);
    if (pos < 0) pos = last_token_occurrence(utterance, label_tokens);
    out.push_back(
        Ranked{static_cast<int>(i), pos, label_tokens.size()});
  }
  return out;
}

}  // namespace

int last_completion_position(const std::vector<std::string>& utterance,
                             const std::vector<std::string>& label_tokens) {
  int last = -1;
  size_t need = 0;
  for (size_t i = 0; i < utterance.size(); ++i) {
    if (utterance[i] == label_tokens[need]) {
      ++need;
      if (need == label_tokens.size()) {
        last = static_cast<int>(i);
        need = 0;  // restart: later full repetitions win
      }
    }
  }
  return last;
}

int best_option_match(const Question& q,
                      const std::vector<std::string>& utterance_tokens) {
  Ranked best;
  for (const auto& r : rank_matches(q, utterance_tokens)) {
    if (best.option_index < 0 || r.better_than(best)) best = r;
  }
  return best.option_index;
}

AnswerValue match_option(const Question& q, std::string_view utterance) {
  const auto tokens = text::normalize_text(utterance);

  if (q.kind == QuestionKind::multi_choice) {
    auto ranked = rank_matches(q, tokens);
    std::set<std::string> codes;
    for (const auto& r : ranked) {
      const auto& opt = q.options[static_cast<size_t>(r.option_index)];
      if (special_code_of(opt) == SpecialCode::none) codes.insert(opt.code);
    }
    if (!codes.empty()) return AnswerValue::multi(std::move(codes));
    // Only sentinel options (if anything) matched.
    Ranked best;
    for (const auto& r : ranked) {
      if (best.option_index < 0 || r.better_than(best)) best = r;
    }
    if (best.option_index >= 0) {
      return AnswerValue::choice(
          q.options[static_cast<size_t>(best.option_index)].code);
    }
    return AnswerValue::other(std::string(utterance));
  }

  const int best = best_option_match(q, tokens);
  if (best < 0) return AnswerValue::other(std::string(utterance));
  return AnswerValue::choice(q.options[static_cast<size_t>(best)].code);
}

}  // namespace parley::survey
