// Copyright 2026 The pcrystal Authors. All Rights Reserved.
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

#include "pcrystal/sign_seq.hpp"

#include <numeric>

#include "pcrystal/errors.hpp"

namespace pcrystal {

char to_char(Sign s) {
  switch (s) {
    case Sign::Plus:
      return '+';
    case Sign::Minus:
      return '-';
    case Sign::Zero:
      break;
  }
  return '0';
}

SignSeq SignSeq::parse(std::string_view text) {
  std::vector<Sign> out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '+':
        out.push_back(Sign::Plus);
        break;
      case '-':
        out.push_back(Sign::Minus);
        break;
      case '0':
        out.push_back(Sign::Zero);
        break;
      default:
        throw InputError(std::string("invalid sign character '") + ch +
                         "' (expected '+', '0' or '-')");
    }
  }
  return SignSeq(std::move(out));
}

int SignSeq::sum() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0,
                         [](int acc, Sign s) { return acc + value(s); });
}

std::string SignSeq::str() const {
  std::string out;
  out.reserve(entries_.size());
  for (Sign s : entries_) out.push_back(to_char(s));
  return out;
}

SignAnalysis analyze(const SignSeq& seq) {
  const std::size_t m = seq.size();
  SignAnalysis out;

  // g_0 = 0; g_i = -(pi_1 + ... + pi_i).  Strict '>' keeps the smallest index.
  int g = 0;
  std::size_t best_g = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    g -= value(seq.at(i));
    if (g > out.epsilon) {
      out.epsilon = g;
      best_g = i;
    }
  }
  if (out.epsilon > 0) out.good_pos = best_g;

  // h_{m+1} = 0; h_i = pi_i + ... + pi_m.  Scanning right to left with '>'
  // keeps the largest index.
  int h = 0;
  std::size_t best_h = m + 1;
  for (std::size_t i = m; i >= 1; --i) {
    h += value(seq.at(i));
    if (h > out.phi) {
      out.phi = h;
      best_h = i;
    }
  }
  if (out.phi > 0) out.cogood_pos = best_h;
  return out;
}

SignSeq reduce(const SignSeq& seq) {
  // Matching each '-' with the nearest unmatched '+' to its left is exactly
  // the fixed point of cancelling innermost "+0...0-" segments.
  std::vector<Sign> out = seq.entries();
  std::vector<std::size_t> open;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == Sign::Plus) {
      open.push_back(k);
    } else if (out[k] == Sign::Minus && !open.empty()) {
      out[open.back()] = Sign::Zero;
      out[k] = Sign::Zero;
      open.pop_back();
    }
  }
  return SignSeq(std::move(out));
}

SignSeq concat(const SignSeq& left, const SignSeq& right) {
  std::vector<Sign> out = left.entries();
  out.insert(out.end(), right.entries().begin(), right.entries().end());
  return SignSeq(std::move(out));
}

}  // namespace pcrystal
