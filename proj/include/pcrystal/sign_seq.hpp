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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcrystal {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

inline int value(Sign s) { return static_cast<int>(s); }
char to_char(Sign s);

/// A finite word over {+, 0, -}.  Text form uses the characters '+', '0', '-'.
class SignSeq {
 public:
  SignSeq() = default;
  explicit SignSeq(std::vector<Sign> entries) : entries_(std::move(entries)) {}

  /// Throws InputError on any character other than '+', '0', '-'.
  static SignSeq parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// 1-based access, matching the position conventions of analyze().
  Sign at(std::size_t pos) const { return entries_.at(pos - 1); }
  void set(std::size_t pos, Sign s) { entries_.at(pos - 1) = s; }

  const std::vector<Sign>& entries() const { return entries_; }
  int sum() const;
  std::string str() const;

  void push_back(Sign s) { entries_.push_back(s); }

  friend bool operator==(const SignSeq&, const SignSeq&) = default;

 private:
  std::vector<Sign> entries_;
};

/// Partial-sum statistics of a sign sequence.  Positions are 1-based.
struct SignAnalysis {
  int epsilon = 0;
  int phi = 0;
  std::optional<std::size_t> good_pos;    // present iff epsilon > 0
  std::optional<std::size_t> cogood_pos;  // present iff phi > 0

  friend bool operator==(const SignAnalysis&, const SignAnalysis&) = default;
};

// epsilon = max_{0<=i<=m} -(pi_1+...+pi_i), good = smallest maximiser;
// phi = max_{1<=i<=m+1} (pi_i+...+pi_m), cogood = largest maximiser.
SignAnalysis analyze(const SignSeq& seq);

/// Cancels every "+0...0-" segment to zeros until no '+' precedes a '-'.
SignSeq reduce(const SignSeq& seq);

SignSeq concat(const SignSeq& left, const SignSeq& right);

}  // namespace pcrystal
