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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace pcrystal {

using Rational = boost::rational<std::int64_t>;

/// Parses "3/2" or "2".  Throws InputError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Why a finite prefix fails to be an arm sequence.  Indices are 1-based;
/// `u` is zero for range violations.
struct ArmViolation {
  enum class Kind { Range, Additivity } kind;
  int t = 0;
  int u = 0;
  std::string message;
};

/// First violated axiom of the prefix, if any.  With `broad` the range
/// axiom is relaxed to 0 <= A_t <= nt - 1.
std::optional<ArmViolation> find_violation(int n, const std::vector<long>& prefix,
                                           bool broad = false);

enum class Extreme { None, Lower, Upper };

/// A validated finite prefix A_1..A_T of an arm sequence for sl_n-hat.
/// A_0 reads as 0.
class ArmSequence {
 public:
  /// Throws InvalidArmSequence (a DomainError) naming the failing indices.
  static ArmSequence validate(int n, std::vector<long> prefix, bool broad = false);

  /// A^{y,+}_t = floor(yt) or A^{y,-}_t = ceil(yt - 1), t = 1..length.
  /// Throws DomainError unless 1 <= y <= n-1 and length >= 1.
  static ArmSequence canonical(int n, Rational y, bool plus, int length);

  static ArmSequence berg(int n, int length) { return canonical(n, 1, true, length); }
  static ArmSequence restricted(int n, int length) {
    return canonical(n, n - 1, true, length);
  }
  static ArmSequence lower_extreme(int n, int length) {
    return canonical(n, 1, false, length);
  }

  int n() const { return n_; }
  int length() const { return static_cast<int>(prefix_.size()); }
  bool broad() const { return broad_; }
  const std::vector<long>& prefix() const { return prefix_; }

  /// A_t for 0 <= t <= length().  Throws ResourceError beyond the prefix.
  long at(int t) const;

  /// Greedy extension by the smallest admissible value at each new index.
  /// Throws ResourceError if some index admits no value.
  ArmSequence extended(int length) const;

  /// Prefix truncated to `length` terms (no-op when already shorter).
  ArmSequence truncated(int length) const;

  std::string str() const;

  friend bool operator==(const ArmSequence&, const ArmSequence&) = default;

 private:
  ArmSequence(int n, std::vector<long> prefix, bool broad)
      : n_(n), prefix_(std::move(prefix)), broad_(broad) {}

  int n_ = 3;
  std::vector<long> prefix_;
  bool broad_ = false;
};

class InvalidArmSequence : public std::domain_error {
 public:
  explicit InvalidArmSequence(ArmViolation v)
      : std::domain_error(v.message), violation_(std::move(v)) {}
  const ArmViolation& violation() const { return violation_; }

 private:
  ArmViolation violation_;
};

/// Bounds [lo, hi] on the limit of A_t / t over every infinite arm sequence
/// extending the prefix.
struct LimitInterval {
  Rational lo;
  Rational hi;
};

LimitInterval limit_interval(const ArmSequence& a);

Extreme is_extreme(const ArmSequence& a);

/// Prefix length needed to decide A-regularity of partitions of size <= m.
inline int prefix_for_hooks(int n, int m) { return m / n; }

/// Prefix length needed to order the boundary nodes of partitions of size
/// <= m (axial distances there reach m + 1).
inline int prefix_for_signatures(int n, int m) { return (m + 1) / n; }

}  // namespace pcrystal
