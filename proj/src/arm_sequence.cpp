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

#include "pcrystal/arm_sequence.hpp"

#include <algorithm>
#include <sstream>

#include "pcrystal/errors.hpp"

namespace pcrystal {

namespace {

std::int64_t floor_of(const Rational& q) {
  std::int64_t f = q.numerator() / q.denominator();
  if (q.numerator() < 0 && f * q.denominator() != q.numerator()) --f;
  return f;
}

std::int64_t ceil_of(const Rational& q) { return -floor_of(-q); }

}  // namespace

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      throw InputError("bad numerator");
    long long den = 1;
    if (slash != std::string::npos) {
      const std::string rest = text.substr(slash + 1);
      den = std::stoll(rest, &used);
      if (used != rest.size() || den == 0) throw InputError("bad denominator");
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    throw InputError("invalid rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

std::optional<ArmViolation> find_violation(int n, const std::vector<long>& prefix,
                                           bool broad) {
  if (n < 3)
    return ArmViolation{ArmViolation::Kind::Range, 0, 0,
                        "n must be at least 3 (got " + std::to_string(n) + ")"};
  if (prefix.empty())
    return ArmViolation{ArmViolation::Kind::Range, 0, 0,
                        "arm sequence prefix must be nonempty"};
  const int len = static_cast<int>(prefix.size());
  for (int t = 1; t <= len; ++t) {
    const long lo = broad ? 0 : t - 1;
    const long hi = broad ? static_cast<long>(n) * t - 1 : static_cast<long>(n - 1) * t;
    const long v = prefix[t - 1];
    if (v < lo || v > hi) {
      std::ostringstream os;
      os << "range violation at t=" << t << ": A_" << t << "=" << v
         << " must lie in [" << lo << ", " << hi << "]";
      return ArmViolation{ArmViolation::Kind::Range, t, 0, os.str()};
    }
  }
  for (int s = 2; s <= len; ++s) {
    for (int t = 1; t <= s / 2; ++t) {
      const int u = s - t;
      const long base = prefix[t - 1] + prefix[u - 1];
      const long v = prefix[s - 1];
      if (v != base && v != base + 1) {
        std::ostringstream os;
        os << "additivity violation at (t,u)=(" << t << "," << u << "): A_" << s
           << "=" << v << " must lie in {" << base << ", " << base + 1 << "}";
        return ArmViolation{ArmViolation::Kind::Additivity, t, u, os.str()};
      }
    }
  }
  return std::nullopt;
}

ArmSequence ArmSequence::validate(int n, std::vector<long> prefix, bool broad) {
  if (auto v = find_violation(n, prefix, broad)) throw InvalidArmSequence(*v);
  return ArmSequence(n, std::move(prefix), broad);
}

ArmSequence ArmSequence::canonical(int n, Rational y, bool plus, int length) {
  if (n < 3) throw DomainError("n must be at least 3");
  if (y < Rational(1) || y > Rational(n - 1))
    throw DomainError("canonical arm sequence needs 1 <= y <= n-1 (got y=" +
                      to_string(y) + ")");
  if (length < 1) throw DomainError("canonical arm sequence needs length >= 1");
  std::vector<long> prefix;
  prefix.reserve(length);
  for (int t = 1; t <= length; ++t) {
    const Rational yt = y * Rational(t);
    prefix.push_back(static_cast<long>(plus ? floor_of(yt) : ceil_of(yt - 1)));
  }
  return validate(n, std::move(prefix));
}

long ArmSequence::at(int t) const {
  if (t == 0) return 0;
  if (t < 0) throw DomainError("arm sequence index must be non-negative");
  if (t > length())
    throw ResourceError("arm sequence prefix of length " + std::to_string(length()) +
                        " is too short: A_" + std::to_string(t) +
                        " is required (need prefix length >= " +
                        std::to_string(t) + ")");
  return prefix_[t - 1];
}

ArmSequence ArmSequence::extended(int length) const {
  std::vector<long> prefix = prefix_;
  while (static_cast<int>(prefix.size()) < length) {
    const int s = static_cast<int>(prefix.size()) + 1;
    long lo = broad_ ? 0 : s - 1;
    long hi = broad_ ? static_cast<long>(n_) * s - 1 : static_cast<long>(n_ - 1) * s;
    for (int t = 1; t < s; ++t) {
      const long base = prefix[t - 1] + prefix[s - t - 1];
      lo = std::max(lo, base);
      hi = std::min(hi, base + 1);
    }
    if (lo > hi)
      throw ResourceError("arm sequence " + str() + " admits no value for A_" +
                          std::to_string(s));
    prefix.push_back(lo);
  }
  return validate(n_, std::move(prefix), broad_);
}

ArmSequence ArmSequence::truncated(int length) const {
  if (length >= this->length()) return *this;
  return ArmSequence(n_, std::vector<long>(prefix_.begin(), prefix_.begin() + length),
                     broad_);
}

std::string ArmSequence::str() const {
  std::string out = "(";
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(prefix_[k]);
  }
  return out + ")";
}

LimitInterval limit_interval(const ArmSequence& a) {
  Rational lo(0), hi(a.n());
  for (int t = 1; t <= a.length(); ++t) {
    lo = std::max(lo, Rational(a.at(t), t));
    hi = std::min(hi, Rational(a.at(t) + 1, t));
  }
  const Rational floor_y(1), ceil_y(a.n() - 1);
  lo = std::clamp(lo, floor_y, ceil_y);
  hi = std::clamp(hi, floor_y, ceil_y);
  return {lo, hi};
}

Extreme is_extreme(const ArmSequence& a) {
  bool lower = true, upper = true;
  for (int t = 1; t <= a.length(); ++t) {
    lower = lower && a.at(t) == t - 1;
    upper = upper && a.at(t) == static_cast<long>(a.n() - 1) * t;
  }
  if (lower) return Extreme::Lower;
  if (upper) return Extreme::Upper;
  return Extreme::None;
}

}  // namespace pcrystal
