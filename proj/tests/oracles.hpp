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

// Independent reference implementations for tests.  Nothing here calls the
// library code it is used to check.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcrystal/partition.hpp"
#include "pcrystal/sign_seq.hpp"

namespace oracle {

inline int sign_value(char c) { return c == '+' ? 1 : c == '-' ? -1 : 0; }

struct Stats {
  int epsilon = 0;
  int phi = 0;
  int good = 0;    // 0 when absent
  int cogood = 0;  // 0 when absent
};

// Straight from the partial-sum definitions, O(m^2).
inline Stats analyze(const std::string& w) {
  const int m = static_cast<int>(w.size());
  Stats s;
  for (int i = 0; i <= m; ++i) {
    int g = 0;
    for (int k = 1; k <= i; ++k) g -= sign_value(w[k - 1]);
    if (g > s.epsilon) {
      s.epsilon = g;
      s.good = i;
    }
  }
  for (int i = m + 1; i >= 1; --i) {
    int h = 0;
    for (int k = i; k <= m; ++k) h += sign_value(w[k - 1]);
    if (h > s.phi) {
      s.phi = h;
      s.cogood = i;
    }
  }
  return s;
}

// Repeatedly blank out the leftmost "+0...0-" segment.
inline std::string reduce(std::string w) {
  for (;;) {
    bool changed = false;
    for (std::size_t a = 0; a < w.size() && !changed; ++a) {
      if (w[a] != '+') continue;
      std::size_t b = a + 1;
      while (b < w.size() && w[b] == '0') ++b;
      if (b < w.size() && w[b] == '-') {
        w[a] = w[b] = '0';
        changed = true;
      }
    }
    if (!changed) return w;
  }
}

inline std::string random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), ch(0, 2);
  std::string w(len(rng), '0');
  for (auto& c : w) c = "+0-"[ch(rng)];
  return w;
}

// Partitions of m with every multiplicity < n: products of
// (1 + x^k + ... + x^{(n-1)k}) expanded by dynamic programming.
inline long count_n_regular(int n, int m) {
  std::vector<long> ways(m + 1, 0);
  ways[0] = 1;
  for (int k = 1; k <= m; ++k) {
    std::vector<long> next(m + 1, 0);
    for (int s = 0; s <= m; ++s)
      for (int mult = 0; mult < n && s + mult * k <= m; ++mult) next[s + mult * k] += ways[s];
    ways = std::move(next);
  }
  return ways[m];
}

// Cells to the right and below, counted one by one.
inline std::pair<int, int> hook_and_arm(const std::vector<int>& parts, int row, int col) {
  int arm = 0, leg = 0;
  while (col + arm + 1 <= parts[row - 1]) ++arm;
  while (row + leg + 1 <= static_cast<int>(parts.size()) && parts[row + leg] >= col) ++leg;
  return {arm + leg + 1, arm};
}

// No hook of length exactly n times its arm length.
inline bool berg_regular(const std::vector<int>& parts, int n) {
  for (int r = 1; r <= static_cast<int>(parts.size()); ++r)
    for (int c = 1; c <= parts[r - 1]; ++c) {
      auto [h, a] = hook_and_arm(parts, r, c);
      if (h == n * a) return false;
    }
  return true;
}

// Every node whose removal or addition leaves a partition, by scanning a box.
inline std::vector<std::pair<pcrystal::Node, bool>> boundary_scan(const std::vector<int>& parts) {
  const int rows = static_cast<int>(parts.size()) + 1;
  const int cols = (parts.empty() ? 0 : parts[0]) + 1;
  auto in = [&](int r, int c) { return r >= 1 && c >= 1 && r <= (int)parts.size() && c <= parts[r - 1]; };
  std::vector<std::pair<pcrystal::Node, bool>> out;  // (node, addable)
  for (int r = 1; r <= rows; ++r)
    for (int c = 1; c <= cols; ++c) {
      if (in(r, c) && !in(r + 1, c) && !in(r, c + 1)) out.push_back({{r, c}, false});
      if (!in(r, c) && (r == 1 || in(r - 1, c)) && (c == 1 || in(r, c - 1))) out.push_back({{r, c}, true});
    }
  return out;
}

// Branch hit counts.
struct BranchCoverage {
  std::map<std::string, long> hits;
};

// Checks sign-sequence identities on pi (and on pi * rho for concatenation)
// against analyze(); returns descriptions of failures.
inline std::vector<std::string> sign_identity_failures(const std::string& pw, const std::string& rw,
                                                  BranchCoverage& cov) {
  using pcrystal::SignSeq;
  std::vector<std::string> bad;
  auto fail = [&](const std::string& what) { bad.push_back(what + " on '" + pw + "' / '" + rw + "'"); };
  auto an = [](const std::string& w) { return pcrystal::analyze(SignSeq::parse(w)); };
  const auto a = an(pw);
  const int m = static_cast<int>(pw.size());
  int sum = 0;
  for (char c : pw) sum += sign_value(c);

  // single sequence
  ++cov.hits["phi-eps-sum"];
  if (a.phi - a.epsilon != sum) fail("phi-eps-sum");
  if (a.good_pos) {
    ++cov.hits["good-minus"];
    if (pw[*a.good_pos - 1] != '-') fail("good-minus");
  }
  if (a.cogood_pos) {
    ++cov.hits["cogood-plus"];
    if (pw[*a.cogood_pos - 1] != '+') fail("cogood-plus");
  }
  if (a.good_pos && a.cogood_pos) {
    ++cov.hits["good-before-cogood"];
    if (!(*a.good_pos < *a.cogood_pos)) fail("good-before-cogood");
  }
  auto plus_between = [&](int lo, int hi, char want) {
    for (int k = lo + 1; k < hi; ++k)
      if (pw[k - 1] == want) return true;
    return false;
  };
  if (a.good_pos)
    for (int j = static_cast<int>(*a.good_pos) + 1; j <= m; ++j)
      if (pw[j - 1] == '-') {
        ++cov.hits["minus-after-good"];
        if (!plus_between(static_cast<int>(*a.good_pos), j, '+')) fail("minus-after-good");
      }
  if (a.cogood_pos)
    for (int i = 1; i < static_cast<int>(*a.cogood_pos); ++i)
      if (pw[i - 1] == '+') {
        ++cov.hits["plus-before-cogood"];
        if (!plus_between(i, static_cast<int>(*a.cogood_pos), '-')) fail("plus-before-cogood");
      }

  for (int i = 1; i <= m; ++i) {
    // raising a minus
    if (pw[i - 1] == '-') {
      std::string rho = pw;
      rho[i - 1] = '+';
      const auto b = an(rho);
      const bool good_here = a.good_pos && static_cast<int>(*a.good_pos) == i;
      const bool cogood_here = b.cogood_pos && static_cast<int>(*b.cogood_pos) == i;
      ++cov.hits[good_here ? "flip:yes" : "flip:no"];
      if (good_here != cogood_here) fail("flip iff");
      if (good_here && (b.epsilon != a.epsilon - 1 || b.phi != a.phi + 1)) fail("flip stats");
    }
    // lowering a plus or zero
    if (pw[i - 1] != '-') {
      std::string rho = pw;
      rho[i - 1] = pw[i - 1] == '+' ? '0' : '-';
      const auto b = an(rho);
      if (a.phi > 0 && static_cast<int>(*a.cogood_pos) <= i) {
        ++cov.hits["lower-at-cogood"];
        if (b.epsilon != a.epsilon || b.phi != a.phi - 1) fail("lower-at-cogood");
        if (a.epsilon > 0 && a.good_pos != b.good_pos) fail("lower-at-cogood good");
      } else {
        ++cov.hits["lower-before-cogood"];
        if (b.epsilon != a.epsilon + 1 || b.phi != a.phi) fail("lower-before-cogood");
      }
      if (a.epsilon > 0 && static_cast<int>(*a.good_pos) > i) {
        ++cov.hits["lower-before-good"];
        if (a.good_pos != b.good_pos) fail("lower-before-good");
      }
    }
  }

  // concatenation
  const auto r = an(rw);
  const auto c = an(pw + rw);
  const std::size_t l = pw.size();
  if (a.phi >= r.epsilon) {
    ++cov.hits["join-eps-left"];
    if (c.epsilon != a.epsilon) fail("join-eps-left");
    if (c.epsilon > 0 && c.good_pos != a.good_pos) fail("join-eps-left good");
  } else {
    ++cov.hits["join-eps-right"];
    if (c.epsilon != a.epsilon + r.epsilon - a.phi) fail("join-eps-right");
    if (!c.good_pos || !r.good_pos || *c.good_pos != *r.good_pos + l) fail("join-eps-right good");
  }
  if (a.phi <= r.epsilon) {
    ++cov.hits["join-phi-right"];
    if (c.phi != r.phi) fail("join-phi-right");
    if (c.phi > 0 && (!r.cogood_pos || *c.cogood_pos != *r.cogood_pos + l)) fail("join-phi-right cogood");
  } else {
    ++cov.hits["join-phi-left"];
    if (c.phi != a.phi + r.phi - r.epsilon) fail("join-phi-left");
    if (c.cogood_pos != a.cogood_pos) fail("join-phi-left cogood");
  }
  return bad;
}

}  // namespace oracle
