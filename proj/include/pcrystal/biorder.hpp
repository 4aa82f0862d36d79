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

#include <array>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pcrystal/crystal_graph.hpp"
#include "pcrystal/sign_seq.hpp"

namespace pcrystal {

/// The two abstract operator labels of a rank-2 crystal.  In graphs built
/// from configurations, I is label 0 and J is label 1.
enum class Label : int { I = 0, J = 1 };

inline Label other(Label h) { return h == Label::I ? Label::J : Label::I; }
inline int label_id(Label h) { return static_cast<int>(h); }
char label_char(Label h);

/// A finite set with two total orders >_i, >_j and a colouring into {i, j}.
/// Elements are indices 0..size()-1; orders are listed greatest first.
/// Construction only checks that the orders are permutations, so a biorder
/// violating the colouring axiom can still be built and inspected with
/// validate_biorder().
class Biorder {
 public:
  Biorder() = default;
  Biorder(std::vector<std::string> names, std::vector<int> order_i, std::vector<int> order_j,
          std::vector<Label> color);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int s) const { return names_.at(s); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  const std::vector<int>& order(Label h) const { return h == Label::I ? order_i_ : order_j_; }
  Label color(int s) const { return color_.at(s); }

  /// s >_h t.
  bool greater(Label h, int s, int t) const {
    const auto& r = h == Label::I ? rank_i_ : rank_j_;
    return r[s] < r[t];
  }
  /// s >> t: greater in both orders.
  bool dominates(int s, int t) const { return greater(Label::I, s, t) && greater(Label::J, s, t); }
  /// s covers t: greater in at least one order.
  bool covers(int s, int t) const { return greater(Label::I, s, t) || greater(Label::J, s, t); }
  /// Transitive closure of covers().
  bool reaches(int s, int t) const { return reach_[s * size() + t]; }

  /// The sub-biorder on `subset` (kept in the given order), orders induced.
  Biorder restrict(const std::vector<int>& subset) const;

  /// Canonical text: "i: r>p>q; j: p>q>r; color: p=i q=i r=j".
  std::string str() const;

  // Order patterns used by the goodness scan; independent of configuration.
  struct Patterns {
    std::vector<std::pair<int, int>> g1;             // s >_i t >_j s
    std::vector<std::pair<int, int>> g2;             // s covers t, t reaches s, same colour
    std::vector<std::array<int, 4>> g3;              // (q, r, s, t)
    std::vector<std::array<int, 3>> g2_triangles;    // (s, t, r)
  };
  const Patterns& patterns() const { return patterns_; }

 private:
  std::vector<std::string> names_;
  std::vector<int> order_i_, order_j_;
  std::vector<Label> color_;
  std::vector<int> rank_i_, rank_j_;
  std::vector<bool> reach_;
  Patterns patterns_;
};

/// A pair (s, t) with s >_i t >_j s whose colours are not (j, i).
std::optional<std::pair<int, int>> validate_biorder(const Biorder& b);

/// {"elements":[...],"order_i":[...],"order_j":[...],"color":{name:"i"|"j"}}.
std::string to_json(const Biorder& b, int indent = 2);
/// Throws InputError on malformed JSON or orders that are not permutations.
Biorder biorder_from_json(const std::string& text);

/// Values in {0,1,2}, indexed by element.
using Configuration = std::vector<int>;

std::string config_payload(const Configuration& a);

struct ConfigSignature {
  std::vector<int> elements;  // descending in >_h
  SignSeq seq;
};

/// h = i: '+' for 0_i or 1_j, '-' for 1_i or 2_j, else '0'; h = j swaps roles.
ConfigSignature config_signature(const Biorder& b, const Configuration& a, Label h);

std::optional<Configuration> config_e(const Biorder& b, const Configuration& a, Label h);
std::optional<Configuration> config_f(const Biorder& b, const Configuration& a, Label h);
StringStats config_eps_phi(const Biorder& b, const Configuration& a, Label h);

struct GoodnessViolation {
  enum class Axiom { G1, G2, G3 } axiom;
  std::vector<int> elements;  // (s,t) for G1/G2, (q,r,s,t) for G3
};

std::string to_string(GoodnessViolation::Axiom axiom);

/// First violated goodness axiom, if any.
std::optional<GoodnessViolation> check_good(const Biorder& b, const Configuration& a);
inline bool is_good(const Biorder& b, const Configuration& a) { return !check_good(b, a); }

/// A G2 witness in normal form s >> t covers r covers s, colour(s) =
/// colour(t), a(s) < a(t); returned as (s, t, r).
std::optional<std::array<int, 3>> g2_triangle(const Biorder& b, const Configuration& a);

inline constexpr int kDefaultBiorderBound = 12;

/// Crystal on all 3^|S| configurations, numbered lexicographically.
CrystalGraph cc_graph(const Biorder& b, int bound = kDefaultBiorderBound);
/// Restriction of cc_graph to good configurations.
CrystalGraph gc_graph(const Biorder& b, int bound = kDefaultBiorderBound);

/// Parses a cc/gc payload "(0,1,2)".
Configuration parse_config(const std::string& payload);

/// Every ordered pair of distinct elements is related by reaches().
bool is_transitive(const Biorder& b);

struct Split {
  std::vector<int> first;   // every element here dominates every element of second
  std::vector<int> second;
};

/// For a non-transitive biorder: pick s0, t0 with t0 not reaching s0 and
/// take first = {s : s = s0 or s reaches s0}.
std::optional<Split> split(const Biorder& b);

/// Checks that a -> (a|first, a|second) carries cc_graph(b) onto
/// tensor(cc_graph(first), cc_graph(second)) arrow for arrow.  Returns a
/// description of the first mismatch.
std::optional<std::string> check_split_tensor(const Biorder& b, const Split& s);

/// Uniformly random order_i and colouring, then a random order_j among
/// those compatible with the colouring axiom.
Biorder random_biorder(int size, std::mt19937_64& rng);

}  // namespace pcrystal
