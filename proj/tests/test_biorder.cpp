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

#include <random>
#include <set>

#include "doctest.h"
#include "pcrystal/biorder.hpp"
#include "pcrystal/errors.hpp"

using namespace pcrystal;

namespace {

constexpr Label I = Label::I, J = Label::J;

// r >_i p >_i q;  p >_j q >_j r;  p, q coloured i and r coloured j.
Biorder three() { return Biorder({"p", "q", "r"}, {2, 0, 1}, {0, 1, 2}, {I, I, J}); }

// p >_i q >_i r >_i s >_i t;  r >_j p >_j q >_j t >_j s.
Biorder five(Label color_p = J) { return Biorder({"p", "q", "r", "s", "t"}, {0, 1, 2, 3, 4}, {2, 0, 1, 4, 3}, {color_p, J, I, J, I}); }

std::vector<Configuration> all_configs(int m) {
  std::vector<Configuration> out{{}};
  for (int k = 0; k < m; ++k) {
    std::vector<Configuration> next;
    for (const auto& a : out)
      for (int v = 0; v < 3; ++v) {
        auto b = a;
        b.push_back(v);
        next.push_back(b);
      }
    out = std::move(next);
  }
  return out;
}

std::set<std::string> payloads(const CrystalGraph& g, const std::vector<int>& ids) {
  std::set<std::string> out;
  for (int v : ids) out.insert(g.vertex(v).payload);
  return out;
}

// G2 directly from its statement, with the closure recomputed by search.
bool g2_raw(const Biorder& b, const Configuration& a) {
  const int m = b.size();
  auto reach = [&](int from, int to) {
    std::vector<bool> seen(m, false);
    std::vector<int> stack{from};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < m; ++y)
        if (y != x && b.covers(x, y) && !seen[y]) {
          if (y == to) return true;
          seen[y] = true;
          stack.push_back(y);
        }
    }
    return false;
  };
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (s != t && b.covers(s, t) && reach(t, s) && b.color(s) == b.color(t) && a[s] < a[t]) return true;
  return false;
}

}  // namespace

TEST_CASE("biorder axiom") {
  CHECK_FALSE(validate_biorder(three()));
  CHECK_FALSE(validate_biorder(five()));
  const auto bad = validate_biorder(five(I));
  REQUIRE(bad);
  CHECK(bad->first == 0);
  CHECK(bad->second == 2);
  for (Label c : {I, J}) CHECK_FALSE(validate_biorder(Biorder({"x"}, {0}, {0}, {c})));
  CHECK_THROWS_AS(Biorder({"x", "y"}, {0, 0}, {0, 1}, {I, I}), InputError);
  CHECK_THROWS_AS(Biorder({"x", "x"}, {0, 1}, {0, 1}, {I, I}), InputError);
  CHECK_THROWS_AS(Biorder({"x"}, {0}, {0}, {}), InputError);
}

TEST_CASE("derived relations") {
  const Biorder b = three();
  CHECK(b.dominates(0, 1));
  CHECK_FALSE(b.dominates(2, 0));
  CHECK(b.covers(2, 0));
  CHECK(b.covers(0, 2));
  CHECK(b.reaches(1, 0));
  CHECK(is_transitive(b));
  CHECK_FALSE(split(b));

  const Biorder f = five();
  const std::set<int> top{0, 1, 2}, bottom{3, 4};
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      if (x != y) CHECK(f.reaches(x, y) == (top.count(x) || bottom.count(y)));
  CHECK_FALSE(is_transitive(f));
  const auto sp = split(f);
  REQUIRE(sp);
  CHECK(sp->first == std::vector<int>{0, 1, 2});
  CHECK(sp->second == std::vector<int>{3, 4});
  CHECK_FALSE(check_split_tensor(f, *sp));

  const Biorder pair({"s", "t"}, {0, 1}, {0, 1}, {I, J});
  const auto ps = split(pair);
  REQUIRE(ps);
  CHECK(ps->first == std::vector<int>{0});
  CHECK(ps->second == std::vector<int>{1});
}

TEST_CASE("signatures and operators") {
  const Biorder one({"x"}, {0}, {0}, {I});
  CHECK(config_signature(one, {0}, I).seq.str() == "+");
  CHECK(config_signature(one, {0}, J).seq.str() == "0");
  CHECK(config_signature(one, {1}, I).seq.str() == "-");
  CHECK(config_signature(one, {1}, J).seq.str() == "+");
  CHECK(config_signature(one, {2}, J).seq.str() == "-");

  const Biorder b = three();
  const auto si = config_signature(b, {1, 0, 2}, I);
  CHECK(si.elements == std::vector<int>{2, 0, 1});
  CHECK(si.seq.str() == "--+");
  const auto sj = config_signature(b, {1, 0, 2}, J);
  CHECK(sj.elements == std::vector<int>{0, 1, 2});
  CHECK(sj.seq.str() == "+00");
  CHECK(config_f(b, {1, 0, 2}, I) == Configuration{1, 1, 2});
  CHECK(config_e(b, {1, 0, 2}, I) == Configuration{0, 0, 2});
  CHECK_FALSE(config_e(b, {1, 0, 2}, J));
  CHECK(config_eps_phi(b, {1, 0, 2}, I) == StringStats{2, 1});
  CHECK_THROWS_AS(config_signature(b, {0, 0}, I), InputError);
}

TEST_CASE("singleton and empty crystals") {
  const CrystalGraph g = cc_graph(Biorder({"x"}, {0}, {0}, {I}));
  REQUIRE(g.num_vertices() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1, 0}, {1, 2, 1}});
  const CrystalGraph e = cc_graph(Biorder({}, {}, {}, {}));
  CHECK(e.num_vertices() == 1);
  CHECK(e.vertex(0).payload == "()");
  CHECK(e.edges().empty());
}

TEST_CASE("three-element configuration crystal") {
  const Biorder b = three();
  const CrystalGraph g = cc_graph(b);
  CHECK(g.num_vertices() == 27);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(payloads(g, comps[0]) == std::set<std::string>{"(2,1,0)", "(1,0,2)", "(1,1,2)", "(1,1,0)", "(2,1,2)",
                                                       "(1,0,0)", "(2,2,2)", "(2,0,2)", "(2,2,0)", "(0,0,2)",
                                                       "(2,0,0)", "(0,0,0)", "(2,2,1)", "(2,0,1)", "(0,0,1)"});
  CHECK(payloads(g, comps[1]) == std::set<std::string>{"(0,1,2)", "(1,2,0)", "(0,1,0)", "(0,2,2)", "(0,1,1)",
                                                       "(0,2,0)", "(0,2,1)", "(1,2,2)", "(1,2,1)"});
  CHECK(payloads(g, comps[2]) == std::set<std::string>{"(1,1,1)", "(1,0,1)", "(2,1,1)"});

  // An f-path joins the all-zero configuration to the top.
  std::set<int> reached{*g.find("(0,0,0)")};
  std::vector<int> todo(reached.begin(), reached.end());
  while (!todo.empty()) {
    const int v = todo.back();
    todo.pop_back();
    for (int label : {0, 1})
      if (auto w = g.f(v, label); w && reached.insert(*w).second) todo.push_back(*w);
  }
  CHECK(reached.count(*g.find("(2,2,2)")));

  auto good = [&](const std::vector<int>& c) {
    for (int v : c)
      if (!is_good(b, parse_config(g.vertex(v).payload))) return false;
    return true;
  };
  CHECK(good(comps[0]));
  CHECK_FALSE(good(comps[1]));
  CHECK_FALSE(good(comps[2]));
  // Every member of the small component has a(p) = a(r) = 1 with r >_i p >_j r.
  const auto v = check_good(b, {1, 0, 1});
  REQUIRE(v);
  CHECK(v->axiom == GoodnessViolation::Axiom::G1);
  CHECK(v->elements == std::vector<int>{2, 0});
  CHECK_FALSE(is_good(b, {0, 1, 2}));

  for (std::size_t k = 0; k < comps.size(); ++k) {
    Component c{comps[k], true, 0, 1};
    const auto rep = check_dkk(g, c);
    if (k == 1) {
      CHECK(rep.sources == 2);
      bool a3 = false;
      for (const auto& f : rep.violations) a3 = a3 || f.check.rfind("A3", 0) == 0;
      CHECK(a3);
    } else {
      CHECK(rep.ok());
      CHECK(rep.sources == 1);
    }
  }

  const CrystalGraph gc = gc_graph(b);
  CHECK(gc.num_vertices() == 15);
  CHECK(verify_axioms(gc).ok());
}

TEST_CASE("goodness scan") {
  CHECK(is_good(five(), {0, 0, 0, 0, 0}));
  // s >> t covers r covers s with a(s) < a(t): the triangle is its own witness.
  const Biorder tri({"s", "t", "r"}, {2, 0, 1}, {0, 1, 2}, {I, I, J});
  REQUIRE_FALSE(validate_biorder(tri));
  CHECK(g2_triangle(tri, {0, 1, 0}) == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(g2_triangle(tri, {1, 0, 0}));
}

TEST_CASE("g2 triangles agree with the raw scan on the five-element biorder") {
  const Biorder b = five();
  int violating = 0;
  for (const auto& a : all_configs(5)) {
    const bool raw = g2_raw(b, a);
    const auto tri = g2_triangle(b, a);
    REQUIRE(raw == tri.has_value());
    if (!tri) continue;
    ++violating;
    const auto [s, t, r] = *tri;
    CHECK(b.dominates(s, t));
    CHECK(b.covers(t, r));
    CHECK(b.covers(r, s));
    CHECK(b.color(s) == b.color(t));
    CHECK(a[s] < a[t]);
  }
  CHECK(violating > 0);
}

TEST_CASE("crystal properties on random biorders") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Biorder b = random_biorder(1 + trial % 5, rng);
    REQUIRE_FALSE(validate_biorder(b));
    for (const auto& a : all_configs(b.size()))
      for (Label h : {I, J}) {
        const Label g = other(h);
        if (auto f = config_f(b, a, h)) {
          REQUIRE(config_e(b, *f, h) == a);
          REQUIRE(is_good(b, a) == is_good(b, *f));
        }
        const auto e = config_e(b, a, h);
        if (!e) continue;
        // The other signature drops by one in a single entry.
        const auto before = config_signature(b, a, g).seq, after = config_signature(b, *e, g).seq;
        int changed = 0;
        for (std::size_t k = 1; k <= before.size(); ++k)
          if (before.at(k) != after.at(k)) {
            ++changed;
            REQUIRE(value(after.at(k)) == value(before.at(k)) - 1);
          }
        REQUIRE(changed == 1);
        const auto sa = config_eps_phi(b, a, g), sb = config_eps_phi(b, *e, g);
        const bool up = sb.epsilon == sa.epsilon + 1 && sb.phi == sa.phi;
        const bool down = sb.epsilon == sa.epsilon && sb.phi == sa.phi - 1;
        REQUIRE((up || down));
        if (sa.phi == 0) REQUIRE(up);
      }
  }
}

TEST_CASE("transitive biorders give one good component") {
  std::mt19937_64 rng(11);
  int seen = 0;
  for (int trial = 0; trial < 60 && seen < 10; ++trial) {
    const Biorder b = random_biorder(2 + trial % 4, rng);
    if (!is_transitive(b)) continue;
    ++seen;
    const CrystalGraph gc = gc_graph(b);
    CHECK(sources(gc).size() == 1);
    const auto comps = connected_components(gc);
    REQUIRE(comps.size() == 1);
    CHECK(check_dkk(gc, Component{comps[0], true, 0, 1}).ok());
  }
  CHECK(seen > 0);
}

TEST_CASE("random splits factor as tensor products") {
  std::mt19937_64 rng(3);
  int seen = 0;
  for (int trial = 0; trial < 80 && seen < 5; ++trial) {
    const Biorder b = random_biorder(2 + trial % 4, rng);
    const auto sp = split(b);
    if (!sp) continue;
    ++seen;
    CHECK_FALSE(check_split_tensor(b, *sp));
  }
  CHECK(seen > 0);
}

TEST_CASE("JSON form") {
  const Biorder b = three();
  const std::string j = to_json(b);
  const Biorder back = biorder_from_json(j);
  CHECK(back.str() == b.str());
  CHECK(b.str() == "i: r>p>q; j: p>q>r; color: p=i q=i r=j");
  CHECK_THROWS_AS(biorder_from_json("[]"), InputError);
  CHECK_THROWS_AS(biorder_from_json(R"({"elements":["a"],"order_i":["b"],"order_j":["a"],"color":{"a":"i"}})"),
                  InputError);
  CHECK_THROWS_AS(biorder_from_json(R"({"elements":["a"],"order_i":["a"],"order_j":["a"],"color":{"a":"k"}})"),
                  InputError);
  CHECK_THROWS_AS(cc_graph(b, 2), ResourceError);
  CHECK(parse_config("(0,1,2)") == Configuration{0, 1, 2});
  CHECK_THROWS_AS(parse_config("(0,3)"), InputError);
}
