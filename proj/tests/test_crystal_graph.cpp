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

#include <sstream>

#include "doctest.h"
#include "pcrystal/arm_crystal.hpp"
#include "pcrystal/crystal_graph.hpp"
#include "pcrystal/errors.hpp"
#include "pcrystal/graph_io.hpp"
#include "pcrystal/models.hpp"

using namespace pcrystal;

namespace {

// The two-element sl_2 crystal a -> b.
CrystalGraph chain2(const std::string& a, const std::string& b) {
  CrystalGraph g(0, {0});
  g.add_vertex({a, 0, std::nullopt, {}});
  g.add_vertex({b, 1, std::nullopt, {}});
  g.add_edge(0, 1, 0);
  return g;
}

}  // namespace

TEST_CASE("restricted model to size 2") {
  const CrystalGraph g = generate(RestrictedModel(3), 2);
  REQUIRE(g.num_vertices() == 4);
  CHECK(g.vertex(0).payload == "");
  CHECK(g.vertex(1).payload == "1");
  CHECK(g.vertex(2).payload == "1,1");
  CHECK(g.vertex(3).payload == "2");
  CHECK(g.edges() == std::vector<Edge>{{0, 1, 0}, {1, 3, 1}, {1, 2, 2}});
  CHECK(g.is_frontier(3));
  CHECK_FALSE(g.is_frontier(1));
}

TEST_CASE("axioms hold on generated graphs") {
  for (int n : {3, 4}) {
    const CrystalGraph g = generate(ArmModel(ArmSequence::berg(n, 4)), 9);
    const AxiomReport r = verify_axioms(g);
    CHECK(r.ok());
    CHECK(r.skipped == 0);
    CHECK(sources(g) == std::vector<int>{0});
  }
  const CrystalGraph r = generate(RestrictedModel(3), 10);
  CHECK(verify_axioms(r).ok());
}

TEST_CASE("corrupt graphs are reported") {
  CrystalGraph g = generate(RestrictedModel(3), 4);
  const auto base = g.edges().size();
  CHECK(verify_axioms(g).ok());

  CrystalGraph dup = graph_from_json(to_json(g));
  dup.add_edge(0, 2, 0);
  const auto r1 = verify_axioms(dup);
  REQUIRE_FALSE(r1.ok());
  CHECK(r1.violations.front().check == "C1");

  CrystalGraph odd = graph_from_json(to_json(g));
  odd.add_edge(0, 1, 7);
  CHECK_FALSE(verify_axioms(odd).ok());

  CrystalGraph wt(3, {0, 1, 2}, 1);
  wt.add_vertex({"", 0, weight(Partition(), 3), {}});
  wt.add_vertex({"1", 1, weight(Partition(), 3), {}});
  wt.add_edge(0, 1, 0);
  const auto r3 = verify_axioms(wt);
  REQUIRE_FALSE(r3.ok());
  CHECK(r3.violations.front().check == "C3");
  CHECK(g.edges().size() == base);
}

TEST_CASE("C4 uses intrinsic data at the frontier") {
  const CrystalGraph g = generate(ArmModel(ArmSequence::berg(3, 3)), 6);
  CHECK(verify_axioms(g).skipped == 0);
  const CrystalGraph bare = graph_from_json(to_json(g));
  const auto r = verify_axioms(bare);
  CHECK(r.ok());
  CHECK(r.skipped > 0);
  const int top = *bare.find("6");
  CHECK_FALSE(bare.known_stats(top, 0));
  CHECK(g.known_stats(top, 0));
}

TEST_CASE("rank-2 components") {
  const CrystalGraph g = generate(ArmModel(ArmSequence::berg(4, 3)), 8);
  int complete = 0;
  for (const auto& c : rank2(g, 0, 2)) {
    if (!c.complete) continue;
    ++complete;
    CHECK(check_commuting(g, c).ok());
  }
  CHECK(complete > 0);
  for (const auto& c : rank2(g, 0, 1))
    if (c.complete) CHECK(check_dkk(g, c).ok());
  const auto all = check_all_rank2(g);
  CHECK(all.ok());
  CHECK(all.complete_ok > 0);
  CHECK(all.incomplete > 0);
  CHECK(adjacent_labels(4, 3, 0));
  CHECK_FALSE(adjacent_labels(4, 0, 2));
  CHECK(adjacent_labels(0, 0, 1));
  CHECK_THROWS_AS(rank2(g, 1, 1), DomainError);
}

TEST_CASE("a commuting failure is caught") {
  // Square with one side missing: e_0 f_1 differs from f_1 e_0 at the corner.
  CrystalGraph g(0, {0, 1});
  for (const char* p : {"a", "b", "c", "d"}) g.add_vertex({p, 0, std::nullopt, {}});
  g.add_edge(0, 1, 0);
  g.add_edge(0, 2, 1);
  g.add_edge(1, 3, 1);
  Component c{{0, 1, 2, 3}, true, 0, 1};
  CHECK_FALSE(check_commuting(g, c).ok());
}

TEST_CASE("isomorphism") {
  const CrystalGraph berg = generate(ArmModel(ArmSequence::berg(3, 3)), 8);
  const CrystalGraph restr = generate(RestrictedModel(3), 8);
  const auto self = isomorphic(berg, berg);
  CHECK(self.isomorphic);
  CHECK(self.identity);
  const auto r = isomorphic(berg, restr);
  CHECK(r.isomorphic);
  CHECK_FALSE(r.identity);
  CHECK(r.witness.size() == berg.num_vertices());

  const CrystalGraph small = generate(RestrictedModel(3), 6);
  CHECK_FALSE(isomorphic(berg, small).isomorphic);
  CHECK_THROWS_AS(isomorphic(berg, generate(RestrictedModel(4), 4)), DomainError);
}

TEST_CASE("tensor products") {
  const CrystalGraph b = chain2("a", "b");
  const CrystalGraph bb = tensor(b, b);
  REQUIRE(bb.num_vertices() == 4);
  auto id = [&](const char* l, const char* r) { return *bb.find(tensor_payload(l, r)); };
  CHECK(bb.f(id("a", "a"), 0) == id("b", "a"));
  CHECK(bb.f(id("b", "a"), 0) == id("b", "b"));
  CHECK_FALSE(bb.f(id("a", "b"), 0));
  CHECK_FALSE(bb.e(id("a", "b"), 0));
  CHECK(connected_components(bb).size() == 2);

  // (B x B) x B and B x (B x B) give the same arrows on the same payloads.
  const CrystalGraph left = tensor(bb, b), right = tensor(b, bb);
  REQUIRE(left.num_vertices() == right.num_vertices());
  for (const Edge& e : left.edges()) {
    const int from = *right.find(left.vertex(e.from).payload);
    const int to = *right.find(left.vertex(e.to).payload);
    CHECK(right.f(from, e.label) == to);
  }
  CHECK(left.edges().size() == right.edges().size());

  CHECK_THROWS_AS(tensor(generate(RestrictedModel(3), 2), b), DomainError);
}

TEST_CASE("serialisation") {
  const CrystalGraph g = generate(RestrictedModel(3), 3);
  const std::string j = to_json(g);
  CHECK(to_json(graph_from_json(j)) == j);
  CHECK(j.find("\"n\": 3") != std::string::npos);
  CHECK_THROWS_AS(graph_from_json("{"), InputError);
  CHECK_THROWS_AS(graph_from_json("{\"n\":3}"), InputError);

  std::ostringstream dot;
  write_dot(dot, g);
  const std::string d = dot.str();
  CHECK(d.rfind("digraph crystal {\n  v0 [label=\"\xE2\x88\x85\"];\n", 0) == 0);
  CHECK(d.find("  v0 -> v1 [label=\"0\"];\n") != std::string::npos);
  std::ostringstream again;
  write_dot(again, generate(RestrictedModel(3), 3));
  CHECK(again.str() == d);
}

TEST_CASE("size bound") {
  CHECK(default_size_bound() >= 1);
  CHECK_THROWS_AS(generate(RestrictedModel(3), 50, 20), ResourceError);
  CHECK_THROWS_AS(generate(ArmModel(ArmSequence::validate(3, {1, 3, 4})), 12), ResourceError);
}
