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

#include "pcrystal/domino.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pcrystal/arm_crystal.hpp"
#include "pcrystal/errors.hpp"

namespace pcrystal {

std::string Domino::name() const { return to_string(i_node) + "-" + to_string(j_node); }

namespace {

bool in_pair(const Node& x, int n, int i) {
  const int r = residue(x, n);
  return r == i || r == (i + 1) % n;
}

std::optional<Node> first_boundary(const Partition& p, int n, int i, NodeKind kind) {
  for (const auto& b : boundary_nodes(p))
    if (b.kind == kind && in_pair(b.node, n, i)) return b.node;
  return std::nullopt;
}

}  // namespace

Partition c_down(const Partition& p, int n, int i) {
  Partition q = p;
  while (auto x = first_boundary(q, n, i, NodeKind::Removable)) q = q.without_node(*x);
  return q;
}

Partition c_up(const Partition& p, int n, int i) {
  Partition q = p;
  while (auto x = first_boundary(q, n, i, NodeKind::Addable)) q = q.with_node(*x);
  return q;
}

std::vector<Domino> domino_tiling(const Partition& down, const Partition& up, int n, int i) {
  const int j = (i + 1) % n;
  std::set<Node> inode, jnode;
  for (int r = 1; r <= up.length(); ++r)
    for (int c = down.part(r) + 1; c <= up.part(r); ++c) {
      const Node x{r, c};
      const int res = residue(x, n);
      if (res == i)
        inode.insert(x);
      else if (res == j)
        jnode.insert(x);
      else
        throw DomainError("skew diagram contains " + to_string(x) + " of residue " + std::to_string(res));
    }
  if (inode.size() != jnode.size()) throw DomainError("skew diagram has unequal i- and j-node counts");

  // Forced matching: a node with a single free partner must take it.
  std::vector<Domino> out;
  auto partners_of_i = [&](const Node& x) {
    std::vector<Node> v;
    for (Node y : {Node{x.row, x.col + 1}, Node{x.row - 1, x.col}})
      if (jnode.count(y)) v.push_back(y);
    return v;
  };
  auto partners_of_j = [&](const Node& y) {
    std::vector<Node> v;
    for (Node x : {Node{y.row, y.col - 1}, Node{y.row + 1, y.col}})
      if (inode.count(x)) v.push_back(x);
    return v;
  };
  while (!inode.empty()) {
    bool progress = false;
    for (const Node& x : std::vector<Node>(inode.begin(), inode.end())) {
      const auto ps = partners_of_i(x);
      if (ps.empty()) throw DomainError("node " + to_string(x) + " lies in no domino");
      if (ps.size() == 1) {
        out.push_back({x, ps[0]});
        inode.erase(x);
        jnode.erase(ps[0]);
        progress = true;
      }
    }
    for (const Node& y : std::vector<Node>(jnode.begin(), jnode.end())) {
      if (!jnode.count(y)) continue;
      const auto ps = partners_of_j(y);
      if (ps.empty()) throw DomainError("node " + to_string(y) + " lies in no domino");
      if (ps.size() == 1) {
        out.push_back({ps[0], y});
        inode.erase(ps[0]);
        jnode.erase(y);
        progress = true;
      }
    }
    if (!progress) throw DomainError("domino tiling is not unique");
  }
  std::sort(out.begin(), out.end(), [](const Domino& a, const Domino& b) { return a.i_node < b.i_node; });
  return out;
}

namespace {

ComponentBiorder build(Partition down, Partition up, const ArmSequence& a, int i) {
  const int n = a.n();
  ComponentBiorder cb;
  cb.i = i;
  cb.down = std::move(down);
  cb.up = std::move(up);
  cb.dominoes = domino_tiling(cb.down, cb.up, n, i);
  const int m = static_cast<int>(cb.dominoes.size());
  std::vector<std::string> names;
  std::vector<Label> color;
  for (const auto& d : cb.dominoes) {
    names.push_back(d.name());
    color.push_back(d.horizontal() ? Label::I : Label::J);
  }
  std::vector<int> oi(m), oj(m);
  for (int k = 0; k < m; ++k) oi[k] = oj[k] = k;
  std::sort(oi.begin(), oi.end(),
            [&](int s, int t) { return node_above(cb.dominoes[s].i_node, cb.dominoes[t].i_node, a); });
  std::sort(oj.begin(), oj.end(),
            [&](int s, int t) { return node_above(cb.dominoes[s].j_node, cb.dominoes[t].j_node, a); });
  cb.biorder = Biorder(std::move(names), std::move(oi), std::move(oj), std::move(color));
  return cb;
}

}  // namespace

ComponentBiorder component_biorder(const Partition& p, const ArmSequence& a, int i) {
  const int n = a.n();
  if (i < 0 || i >= n) throw DomainError("label out of range");
  return build(c_down(p, n, i), c_up(p, n, i), a, i);
}

ComponentBiorder component_biorder(const CrystalGraph& g, const Component& c, const ArmSequence& a) {
  const int n = a.n();
  if (c.j != (c.i + 1) % n) throw DomainError("component labels are not adjacent (need j = i+1 mod n)");
  if (c.vertices.empty()) throw DomainError("empty component");
  const Partition first = Partition::parse(g.vertex(c.vertices.front()).payload);
  const Partition down = c_down(first, n, c.i), up = c_up(first, n, c.i);
  for (int v : c.vertices) {
    const Partition p = Partition::parse(g.vertex(v).payload);
    if (c_down(p, n, c.i) != down || c_up(p, n, c.i) != up)
      throw DomainError("members of the component disagree on C-down/C-up at " + p.str());
  }
  return build(down, up, a, c.i);
}

Configuration psi(const ComponentBiorder& cb, const Partition& p) {
  Configuration out;
  for (const auto& d : cb.dominoes) out.push_back(int(p.contains(d.i_node)) + int(p.contains(d.j_node)));
  return out;
}

PsiReport check_psi(const CrystalGraph& g, const Component& c, const ComponentBiorder& cb) {
  PsiReport rep;
  const int n = g.n();
  const int labels[2] = {cb.i, (cb.i + 1) % n};
  std::map<Configuration, int> seen;
  std::map<int, Configuration> image;
  for (int v : c.vertices) {
    const Partition p = Partition::parse(g.vertex(v).payload);
    const Configuration a = psi(cb, p);
    image[v] = a;
    auto [it, fresh] = seen.emplace(a, v);
    if (!fresh) {
      rep.injective = false;
      rep.problems.push_back("psi identifies " + g.vertex(it->second).payload + " and " + p.str());
    }
    if (auto bad = check_good(cb.biorder, a)) {
      rep.image_good = false;
      rep.problems.push_back("psi(" + p.str() + ") = " + config_payload(a) + " violates " + to_string(bad->axiom));
    }
  }
  for (int v : c.vertices) {
    const Configuration& a = image[v];
    for (Label h : {Label::I, Label::J}) {
      const int label = labels[label_id(h)];
      auto compare = [&](std::optional<int> w, std::optional<Configuration> b, const char* op) {
        std::optional<Configuration> mapped;
        if (w) mapped = image.count(*w) ? image[*w] : psi(cb, Partition::parse(g.vertex(*w).payload));
        if (mapped != b) {
          rep.commutes = false;
          rep.problems.push_back(std::string(op) + "_" + std::to_string(label) + " does not commute with psi at " +
                                 g.vertex(v).payload);
        }
      };
      compare(g.f(v, label), config_f(cb.biorder, a, h), "f");
      compare(g.e(v, label), config_e(cb.biorder, a, h), "e");
    }
  }
  return rep;
}

}  // namespace pcrystal
