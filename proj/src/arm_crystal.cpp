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

#include "pcrystal/arm_crystal.hpp"

#include <algorithm>
#include <cstdlib>

#include "pcrystal/errors.hpp"

namespace pcrystal {

PartitionModel::PartitionModel(int n) : n_(n) {
  if (n < 3) throw DomainError("n must be at least 3 (got " + std::to_string(n) + ")");
}

void PartitionModel::require_size(int) const {}

void PartitionModel::require_member(const Partition& p) const {
  if (!contains(p))
    throw DomainError("partition (" + p.str() + ") is not in the model " + name());
}

Signature PartitionModel::signature(const Partition& p, int i) const {
  std::vector<BoundaryNode> nodes = boundary_nodes(p, n_, i);
  order_nodes(nodes);
  Signature sig;
  for (const auto& b : nodes) {
    sig.nodes.push_back(b.node);
    sig.seq.push_back(b.kind == NodeKind::Addable ? Sign::Plus : Sign::Minus);
  }
  return sig;
}

std::optional<Partition> PartitionModel::e(const Partition& p, int i) const {
  require_member(p);
  const Signature sig = signature(p, i);
  const SignAnalysis an = analyze(sig.seq);
  if (!an.good_pos) return std::nullopt;
  return p.without_node(sig.nodes[*an.good_pos - 1]);
}

std::optional<Partition> PartitionModel::f(const Partition& p, int i) const {
  require_member(p);
  const Signature sig = signature(p, i);
  const SignAnalysis an = analyze(sig.seq);
  if (!an.cogood_pos) return std::nullopt;
  return p.with_node(sig.nodes[*an.cogood_pos - 1]);
}

StringStats PartitionModel::eps_phi(const Partition& p, int i) const {
  require_member(p);
  const SignAnalysis an = analyze(signature(p, i).seq);
  return {an.epsilon, an.phi};
}

std::optional<IllegalHook> find_illegal_hook(const Partition& p, const ArmSequence& a) {
  const int n = a.n();
  const int need = prefix_for_hooks(n, p.size());
  if (a.length() < need)
    throw ResourceError("arm sequence prefix of length " + std::to_string(a.length()) +
                        " is too short for partitions of size " + std::to_string(p.size()) +
                        " (need prefix length >= " + std::to_string(need) + ")");
  const Partition conj = p.conjugate();
  for (int r = 1; r <= p.length(); ++r) {
    for (int c = 1; c <= p.part(r); ++c) {
      const Hook h = hook(p, conj, Node{r, c});
      if (h.length % n != 0) continue;
      const int t = h.length / n;
      if (h.arm == a.at(t)) return IllegalHook{Node{r, c}, t};
    }
  }
  return std::nullopt;
}

NodeOrder compare_nodes(const Node& x, const Node& y, const ArmSequence& a) {
  const int n = a.n();
  if (x == y) throw DomainError("compare_nodes: nodes must be distinct");
  if (residue(x, n) != residue(y, n))
    throw DomainError("compare_nodes: residues of " + to_string(x) + " and " +
                      to_string(y) + " differ");
  const int dist = (y.row - x.row) + (x.col - y.col);
  if (dist >= 0) {
    return x.col - y.col > a.at(dist / n) ? NodeOrder::FirstAbove : NodeOrder::SecondAbove;
  }
  return y.col - x.col > a.at(-dist / n) ? NodeOrder::SecondAbove : NodeOrder::FirstAbove;
}

ArmModel::ArmModel(ArmSequence a) : PartitionModel(a.n()), arms_(std::move(a)) {}

std::string ArmModel::name() const { return "R_A with A=" + arms_.str(); }

void ArmModel::require_size(int max_size) const {
  const int need = std::max(prefix_for_signatures(n(), max_size),
                            prefix_for_hooks(n(), max_size));
  if (arms_.length() < need)
    throw ResourceError("arm sequence prefix " + arms_.str() + " has length " +
                        std::to_string(arms_.length()) + "; size " +
                        std::to_string(max_size) + " needs prefix length >= " +
                        std::to_string(need));
}

void ArmModel::order_nodes(std::vector<BoundaryNode>& nodes) const {
  std::sort(nodes.begin(), nodes.end(), [this](const auto& x, const auto& y) {
    return node_above(x.node, y.node, arms_);
  });
}

Signature signature(const Partition& p, int i, const ArmSequence& a) {
  return ArmModel(a).signature(p, i);
}

std::optional<Partition> e_tilde(const Partition& p, int i, const ArmSequence& a) {
  return ArmModel(a).e(p, i);
}

std::optional<Partition> f_tilde(const Partition& p, int i, const ArmSequence& a) {
  return ArmModel(a).f(p, i);
}

StringStats eps_phi(const Partition& p, int i, const ArmSequence& a) {
  return ArmModel(a).eps_phi(p, i);
}

}  // namespace pcrystal
