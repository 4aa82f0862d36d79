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

#include <string>
#include <vector>

#include "pcrystal/arm_sequence.hpp"
#include "pcrystal/biorder.hpp"
#include "pcrystal/crystal_graph.hpp"
#include "pcrystal/partition.hpp"

namespace pcrystal {

/// A pair of adjacent nodes of residues i and j = i+1.  The j-node sits
/// immediately right of the i-node (horizontal) or immediately above it
/// (vertical).
struct Domino {
  Node i_node;
  Node j_node;

  bool horizontal() const { return j_node.row == i_node.row; }
  std::string name() const;  // "(r,c)-(r,c)", i-node first
  friend bool operator==(const Domino&, const Domino&) = default;
};

/// Remove (resp. add) removable (addable) nodes of residue i or i+1 until
/// none remain.
Partition c_down(const Partition& p, int n, int i);
Partition c_up(const Partition& p, int n, int i);

/// Tiling of [up] \ [down] by i-dominoes, sorted by i-node.  Throws
/// DomainError if the skew diagram has no unique tiling.
std::vector<Domino> domino_tiling(const Partition& down, const Partition& up, int n, int i);

struct ComponentBiorder {
  int i = 0;  // j = i + 1 mod n
  Partition down;
  Partition up;
  std::vector<Domino> dominoes;  // element k of `biorder` is dominoes[k]
  Biorder biorder;
};

/// S_C for the {i, i+1}-component of R_A containing `p`.
ComponentBiorder component_biorder(const Partition& p, const ArmSequence& a, int i);

/// Same, read off a rank-2 component of a generated graph.  Every member
/// must give the same C-down and C-up.  Throws DomainError unless the
/// component's labels are i and i+1 mod n.
ComponentBiorder component_biorder(const CrystalGraph& g, const Component& c, const ArmSequence& a);

/// psi(p)(s) = number of nodes of domino s inside [p].
Configuration psi(const ComponentBiorder& cb, const Partition& p);

struct PsiReport {
  bool injective = true;
  bool image_good = true;
  bool commutes = true;
  std::vector<std::string> problems;
  bool ok() const { return injective && image_good && commutes; }
};

/// Checks psi on a complete component: injective, good image, and
/// psi(f_h p) = f_h psi(p), psi(e_h p) = e_h psi(p) for h in {i, j}.
PsiReport check_psi(const CrystalGraph& g, const Component& c, const ComponentBiorder& cb);

}  // namespace pcrystal
