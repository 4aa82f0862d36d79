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

#include <optional>
#include <string>

#include "pcrystal/arm_sequence.hpp"
#include "pcrystal/partition.hpp"
#include "pcrystal/partition_model.hpp"

namespace pcrystal {

struct IllegalHook {
  Node node;
  int t = 0;

  friend bool operator==(const IllegalHook&, const IllegalHook&) = default;
};

/// First node (row-major) whose hook has length nt and arm length A_t.
/// Throws ResourceError unless the prefix covers t <= |p| / n.
std::optional<IllegalHook> find_illegal_hook(const Partition& p, const ArmSequence& a);

inline bool is_regular(const Partition& p, const ArmSequence& a) {
  return !find_illegal_hook(p, a).has_value();
}

enum class NodeOrder { FirstAbove, SecondAbove };

/// The total order on nodes of one residue.  Orient the pair so the axial
/// distance (b-a) + (c-d) = nt has t >= 0; then (a,c) is above (b,d) iff
/// c - d > A_t.  Throws DomainError for distinct residues or equal nodes.
NodeOrder compare_nodes(const Node& x, const Node& y, const ArmSequence& a);

inline bool node_above(const Node& x, const Node& y, const ArmSequence& a) {
  return compare_nodes(x, y, a) == NodeOrder::FirstAbove;
}

/// The crystal R_A on A-regular partitions.
class ArmModel final : public PartitionModel {
 public:
  explicit ArmModel(ArmSequence a);

  const ArmSequence& arms() const { return arms_; }

  bool contains(const Partition& p) const override { return is_regular(p, arms_); }
  std::string name() const override;
  void require_size(int max_size) const override;

 protected:
  void order_nodes(std::vector<BoundaryNode>& nodes) const override;

 private:
  ArmSequence arms_;
};

// Free-function forms of the R_A operators.
Signature signature(const Partition& p, int i, const ArmSequence& a);
std::optional<Partition> e_tilde(const Partition& p, int i, const ArmSequence& a);
std::optional<Partition> f_tilde(const Partition& p, int i, const ArmSequence& a);
StringStats eps_phi(const Partition& p, int i, const ArmSequence& a);

}  // namespace pcrystal
