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

#include <memory>
#include <optional>
#include <string>

#include "pcrystal/arm_crystal.hpp"
#include "pcrystal/arm_sequence.hpp"
#include "pcrystal/errors.hpp"
#include "pcrystal/partition_model.hpp"

namespace pcrystal {

/// n-restricted partitions (lambda_a - lambda_{a+1} < n), boundary nodes
/// read by increasing column.
class RestrictedModel final : public PartitionModel {
 public:
  explicit RestrictedModel(int n) : PartitionModel(n) {}
  bool contains(const Partition& p) const override;
  std::string name() const override { return "n-restricted"; }

 protected:
  void order_nodes(std::vector<BoundaryNode>& nodes) const override;
};

/// n-regular partitions (no n equal nonzero parts), boundary nodes read by
/// decreasing column.
class RegularModel final : public PartitionModel {
 public:
  explicit RegularModel(int n) : PartitionModel(n) {}
  bool contains(const Partition& p) const override;
  std::string name() const override { return "n-regular"; }

 protected:
  void order_nodes(std::vector<BoundaryNode>& nodes) const override;
};

struct ModelSpec {
  enum class Kind { Arm, Restricted, Regular } kind = Kind::Arm;
  int n = 3;
  std::optional<ArmSequence> arms;  // set iff kind == Arm

  std::unique_ptr<PartitionModel> make() const;
  std::string str() const;
};

/// Grammar: prefix:1,3,4 | canonical:y=3/2,sign=+[,len=12] | berg |
/// restricted | colregular | classical:restricted | classical:regular.
/// Aliases and canonical specs without len get a prefix long enough for
/// partitions of size <= max_size.  Throws InputError on bad syntax and
/// InvalidArmSequence on prefixes that are not arm sequences.
ModelSpec parse_model(const std::string& text, int n, int max_size, bool broad = false);

/// Parses an arm-sequence spec only (the classical names are rejected).
ArmSequence parse_arms(const std::string& text, int n, int max_size, bool broad = false);

class NoWitnessError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A partition regular for exactly one of the two sequences: (n) or (1^n)
/// when A_1 separates them at an extreme value, else the hook partition
/// (A_u+1, 1^{nu-A_u-1}) at the first index u where they differ, built from
/// the side with the smaller A_u.  The result is re-checked with
/// find_illegal_hook on both sides.  Throws NoWitnessError when the
/// prefixes agree, DomainError for broadened inputs or different n.
Partition witness(const ArmSequence& a, const ArmSequence& b);

/// Brute force: first partition of size <= bound (by size, then descending
/// lexicographic) in exactly one of the two regular sets.
std::optional<Partition> distinct_sets(const ArmSequence& a, const ArmSequence& b, int bound);

}  // namespace pcrystal
