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
#include <vector>

#include "pcrystal/partition.hpp"
#include "pcrystal/sign_seq.hpp"
#include "pcrystal/weight.hpp"

namespace pcrystal {

/// The i-signature of a partition: its addable/removable i-nodes in
/// descending model order, with '+' for addable and '-' for removable.
struct Signature {
  std::vector<Node> nodes;
  SignSeq seq;
};

struct StringStats {
  int epsilon = 0;
  int phi = 0;

  friend bool operator==(const StringStats&, const StringStats&) = default;
};

/// A level-1 partition model of the basic sl_n-hat crystal.  Subclasses
/// choose the vertex set and the order on i-nodes; the crystal operators are
/// always read off the good/cogood positions of the signature.
class PartitionModel {
 public:
  explicit PartitionModel(int n);
  virtual ~PartitionModel() = default;

  int n() const { return n_; }

  virtual bool contains(const Partition& p) const = 0;
  virtual std::string name() const = 0;

  /// Throws ResourceError when the model cannot evaluate operators on
  /// every partition of size <= max_size.
  virtual void require_size(int max_size) const;

  Signature signature(const Partition& p, int i) const;

  /// Both throw DomainError if `p` is outside the model.
  std::optional<Partition> e(const Partition& p, int i) const;
  std::optional<Partition> f(const Partition& p, int i) const;
  StringStats eps_phi(const Partition& p, int i) const;

  Weight weight(const Partition& p) const { return pcrystal::weight(p, n_); }

 protected:
  /// Sorts same-residue boundary nodes so the greatest comes first.
  virtual void order_nodes(std::vector<BoundaryNode>& nodes) const = 0;

 private:
  void require_member(const Partition& p) const;

  int n_;
};

}  // namespace pcrystal
