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

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace pcrystal {

/// A node (row, col) of N x N, 1-based; rows grow downward, columns rightward.
struct Node {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Node&, const Node&) = default;
};

std::ostream& operator<<(std::ostream& os, const Node& node);
std::string to_string(const Node& node);

/// (col - row) mod n in {0, ..., n-1}.
int residue(const Node& node, int n);

/// A weakly decreasing list of positive parts.  Trailing zeros are never
/// stored; the empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless `parts` is weakly decreasing; zeros are
  /// accepted only as a trailing run and dropped.
  explicit Partition(std::vector<int> parts);

  /// "3,2,1,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);
  std::string str() const;

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// lambda_a with lambda_a = 0 beyond the last part.
  int part(int row) const {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  bool contains(const Node& node) const {
    return node.row >= 1 && node.col >= 1 && node.col <= part(node.row);
  }

  bool is_addable(const Node& node) const;
  bool is_removable(const Node& node) const;

  /// Throws DomainError unless the node is addable / removable.
  Partition with_node(const Node& node) const;
  Partition without_node(const Node& node) const;

  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

enum class NodeKind { Addable, Removable };

struct BoundaryNode {
  Node node;
  NodeKind kind;

  friend bool operator==(const BoundaryNode&, const BoundaryNode&) = default;
};

/// Every addable and removable node of `p`, sorted by increasing column.
std::vector<BoundaryNode> boundary_nodes(const Partition& p);

/// The addable and removable i-nodes of `p`, sorted by increasing column.
std::vector<BoundaryNode> boundary_nodes(const Partition& p, int n, int i);

struct Hook {
  int length = 0;
  int arm = 0;

  friend bool operator==(const Hook&, const Hook&) = default;
};

/// Hook length lambda_a - c + lambda'_c - a + 1 and arm length lambda_a - c.
/// Throws DomainError if the node is not in the diagram.
Hook hook(const Partition& p, const Node& node);

/// Same as hook() but reuses a precomputed conjugate.
Hook hook(const Partition& p, const Partition& conj, const Node& node);

inline constexpr int kDefaultPartitionBound = 40;

/// All partitions of m in lexicographically descending order.  Throws
/// ResourceError when m exceeds `bound`.
std::vector<Partition> partitions_of(int m, int bound = kDefaultPartitionBound);

/// Number of cells of residue i, for i = 0..n-1.
std::vector<int> residue_counts(const Partition& p, int n);

}  // namespace pcrystal
