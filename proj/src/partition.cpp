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

#include "pcrystal/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "pcrystal/errors.hpp"

namespace pcrystal {

std::ostream& operator<<(std::ostream& os, const Node& node) {
  return os << '(' << node.row << ',' << node.col << ')';
}

std::string to_string(const Node& node) {
  std::ostringstream os;
  os << node;
  return os.str();
}

int residue(const Node& node, int n) {
  const int r = (node.col - node.row) % n;
  return r < 0 ? r + n : r;
}

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0)
      throw DomainError("partition parts must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw InputError("invalid partition text '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw InputError("invalid partition '" + std::string(text) + "': " + e.what());
  }
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.str() << ')';
}

bool Partition::is_addable(const Node& node) const {
  if (node.row < 1 || node.col < 1) return false;
  if (node.col != part(node.row) + 1) return false;
  return node.row == 1 || part(node.row - 1) >= node.col;
}

bool Partition::is_removable(const Node& node) const {
  if (node.row < 1 || node.row > length()) return false;
  return node.col == part(node.row) && part(node.row) > part(node.row + 1);
}

Partition Partition::with_node(const Node& node) const {
  if (!is_addable(node))
    throw DomainError("node " + to_string(node) + " is not addable to (" +
                      str() + ")");
  std::vector<int> parts = parts_;
  if (node.row > length()) parts.push_back(1);
  else ++parts[node.row - 1];
  return Partition(std::move(parts));
}

Partition Partition::without_node(const Node& node) const {
  if (!is_removable(node))
    throw DomainError("node " + to_string(node) + " is not removable from (" +
                      str() + ")");
  std::vector<int> parts = parts_;
  --parts[node.row - 1];
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
  for (int row : parts_)
    for (int c = 0; c < row; ++c) ++out[c];
  return Partition(std::move(out));
}

std::vector<BoundaryNode> boundary_nodes(const Partition& p) {
  std::vector<BoundaryNode> out;
  // Walking rows bottom-up visits columns in increasing order.
  for (int a = p.length() + 1; a >= 1; --a) {
    const Node add{a, p.part(a) + 1};
    if (p.is_addable(add)) out.push_back({add, NodeKind::Addable});
    if (a <= p.length()) {
      const Node rem{a, p.part(a)};
      if (p.is_removable(rem)) out.push_back({rem, NodeKind::Removable});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.node.col < y.node.col;
  });
  return out;
}

std::vector<BoundaryNode> boundary_nodes(const Partition& p, int n, int i) {
  std::vector<BoundaryNode> all = boundary_nodes(p);
  std::vector<BoundaryNode> out;
  for (const auto& b : all)
    if (residue(b.node, n) == i) out.push_back(b);
  return out;
}

Hook hook(const Partition& p, const Partition& conj, const Node& node) {
  if (!p.contains(node))
    throw DomainError("node " + to_string(node) + " is not in (" + p.str() + ")");
  const int arm = p.part(node.row) - node.col;
  const int leg = conj.part(node.col) - node.row;
  return Hook{arm + leg + 1, arm};
}

Hook hook(const Partition& p, const Node& node) {
  return hook(p, p.conjugate(), node);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m, int bound) {
  if (m < 0) throw DomainError("partitions_of: negative size");
  if (m > bound)
    throw ResourceError("partitions_of: size " + std::to_string(m) +
                        " exceeds the configured bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(m, m, cur, out);
  return out;
}

std::vector<int> residue_counts(const Partition& p, int n) {
  std::vector<int> counts(n, 0);
  for (int a = 1; a <= p.length(); ++a)
    for (int c = 1; c <= p.part(a); ++c) ++counts[residue(Node{a, c}, n)];
  return counts;
}

}  // namespace pcrystal
