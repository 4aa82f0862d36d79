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
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcrystal/partition_model.hpp"
#include "pcrystal/weight.hpp"

namespace pcrystal {

struct GraphVertex {
  std::string payload;  // canonical text, unique within a graph
  int size = 0;
  std::optional<Weight> weight;
  /// Signature statistics per label (same order as labels()), when the
  /// producing model can compute them without looking at the graph.
  std::vector<StringStats> intrinsic;
};

struct Edge {
  int from = 0;
  int to = 0;
  int label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite crystal graph, possibly truncated at a maximum payload size.
/// Arrows run b -> f_i(b).  The structure is stored as given, so graphs that
/// break the crystal axioms (e.g. read from a corrupt file) can be inspected
/// by verify_axioms().
class CrystalGraph {
 public:
  CrystalGraph(int n, std::vector<int> labels, std::optional<int> max_size = std::nullopt);

  /// Rank of the ambient sl_n-hat (0 for abstract crystals).
  int n() const { return n_; }
  const std::vector<int>& labels() const { return labels_; }
  std::optional<int> max_size() const { return max_size_; }
  std::optional<int> label_index(int label) const;

  int add_vertex(GraphVertex v);
  void add_edge(int from, int to, int label);

  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const GraphVertex& vertex(int id) const { return vertices_.at(id); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<int> find(const std::string& payload) const;

  std::optional<int> f(int v, int label) const;
  std::optional<int> e(int v, int label) const;
  int out_degree(int v, int label) const;
  int in_degree(int v, int label) const;

  /// True when the vertex sits at the truncation size, so its upward arrows
  /// may have been cut off.
  bool is_frontier(int v) const { return max_size_ && vertices_[v].size >= *max_size_; }

  /// Intrinsic epsilon/phi when recorded, else string lengths in the graph.
  StringStats stats(int v, int label) const;
  /// Lengths of the e- and f-strings through v, read off the graph alone.
  StringStats string_stats(int v, int label) const;
  /// String lengths read off the graph; where the f-string reaches the
  /// truncation size, the intrinsic values instead, or nothing without them.
  std::optional<StringStats> known_stats(int v, int label) const;

 private:
  int n_;
  std::vector<int> labels_;
  std::optional<int> max_size_;
  std::vector<GraphVertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> out_;  // (label, to)
  std::vector<std::vector<std::pair<int, int>>> in_;   // (label, from)
  std::unordered_map<std::string, int> index_;
};

/// Default truncation bound, overridden by the CRYSTAL_MAX_SIZE variable.
int default_size_bound();

/// Breadth-first closure of the empty partition under every f_i, keeping
/// sizes <= max_size.  Vertices are numbered by size, then payload text.
CrystalGraph generate(const PartitionModel& model, int max_size, int bound = default_size_bound());

struct Finding {
  std::string check;
  int vertex = -1;
  int label = -1;
  std::string detail;
};

struct AxiomReport {
  std::vector<Finding> violations;
  int skipped = 0;  // C4 checks skipped on frontier vertices without data
  bool ok() const { return violations.empty(); }
};

/// C1 (at most one i-arrow in and out of each vertex, labels in range),
/// C3 (weight steps by alpha_i) and C4 (<h_i, wt> = phi_i - eps_i).
AxiomReport verify_axioms(const CrystalGraph& g);

std::vector<int> sources(const CrystalGraph& g);

struct Component {
  std::vector<int> vertices;  // sorted ids
  bool complete = true;
  int i = 0;
  int j = 0;
};

/// Connected components of the {i, j}-arrows.  A component is complete iff
/// every member is strictly below the truncation size.
std::vector<Component> rank2(const CrystalGraph& g, int i, int j);

/// Connected components using every label.
std::vector<std::vector<int>> connected_components(const CrystalGraph& g);

struct ComponentReport {
  bool complete = true;
  int sources = 0;
  std::vector<Finding> violations;
  bool ok() const { return complete && violations.empty(); }
};

/// e_i, f_i commute with e_j, f_j (as partial maps) on every member.
ComponentReport check_commuting(const CrystalGraph& g, const Component& c);

/// Axioms A2, A3 in both label orders plus a unique source.
ComponentReport check_dkk(const CrystalGraph& g, const Component& c);

/// Labels i and j are adjacent in the Dynkin diagram: j = i +- 1 mod n.
/// For abstract crystals (n = 0) every pair of distinct labels counts.
bool adjacent_labels(int n, int i, int j);

struct Rank2Summary {
  int complete_ok = 0;
  int complete_failed = 0;
  int incomplete = 0;  // reported, not checked
  std::vector<Finding> failures;
  bool ok() const { return complete_failed == 0; }
};

/// Every rank-2 component for every label pair: check_dkk for adjacent
/// labels (oriented as (i, i+1)), check_commuting otherwise.
Rank2Summary check_all_rank2(const CrystalGraph& g);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> witness;  // g1 vertex -> g2 vertex
  bool identity = false;     // every vertex maps to one with equal payload
  std::string reason;
};

/// Rooted traversal from the unique sources.  Throws DomainError unless both
/// graphs have exactly one source and the same labels.
IsoResult isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

/// b1 (x) b2 with the signature tensor rule.  Both factors must be
/// untruncated and share labels.
CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2);

/// Payload text of b1 (x) b2 vertices.
std::string tensor_payload(const std::string& left, const std::string& right);

}  // namespace pcrystal
