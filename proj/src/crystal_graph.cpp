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

#include "pcrystal/crystal_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pcrystal/errors.hpp"

namespace pcrystal {

CrystalGraph::CrystalGraph(int n, std::vector<int> labels, std::optional<int> max_size)
    : n_(n), labels_(std::move(labels)), max_size_(max_size) {}

std::optional<int> CrystalGraph::label_index(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int CrystalGraph::add_vertex(GraphVertex v) {
  const int id = static_cast<int>(vertices_.size());
  if (!index_.emplace(v.payload, id).second)
    throw InputError("duplicate vertex payload '" + v.payload + "'");
  vertices_.push_back(std::move(v));
  out_.emplace_back();
  in_.emplace_back();
  return id;
}

void CrystalGraph::add_edge(int from, int to, int label) {
  const int nv = static_cast<int>(vertices_.size());
  if (from < 0 || from >= nv || to < 0 || to >= nv)
    throw InputError("edge endpoint out of range");
  edges_.push_back({from, to, label});
  out_[from].emplace_back(label, to);
  in_[to].emplace_back(label, from);
}

std::optional<int> CrystalGraph::find(const std::string& payload) const {
  auto it = index_.find(payload);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> CrystalGraph::f(int v, int label) const {
  for (auto [l, to] : out_.at(v))
    if (l == label) return to;
  return std::nullopt;
}

std::optional<int> CrystalGraph::e(int v, int label) const {
  for (auto [l, from] : in_.at(v))
    if (l == label) return from;
  return std::nullopt;
}

int CrystalGraph::out_degree(int v, int label) const {
  return static_cast<int>(std::count_if(out_.at(v).begin(), out_.at(v).end(),
                                        [label](auto p) { return p.first == label; }));
}

int CrystalGraph::in_degree(int v, int label) const {
  return static_cast<int>(std::count_if(in_.at(v).begin(), in_.at(v).end(),
                                        [label](auto p) { return p.first == label; }));
}

namespace {

int string_length(const CrystalGraph& g, int v, int label, bool up) {
  // Capped so that a corrupt cyclic graph cannot loop forever.
  int len = 0;
  std::optional<int> cur = v;
  const int cap = static_cast<int>(g.num_vertices());
  while (len <= cap) {
    cur = up ? g.f(*cur, label) : g.e(*cur, label);
    if (!cur) break;
    ++len;
  }
  return len;
}

}  // namespace

StringStats CrystalGraph::stats(int v, int label) const {
  const auto li = label_index(label);
  const auto& intr = vertices_.at(v).intrinsic;
  if (li && static_cast<std::size_t>(*li) < intr.size()) return intr[*li];
  return string_stats(v, label);
}

StringStats CrystalGraph::string_stats(int v, int label) const {
  return {string_length(*this, v, label, false), string_length(*this, v, label, true)};
}

std::optional<StringStats> CrystalGraph::known_stats(int v, int label) const {
  // Graph strings first; a string that runs into the frontier may be cut.
  const int eps = string_length(*this, v, label, false);
  std::optional<int> cur = v;
  int phi = 0;
  bool cut = false;
  while (true) {
    if (is_frontier(*cur)) {
      cut = true;
      break;
    }
    cur = f(*cur, label);
    if (!cur) break;
    if (++phi > static_cast<int>(num_vertices())) break;
  }
  if (!cut) return StringStats{eps, phi};
  const auto li = label_index(label);
  const auto& intr = vertices_.at(v).intrinsic;
  if (li && static_cast<std::size_t>(*li) < intr.size()) return intr[*li];
  return std::nullopt;
}

int default_size_bound() {
  if (const char* env = std::getenv("CRYSTAL_MAX_SIZE")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InputError(std::string("CRYSTAL_MAX_SIZE is not an integer: ") + env);
    }
  }
  return 20;
}

CrystalGraph generate(const PartitionModel& model, int max_size, int bound) {
  if (max_size < 0) throw DomainError("max_size must be non-negative");
  if (max_size > bound)
    throw ResourceError("max_size " + std::to_string(max_size) +
                        " exceeds the configured bound " + std::to_string(bound) +
                        " (set CRYSTAL_MAX_SIZE to raise it)");
  model.require_size(max_size);
  const int n = model.n();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  CrystalGraph g(n, labels, max_size);

  auto by_text = [](const Partition& a, const Partition& b) { return a.str() < b.str(); };
  std::vector<Partition> level{Partition()};
  std::vector<std::vector<Partition>> levels;
  for (int m = 0; m <= max_size; ++m) {
    std::sort(level.begin(), level.end(), by_text);
    level.erase(std::unique(level.begin(), level.end()), level.end());
    levels.push_back(level);
    if (m == max_size) break;
    std::vector<Partition> next;
    for (const auto& p : level)
      for (int i = 0; i < n; ++i)
        if (auto q = model.f(p, i)) next.push_back(*q);
    level = std::move(next);
  }

  for (const auto& lv : levels) {
    for (const auto& p : lv) {
      GraphVertex v{p.str(), p.size(), model.weight(p), {}};
      for (int i = 0; i < n; ++i) v.intrinsic.push_back(model.eps_phi(p, i));
      g.add_vertex(std::move(v));
    }
  }
  for (std::size_t id = 0; id < g.num_vertices(); ++id) {
    const Partition p = Partition::parse(g.vertex(id).payload);
    if (p.size() >= max_size) continue;
    for (int i = 0; i < n; ++i)
      if (auto q = model.f(p, i)) g.add_edge(static_cast<int>(id), *g.find(q->str()), i);
  }
  return g;
}

AxiomReport verify_axioms(const CrystalGraph& g) {
  AxiomReport rep;
  auto add = [&rep](std::string check, int v, int label, std::string detail) {
    rep.violations.push_back({std::move(check), v, label, std::move(detail)});
  };

  for (const Edge& ed : g.edges())
    if (!g.label_index(ed.label))
      add("C1", ed.from, ed.label, "edge label not in the label set");

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (int label : g.labels()) {
      const int out = g.out_degree(static_cast<int>(v), label);
      const int in = g.in_degree(static_cast<int>(v), label);
      if (out > 1)
        add("C1", static_cast<int>(v), label, std::to_string(out) + " outgoing arrows");
      if (in > 1)
        add("C1", static_cast<int>(v), label, std::to_string(in) + " incoming arrows");
    }
  }

  const bool weighted =
      g.n() >= 3 && std::all_of(g.vertices().begin(), g.vertices().end(),
                                [&g](const GraphVertex& v) {
                                  return v.weight && v.weight->lambda.size() ==
                                                         static_cast<std::size_t>(g.n());
                                });
  if (!weighted) return rep;

  for (const Edge& ed : g.edges()) {
    if (!g.label_index(ed.label)) continue;
    const Weight expect = *g.vertex(ed.from).weight - simple_root(g.n(), ed.label);
    if (*g.vertex(ed.to).weight != expect)
      add("C3", ed.to, ed.label, "weight does not step by alpha_" + std::to_string(ed.label));
  }

  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (int label : g.labels()) {
      const auto st = g.known_stats(static_cast<int>(v), label);
      if (!st) {
        ++rep.skipped;
        continue;
      }
      const long lhs = pairing(label, *g.vertex(v).weight);
      if (lhs != st->phi - st->epsilon) {
        std::ostringstream os;
        os << "<h_" << label << ", wt> = " << lhs << " but phi - eps = " << st->phi
           << " - " << st->epsilon;
        add("C4", static_cast<int>(v), label, os.str());
      }
    }
  }
  return rep;
}

std::vector<int> sources(const CrystalGraph& g) {
  std::vector<bool> has_in(g.num_vertices(), false);
  for (const Edge& ed : g.edges()) has_in[ed.to] = true;
  std::vector<int> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (!has_in[v]) out.push_back(static_cast<int>(v));
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int root(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> components_by(const CrystalGraph& g,
                                            const std::vector<int>& labels) {
  UnionFind uf(g.num_vertices());
  for (const Edge& ed : g.edges())
    if (std::find(labels.begin(), labels.end(), ed.label) != labels.end())
      uf.unite(ed.from, ed.to);
  std::map<int, std::vector<int>> groups;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    groups[uf.root(static_cast<int>(v))].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<std::vector<int>> connected_components(const CrystalGraph& g) {
  return components_by(g, g.labels());
}

std::vector<Component> rank2(const CrystalGraph& g, int i, int j) {
  if (i == j) throw DomainError("rank2 needs two distinct labels");
  std::vector<Component> out;
  for (auto& members : components_by(g, {i, j})) {
    Component c;
    c.i = i;
    c.j = j;
    c.complete = std::none_of(members.begin(), members.end(),
                              [&g](int v) { return g.is_frontier(v); });
    c.vertices = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

using Op = std::optional<int> (*)(const CrystalGraph&, int, int);

std::optional<int> apply_e(const CrystalGraph& g, int v, int label) { return g.e(v, label); }
std::optional<int> apply_f(const CrystalGraph& g, int v, int label) { return g.f(v, label); }

std::optional<int> then(const CrystalGraph& g, std::optional<int> v, Op op, int label) {
  if (!v) return std::nullopt;
  return op(g, *v, label);
}

int count_sources(const CrystalGraph& g, const Component& c) {
  return static_cast<int>(std::count_if(c.vertices.begin(), c.vertices.end(), [&](int v) {
    return !g.e(v, c.i) && !g.e(v, c.j);
  }));
}

std::string vtext(const CrystalGraph& g, int v) { return "'" + g.vertex(v).payload + "'"; }

}  // namespace

ComponentReport check_commuting(const CrystalGraph& g, const Component& c) {
  ComponentReport rep;
  rep.complete = c.complete;
  if (!c.complete) return rep;
  rep.sources = count_sources(g, c);
  const std::pair<Op, const char*> ops[] = {{apply_e, "e"}, {apply_f, "f"}};
  for (int v : c.vertices) {
    for (auto [x, xn] : ops) {
      for (auto [y, yn] : ops) {
        const auto xy = then(g, y(g, v, c.j), x, c.i);
        const auto yx = then(g, x(g, v, c.i), y, c.j);
        if (xy != yx) {
          std::ostringstream os;
          os << xn << "_" << c.i << " does not commute with " << yn << "_" << c.j << " at "
             << vtext(g, v);
          rep.violations.push_back({"commute", v, c.i, os.str()});
        }
      }
    }
  }
  return rep;
}

ComponentReport check_dkk(const CrystalGraph& g, const Component& c) {
  ComponentReport rep;
  rep.complete = c.complete;
  if (!c.complete) return rep;
  auto fail = [&rep](const char* axiom, int v, int label, const std::string& d) {
    rep.violations.push_back({axiom, v, label, d});
  };
  auto eps = [&g](int v, int l) { return g.string_stats(v, l).epsilon; };
  auto phi = [&g](int v, int l) { return g.string_stats(v, l).phi; };

  for (auto [i, j] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
    for (int b : c.vertices) {
      const auto ei = g.e(b, i), fi = g.f(b, i), ej = g.e(b, j), fj = g.f(b, j);
      if (ei) {
        const bool first = eps(*ei, j) == eps(b, j) + 1 && phi(*ei, j) == phi(b, j);
        const bool second = eps(*ei, j) == eps(b, j) && phi(*ei, j) == phi(b, j) - 1;
        if (!first && !second)
          fail("A2a", b, i, "eps/phi_" + std::to_string(j) + " change under e_" +
                                std::to_string(i) + " at " + vtext(g, b));
        if (fi && !(eps(*ei, j) > eps(b, j) || phi(*fi, j) > phi(b, j)))
          fail("A2b", b, i, "neither eps_" + std::to_string(j) + " nor phi_" +
                                std::to_string(j) + " grows at " + vtext(g, b));
      }
      if (ei && ej && eps(*ei, j) == eps(b, j)) {
        const auto ij = then(g, ej, apply_e, i);
        const auto ji = then(g, ei, apply_e, j);
        if (!ij || ij != ji)
          fail("A3a", b, i, "e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                " != e_" + std::to_string(j) + " e_" + std::to_string(i) +
                                " at " + vtext(g, b));
        if (!(eps(*ej, i) > eps(b, i)))
          fail("A3a", b, i, "eps_" + std::to_string(i) + " does not grow under e_" +
                                std::to_string(j) + " at " + vtext(g, b));
      }
      if (fi && fj && phi(*fi, j) == phi(b, j)) {
        const auto ij = then(g, fj, apply_f, i);
        const auto ji = then(g, fi, apply_f, j);
        if (!ij || ij != ji)
          fail("A3b", b, i, "f_" + std::to_string(i) + " f_" + std::to_string(j) +
                                " != f_" + std::to_string(j) + " f_" + std::to_string(i) +
                                " at " + vtext(g, b));
        if (!(phi(*fj, i) > phi(b, i)))
          fail("A3b", b, i, "phi_" + std::to_string(i) + " does not grow under f_" +
                                std::to_string(j) + " at " + vtext(g, b));
      }
    }
  }
  rep.sources = count_sources(g, c);
  if (rep.sources != 1)
    fail("source", c.vertices.empty() ? -1 : c.vertices.front(), -1,
         std::to_string(rep.sources) + " sources in the component");
  return rep;
}

bool adjacent_labels(int n, int i, int j) {
  if (i == j) return false;
  if (n == 0) return true;
  const int d = ((j - i) % n + n) % n;
  return d == 1 || d == n - 1;
}

Rank2Summary check_all_rank2(const CrystalGraph& g) {
  Rank2Summary out;
  const auto& labels = g.labels();
  for (std::size_t x = 0; x < labels.size(); ++x)
    for (std::size_t y = x + 1; y < labels.size(); ++y) {
      int i = labels[x], j = labels[y];
      const bool adj = adjacent_labels(g.n(), i, j);
      if (adj && g.n() > 0 && j != (i + 1) % g.n()) std::swap(i, j);
      for (const Component& c : rank2(g, i, j)) {
        if (!c.complete) {
          ++out.incomplete;
          continue;
        }
        const ComponentReport rep = adj ? check_dkk(g, c) : check_commuting(g, c);
        if (rep.ok()) {
          ++out.complete_ok;
        } else {
          ++out.complete_failed;
          out.failures.insert(out.failures.end(), rep.violations.begin(), rep.violations.end());
        }
      }
    }
  return out;
}

IsoResult isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
  if (g1.labels() != g2.labels())
    throw DomainError("isomorphic: graphs have different label sets");
  const auto s1 = sources(g1), s2 = sources(g2);
  if (s1.size() != 1 || s2.size() != 1)
    throw DomainError("isomorphic: both graphs need exactly one source (found " +
                      std::to_string(s1.size()) + " and " + std::to_string(s2.size()) + ")");

  IsoResult res;
  std::vector<int> map1(g1.num_vertices(), -1), map2(g2.num_vertices(), -1);
  std::deque<std::pair<int, int>> queue;
  auto pair_up = [&](int u, int v) -> bool {
    if (map1[u] == -1 && map2[v] == -1) {
      map1[u] = v;
      map2[v] = u;
      queue.emplace_back(u, v);
      return true;
    }
    return map1[u] == v && map2[v] == u;
  };
  auto mismatch = [&](int u, int v, const std::string& what) {
    res.reason = what + " at '" + g1.vertex(u).payload + "' ~ '" + g2.vertex(v).payload + "'";
    return res;
  };

  pair_up(s1.front(), s2.front());
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (int label : g1.labels()) {
      const auto eu = g1.e(u, label), ev = g2.e(v, label);
      if (eu.has_value() != ev.has_value())
        return mismatch(u, v, "e_" + std::to_string(label) + " definedness differs");
      if (eu && !pair_up(*eu, *ev))
        return mismatch(u, v, "inconsistent e_" + std::to_string(label) + " images");

      if (!g1.is_frontier(u) && !g2.is_frontier(v)) {
        const auto fu = g1.f(u, label), fv = g2.f(v, label);
        if (fu.has_value() != fv.has_value())
          return mismatch(u, v, "f_" + std::to_string(label) + " definedness differs");
        if (fu && !pair_up(*fu, *fv))
          return mismatch(u, v, "inconsistent f_" + std::to_string(label) + " images");
      } else {
        const auto a = g1.known_stats(u, label), b = g2.known_stats(v, label);
        if (a && b && *a != *b)
          return mismatch(u, v, "frontier eps/phi_" + std::to_string(label) + " differ");
      }
    }
  }
  const bool all1 = std::find(map1.begin(), map1.end(), -1) == map1.end();
  const bool all2 = std::find(map2.begin(), map2.end(), -1) == map2.end();
  if (!all1 || !all2) {
    res.reason = "traversal did not cover both vertex sets";
    return res;
  }
  res.isomorphic = true;
  res.witness = map1;
  res.identity = true;
  for (std::size_t u = 0; u < map1.size(); ++u)
    if (g1.vertex(u).payload != g2.vertex(map1[u]).payload) res.identity = false;
  return res;
}

std::string tensor_payload(const std::string& left, const std::string& right) {
  return left + " (x) " + right;
}

CrystalGraph tensor(const CrystalGraph& b1, const CrystalGraph& b2) {
  if (b1.labels() != b2.labels()) throw DomainError("tensor: label sets differ");
  if (b1.max_size() || b2.max_size())
    throw DomainError("tensor: factors must be complete (untruncated) crystals");
  if (b1.n() != b2.n()) throw DomainError("tensor: factors have different rank");
  const auto& labels = b1.labels();
  CrystalGraph out(b1.n(), labels);
  const int m2 = static_cast<int>(b2.num_vertices());
  auto id = [m2](int x, int y) { return x * m2 + y; };

  for (std::size_t x = 0; x < b1.num_vertices(); ++x) {
    for (std::size_t y = 0; y < b2.num_vertices(); ++y) {
      const auto& v1 = b1.vertex(x);
      const auto& v2 = b2.vertex(y);
      GraphVertex v{tensor_payload(v1.payload, v2.payload), v1.size + v2.size, std::nullopt, {}};
      if (v1.weight && v2.weight) v.weight = *v1.weight + *v2.weight;
      out.add_vertex(std::move(v));
    }
  }
  for (std::size_t x = 0; x < b1.num_vertices(); ++x) {
    for (std::size_t y = 0; y < b2.num_vertices(); ++y) {
      for (int label : labels) {
        const int xi = static_cast<int>(x), yi = static_cast<int>(y);
        const StringStats a = b1.stats(xi, label);
        const StringStats b = b2.stats(yi, label);
        std::optional<int> target;
        if (a.phi > b.epsilon) {
          if (auto fx = b1.f(xi, label)) target = id(*fx, yi);
        } else {
          if (auto fy = b2.f(yi, label)) target = id(xi, *fy);
        }
        if (target) out.add_edge(id(xi, yi), *target, label);
      }
    }
  }
  return out;
}

}  // namespace pcrystal
