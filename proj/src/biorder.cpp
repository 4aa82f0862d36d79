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

#include "pcrystal/biorder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pcrystal/errors.hpp"

namespace pcrystal {

using ojson = nlohmann::ordered_json;

char label_char(Label h) { return h == Label::I ? 'i' : 'j'; }

namespace {

std::vector<int> ranks_of(const std::vector<int>& order, int m, const char* which) {
  if (static_cast<int>(order.size()) != m)
    throw InputError(std::string("order ") + which + " does not list every element once");
  std::vector<int> rank(m, -1);
  for (int pos = 0; pos < m; ++pos) {
    const int s = order[pos];
    if (s < 0 || s >= m || rank[s] != -1)
      throw InputError(std::string("order ") + which + " is not a permutation of the elements");
    rank[s] = pos;
  }
  return rank;
}

}  // namespace

Biorder::Biorder(std::vector<std::string> names, std::vector<int> order_i, std::vector<int> order_j,
                 std::vector<Label> color)
    : names_(std::move(names)),
      order_i_(std::move(order_i)),
      order_j_(std::move(order_j)),
      color_(std::move(color)) {
  const int m = size();
  if (static_cast<int>(color_.size()) != m) throw InputError("every element needs a colour");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != m) throw InputError("element names must be distinct");
  rank_i_ = ranks_of(order_i_, m, "i");
  rank_j_ = ranks_of(order_j_, m, "j");

  reach_.assign(m * m, false);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) reach_[s * m + t] = s != t && covers(s, t);
  for (int k = 0; k < m; ++k)
    for (int s = 0; s < m; ++s)
      if (reach_[s * m + k])
        for (int t = 0; t < m; ++t)
          if (reach_[k * m + t]) reach_[s * m + t] = true;

  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      if (s == t) continue;
      if (greater(Label::I, s, t) && greater(Label::J, t, s)) patterns_.g1.emplace_back(s, t);
      if (covers(s, t) && reaches(t, s) && color_[s] == color_[t]) patterns_.g2.emplace_back(s, t);
    }
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      if (s == t || !dominates(s, t) || color_[s] != color_[t]) continue;
      for (int r = 0; r < m; ++r)
        if (r != s && r != t && covers(t, r) && covers(r, s))
          patterns_.g2_triangles.push_back({s, t, r});
    }
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      if (r == s || !dominates(r, s)) continue;
      for (int t = 0; t < m; ++t) {
        if (t == r || t == s || !covers(s, t) || !dominates(r, t)) continue;
        for (int q = 0; q < m; ++q)
          if (q != r && q != s && q != t && covers(q, r) && covers(t, q) && dominates(q, s))
            patterns_.g3.push_back({q, r, s, t});
      }
    }
  std::sort(patterns_.g3.begin(), patterns_.g3.end());
}

std::optional<int> Biorder::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

Biorder Biorder::restrict(const std::vector<int>& subset) const {
  std::vector<int> local(size(), -1);
  std::vector<std::string> names;
  std::vector<Label> color;
  for (int s : subset) {
    local.at(s) = static_cast<int>(names.size());
    names.push_back(names_[s]);
    color.push_back(color_[s]);
  }
  auto induced = [&](const std::vector<int>& order) {
    std::vector<int> out;
    for (int s : order)
      if (local[s] >= 0) out.push_back(local[s]);
    return out;
  };
  return Biorder(std::move(names), induced(order_i_), induced(order_j_), std::move(color));
}

std::string Biorder::str() const {
  std::ostringstream os;
  auto chain = [&](const std::vector<int>& order) {
    for (std::size_t k = 0; k < order.size(); ++k) os << (k ? ">" : "") << names_[order[k]];
  };
  os << "i: ";
  chain(order_i_);
  os << "; j: ";
  chain(order_j_);
  os << "; color:";
  for (int s = 0; s < size(); ++s) os << ' ' << names_[s] << '=' << label_char(color_[s]);
  return os.str();
}

std::optional<std::pair<int, int>> validate_biorder(const Biorder& b) {
  for (auto [s, t] : b.patterns().g1)
    if (b.color(s) != Label::J || b.color(t) != Label::I) return std::make_pair(s, t);
  return std::nullopt;
}

std::string to_json(const Biorder& b, int indent) {
  ojson doc;
  doc["elements"] = b.names();
  auto names_of = [&](Label h) {
    std::vector<std::string> out;
    for (int s : b.order(h)) out.push_back(b.name(s));
    return out;
  };
  doc["order_i"] = names_of(Label::I);
  doc["order_j"] = names_of(Label::J);
  ojson color = ojson::object();
  for (int s = 0; s < b.size(); ++s) color[b.name(s)] = std::string(1, label_char(b.color(s)));
  doc["color"] = color;
  return doc.dump(indent) + "\n";
}

Biorder biorder_from_json(const std::string& text) {
  try {
    const ojson doc = ojson::parse(text);
    auto names = doc.at("elements").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k);
    auto order = [&](const char* key) {
      std::vector<int> out;
      for (const auto& nm : doc.at(key).get<std::vector<std::string>>()) {
        auto it = index.find(nm);
        if (it == index.end()) throw InputError(std::string(key) + " names unknown element '" + nm + "'");
        out.push_back(it->second);
      }
      return out;
    };
    std::vector<Label> color;
    const auto& jc = doc.at("color");
    for (const auto& nm : names) {
      if (!jc.contains(nm)) throw InputError("no colour given for element '" + nm + "'");
      const auto c = jc.at(nm).get<std::string>();
      if (c == "i")
        color.push_back(Label::I);
      else if (c == "j")
        color.push_back(Label::J);
      else
        throw InputError("colour of '" + nm + "' must be \"i\" or \"j\"");
    }
    return Biorder(names, order("order_i"), order("order_j"), color);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed biorder JSON: ") + ex.what());
  }
}

std::string config_payload(const Configuration& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(a[k]);
  }
  return s + ")";
}

Configuration parse_config(const std::string& payload) {
  if (payload.size() < 2 || payload.front() != '(' || payload.back() != ')')
    throw InputError("configuration must look like (0,1,2): " + payload);
  Configuration a;
  const std::string body = payload.substr(1, payload.size() - 2);
  if (body.empty()) return a;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok != "0" && tok != "1" && tok != "2") throw InputError("configuration values lie in {0,1,2}: " + payload);
    a.push_back(tok[0] - '0');
  }
  return a;
}

ConfigSignature config_signature(const Biorder& b, const Configuration& a, Label h) {
  if (static_cast<int>(a.size()) != b.size()) throw InputError("configuration length differs from biorder size");
  ConfigSignature out;
  const Label g = other(h);
  for (int s : b.order(h)) {
    const int v = a[s];
    const Label c = b.color(s);
    Sign sign = Sign::Zero;
    if ((v == 0 && c == h) || (v == 1 && c == g))
      sign = Sign::Plus;
    else if ((v == 1 && c == h) || (v == 2 && c == g))
      sign = Sign::Minus;
    out.elements.push_back(s);
    out.seq.push_back(sign);
  }
  return out;
}

std::optional<Configuration> config_e(const Biorder& b, const Configuration& a, Label h) {
  const auto sig = config_signature(b, a, h);
  const auto an = analyze(sig.seq);
  if (!an.good_pos) return std::nullopt;
  Configuration out = a;
  --out[sig.elements[*an.good_pos - 1]];
  return out;
}

std::optional<Configuration> config_f(const Biorder& b, const Configuration& a, Label h) {
  const auto sig = config_signature(b, a, h);
  const auto an = analyze(sig.seq);
  if (!an.cogood_pos) return std::nullopt;
  Configuration out = a;
  ++out[sig.elements[*an.cogood_pos - 1]];
  return out;
}

StringStats config_eps_phi(const Biorder& b, const Configuration& a, Label h) {
  const auto an = analyze(config_signature(b, a, h).seq);
  return {an.epsilon, an.phi};
}

std::string to_string(GoodnessViolation::Axiom axiom) {
  switch (axiom) {
    case GoodnessViolation::Axiom::G1: return "G1";
    case GoodnessViolation::Axiom::G2: return "G2";
    case GoodnessViolation::Axiom::G3: return "G3";
  }
  return "?";
}

std::optional<GoodnessViolation> check_good(const Biorder& b, const Configuration& a) {
  if (static_cast<int>(a.size()) != b.size()) throw InputError("configuration length differs from biorder size");
  const auto& pat = b.patterns();
  for (auto [s, t] : pat.g1)
    if (a[s] == 1 && a[t] == 1) return GoodnessViolation{GoodnessViolation::Axiom::G1, {s, t}};
  for (auto [s, t] : pat.g2)
    if (a[s] < a[t]) return GoodnessViolation{GoodnessViolation::Axiom::G2, {s, t}};
  for (const auto& qrst : pat.g3) {
    const auto [q, r, s, t] = qrst;
    if (a[q] == 2 && a[s] == 2 && a[r] == 0 && a[t] == 0)
      return GoodnessViolation{GoodnessViolation::Axiom::G3, {q, r, s, t}};
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> g2_triangle(const Biorder& b, const Configuration& a) {
  for (const auto& str : b.patterns().g2_triangles)
    if (a[str[0]] < a[str[1]]) return str;
  return std::nullopt;
}

namespace {

CrystalGraph config_graph(const Biorder& b, int bound, bool good_only) {
  const int m = b.size();
  if (m > bound)
    throw ResourceError("biorder has " + std::to_string(m) + " elements; the bound is " + std::to_string(bound));
  CrystalGraph g(0, {label_id(Label::I), label_id(Label::J)});
  long total = 1;
  for (int k = 0; k < m; ++k) total *= 3;
  Configuration a(m, 0);
  std::vector<Configuration> configs;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int k = m - 1; k >= 0; --k) {
      a[k] = static_cast<int>(c % 3);
      c /= 3;
    }
    if (good_only && !is_good(b, a)) continue;
    GraphVertex v;
    v.payload = config_payload(a);
    v.size = std::accumulate(a.begin(), a.end(), 0);
    v.intrinsic = {config_eps_phi(b, a, Label::I), config_eps_phi(b, a, Label::J)};
    g.add_vertex(std::move(v));
    configs.push_back(a);
  }
  for (std::size_t id = 0; id < configs.size(); ++id)
    for (Label h : {Label::I, Label::J})
      if (auto fa = config_f(b, configs[id], h))
        if (auto to = g.find(config_payload(*fa))) g.add_edge(static_cast<int>(id), *to, label_id(h));
  return g;
}

}  // namespace

CrystalGraph cc_graph(const Biorder& b, int bound) { return config_graph(b, bound, false); }
CrystalGraph gc_graph(const Biorder& b, int bound) { return config_graph(b, bound, true); }

bool is_transitive(const Biorder& b) {
  for (int s = 0; s < b.size(); ++s)
    for (int t = 0; t < b.size(); ++t)
      if (s != t && !b.reaches(s, t)) return false;
  return true;
}

std::optional<Split> split(const Biorder& b) {
  for (int s0 = 0; s0 < b.size(); ++s0)
    for (int t0 = 0; t0 < b.size(); ++t0) {
      if (s0 == t0 || b.reaches(t0, s0)) continue;
      Split out;
      for (int s = 0; s < b.size(); ++s)
        (s == s0 || b.reaches(s, s0) ? out.first : out.second).push_back(s);
      return out;
    }
  return std::nullopt;
}

std::optional<std::string> check_split_tensor(const Biorder& b, const Split& sp) {
  for (int x : sp.first)
    for (int y : sp.second)
      if (!b.dominates(x, y))
        return b.name(x) + " does not dominate " + b.name(y);
  const Biorder b1 = b.restrict(sp.first);
  const Biorder b2 = b.restrict(sp.second);
  const CrystalGraph whole = cc_graph(b);
  const CrystalGraph prod = tensor(cc_graph(b1), cc_graph(b2));
  if (whole.num_vertices() != prod.num_vertices()) return std::string("vertex counts differ");

  auto image = [&](const Configuration& a) -> std::optional<int> {
    Configuration a1, a2;
    for (int s : sp.first) a1.push_back(a[s]);
    for (int s : sp.second) a2.push_back(a[s]);
    return prod.find(tensor_payload(config_payload(a1), config_payload(a2)));
  };
  for (std::size_t v = 0; v < whole.num_vertices(); ++v) {
    const Configuration a = parse_config(whole.vertex(v).payload);
    const auto iv = image(a);
    if (!iv) return "no tensor vertex for " + whole.vertex(v).payload;
    for (int label : whole.labels()) {
      const auto fw = whole.f(static_cast<int>(v), label);
      const auto fp = prod.f(*iv, label);
      std::optional<int> mapped;
      if (fw) mapped = image(parse_config(whole.vertex(*fw).payload));
      if (mapped != fp)
        return "f_" + std::to_string(label) + " disagrees at " + whole.vertex(v).payload;
    }
  }
  return std::nullopt;
}

Biorder random_biorder(int size, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (int k = 0; k < size; ++k)
    names.push_back(size <= 26 ? std::string(1, static_cast<char>('a' + k)) : "e" + std::to_string(k));
  std::vector<int> order_i(size);
  std::iota(order_i.begin(), order_i.end(), 0);
  std::shuffle(order_i.begin(), order_i.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Label> color(size);
  for (auto& c : color) c = coin(rng) ? Label::I : Label::J;

  // Placing x ahead of a remaining y with y >_i x inverts the pair, which
  // needs colour(y) = j and colour(x) = i.
  std::vector<int> rank(size);
  for (int p = 0; p < size; ++p) rank[order_i[p]] = p;
  std::vector<int> remaining = order_i, order_j;
  while (!remaining.empty()) {
    std::vector<int> ok;
    for (int x : remaining) {
      bool fine = true;
      for (int y : remaining)
        if (rank[y] < rank[x] && !(color[y] == Label::J && color[x] == Label::I)) fine = false;
      if (fine) ok.push_back(x);
    }
    std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
    const int x = ok[pick(rng)];
    order_j.push_back(x);
    remaining.erase(std::find(remaining.begin(), remaining.end(), x));
  }
  return Biorder(std::move(names), std::move(order_i), std::move(order_j), std::move(color));
}

}  // namespace pcrystal
