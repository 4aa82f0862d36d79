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

#include "pcrystal/models.hpp"

#include <algorithm>
#include <sstream>

#include "pcrystal/errors.hpp"

namespace pcrystal {

bool RestrictedModel::contains(const Partition& p) const {
  for (int a = 1; a <= p.length(); ++a)
    if (p.part(a) - p.part(a + 1) >= n()) return false;
  return true;
}

void RestrictedModel::order_nodes(std::vector<BoundaryNode>& nodes) const {
  std::sort(nodes.begin(), nodes.end(),
            [](const BoundaryNode& x, const BoundaryNode& y) { return x.node.col < y.node.col; });
}

bool RegularModel::contains(const Partition& p) const {
  for (int a = 1; a + n() - 1 <= p.length(); ++a)
    if (p.part(a) == p.part(a + n() - 1)) return false;
  return true;
}

void RegularModel::order_nodes(std::vector<BoundaryNode>& nodes) const {
  std::sort(nodes.begin(), nodes.end(),
            [](const BoundaryNode& x, const BoundaryNode& y) { return x.node.col > y.node.col; });
}

std::unique_ptr<PartitionModel> ModelSpec::make() const {
  switch (kind) {
    case Kind::Arm: return std::make_unique<ArmModel>(*arms);
    case Kind::Restricted: return std::make_unique<RestrictedModel>(n);
    case Kind::Regular: return std::make_unique<RegularModel>(n);
  }
  return nullptr;
}

std::string ModelSpec::str() const {
  switch (kind) {
    case Kind::Arm: return "R_A with A=" + arms->str();
    case Kind::Restricted: return "classical n-restricted (n=" + std::to_string(n) + ")";
    case Kind::Regular: return "classical n-regular (n=" + std::to_string(n) + ")";
  }
  return "";
}

namespace {

std::vector<long> parse_longs(const std::string& body) {
  std::vector<long> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("not an integer: '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError("empty prefix");
  return out;
}

int auto_length(int n, int max_size) { return std::max(1, prefix_for_signatures(n, max_size)); }

ArmSequence parse_canonical(const std::string& body, int n, int max_size) {
  std::optional<Rational> y;
  std::optional<bool> plus;
  int len = auto_length(n, max_size);
  std::stringstream ss(body);
  std::string kv;
  while (std::getline(ss, kv, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value in '" + kv + "'");
    const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "y") {
      y = parse_rational(val);
    } else if (key == "sign") {
      if (val != "+" && val != "-") throw InputError("sign must be + or -");
      plus = val == "+";
    } else if (key == "len") {
      try {
        len = std::stoi(val);
      } catch (const std::logic_error&) {
        throw InputError("len must be an integer");
      }
    } else {
      throw InputError("unknown key '" + key + "' in canonical spec");
    }
  }
  if (!y || !plus) throw InputError("canonical spec needs y=... and sign=+|-");
  return ArmSequence::canonical(n, *y, *plus, len);
}

}  // namespace

ArmSequence parse_arms(const std::string& text, int n, int max_size, bool broad) {
  const int len = auto_length(n, max_size);
  if (text == "berg") return ArmSequence::berg(n, len);
  if (text == "restricted") return ArmSequence::restricted(n, len);
  if (text == "colregular") return ArmSequence::lower_extreme(n, len);
  if (text.rfind("prefix:", 0) == 0) return ArmSequence::validate(n, parse_longs(text.substr(7)), broad);
  if (text.rfind("canonical:", 0) == 0) return parse_canonical(text.substr(10), n, max_size);
  throw InputError("unknown arm sequence spec '" + text + "'");
}

ModelSpec parse_model(const std::string& text, int n, int max_size, bool broad) {
  ModelSpec spec;
  spec.n = n;
  if (text == "classical:restricted") {
    spec.kind = ModelSpec::Kind::Restricted;
  } else if (text == "classical:regular") {
    spec.kind = ModelSpec::Kind::Regular;
  } else {
    spec.kind = ModelSpec::Kind::Arm;
    spec.arms = parse_arms(text, n, max_size, broad);
  }
  if (n < 3) throw DomainError("n must be at least 3");
  return spec;
}

Partition witness(const ArmSequence& a, const ArmSequence& b) {
  if (a.broad() || b.broad()) throw DomainError("witness: broadened arm sequences are unsupported");
  if (a.n() != b.n()) throw DomainError("witness: sequences have different n");
  const int n = a.n();
  const int common = std::min(a.length(), b.length());
  std::optional<Partition> w;
  if (a.at(1) != b.at(1) && (a.at(1) == n - 1 || b.at(1) == n - 1)) {
    w = Partition({n});
  } else if (a.at(1) != b.at(1) && (a.at(1) == 0 || b.at(1) == 0)) {
    w = Partition(std::vector<int>(n, 1));
  } else {
    for (int u = 1; u <= common && !w; ++u) {
      if (a.at(u) == b.at(u)) continue;
      const long low = std::min(a.at(u), b.at(u));
      std::vector<int> parts{static_cast<int>(low + 1)};
      parts.resize(static_cast<std::size_t>(n * u - low), 1);
      w = Partition(parts);
    }
  }
  if (!w) throw NoWitnessError("no witness: prefixes agree on the first " + std::to_string(common) + " terms");
  if (is_regular(*w, a) == is_regular(*w, b))
    throw DomainError("witness candidate " + w->str() + " does not separate the two sets");
  return *w;
}

std::optional<Partition> distinct_sets(const ArmSequence& a, const ArmSequence& b, int bound) {
  for (int m = 0; m <= bound; ++m)
    for (const auto& p : partitions_of(m))
      if (is_regular(p, a) != is_regular(p, b)) return p;
  return std::nullopt;
}

}  // namespace pcrystal
