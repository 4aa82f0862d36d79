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

#include "pcrystal/graph_io.hpp"

#include <ostream>

#include "json.hpp"
#include "pcrystal/errors.hpp"

namespace pcrystal {

using ojson = nlohmann::ordered_json;

std::string to_json(const CrystalGraph& g, int indent) {
  ojson doc;
  doc["n"] = g.n();
  doc["labels"] = g.labels();
  doc["max_size"] = g.max_size() ? ojson(*g.max_size()) : ojson(nullptr);
  ojson verts = ojson::array();
  for (std::size_t id = 0; id < g.num_vertices(); ++id) {
    const auto& v = g.vertex(id);
    ojson jv;
    jv["id"] = id;
    jv["payload"] = v.payload;
    jv["size"] = v.size;
    if (v.weight) {
      ojson w;
      w["lambda"] = v.weight->lambda;
      w["delta"] = v.weight->delta;
      jv["weight"] = w;
    } else {
      jv["weight"] = nullptr;
    }
    verts.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(verts);
  ojson edges = ojson::array();
  for (const Edge& e : g.edges()) {
    ojson je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label"] = e.label;
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(indent) + "\n";
}

CrystalGraph graph_from_json(const std::string& text) {
  try {
    const ojson doc = ojson::parse(text);
    std::optional<int> max_size;
    if (doc.contains("max_size") && !doc.at("max_size").is_null())
      max_size = doc.at("max_size").get<int>();
    CrystalGraph g(doc.at("n").get<int>(), doc.at("labels").get<std::vector<int>>(), max_size);
    int expect = 0;
    for (const auto& jv : doc.at("vertices")) {
      if (jv.at("id").get<int>() != expect++)
        throw InputError("vertex ids must be 0, 1, 2, ... in order");
      GraphVertex v;
      v.payload = jv.at("payload").get<std::string>();
      v.size = jv.at("size").get<int>();
      if (jv.contains("weight") && !jv.at("weight").is_null()) {
        const auto& w = jv.at("weight");
        v.weight = Weight{w.at("lambda").get<std::vector<long>>(), w.at("delta").get<long>()};
      }
      g.add_vertex(std::move(v));
    }
    for (const auto& je : doc.at("edges"))
      g.add_edge(je.at("from").get<int>(), je.at("to").get<int>(), je.at("label").get<int>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed crystal graph JSON: ") + e.what());
  }
}

std::string display_payload(const std::string& payload) {
  return payload.empty() ? "\xE2\x88\x85" : payload;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void write_dot(std::ostream& os, const CrystalGraph& g) {
  os << "digraph crystal {\n";
  for (std::size_t id = 0; id < g.num_vertices(); ++id)
    os << "  v" << id << " [label=\"" << dot_escape(display_payload(g.vertex(id).payload))
       << "\"];\n";
  for (const Edge& e : g.edges())
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
}

void write_text(std::ostream& os, const CrystalGraph& g) {
  os << "n=" << g.n() << " vertices=" << g.num_vertices() << " edges=" << g.edges().size();
  if (g.max_size()) os << " max_size=" << *g.max_size();
  os << "\n";
  for (std::size_t id = 0; id < g.num_vertices(); ++id) {
    const auto& v = g.vertex(id);
    os << id << " " << display_payload(v.payload) << " size=" << v.size;
    if (v.weight) os << " wt=" << *v.weight;
    os << "\n";
  }
  for (const Edge& e : g.edges())
    os << e.from << " -" << e.label << "-> " << e.to << "\n";
}

}  // namespace pcrystal
