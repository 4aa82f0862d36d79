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

#include <iosfwd>
#include <string>

#include "pcrystal/crystal_graph.hpp"

namespace pcrystal {

/// {"n", "labels", "max_size", "vertices":[{"id","payload","size","weight"}],
///  "edges":[{"from","to","label"}]}, vertices in id order.
std::string to_json(const CrystalGraph& g, int indent = 2);

/// Inverse of to_json.  Throws InputError on malformed documents; crystal
/// axioms are not checked here.
CrystalGraph graph_from_json(const std::string& text);

/// One node per vertex labelled by its payload; arrows labelled by residue.
void write_dot(std::ostream& os, const CrystalGraph& g);

/// Plain listing: one line per vertex, then one line per arrow.
void write_text(std::ostream& os, const CrystalGraph& g);

/// Payload as displayed to people: the empty partition shows as "∅".
std::string display_payload(const std::string& payload);

}  // namespace pcrystal
