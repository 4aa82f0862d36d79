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

#include "pcrystal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "pcrystal/biorder.hpp"
#include "pcrystal/crystal_graph.hpp"
#include "pcrystal/domino.hpp"
#include "pcrystal/errors.hpp"
#include "pcrystal/graph_io.hpp"
#include "pcrystal/models.hpp"
#include "pcrystal/sign_seq.hpp"

namespace pcrystal {

namespace {

struct Options {
  int n = 3;
  int n2 = 0;
  std::string model = "berg";
  std::string other;
  int max_size = 10;
  std::string format = "text";
  std::string output;
  std::string input;
  bool broad = false;
  std::string from_partition;
  int label = 0;
  std::string sequence;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_size(int max_size) {
  if (max_size < 0) throw InputError("--max-size must be non-negative");
  const int bound = default_size_bound();
  if (max_size > bound)
    throw ResourceError("--max-size " + std::to_string(max_size) + " exceeds the bound " + std::to_string(bound) +
                        " (set CRYSTAL_MAX_SIZE to raise it)");
}

CrystalGraph build(const std::string& spec, int n, int max_size, bool broad) {
  const ModelSpec ms = parse_model(spec, n, max_size, broad);
  return generate(*ms.make(), max_size);
}

int emit_graph(const Options& o, const CrystalGraph& g, std::ostream& out) {
  std::ostringstream body;
  if (o.format == "json")
    body << to_json(g);
  else if (o.format == "dot")
    write_dot(body, g);
  else
    write_text(body, g);
  if (o.output.empty()) {
    out << body.str();
  } else {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write '" + o.output + "'");
    f << body.str();
  }
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  check_size(o.max_size);
  return emit_graph(o, build(o.model, o.n, o.max_size, o.broad), out);
}

int cmd_check(const Options& o, std::ostream& out) {
  std::optional<CrystalGraph> g;
  if (!o.input.empty()) {
    g = graph_from_json(read_file(o.input));
  } else {
    check_size(o.max_size);
    g = build(o.model, o.n, o.max_size, o.broad);
  }
  bool pass = true;
  out << "vertices: " << g->num_vertices() << "  edges: " << g->edges().size() << '\n';

  const AxiomReport ax = verify_axioms(*g);
  out << "axioms C1/C3/C4: " << (ax.ok() ? "ok" : "FAILED") << " (" << ax.violations.size() << " violations, "
      << ax.skipped << " frontier checks skipped)\n";
  for (const auto& f : ax.violations) out << "  " << f.check << ": " << f.detail << '\n';
  pass = pass && ax.ok();

  const auto src = sources(*g);
  out << "sources: " << src.size();
  for (int v : src) out << ' ' << display_payload(g->vertex(v).payload);
  out << '\n';
  pass = pass && src.size() == 1;

  if (ax.ok()) {
    const Rank2Summary r2 = check_all_rank2(*g);
    out << "rank-2 components: " << r2.complete_ok << " passed, " << r2.complete_failed << " failed, "
        << r2.incomplete << " incomplete (skipped)\n";
    for (const auto& f : r2.failures) out << "  " << f.check << ": " << f.detail << '\n';
    pass = pass && r2.ok();
  } else {
    out << "rank-2 components: not checked (axiom violations)\n";
  }
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitOk : kExitNegative;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const int n2 = o.n2 ? o.n2 : o.n;
  if (n2 != o.n) throw InputError("cannot compare crystals for different n (" + std::to_string(o.n) + " vs " +
                                  std::to_string(n2) + ")");
  if (o.other.empty()) throw InputError("compare needs --other");
  check_size(o.max_size);
  const CrystalGraph g1 = build(o.model, o.n, o.max_size, o.broad);
  const CrystalGraph g2 = build(o.other, n2, o.max_size, o.broad);
  const IsoResult r = isomorphic(g1, g2);
  if (!r.isomorphic) {
    out << "not isomorphic: " << r.reason << '\n';
    return kExitNegative;
  }
  out << "isomorphic (" << g1.num_vertices() << " vertices up to size " << o.max_size << ")\n";
  if (r.identity) out << "witness: identity\n";
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  if (o.broad) throw DomainError("witness: broadened arm sequences are unsupported");
  if (o.other.empty()) throw InputError("witness needs --other");
  const ArmSequence a = parse_arms(o.model, o.n, o.max_size);
  const ArmSequence b = parse_arms(o.other, o.n, o.max_size);
  try {
    const Partition w = witness(a, b);
    out << "(" << w.str() << ")  regular for " << (is_regular(w, a) ? a.str() : b.str()) << ", illegal hook for "
        << (is_regular(w, a) ? b.str() : a.str()) << '\n';
    return kExitOk;
  } catch (const NoWitnessError& ex) {
    out << ex.what() << '\n';
    return kExitNegative;
  }
}

void print_biorder_report(const Biorder& b, std::ostream& out) {
  out << "biorder: " << b.str() << '\n';
  const CrystalGraph cc = cc_graph(b);
  const auto comps = connected_components(cc);
  out << "configurations: " << cc.num_vertices() << "  components: " << comps.size() << '\n';
  for (const auto& members : comps) {
    Component c{members, true, label_id(Label::I), label_id(Label::J)};
    const bool good = is_good(b, parse_config(cc.vertex(members.front()).payload));
    const ComponentReport rep = check_dkk(cc, c);
    out << "  component of " << cc.vertex(members.front()).payload << ": " << members.size() << " vertices, "
        << (good ? "good" : "not good") << ", " << rep.sources << " source(s), DKK "
        << (rep.violations.empty() ? "ok" : "fails (" + rep.violations.front().check + ")") << '\n';
  }
}

int cmd_biorder(const Options& o, std::ostream& out) {
  if (!o.from_partition.empty()) {
    const ArmSequence a = parse_arms(o.model, o.n, o.max_size, o.broad);
    const Partition p = Partition::parse(o.from_partition);
    const ComponentBiorder cb = component_biorder(p, a, o.label);
    out << "C_down: (" << cb.down.str() << ")\n";
    out << "C_up: (" << cb.up.str() << ")\n";
    out << "dominoes:\n";
    for (const auto& d : cb.dominoes)
      out << "  " << d.name() << ' ' << (d.horizontal() ? "horizontal" : "vertical") << '\n';
    if (o.format == "json") {
      out << to_json(cb.biorder);
    } else {
      out << "biorder: " << cb.biorder.str() << '\n';
      out << "psi(" << p.str() << ") = " << config_payload(psi(cb, p)) << '\n';
    }
    return kExitOk;
  }
  if (o.input.empty()) throw InputError("biorder needs --input or --from-partition");
  const Biorder b = biorder_from_json(read_file(o.input));
  if (auto bad = validate_biorder(b))
    throw InputError("not a biorder: " + b.name(bad->first) + " >_i " + b.name(bad->second) + " >_j " +
                     b.name(bad->first) + " needs colours j and i");
  if (o.format == "json")
    out << to_json(cc_graph(b));
  else
    print_biorder_report(b, out);
  return kExitOk;
}

int cmd_pm(const Options& o, std::ostream& out) {
  const SignSeq s = SignSeq::parse(o.sequence);
  const SignAnalysis an = analyze(s);
  out << "sequence: " << s.str() << '\n';
  out << "epsilon: " << an.epsilon << "  phi: " << an.phi << '\n';
  out << "good: " << (an.good_pos ? std::to_string(*an.good_pos) : "none")
      << "  cogood: " << (an.cogood_pos ? std::to_string(*an.cogood_pos) : "none") << '\n';
  out << "reduced: " << reduce(s).str() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystal graphs of partition models for affine sl_n"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* c) {
    c->add_option("--n", o.n, "rank parameter n (>= 3)")->check(CLI::Range(3, 64));
    c->add_option("--model", o.model, "model spec (berg, restricted, colregular, prefix:..., canonical:..., "
                                      "classical:restricted, classical:regular)");
    c->add_option("--max-size", o.max_size, "largest partition size to generate");
    c->add_flag("--broad", o.broad, "allow 0 <= A_t <= nt-1");
  };

  auto* gen = app.add_subcommand("generate", "write the truncated crystal graph");
  add_common(gen);
  gen->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  gen->add_option("--output", o.output, "output file (default stdout)");

  auto* chk = app.add_subcommand("check", "verify crystal axioms and rank-2 structure");
  add_common(chk);
  chk->add_option("--input", o.input, "graph JSON file instead of generating");

  auto* cmp = app.add_subcommand("compare", "test two models for isomorphism");
  add_common(cmp);
  cmp->add_option("--other", o.other, "second model spec")->required();
  cmp->add_option("--n2", o.n2, "n for the second model (default --n)");

  auto* wit = app.add_subcommand("witness", "partition regular for exactly one of two arm sequences");
  add_common(wit);
  wit->add_option("--other", o.other, "second arm sequence spec")->required();

  auto* bio = app.add_subcommand("biorder", "configuration crystals of a biorder");
  add_common(bio);
  bio->add_option("--input", o.input, "biorder JSON file");
  bio->add_option("--from-partition", o.from_partition, "build S_C from the component of this partition");
  bio->add_option("--i", o.label, "first label (the second is i+1 mod n)");
  bio->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* pm = app.add_subcommand("pm", "sign sequences");
  pm->require_subcommand(1);
  auto* pma = pm->add_subcommand("analyze", "epsilon, phi, good/cogood positions and reduced word");
  pma->add_option("sequence", o.sequence, "word over + 0 - (use -- before a leading '-')")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(o, out);
    if (*chk) return cmd_check(o, out);
    if (*cmp) return cmd_compare(o, out);
    if (*wit) return cmd_witness(o, out);
    if (*bio) return cmd_biorder(o, out);
    if (*pm) return cmd_pm(o, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pcrystal
