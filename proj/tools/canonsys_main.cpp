/*
 * Copyright 2026 The canonsys Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// canonsys: exact canonical systems of basic invariants for finite unitary
// reflection groups.
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 input or
// usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "canonsys/canonical.hpp"
#include "canonsys/catalog.hpp"
#include "canonsys/errors.hpp"
#include "canonsys/io.hpp"

namespace {

using canonsys::CanonicalSystem;
using canonsys::GroupSpec;
using canonsys::InvariantSystem;
using canonsys::ReflGroup;
using canonsys::Report;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw canonsys::ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw canonsys::ParseError("cannot write file: " + path);
  out << content;
}

GroupSpec resolve_group(const std::string& ref) {
  if (canonsys::is_catalog_name(ref)) return canonsys::expand_catalog(ref);
  GroupSpec spec = canonsys::group_spec_from_json(read_file(ref));
  if (spec.name.empty()) spec.name = ref;
  return spec;
}

ReflGroup analyze(const GroupSpec& spec, std::size_t cap) {
  canonsys::AnalyzeOptions options;
  options.closure_cap = cap;
  options.name = spec.name;
  return ReflGroup::analyze(spec.generators, options);
}

Json group_node(const ReflGroup& group) {
  Json node;
  node["name"] = group.name();
  node["order"] = group.order();
  node["rank"] = group.rank();
  node["reflections"] = group.reflections().size();
  Json planes = Json::array();
  for (const canonsys::Hyperplane& h : group.hyperplanes()) {
    Json plane;
    plane["form"] = h.linear_form.to_string();
    plane["order"] = h.order;
    planes.push_back(std::move(plane));
  }
  node["hyperplanes"] = std::move(planes);
  node["delta"] = group.delta().to_string();
  node["degrees"] = group.degrees();
  node["irreducible"] = group.is_irreducible();
  node["character_norm"] = group.character_norm().get_str();
  return node;
}

void print_group_text(const ReflGroup& group) {
  std::cout << "group: " << group.name() << "\n"
            << "order: " << group.order() << "\n"
            << "rank: " << group.rank() << "\n"
            << "reflections: " << group.reflections().size() << "\n"
            << "hyperplanes (" << group.hyperplanes().size() << "):\n";
  for (const canonsys::Hyperplane& h : group.hyperplanes())
    std::cout << "  " << h.linear_form.to_string() << "  (order " << h.order
              << ")\n";
  std::cout << "delta: " << group.delta().to_string() << "\n"
            << "degrees:";
  for (unsigned d : group.degrees()) std::cout << ' ' << d;
  std::cout << "\nirreducible: " << (group.is_irreducible() ? "yes" : "no")
            << " (character norm " << group.character_norm().get_str() << ")\n";
}

// Shared verbs for the pipeline subcommands.
struct PipelineArgs {
  std::string group_ref;
  std::uint64_t seed = 0;
  std::size_t cap = 20000;
  std::string from_path;
  std::string out_path;
  bool latex = false;
  bool json = false;
  unsigned max_degree = 0;  // 0 = derive the default 2 * deg(delta)
};

InvariantSystem obtain_invariants(const ReflGroup& group,
                                  const PipelineArgs& args) {
  if (args.from_path.empty()) return canonsys::basic_invariants(group, args.seed);
  return canonsys::invariant_system_from_json(read_file(args.from_path));
}

unsigned effective_max_degree(const ReflGroup& group, const PipelineArgs& args) {
  const unsigned delta_degree =
      static_cast<unsigned>(std::max(group.delta().degree(), 0));
  const unsigned fallback = 2 * delta_degree;
  const unsigned chosen = args.max_degree == 0 ? fallback : args.max_degree;
  const unsigned top = group.degrees().empty() ? 0 : group.degrees().back();
  if (top > 0 && chosen + 1 < top)
    throw canonsys::ParseError(
        "--max-degree " + std::to_string(chosen) +
        " is below the verification sweep bound " + std::to_string(top - 1));
  return chosen;
}

int run_info(const PipelineArgs& args) {
  const ReflGroup group = analyze(resolve_group(args.group_ref), args.cap);
  if (args.json)
    std::cout << group_node(group).dump(2) << "\n";
  else
    print_group_text(group);
  return kExitPass;
}

int run_invariants(const PipelineArgs& args) {
  const ReflGroup group = analyze(resolve_group(args.group_ref), args.cap);
  (void)effective_max_degree(group, args);
  const InvariantSystem system = obtain_invariants(group, args);
  const Report report = canonsys::verify_basic(group, system);
  const std::string system_json = canonsys::to_json(system);
  if (!args.out_path.empty()) write_file(args.out_path, system_json);
  if (args.json) {
    Json node;
    node["group"] = group_node(group);
    node["seed"] = args.seed;
    node["report"] = Json::parse(canonsys::to_json(report));
    node["system"] = Json::parse(system_json);
    std::cout << node.dump(2) << "\n";
  } else {
    if (args.from_path.empty()) std::cout << "seed: " << args.seed << "\n";
    std::cout << report.to_text();
    if (args.out_path.empty()) std::cout << system_json;
  }
  return report.all_passed() ? kExitPass : kExitVerificationFailure;
}

int run_canonical(const PipelineArgs& args) {
  const ReflGroup group = analyze(resolve_group(args.group_ref), args.cap);
  (void)effective_max_degree(group, args);
  const InvariantSystem invariants = obtain_invariants(group, args);

  // Supplied systems are gated before the construction runs.
  const Report basic_report = canonsys::verify_basic(group, invariants);
  if (!basic_report.all_passed()) {
    if (args.json) {
      Json node;
      node["group"] = group_node(group);
      node["report"] = Json::parse(canonsys::to_json(basic_report));
      std::cout << node.dump(2) << "\n";
    } else {
      std::cout << basic_report.to_text();
    }
    return kExitVerificationFailure;
  }

  const CanonicalSystem system =
      canonsys::compute_canonical_system(group, invariants);
  const Report report = canonsys::verify_canonical(group, system);
  const std::string system_json = canonsys::to_json(system);
  const std::string latex = canonsys::to_latex(system);

  if (!args.out_path.empty()) {
    write_file(args.out_path, system_json);
    if (args.latex) write_file(args.out_path + ".tex", latex);
  }
  if (args.json) {
    Json node;
    node["group"] = group_node(group);
    node["seed"] = args.seed;
    node["report"] = Json::parse(canonsys::to_json(report));
    node["system"] = Json::parse(system_json);
    if (args.latex) node["latex"] = latex;
    std::cout << node.dump(2) << "\n";
  } else {
    if (args.from_path.empty()) std::cout << "seed: " << args.seed << "\n";
    std::cout << report.to_text();
    if (args.out_path.empty()) {
      std::cout << system_json;
      if (args.latex) std::cout << latex;
    }
  }
  return report.all_passed() ? kExitPass : kExitVerificationFailure;
}

int run_verify(const PipelineArgs& args, const std::string& system_path) {
  const ReflGroup group = analyze(resolve_group(args.group_ref), args.cap);
  (void)effective_max_degree(group, args);
  const CanonicalSystem system =
      canonsys::canonical_system_from_json(read_file(system_path));
  for (const canonsys::CanonicalPair& p : system.pairs)
    if (p.g.var_count() != group.rank())
      throw canonsys::DimensionMismatch(
          "system is written in " + std::to_string(p.g.var_count()) +
          " variables but the group has rank " + std::to_string(group.rank()));
  const Report report = canonsys::verify_canonical(group, system);
  if (args.json) {
    Json node;
    node["group"] = group_node(group);
    node["report"] = Json::parse(canonsys::to_json(report));
    std::cout << node.dump(2) << "\n";
  } else {
    std::cout << report.to_text();
  }
  return report.all_passed() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact canonical systems of basic invariants for finite unitary "
      "reflection groups"};
  app.require_subcommand(1);

  PipelineArgs args;
  std::string system_path;

  const auto add_common = [&](CLI::App* cmd, bool pipeline) {
    cmd->add_option("group", args.group_ref,
                    "catalog name (cyclic:m, dihedral:m, B:n, G:m,p,n, G4) or "
                    "path to a group-spec JSON file")
        ->required();
    cmd->add_option("--cap", args.cap, "closure element cap")
        ->capture_default_str();
    cmd->add_flag("--json", args.json, "emit a structured JSON report");
    if (pipeline) {
      cmd->add_option("--seed", args.seed, "seed for invariant generation")
          ->capture_default_str();
      cmd->add_option("--from", args.from_path,
                      "read basic invariants from a JSON file instead of "
                      "generating them");
      cmd->add_option("--out", args.out_path, "write the resulting system here");
      cmd->add_option("--max-degree", args.max_degree,
                      "cap on invariant-space degrees (default 2 * deg delta)");
    }
  };

  CLI::App* info = app.add_subcommand(
      "info", "analyze a group: order, reflections, hyperplanes, degrees");
  add_common(info, false);

  CLI::App* invariants = app.add_subcommand(
      "invariants", "generate (or check) a system of basic invariants");
  add_common(invariants, true);

  CLI::App* canonical = app.add_subcommand(
      "canonical", "compute and verify a canonical system of basic invariants");
  add_common(canonical, true);
  canonical->add_flag("--latex", args.latex, "also emit LaTeX");

  CLI::App* verify = app.add_subcommand(
      "verify", "verify an externally supplied canonical system");
  add_common(verify, false);
  verify->add_option("system", system_path, "canonical-system JSON file")
      ->required();
  verify->add_option("--max-degree", args.max_degree,
                     "cap on invariant-space degrees (default 2 * deg delta)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(args);
    if (invariants->parsed()) return run_invariants(args);
    if (canonical->parsed()) return run_canonical(args);
    if (verify->parsed()) return run_verify(args, system_path);
  } catch (const canonsys::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
