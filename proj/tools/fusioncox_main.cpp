// Command-line driver: loads rings, Coxeter graphs and realisations, runs
// the library operations and emits versioned JSON (or DOT) reports.
//
// Exit codes: 0 success/verified, 1 structural or I/O error, 2 verification
// failed, 3 inconclusive (an enumeration cap or length bound was reached, or
// a theorem precondition like finite type does not hold).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <span>
#include <string>

#include "fusioncox/enumeration.hpp"
#include "fusioncox/folding.hpp"
#include "fusioncox/io.hpp"
#include "fusioncox/reflection_geometry.hpp"
#include "fusioncox/ring_builders.hpp"
#include "fusioncox/version.hpp"

using fusioncox::CoxeterMatrix;
using fusioncox::GeometricRealisation;
using fusioncox::RingPtr;
using ordered_json = nlohmann::ordered_json;

namespace {

int g_exit_code = 0;

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["schema"] = 1;
  j["version"] = fusioncox::kVersion;
  j["command"] = command;
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

double default_tolerance() {
  if (const char* env = std::getenv("FUSIONCOX_TOLERANCE")) {
    try {
      size_t used = 0;
      const double value = std::stod(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw fusioncox::StructuralError("FUSIONCOX_TOLERANCE is not a positive number");
  }
  return 1e-9;
}

// Shared input options: a realisation comes either from a JSON file or from
// the canonical builder applied to a builtin/graph-file spec plus a variant.
struct RealisationInput {
  std::string file;
  std::string builtin;
  std::string variant = "standard";

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "realisation JSON file");
    cmd->add_option("--builtin", builtin,
                    "Coxeter graph spec (i2:M, a:N, affine-a:N, 'inf' for the infinite label) or "
                    "path to a Coxeter matrix file");
    cmd->add_option("--variant", variant, "realisation variant: standard, even, infty_s3");
  }

  GeometricRealisation resolve() const {
    if (!file.empty() && !builtin.empty())
      throw fusioncox::StructuralError("give either a realisation file or --builtin, not both");
    if (!file.empty()) return fusioncox::load_realisation(file);
    if (!builtin.empty())
      return fusioncox::build_rm_realisation(fusioncox::load_coxeter(builtin),
                                             fusioncox::parse_variant(variant));
    throw fusioncox::StructuralError("an input realisation is required (file or --builtin)");
  }

  ordered_json flags() const {
    ordered_json j;
    if (!file.empty()) j["file"] = file;
    if (!builtin.empty()) {
      j["builtin"] = builtin;
      j["variant"] = variant;
    }
    return j;
  }
};

ordered_json coxeter_payload(const CoxeterMatrix& coxeter) {
  return ordered_json::parse(fusioncox::coxeter_to_json(coxeter));
}

ordered_json relation_payload(const fusioncox::RelationReport& report,
                              const CoxeterMatrix& coxeter) {
  ordered_json relations = ordered_json::array();
  for (const auto& entry : report.entries) {
    ordered_json r;
    r["s"] = coxeter.generator_name(entry.s);
    r["t"] = coxeter.generator_name(entry.t);
    r["order"] = entry.order;
    switch (entry.status) {
      case fusioncox::RelationStatus::verified: r["status"] = "verified"; break;
      case fusioncox::RelationStatus::failed: r["status"] = "failed"; break;
      case fusioncox::RelationStatus::vacuous: r["status"] = "vacuous"; break;
      case fusioncox::RelationStatus::unchecked: r["status"] = "unchecked"; break;
    }
    relations.push_back(std::move(r));
  }
  ordered_json j;
  j["relations"] = std::move(relations);
  j["form_invariant"] = report.form_invariant;
  j["ok"] = report.ok();
  j["conclusive"] = report.conclusive();
  return j;
}

void run_ring_validate(const std::string& spec) {
  const RingPtr ring = fusioncox::load_ring(spec);
  const auto report = fusioncox::validate(*ring);
  ordered_json j = envelope("ring validate");
  j["flags"]["ring"] = spec;
  j["ring"]["name"] = ring->name();
  j["ring"]["rank"] = ring->rank();
  j["ok"] = report.ok();
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json entry;
    entry["axiom"] = v.axiom;
    entry["indices"] = v.indices;
    entry["detail"] = v.detail;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  j["truncated"] = report.truncated;
  emit(j);
  if (!report.ok()) g_exit_code = 2;
}

void run_ring_show(const std::string& spec) {
  const RingPtr ring = fusioncox::load_ring(spec);
  ordered_json j = envelope("ring show");
  j["flags"]["ring"] = spec;
  j["ring"] = ordered_json::parse(fusioncox::ring_to_json(*ring));
  j["fpdim"] = fusioncox::basis_fpdims(*ring);
  emit(j);
}

void run_realise_build(const RealisationInput& input, const std::string& out) {
  if (input.builtin.empty())
    throw fusioncox::StructuralError("realise build needs --builtin (a graph spec or file)");
  const GeometricRealisation real = input.resolve();
  const std::string text = fusioncox::realisation_to_json(real);
  if (out.empty()) {
    std::cout << text;
  } else {
    fusioncox::write_text_file(out, text);
    ordered_json j = envelope("realise build");
    j["flags"] = input.flags();
    j["out"] = out;
    j["ring"] = real.ring->name();
    emit(j);
  }
}

void run_realise_check(const RealisationInput& input, int relation_cap) {
  const GeometricRealisation real = input.resolve();
  const auto report = fusioncox::verify_coxeter_relations(real, relation_cap);
  ordered_json j = envelope("realise check");
  j["flags"] = input.flags();
  j["flags"]["relation-cap"] = relation_cap;
  j["ring"] = real.ring->name();
  j["coxeter"] = coxeter_payload(real.coxeter);
  j.update(relation_payload(report, real.coxeter));
  emit(j);
  if (!report.ok())
    g_exit_code = 2;
  else if (!report.conclusive())
    g_exit_code = 3;
}

void run_unfold_graph(const RealisationInput& input, const std::string& format) {
  const auto u = fusioncox::unfold(input.resolve());
  if (format == "dot") {
    std::cout << fusioncox::unfolded_to_dot(u);
    return;
  }
  if (format != "json") throw fusioncox::StructuralError("--format must be json or dot");
  ordered_json j = envelope("unfold graph");
  j["flags"] = input.flags();
  j["flags"]["format"] = format;
  j.update(ordered_json::parse(fusioncox::unfolded_to_json(u)));
  emit(j);
}

void run_unfold_cartan(const RealisationInput& input) {
  const auto u = fusioncox::unfold(input.resolve());
  ordered_json j = envelope("unfold cartan");
  j["flags"] = input.flags();
  ordered_json names = ordered_json::array();
  for (int v = 0; v < u.vertex_count(); ++v) names.push_back(u.vertex_name(v));
  j["vertices"] = std::move(names);
  ordered_json rows = ordered_json::array();
  for (int a = 0; a < u.vertex_count(); ++a) {
    ordered_json row = ordered_json::array();
    for (int b = 0; b < u.vertex_count(); ++b) row.push_back(u.cartan_z(a, b));
    rows.push_back(std::move(row));
  }
  j["cartan"] = std::move(rows);
  emit(j);
}

void run_unfold_phi(const RealisationInput& input) {
  const auto u = fusioncox::unfold(input.resolve());
  ordered_json j = envelope("unfold phi");
  j["flags"] = input.flags();
  j["fibers"] = u.fibers;
  ordered_json words = ordered_json::array();
  for (int s = 0; s < u.source.rank(); ++s) {
    ordered_json entry;
    entry["generator"] = u.source.coxeter.generator_name(s);
    ordered_json image = ordered_json::array();
    for (int v : u.fibers[static_cast<size_t>(s)]) image.push_back(u.vertex_name(v));
    entry["image"] = std::move(image);
    words.push_back(std::move(entry));
  }
  j["generator_words"] = std::move(words);
  const auto psi = fusioncox::psi_conjugation_check(u);
  j["psi_ok"] = psi.ok();
  j["failed_generators"] = psi.failed_generators;
  emit(j);
  if (!psi.ok()) g_exit_code = 2;
}

void run_roots(const RealisationInput& input, const std::string& system, int depth, double tol) {
  const GeometricRealisation real = input.resolve();
  ordered_json j = envelope("roots");
  j["flags"] = input.flags();
  j["flags"]["system"] = system;
  j["flags"]["depth"] = depth;
  j["flags"]["tolerance"] = tol;
  ordered_json root_rows = ordered_json::array();
  bool complete = false;
  if (system == "unfolded") {
    const auto u = fusioncox::unfold(real);
    const auto roots = fusioncox::positive_roots(u.cartan_z, depth);
    complete = roots.complete;
    for (const auto& root : roots.roots) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index i = 0; i < root.size(); ++i) row.push_back(root[i]);
      root_rows.push_back(std::move(row));
    }
  } else if (system == "folded") {
    const auto roots = fusioncox::positive_roots_real(fusioncox::folded_cartan(real), depth, tol);
    complete = roots.complete;
    for (const auto& root : roots.roots) {
      ordered_json row = ordered_json::array();
      for (Eigen::Index i = 0; i < root.size(); ++i) row.push_back(root[i]);
      root_rows.push_back(std::move(row));
    }
  } else {
    throw fusioncox::StructuralError("--system must be unfolded or folded");
  }
  j["count"] = root_rows.size();
  j["complete"] = complete;
  j["roots"] = std::move(root_rows);
  emit(j);
  if (!complete) g_exit_code = 3;
}

void run_hyperplanes_restrict(const RealisationInput& input, int depth, double tol) {
  const auto u = fusioncox::unfold(input.resolve());
  const auto roots = fusioncox::positive_roots(u.cartan_z, depth);
  // Fiber counts keyed by the normalized functional, in first-appearance
  // order of the breadth-first root enumeration.
  std::vector<fusioncox::RealVector> normals;
  std::vector<int> fibers;
  for (const auto& root : roots.roots) {
    const fusioncox::RealVector f = fusioncox::restrict_hyperplane(u, root, tol);
    bool found = false;
    for (size_t i = 0; i < normals.size(); ++i) {
      if ((normals[i] - f).cwiseAbs().maxCoeff() <= tol) {
        ++fibers[i];
        found = true;
        break;
      }
    }
    if (!found) {
      normals.push_back(f);
      fibers.push_back(1);
    }
  }
  ordered_json j = envelope("hyperplanes restrict");
  j["flags"] = input.flags();
  j["flags"]["depth"] = depth;
  j["flags"]["tolerance"] = tol;
  j["unfolded"] = roots.roots.size();
  j["complete"] = roots.complete;
  ordered_json list = ordered_json::array();
  for (size_t i = 0; i < normals.size(); ++i) {
    ordered_json entry;
    ordered_json normal = ordered_json::array();
    for (Eigen::Index k = 0; k < normals[i].size(); ++k) normal.push_back(normals[i][k]);
    entry["normal"] = std::move(normal);
    entry["fiber"] = fibers[i];
    list.push_back(std::move(entry));
  }
  j["hyperplanes"] = std::move(list);
  emit(j);
  if (!roots.complete) g_exit_code = 3;
}

void run_hyperplanes_verify(const RealisationInput& input, double tol) {
  const auto u = fusioncox::unfold(input.resolve());
  const auto report = fusioncox::verify_hyperplane_theorem(u, tol);
  ordered_json j = envelope("hyperplanes verify");
  j["flags"] = input.flags();
  j["flags"]["tolerance"] = tol;
  j["applicable"] = report.applicable;
  j["verified"] = report.verified;
  j["unfolded"] = report.unfolded_root_count;
  j["folded"] = report.folded_hyperplane_count;
  j["fibers"] = report.fiber_sizes;
  j["detail"] = report.detail;
  emit(j);
  if (!report.applicable)
    g_exit_code = 3;
  else if (!report.verified)
    g_exit_code = 2;
}

void run_orbit(const RealisationInput& input, int length_bound, const std::string& functional_csv,
               double tol) {
  const GeometricRealisation real = input.resolve();
  const fusioncox::RealMatrix cartan = fusioncox::folded_cartan(real);
  const auto orbit = fusioncox::chamber_orbit(cartan, length_bound, tol);
  ordered_json j = envelope("orbit");
  j["flags"] = input.flags();
  j["flags"]["length-bound"] = length_bound;
  j["flags"]["tolerance"] = tol;
  j["elements"] = orbit.elements.size();
  j["complete"] = orbit.complete;
  ordered_json words = ordered_json::array();
  for (const auto& element : orbit.elements) words.push_back(element.word);
  j["words"] = std::move(words);

  if (!functional_csv.empty()) {
    fusioncox::RealVector functional(real.rank());
    std::stringstream stream(functional_csv);
    std::string item;
    Eigen::Index index = 0;
    while (std::getline(stream, item, ',')) {
      if (index >= functional.size())
        throw fusioncox::StructuralError("functional has too many coordinates");
      try {
        functional[index++] = std::stod(item);
      } catch (const std::exception&) {
        throw fusioncox::StructuralError("functional coordinates must be numbers");
      }
    }
    if (index != functional.size())
      throw fusioncox::StructuralError("functional needs one coordinate per generator");
    j["flags"]["functional"] = functional_csv;
    const auto meet = fusioncox::hyperplane_meets_orbit(orbit, functional, tol);
    ordered_json m;
    m["outcome"] =
        meet.outcome == fusioncox::MeetOutcome::meets ? "meets" : "not-up-to-bound";
    m["witness"] = meet.witness_word;
    m["all_samples_positive"] = meet.all_samples_positive;
    m["all_samples_negative"] = meet.all_samples_negative;
    j["meets"] = std::move(m);
    if (meet.outcome != fusioncox::MeetOutcome::meets) g_exit_code = 3;
  }
  emit(j);
}

void run_fold_check(const std::string& graph_path, const std::string& partition_path) {
  const CoxeterMatrix graph = fusioncox::load_coxeter(graph_path);
  const auto named =
      fusioncox::partition_from_json_text(fusioncox::read_text_file(partition_path), graph);
  const auto report =
      fusioncox::check_strong_admissible(graph, named.partition, named.fiber_names);
  ordered_json j = envelope("fold check");
  j["flags"]["graph"] = graph_path;
  j["flags"]["partition"] = partition_path;
  j["ok"] = report.ok;
  if (report.ok) {
    j["folded"] = coxeter_payload(*report.folded);
  } else {
    ordered_json failures = ordered_json::array();
    for (const auto& failure : report.failures) {
      ordered_json entry;
      entry["condition"] = failure.condition;
      entry["vertices"] = failure.vertices;
      entry["detail"] = failure.detail;
      failures.push_back(std::move(entry));
    }
    j["failures"] = std::move(failures);
  }
  emit(j);
  if (!report.ok) g_exit_code = 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusion-ring Coxeter realisations: build, unfold, verify"};
  app.require_subcommand(1);

  try {
    const double env_tol = default_tolerance();

    // ring validate / ring show
    auto* ring_cmd = app.add_subcommand("ring", "fusion ring operations");
    ring_cmd->require_subcommand(1);
    static std::string ring_spec;
    auto* ring_validate = ring_cmd->add_subcommand("validate", "check the fusion ring axioms");
    ring_validate->add_option("ring", ring_spec, "ring spec or JSON file")->required();
    ring_validate->callback([] { run_ring_validate(ring_spec); });
    auto* ring_show = ring_cmd->add_subcommand("show", "emit basis, involution and dimensions");
    ring_show->add_option("ring", ring_spec, "ring spec or JSON file")->required();
    ring_show->callback([] { run_ring_show(ring_spec); });

    // realise build / realise check
    auto* realise_cmd = app.add_subcommand("realise", "geometric realisations");
    realise_cmd->require_subcommand(1);
    static RealisationInput build_input;
    static std::string build_out;
    auto* realise_build =
        realise_cmd->add_subcommand("build", "build the canonical realisation of a graph");
    build_input.attach(realise_build);
    realise_build->add_option("--out", build_out, "write the realisation JSON to this file");
    realise_build->callback([] { run_realise_build(build_input, build_out); });

    static RealisationInput check_input;
    static int relation_cap = 24;
    auto* realise_check =
        realise_cmd->add_subcommand("check", "verify the defining Coxeter relations");
    check_input.attach(realise_check);
    realise_check->add_option("--relation-cap", relation_cap,
                              "largest finite label checked exhaustively");
    realise_check->callback([] { run_realise_check(check_input, relation_cap); });

    // unfold graph / cartan / phi
    auto* unfold_cmd = app.add_subcommand("unfold", "unfolded Coxeter system");
    unfold_cmd->require_subcommand(1);
    static RealisationInput unfold_input;
    static std::string unfold_format = "json";
    auto* unfold_graph = unfold_cmd->add_subcommand("graph", "emit the unfolded Coxeter graph");
    unfold_input.attach(unfold_graph);
    unfold_graph->add_option("--format", unfold_format, "json or dot");
    unfold_graph->callback([] { run_unfold_graph(unfold_input, unfold_format); });
    auto* unfold_cartan = unfold_cmd->add_subcommand("cartan", "emit the integral Cartan matrix");
    unfold_input.attach(unfold_cartan);
    unfold_cartan->callback([] { run_unfold_cartan(unfold_input); });
    auto* unfold_phi =
        unfold_cmd->add_subcommand("phi", "emit the unfolding homomorphism generator words");
    unfold_input.attach(unfold_phi);
    unfold_phi->callback([] { run_unfold_phi(unfold_input); });

    // roots
    static RealisationInput roots_input;
    static std::string roots_system = "unfolded";
    static int roots_depth = 40;
    static double tolerance = env_tol;
    auto* roots_cmd = app.add_subcommand("roots", "enumerate positive roots");
    roots_input.attach(roots_cmd);
    roots_cmd->add_option("--system", roots_system, "unfolded (over Z) or folded (real)");
    roots_cmd->add_option("--depth", roots_depth, "orbit closure depth cap");
    roots_cmd->add_option("--tolerance", tolerance, "numerical tolerance");
    roots_cmd->callback([] { run_roots(roots_input, roots_system, roots_depth, tolerance); });

    // hyperplanes restrict / verify
    auto* hyper_cmd =
        app.add_subcommand("hyperplanes", "hyperplane restriction and finite-type comparison");
    hyper_cmd->require_subcommand(1);
    static RealisationInput hyper_input;
    static int hyper_depth = 40;
    auto* hyper_restrict =
        hyper_cmd->add_subcommand("restrict", "restrict every unfolded hyperplane");
    hyper_input.attach(hyper_restrict);
    hyper_restrict->add_option("--depth", hyper_depth, "orbit closure depth cap");
    hyper_restrict->add_option("--tolerance", tolerance, "numerical tolerance");
    hyper_restrict->callback([] { run_hyperplanes_restrict(hyper_input, hyper_depth, tolerance); });
    auto* hyper_verify = hyper_cmd->add_subcommand(
        "verify", "compare restricted hyperplanes with the folded system (finite type)");
    hyper_input.attach(hyper_verify);
    hyper_verify->add_option("--tolerance", tolerance, "numerical tolerance");
    hyper_verify->callback([] { run_hyperplanes_verify(hyper_input, tolerance); });

    // orbit
    static RealisationInput orbit_input;
    static int length_bound = 8;
    static std::string functional_csv;
    auto* orbit_cmd = app.add_subcommand("orbit", "chamber orbit of the folded system");
    orbit_input.attach(orbit_cmd);
    orbit_cmd->add_option("--length-bound", length_bound, "maximum word length (at most 12)");
    orbit_cmd->add_option("--functional", functional_csv,
                          "comma-separated functional to test against the orbit");
    orbit_cmd->add_option("--tolerance", tolerance, "numerical tolerance");
    orbit_cmd->callback([] { run_orbit(orbit_input, length_bound, functional_csv, tolerance); });

    // fold check
    auto* fold_cmd = app.add_subcommand("fold", "strong admissible foldings");
    fold_cmd->require_subcommand(1);
    static std::string fold_graph, fold_partition;
    auto* fold_check = fold_cmd->add_subcommand("check", "check a partition of a Coxeter graph");
    fold_check->add_option("--graph", fold_graph, "Coxeter graph (builtin, JSON or DOT file)")
        ->required();
    fold_check->add_option("--partition", fold_partition, "partition JSON file")->required();
    fold_check->callback([] { run_fold_check(fold_graph, fold_partition); });

    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const fusioncox::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const fusioncox::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 2;
  } catch (const fusioncox::NumericalError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const fusioncox::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit_code;
}
