// peircelab command line. JSON goes to stdout (or --out), diagnostics to stderr.
//
// Exit codes: 0 ok, 1 verification failure, 2 input or shape error,
// 3 numerical non-convergence.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "peircelab/approximation.hpp"
#include "peircelab/harness/harness.hpp"
#include "peircelab/ideals.hpp"
#include "peircelab/json_io.hpp"
#include "peircelab/spectral.hpp"
#include "peircelab/witnesses.hpp"

namespace pl = peircelab;
using pl::Json;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct Common {
  std::string model;
  std::string out;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
};

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("PEIRCELAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw pl::Error(pl::ErrorCode::kInvalidInput, "PEIRCELAB_SEED is not an unsigned integer");
    }
  }
  return 0;
}

// "cstar:3", "jbstar:2", "rect:2x3", or a JSON file holding a model object.
// Without a descriptor the model follows the element shape.
pl::TripleModel resolve_model(const std::string& desc, const pl::ComplexMatrix* sample) {
  if (desc.empty()) {
    if (!sample) throw pl::Error(pl::ErrorCode::kInvalidInput, "--model is required");
    return sample->rows() == sample->cols() ? pl::TripleModel::cstar(sample->rows())
                                            : pl::TripleModel::rect(sample->rows(), sample->cols());
  }
  const auto colon = desc.find(':');
  if (colon == std::string::npos) return pl::model_from_json(pl::read_json_file(desc));
  const pl::ModelKind kind = pl::parse_kind(desc.substr(0, colon));
  const std::string dims = desc.substr(colon + 1);
  try {
    const auto x = dims.find('x');
    const long long m = std::stoll(dims.substr(0, x));
    const long long n = x == std::string::npos ? m : std::stoll(dims.substr(x + 1));
    if (m < 1 || n < 1) throw std::invalid_argument("dims");
    if (kind == pl::ModelKind::kRect) return pl::TripleModel::rect(m, n);
    if (m != n) throw pl::Error(pl::ErrorCode::kShapeMismatch, "square model needs equal dims");
    return kind == pl::ModelKind::kCStar ? pl::TripleModel::cstar(n) : pl::TripleModel::jbstar(n);
  } catch (const std::invalid_argument&) {
    throw pl::Error(pl::ErrorCode::kInvalidInput, "bad model descriptor '" + desc + "'");
  } catch (const std::out_of_range&) {
    throw pl::Error(pl::ErrorCode::kInvalidInput, "bad model descriptor '" + desc + "'");
  }
}

pl::ComplexMatrix load_matrix(const std::string& path) {
  return pl::matrix_from_json(pl::read_json_file(path));
}

std::vector<pl::ComplexMatrix> load_matrices(const std::vector<std::string>& paths) {
  std::vector<pl::ComplexMatrix> out;
  for (const auto& p : paths) out.push_back(load_matrix(p));
  return out;
}

// A subspace file is a list of matrices; their span is taken.
pl::Subspace load_span(const std::string& path, pl::Shape shape) {
  const Json j = pl::read_json_file(path);
  if (!j.is_array()) throw pl::Error(pl::ErrorCode::kInvalidInput, "ideal file must be a list of matrices");
  std::vector<pl::ComplexMatrix> elems;
  for (const auto& m : j) elems.push_back(pl::matrix_from_json(m));
  return pl::Subspace::span(shape, elems);
}

void emit(const Common& c, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw pl::Error(pl::ErrorCode::kInvalidInput, "cannot write " + c.out);
  f << text;
}

Json subspace_summary(const pl::Subspace& s) {
  return Json{{"dimension", s.dimension()}, {"basis", pl::subspace_to_json(s)}};
}

int cmd_peirce(const Common& c, const std::string& path) {
  const pl::ComplexMatrix e = load_matrix(path);
  const pl::TripleModel model = resolve_model(c.model, &e);
  const pl::Tripotent t(model, e, c.tol);
  const pl::PeirceDecomposition d = pl::peirce_decompose(t);
  const pl::RealifiedMap id = pl::RealifiedMap::identity(model.shape());
  double idem = 0.0;
  for (int k = 0; k < 3; ++k)
    idem = std::max(idem, (d.projection(k) * d.projection(k) - d.projection(k)).norm());
  Json out{{"model", pl::model_to_json(model)},
           {"tripotent", pl::matrix_to_json(e)},
           {"residuals",
            {{"tripotent", pl::tripotent_residual(model, e)},
             {"sum_to_identity", (d.p0 + d.p1 + d.p2 - id).norm()},
             {"idempotence", idem}}},
           {"E0", subspace_summary(d.s0)},
           {"E1", subspace_summary(d.s1)},
           {"E2", subspace_summary(d.s2)}};
  emit(c, out);
  return 0;
}

int cmd_spectral(const Common& c, const std::string& which, const std::string& path) {
  const pl::ComplexMatrix a = load_matrix(path);
  const pl::TripleModel model = resolve_model(c.model, &a);
  Json out{{"model", pl::model_to_json(model)}};
  if (which == "spectrum") {
    const pl::TripleSpectrum s = pl::triple_spectrum(model, a);
    out["values"] = s.values;
    out["includes_zero"] = s.includes_zero;
  } else if (which == "polar") {
    const pl::PolarData p = pl::polar_decomposition(model, a, c.tol);
    out["isometry"] = pl::matrix_to_json(p.isometry.element());
    out["modulus"] = pl::matrix_to_json(p.modulus);
    out["left_projection"] = pl::matrix_to_json(p.lp);
    out["right_projection"] = pl::matrix_to_json(p.rp);
    out["residual"] = pl::op_norm(p.isometry.element() * p.modulus - a);
  } else if (which == "range-tripotent") {
    const pl::Tripotent r = pl::range_tripotent(model, a, c.tol);
    out["range_tripotent"] = pl::matrix_to_json(r.element());
    out["tripotent_residual"] = pl::tripotent_residual(model, r.element());
  } else {
    const pl::ComplexMatrix ai = pl::generalized_inverse(model, a, c.tol);
    const pl::GinvCheck g = pl::check_generalized_inverse(model, a, ai);
    out["inverse"] = pl::matrix_to_json(ai);
    out["residuals"] = {{"q_a_ainv", g.q_a_ainv}, {"q_ainv_a", g.q_ainv_a}, {"commutator", g.commutator}};
  }
  emit(c, out);
  return 0;
}

int cmd_annihilator(const Common& c, const std::vector<std::string>& paths) {
  const std::vector<pl::ComplexMatrix> s = load_matrices(paths);
  const pl::TripleModel model = resolve_model(c.model, s.empty() ? nullptr : &s.front());
  const pl::Subspace ann = pl::orthogonal_annihilator(model, s, c.tol);
  Json out{{"model", pl::model_to_json(model)}};
  out["annihilator"] = subspace_summary(ann);
  emit(c, out);
  return 0;
}

struct WitnessArgs {
  std::string kind;
  std::string element;
  std::string ideal;
  std::vector<std::string> family;
  std::string pedersen_case = "SAJBW";
};

int cmd_witness(const Common& c, const WitnessArgs& w) {
  const std::uint64_t seed = resolve_seed(c);
  std::vector<pl::ComplexMatrix> family = load_matrices(w.family);
  std::optional<pl::ComplexMatrix> x;
  if (!w.element.empty()) x = load_matrix(w.element);
  const pl::ComplexMatrix* sample = x ? &*x : (family.empty() ? nullptr : &family.front());
  const pl::TripleModel model = resolve_model(c.model, sample);
  const pl::Subspace j = w.ideal.empty() ? pl::Subspace(model.shape()) : load_span(w.ideal, model.shape());
  auto need_element = [&]() -> const pl::ComplexMatrix& {
    if (!x) throw pl::Error(pl::ErrorCode::kInvalidInput, "--element is required for --kind " + w.kind);
    return *x;
  };
  pl::WitnessReport r;
  if (w.kind == "wr") {
    r = pl::weakly_rickart_witness(model, need_element(), j, c.tol);
  } else if (w.kind == "wor") {
    r = pl::wor_witness(model, need_element(), j, c.tol);
  } else if (w.kind == "reversed") {
    if (x) family.insert(family.begin(), *x);
    r = pl::finite_reversed_witness(model, family, j, c.tol);
  } else {
    // B is generated by the element, C by the family.
    const pl::Subspace b = pl::inner_ideal_generated(model, need_element());
    pl::Subspace cc(model.shape());
    for (const auto& f : family) cc = pl::join(cc, pl::inner_ideal_generated(model, f));
    r = pl::pedersen_witness(model, pl::parse_pedersen_case(w.pedersen_case), b, cc, c.tol, seed);
  }
  r.seed = seed;
  Json out = pl::witness_to_json(r);
  out["kind"] = w.kind;
  emit(c, out);
  return r.verified ? 0 : kExitVerification;
}

int cmd_approx(const Common& c, const std::string& kind, const std::string& path, double eps) {
  const pl::ComplexMatrix a = load_matrix(path);
  const pl::TripleModel model = resolve_model(c.model, &a);
  Json out{{"model", pl::model_to_json(model)}, {"kind", kind}, {"eps", eps}};
  if (kind == "projections") {
    const pl::ProjectionCombo combo = pl::projection_approximation(model, a, eps);
    out["combination"] = pl::combo_to_json(combo);
    out["error"] = combo.error;
    emit(c, out);
    return 0;
  }
  const pl::RegularApproximation r = pl::regular_approximation(model, a, eps, c.tol);
  out["e_eps"] = pl::matrix_to_json(r.e_eps.element());
  out["range_tripotent"] = pl::matrix_to_json(r.range.element());
  out["square_root"] = pl::matrix_to_json(r.b);
  out["approximant"] = pl::matrix_to_json(r.y);
  out["error"] = r.error;
  Json residuals = Json::object();
  for (const auto& [k, v] : r.residuals) residuals[k] = v;
  out["residuals"] = residuals;
  out["below_range"] = r.below_range;
  out["regular"] = r.y_regular;
  out["verified"] = r.verified;
  emit(c, out);
  return r.verified ? 0 : kExitVerification;
}

int cmd_verify(const Common& c, const std::string& config, unsigned threads) {
  const std::uint64_t seed = resolve_seed(c);
  std::vector<pl::harness::PropertySpec> specs;
  if (config.empty()) {
    specs = pl::harness::default_suite(seed);
  } else {
    const Json j = pl::read_json_file(config);
    specs = pl::harness::parse_config(j);
    // Entries without their own seed take the command line one.
    for (std::size_t i = 0; i < specs.size(); ++i)
      if (!j[i].contains("seed")) specs[i].seed = seed;
  }
  const pl::harness::VerificationReport report = pl::harness::run_suite(specs, threads);
  emit(c, report.to_json());
  for (const auto& p : report.properties)
    if (p.failures > 0) std::cerr << "FAIL " << p.name << ": " << p.failures << "/" << p.trials << "\n";
  return report.pass() ? 0 : kExitVerification;
}

int cmd_replay(const Common& c, const std::string& property, const std::string& kind, long long dim,
               std::uint64_t trial) {
  const std::uint64_t seed = resolve_seed(c);
  const pl::harness::PropertyInfo& info = pl::harness::find_property(property);
  const pl::harness::Sample s = pl::harness::run_trial(info, pl::parse_kind(kind), dim, trial, seed);
  Json out{{"property", info.name},     {"model", kind},
           {"dim", dim},                {"trial", trial},
           {"trial_seed", s.seed},      {"input_hash", s.input_hash},
           {"residual", s.residual},    {"tol", info.tol},
           {"pass", s.residual <= info.tol && s.error.empty()}};
  if (!s.error.empty()) out["error"] = s.error;
  emit(c, out);
  return out["pass"].get<bool>() ? 0 : kExitVerification;
}

int cmd_list(const Common& c) {
  Json out = Json::array();
  for (const auto& p : pl::harness::registered_properties()) {
    Json models = Json::array();
    for (auto k : p.models) models.push_back(pl::kind_name(k));
    out.push_back({{"name", p.name}, {"statement", p.statement}, {"models", models}, {"tol", p.tol},
                   {"trials", p.trials}});
  }
  emit(c, out);
  return 0;
}

void add_common(CLI::App* sub, Common& c, bool with_model = true) {
  if (with_model) sub->add_option("--model", c.model, "cstar:N, jbstar:N, rect:MxN or a model JSON file");
  sub->add_option("--out", c.out, "write JSON here instead of stdout");
  sub->add_option("--tol", c.tol, "numerical tolerance")->capture_default_str();
  sub->add_option("--seed", c.seed, "seed (falls back to PEIRCELAB_SEED, then 0)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional JB*-triple toolkit"};
  app.require_subcommand(1);
  Common common;

  std::string tripotent_path, element_path, config_path, approx_kind, property, model_kind = "cstar";
  std::vector<std::string> element_paths;
  double eps = 0.0;
  unsigned threads = 0;
  long long dim = 2;
  std::uint64_t trial = 0;
  WitnessArgs wargs;

  auto* peirce = app.add_subcommand("peirce", "Peirce decomposition of a tripotent");
  add_common(peirce, common);
  peirce->add_option("--tripotent", tripotent_path, "tripotent matrix file")->required();

  std::vector<CLI::App*> spectral;
  for (const char* name : {"spectrum", "polar", "range-tripotent", "ginv"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " of an element");
    add_common(sub, common);
    sub->add_option("--element", element_path, "element matrix file")->required();
    spectral.push_back(sub);
  }

  auto* annihilator = app.add_subcommand("annihilator", "orthogonal annihilator of a set");
  add_common(annihilator, common);
  annihilator->add_option("--elements", element_paths, "element matrix files")->required();

  auto* witness = app.add_subcommand("witness", "Rickart-type witness tripotents");
  add_common(witness, common);
  witness->add_option("--kind", wargs.kind, "wr, wor, reversed or pedersen")
      ->required()
      ->check(CLI::IsMember({"wr", "wor", "reversed", "pedersen"}));
  witness->add_option("--element", wargs.element, "element matrix file");
  witness->add_option("--ideal", wargs.ideal, "list of matrices spanning J (default {0})");
  witness->add_option("--family", wargs.family, "orthogonal family, or generators of C for pedersen");
  witness->add_option("--case", wargs.pedersen_case, "pedersen case: SAJBW, weaklyRickart, Rickart, Baer")
      ->capture_default_str();

  auto* approx = app.add_subcommand("approx", "projection or regular approximation");
  add_common(approx, common);
  approx->add_option("--kind", approx_kind, "projections or regular")
      ->required()
      ->check(CLI::IsMember({"projections", "regular"}));
  approx->add_option("--element", element_path, "element matrix file")->required();
  approx->add_option("--eps", eps, "approximation tolerance")->required();

  auto* verify = app.add_subcommand("verify", "run the property suite");
  add_common(verify, common, false);
  verify->add_option("--config", config_path, "JSON list of property specs");
  verify->add_option("--threads", threads, "worker threads (0: all cores)");

  auto* replay = app.add_subcommand("replay", "rerun one recorded trial");
  add_common(replay, common, false);
  replay->add_option("--property", property, "property name")->required();
  replay->add_option("--model-kind", model_kind, "rect, cstar or jbstar")->capture_default_str();
  replay->add_option("--dim", dim, "dimension")->capture_default_str();
  replay->add_option("--trial", trial, "trial index")->capture_default_str();

  auto* list = app.add_subcommand("list", "registered properties");
  add_common(list, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (peirce->parsed()) return cmd_peirce(common, tripotent_path);
    for (auto* sub : spectral)
      if (sub->parsed()) return cmd_spectral(common, sub->get_name(), element_path);
    if (annihilator->parsed()) return cmd_annihilator(common, element_paths);
    if (witness->parsed()) return cmd_witness(common, wargs);
    if (approx->parsed()) return cmd_approx(common, approx_kind, element_path, eps);
    if (verify->parsed()) return cmd_verify(common, config_path, threads);
    if (replay->parsed()) return cmd_replay(common, property, model_kind, dim, trial);
    if (list->parsed()) return cmd_list(common);
  } catch (const pl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == pl::ErrorCode::kConvergenceFailure ? kExitNumeric : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
