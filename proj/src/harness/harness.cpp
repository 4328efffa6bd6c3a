#include "peircelab/harness/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <tuple>

#include <Eigen/Core>

namespace peircelab::harness {

namespace {

Json residual_json(double r) {
  if (std::isnan(r)) return "nan";
  if (std::isinf(r)) return r > 0 ? "inf" : "-inf";
  return r;
}

Json sample_json(const Sample& s) {
  Json out{{"model", kind_name(s.kind)},
           {"dim", s.dim},
           {"trial", s.trial},
           {"seed", s.seed},
           {"input_hash", s.input_hash},
           {"residual", residual_json(s.residual)}};
  if (!s.error.empty()) out["error"] = s.error;
  return out;
}

// NaN sorts above everything so it always counts as the worst.
bool residual_greater(double a, double b) {
  if (std::isnan(a)) return !std::isnan(b);
  if (std::isnan(b)) return false;
  return a > b;
}

}  // namespace

bool Sample::operator<(const Sample& o) const {
  return std::tie(kind, dim, trial, seed) < std::tie(o.kind, o.dim, o.trial, o.seed);
}

void PropertyOutcome::add(const Sample& s) {
  PropertyOutcome one;
  one.name = name;
  one.tol = tol;
  one.seed = seed;
  one.trials = 1;
  one.worst_residual = s.residual;
  one.worst = s;
  if (!(s.residual <= tol)) {
    one.failures = 1;
    one.failing.push_back(s);
  }
  merge(one);
}

void PropertyOutcome::merge(const PropertyOutcome& other) {
  if (other.trials == 0) return;
  if (trials == 0) {
    const std::string keep_name = name.empty() ? other.name : name;
    *this = other;
    name = keep_name;
    return;
  }
  trials += other.trials;
  failures += other.failures;
  if (other.worst) {
    const bool take = !worst || residual_greater(other.worst->residual, worst->residual) ||
                      (!residual_greater(worst->residual, other.worst->residual) &&
                       *other.worst < *worst);
    if (take) {
      worst = other.worst;
      worst_residual = other.worst_residual;
    }
  }
  failing.insert(failing.end(), other.failing.begin(), other.failing.end());
  std::sort(failing.begin(), failing.end());
  if (failing.size() > kKeptFailures) failing.resize(kKeptFailures);
}

bool VerificationReport::pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyOutcome& p) { return p.failures == 0; });
}

const PropertyOutcome* VerificationReport::find(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

Json VerificationReport::to_json() const {
  Json props = Json::array();
  for (const auto& p : properties) {
    Json entry{{"name", p.name},
               {"trials", p.trials},
               {"failures", p.failures},
               {"worst_residual", residual_json(p.worst_residual)},
               {"tol", p.tol},
               {"seed", p.seed}};
    if (p.worst) entry["worst_case"] = sample_json(*p.worst);
    Json failing = Json::array();
    for (const auto& s : p.failing) failing.push_back(sample_json(s));
    entry["failing_samples"] = std::move(failing);
    props.push_back(std::move(entry));
  }
  return Json{{"pass", pass()}, {"environment", environment_fingerprint()},
              {"properties", std::move(props)}};
}

Json environment_fingerprint() {
  std::string compiler;
#if defined(__clang__)
  compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  compiler = "gcc " __VERSION__;
#else
  compiler = "unknown";
#endif
  return Json{{"compiler", compiler},
              {"cplusplus", static_cast<long long>(__cplusplus)},
              {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                            std::to_string(EIGEN_MAJOR_VERSION) + "." +
                            std::to_string(EIGEN_MINOR_VERSION)},
              {"double_epsilon", std::numeric_limits<double>::epsilon()}};
}

Sample run_trial(const PropertyInfo& info, ModelKind kind, Index dim, std::uint64_t trial,
                 std::uint64_t seed) {
  Sample s;
  s.kind = kind;
  s.dim = dim;
  s.trial = trial;
  s.seed = seed;
  TrialContext ctx(seed, model_for(kind, dim));
  try {
    s.residual = info.fn(ctx);
  } catch (const std::exception& e) {
    s.residual = std::numeric_limits<double>::infinity();
    s.error = e.what();
  }
  s.input_hash = ctx.input_hash();
  return s;
}

VerificationReport run_suite(const std::vector<PropertySpec>& config, unsigned threads) {
  struct Job {
    std::size_t spec;
    const PropertyInfo* info;
    ModelKind kind;
    Index dim;
    std::uint64_t trial;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  std::vector<PropertyOutcome> outcomes;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const PropertySpec& spec = config[i];
    const PropertyInfo& info = find_property(spec.name);
    PropertyOutcome o;
    o.name = info.name;
    o.tol = spec.tol > 0.0 ? spec.tol : info.tol;
    o.seed = spec.seed;
    outcomes.push_back(o);
    const int trials = spec.trials > 0 ? spec.trials : info.trials;
    for (ModelKind kind : info.models) {
      if (!spec.models.empty() &&
          std::find(spec.models.begin(), spec.models.end(), kind) == spec.models.end()) {
        continue;
      }
      for (Index dim : spec.dims) {
        if (dim < 1) throw Error(ErrorCode::kInvalidInput, "dimensions must be positive");
        for (int t = 0; t < trials; ++t) {
          const auto tt = static_cast<std::uint64_t>(t);
          jobs.push_back({i, &info, kind, dim, tt, trial_seed(spec.seed, info.name, kind, dim, tt)});
        }
      }
    }
  }

  std::vector<Sample> samples(jobs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& j = jobs[k];
      samples[k] = run_trial(*j.info, j.kind, j.dim, j.trial, j.seed);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t k = 0; k < jobs.size(); ++k) outcomes[jobs[k].spec].add(samples[k]);
  return VerificationReport{std::move(outcomes)};
}

std::vector<PropertySpec> default_suite(std::uint64_t seed) {
  std::vector<PropertySpec> out;
  for (const auto& info : registered_properties()) {
    PropertySpec s;
    s.name = info.name;
    s.seed = seed;
    out.push_back(s);
  }
  return out;
}

std::vector<PropertySpec> parse_config(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidInput, "config must be a JSON array");
  std::vector<PropertySpec> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string()) {
      throw Error(ErrorCode::kInvalidInput, "config entries need a 'name' string");
    }
    PropertySpec s;
    s.name = e.at("name").get<std::string>();
    find_property(s.name);
    try {
      if (e.contains("dims")) s.dims = e.at("dims").get<std::vector<Index>>();
      if (e.contains("trials")) s.trials = e.at("trials").get<int>();
      if (e.contains("tol")) s.tol = e.at("tol").get<double>();
      if (e.contains("seed")) s.seed = e.at("seed").get<std::uint64_t>();
      if (e.contains("models")) {
        for (const auto& m : e.at("models")) s.models.push_back(parse_kind(m.get<std::string>()));
      }
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::kInvalidInput, std::string("bad config entry: ") + ex.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace peircelab::harness
