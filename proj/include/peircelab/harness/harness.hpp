#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "peircelab/harness/trial_context.hpp"
#include "peircelab/json_io.hpp"

namespace peircelab::harness {

// One trial of a property: returns a residual compared against the tolerance.
// Boolean checks contribute 0 when they hold and 1 when they do not.
using PropertyFn = double (*)(TrialContext&);

struct PropertyInfo {
  std::string name;
  std::string statement;
  std::vector<ModelKind> models;
  double tol = 1e-9;
  int trials = 10;
  PropertyFn fn = nullptr;
};

const std::vector<PropertyInfo>& registered_properties();
// Throws UnknownProperty.
const PropertyInfo& find_property(std::string_view name);

struct PropertySpec {
  std::string name;
  std::vector<Index> dims{2, 3, 4};
  int trials = 0;     // 0: registry default
  double tol = 0.0;   // 0: registry default
  std::uint64_t seed = 0;
  std::vector<ModelKind> models;  // empty: every model the property supports
};

struct Sample {
  ModelKind kind = ModelKind::kCStar;
  Index dim = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t input_hash = 0;
  double residual = 0.0;
  std::string error;

  bool operator<(const Sample& o) const;
};

struct PropertyOutcome {
  std::string name;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double worst_residual = 0.0;
  std::optional<Sample> worst;
  std::vector<Sample> failing;  // smallest few by (model, dim, trial)

  // Commutative and associative.
  void merge(const PropertyOutcome& other);
  void add(const Sample& s);
};

inline constexpr std::size_t kKeptFailures = 5;

struct VerificationReport {
  std::vector<PropertyOutcome> properties;

  bool pass() const;
  const PropertyOutcome* find(std::string_view name) const;
  Json to_json() const;
};

Json environment_fingerprint();

// Runs one trial; exceptions become an infinite residual with the message.
Sample run_trial(const PropertyInfo& info, ModelKind kind, Index dim, std::uint64_t trial,
                 std::uint64_t seed);

// threads == 0 uses the hardware concurrency.
VerificationReport run_suite(const std::vector<PropertySpec>& config, unsigned threads = 0);

// Every registered property at dims {2,3,4} with registry trial counts.
std::vector<PropertySpec> default_suite(std::uint64_t seed);

// [{"name", "dims", "trials", "tol", "seed", "models"?}]
std::vector<PropertySpec> parse_config(const Json& j);

}  // namespace peircelab::harness
