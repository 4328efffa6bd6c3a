// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Trial counts are per (model, dimension) at dimensions 2, 3 and 4.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "peircelab/harness/harness.hpp"

#ifndef PEIRCELAB_CLI
#error "PEIRCELAB_CLI must name the command line binary"
#endif

namespace {

using peircelab::harness::PropertySpec;
using peircelab::harness::VerificationReport;

constexpr std::uint64_t kSeed = 20240611;

struct Check {
  const char* property;
  int trials;
  double tol;  // 0 keeps the registry tolerance (boolean checks)
};

struct Criterion {
  const char* name;
  std::vector<Check> checks;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool run_criterion(const Criterion& c) {
  std::vector<PropertySpec> config;
  for (const Check& k : c.checks) {
    PropertySpec s{k.property};
    s.trials = k.trials;
    s.tol = k.tol;
    s.seed = kSeed;
    config.push_back(s);
  }
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = peircelab::harness::run_suite(config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (r.pass() ? "PASS " : "FAIL ") << c.name << " (" << fmt(secs) << " s)\n";
  for (const auto& p : r.properties) {
    std::cout << "     " << p.name << ": " << p.trials - p.failures << "/" << p.trials
              << " trials, worst residual " << fmt(p.worst_residual) << " (tol " << fmt(p.tol) << ")";
    if (p.failures > 0 && !p.failing.empty()) {
      const auto& s = p.failing.front();
      std::cout << ", first failure " << peircelab::kind_name(s.kind) << " dim " << s.dim << " trial "
                << s.trial;
      if (!s.error.empty()) std::cout << ": " << s.error;
    }
    std::cout << "\n";
  }
  return r.pass();
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    code = -1;
    return out;
  }
  std::array<char, 1 << 14> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Two separate processes of `verify --seed 42` with different thread counts.
bool run_determinism() {
  const std::string base = "'" PEIRCELAB_CLI "' verify --seed 42";
  int c1 = 0, c2 = 0;
  const std::string a = capture(base + " --threads 1", c1);
  const std::string b = capture(base + " --threads 4", c2);
  const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b;
  std::cout << (ok ? "PASS " : "FAIL ") << "determinism\n"
            << "     verify --seed 42 twice: exit " << c1 << "/" << c2 << ", " << a.size() << " and "
            << b.size() << " bytes, " << (a == b ? "identical" : "different") << "\n";
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"identity-suite",
       {{"jordan-identity", 200, 1e-9},
        {"fundamental-identity", 200, 1e-9},
        {"ternary-identity", 200, 1e-9},
        {"power-identities", 200, 1e-9}}},
      {"peirce-suite",
       {{"peirce-projections", 200, 1e-9},
        {"peirce-rules", 200, 1e-9},
        {"peirce2-jbstar-axioms", 200, 1e-9},
        {"peirce2-gelfand-naimark", 200, 1e-6}}},
      {"polar-isometry-and-weakly-rickart-witnesses",
       {{"polar-isometry-characterization", 100, 0.0},
        {"weakly-rickart-witness", 100, 1e-9},
        {"finite-reversed-witness", 100, 1e-9}}},
      {"positivity-annihilators-and-projection-approximation",
       {{"positive-unit-equivalences", 200, 0.0},
        {"positive-annihilator-equivalence", 100, 0.0},
        {"jordan-range-projection-minimality", 100, 1e-9},
        {"range-projection-commutation", 100, 1e-9},
        {"projection-approximation-bound", 100, 1e-12}}},
      {"range-tripotents-and-peirce-automorphisms",
       {{"wor-range-tripotent-uniqueness", 100, 1e-8},
        {"wor-range-tripotent-projection", 100, 1e-9},
        {"peirce-automorphism", 100, 1e-9},
        {"peirce2-rickart-compatibility", 100, 1e-9}}},
      {"generalized-inverses-and-regular-approximation",
       {{"generalized-inverse-identities", 100, 1e-9},
        {"ginv-l-operator", 100, 1e-9},
        {"regular-range-tripotent", 100, 1e-9},
        {"regular-approximation", 100, 1e-10},
        {"regular-density-inner-ideal", 100, 1e-8},
        {"inner-ideal-ginv-closure", 100, 1e-8}}},
  };

  const auto t0 = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& c : criteria) failed += run_criterion(c) ? 0 : 1;
  failed += run_determinism() ? 0 : 1;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << fmt(secs) << " s\n";
  return failed == 0 ? 0 : 1;
}
