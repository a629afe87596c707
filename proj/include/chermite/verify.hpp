#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chermite/kernels.hpp"
#include "chermite/quadrature.hpp"
#include "chermite/report.hpp"

namespace chermite::verify {

/// Catalog entry: one named identity with its registered tolerance and the
/// fixed evaluation/sampling constants the suite runs it with.
struct IdentityInfo {
  std::string id;
  std::string description;   // what the identity states
  std::string sampling;      // documented sampling region for run_suite
  double tolerance = 0.0;    // registered rel_err acceptance (0 = exact)
  bool expected_fail = false;
  int max_order = 0;         // series truncation, 0 when no series involved
  double tail_tol = 1e-8;
  int nodes = 0;             // quadrature nodes per axis, 0 when none
  int samples = 0;           // default sample count in run_suite
};

/// Complete, stable list of every identity the project verifies.
const std::vector<IdentityInfo>& catalog();

/// Lookup by id token; nullptr when unknown.
const IdentityInfo* find_identity(const std::string& id);

using Params = std::vector<std::pair<std::string, std::complex<double>>>;

/// Executes one identity at explicit parameters. Domain and convergence
/// errors are surfaced in the report (pass = false plus an error tag in
/// meta), never thrown. Unknown ids do throw DomainError: there is nothing
/// to report against.
IdentityReport run_identity(const std::string& id, const Params& params,
                            const TruncationSpec& trunc, const QuadratureRule& rule);

/// Same, using the catalog's registered truncation and node constants.
IdentityReport run_identity(const std::string& id, const Params& params);

/// Seeded, reproducible description of a suite run.
struct SampleSpec {
  std::uint64_t seed = 7;
  std::optional<std::string> only_id;
};

struct SuiteResult {
  std::vector<IdentityReport> reports;
  int passed = 0;
  int failed = 0;             // includes unexpected passes of expected-fail entries
  int expected_failures = 0;  // expected-fail entries that failed as intended
  bool all_ok() const { return failed == 0; }
};

/// Runs every catalog identity (or just only_id) over its documented sample
/// region. Identical seeds produce identical report lists.
SuiteResult run_suite(const SampleSpec& spec);

}  // namespace chermite::verify
