#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hodgeham/hochschild.hpp"

namespace hodgeham {

struct HodgeCell {
  int n = 0;
  int i = 0;
  MultiDegree degree;
  HomologyDims dims;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first failing cell or chain; empty on pass
};

struct HodgeReport {
  int k = 1;
  ModuleSpec mod;
  std::vector<HodgeCell> cells;  // sorted by (n, i, degree)
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_json() const;  // fixed key order, no volatile fields
  std::string to_csv() const;   // projection of the cell table
};

// Refusal raised before any computation when a requested cell would touch
// blocks whose combined dimension exceeds the cap.
struct CapRefusal : std::runtime_error {
  explicit CapRefusal(const std::string& what) : std::runtime_error(what) {}
};

// Cell table for 1 <= n <= n_max, 1 <= i <= n, |N| <= deg_max with embedded
// invariant verdicts. Degree groups are evaluated by a worker pool and
// merged in sorted cell order, so the report is a pure function of the
// arguments regardless of the parallelism degree.
HodgeReport hodge_table(int k, int n_max, int deg_max, const ModuleSpec& mod,
                        uint64_t cap = 200000, int jobs = 1);

// Named verification suites shared by the command-line driver and the
// acceptance harness. Each entry aggregates one property over the stated
// ranges; witnesses carry the first failing block or chain.
std::vector<CheckResult> suite_idempotents(int n_max);
std::vector<CheckResult> suite_chainmap(int k_max, int n_max, int deg_max);
std::vector<CheckResult> suite_structure(int k_max, int n_max, int deg_max);
std::vector<CheckResult> suite_appendix(int deg_max);
std::vector<CheckResult> suite_qkernel(int deg_max);
std::vector<CheckResult> suite_harrison_exact(int k_max, int n_max,
                                              int deg_max, int homotopy_n_max,
                                              int homotopy_deg_max);
std::vector<CheckResult> suite_kunneth_omega(int k_max, int deg_max);
std::vector<CheckResult> suite_kunneth_harrison(int n_max, int deg_max);
std::vector<CheckResult> suite_hh1_iso(int k_max, int deg_max);
std::vector<CheckResult> suite_i_squared(int k_max, int deg_max);
std::vector<CheckResult> suite_deriv_growth(int p_max, int n_max,
                                            std::string* sequence = nullptr);

// Dispatch by suite name ("idempotents", "chainmap", "appendix", "qkernel",
// "harrison-exact", "kunneth-omega", "kunneth-harrison", "hh1-iso",
// "i-squared", "deriv-growth"). Negative range arguments pick the suite's
// default. report_k receives the variable count the checks ran over;
// deriv_sequence receives the printed norm sequence for deriv-growth.
// Throws std::invalid_argument on an unknown name.
std::vector<CheckResult> run_named_suite(const std::string& suite, int k = -1,
                                         int n_max = -1, int deg_max = -1,
                                         int p = -1, int* report_k = nullptr,
                                         std::string* deriv_sequence = nullptr);

// Checks-only report wrapper used by the verify command.
HodgeReport checks_report(int k, const ModuleSpec& mod,
                          std::vector<CheckResult> checks);

std::string cell_name(int n, int i, const MultiDegree& N);

}  // namespace hodgeham
