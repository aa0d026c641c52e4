// Acceptance harness: twelve headline properties, one pass/fail line each.
// Exit code 0 iff every line passes (including the runtime budget).
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hodgeham/hochschild.hpp"
#include "hodgeham/report.hpp"

namespace {

using namespace hodgeham;
using clock_type = std::chrono::steady_clock;

bool g_all = true;

bool checks_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

void report_line(int idx, const std::string& label, bool pass, double secs,
                 double budget) {
  const bool ok = pass && secs < budget;
  g_all = g_all && ok;
  std::printf("criterion %2d %-38s %s (%.2fs, budget %.0fs)\n", idx,
              label.c_str(), ok ? "PASS" : "FAIL", secs, budget);
  if (pass && secs >= budget)
    std::printf("             checks passed but exceeded the runtime budget\n");
  std::fflush(stdout);
}

template <class F>
void criterion(int idx, const std::string& label, double budget, F body) {
  const auto t0 = clock_type::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("             exception: %s\n", e.what());
    pass = false;
  }
  const double secs =
      std::chrono::duration<double>(clock_type::now() - t0).count();
  report_line(idx, label, pass, secs, budget);
}

bool named_check_passes(const HodgeReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

// Hodge vanishing read directly off the cells: H_{i,n-i} = 0 for 0 < i < n.
bool interior_cells_vanish(const HodgeReport& rep) {
  for (const HodgeCell& c : rep.cells)
    if (c.n >= 2 && c.i >= 1 && c.i <= c.n - 1 && c.dims.dim_homology != 0)
      return false;
  return true;
}

bool upper_cells_vanish(const HodgeReport& rep) {
  for (const HodgeCell& c : rep.cells)
    if (c.n >= 2 && c.dims.dim_homology != 0) return false;
  return true;
}

bool file_bytes(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

}  // namespace

int main() {
  criterion(1, "eulerian idempotent suite (n<=6)", 60, [] {
    return checks_pass(suite_idempotents(6));
  });

  criterion(2, "boundary chain-map law (k<=2,n<=5,|N|<=4)", 120, [] {
    return checks_pass(suite_chainmap(2, 5, 4));
  });

  criterion(3, "dd=0, degree faces, projection commutation", 60, [] {
    return checks_pass(suite_structure(2, 5, 4));
  });

  criterion(4, "Hodge vanishing + Lie cell oracle (k<=3)", 600, [] {
    for (int k = 1; k <= 3; ++k) {
      const HodgeReport rep = hodge_table(k, 4, 6, ModuleSpec::regular(k));
      if (!rep.all_pass()) return false;
      if (!named_check_passes(rep, "hodge_vanishing")) return false;
      if (!named_check_passes(rep, "lie_cell_oracle")) return false;
      if (!interior_cells_vanish(rep)) return false;
    }
    return true;
  });

  criterion(5, "splitting-map identities (N<=40)", 60, [] {
    return checks_pass(suite_appendix(40));
  });

  criterion(6, "q kernel/surjectivity (N<=40)", 30, [] {
    return checks_pass(suite_qkernel(40));
  });

  criterion(7, "Harrison exactness + homotopies", 300, [] {
    return checks_pass(suite_harrison_exact(3, 4, 6, 4, 10));
  });

  criterion(8, "Kaehler forms and Kunneth identities", 300, [] {
    return checks_pass(suite_hh1_iso(2, 8)) &&
           checks_pass(suite_kunneth_omega(3, 8)) &&
           checks_pass(suite_i_squared(2, 6));
  });

  criterion(9, "one-variable module vanishing (N<=8)", 120, [] {
    std::vector<ModuleSpec> mods = {ModuleSpec::regular(1)};
    for (int m = 2; m <= 4; ++m) mods.push_back(ModuleSpec::truncation(1, m));
    for (const ModuleSpec& mod : mods) {
      const HodgeReport rep = hodge_table(1, 5, 8, mod);
      if (!rep.all_pass()) return false;
      if (!named_check_passes(rep, "module_vanishing_one_variable"))
        return false;
      if (!named_check_passes(rep, "cohomology_matches")) return false;
      if (!upper_cells_vanish(rep)) return false;
    }
    return true;
  });

  criterion(10, "Harrison cells obey the Kunneth count", 120, [] {
    return checks_pass(suite_kunneth_harrison(2, 6));
  });

  criterion(11, "derivation norms equal the degree (N<=40)", 1, [] {
    std::string sequence;
    const bool ok = checks_pass(suite_deriv_growth(3, 40, &sequence));
    std::printf("             norms: %s\n", sequence.c_str());
    return ok;
  });

  criterion(12, "byte-identical reports across parallelism", 120, [] {
    const ModuleSpec mod = ModuleSpec::regular(2);
    const std::string serial = hodge_table(2, 3, 4, mod, 200000, 1).to_json();
    const std::string threaded = hodge_table(2, 3, 4, mod, 200000, 3).to_json();
    if (serial != threaded) return false;
    const char* bin = std::getenv("HODGEHAM_BIN");
    if (!bin) return true;  // library-level determinism only
    const std::string base = std::string(bin) +
                             " hodge --k 2 --nmax 3 --degmax 4";
    if (std::system((base + " --jobs 1 --out acc_det_1.json").c_str()) != 0)
      return false;
    if (std::system((base + " --jobs 4 --out acc_det_2.json").c_str()) != 0)
      return false;
    std::string run1, run2;
    if (!file_bytes("acc_det_1.json", run1) ||
        !file_bytes("acc_det_2.json", run2))
      return false;
    std::remove("acc_det_1.json");
    std::remove("acc_det_2.json");
    return !run1.empty() && run1 == run2 && run1 == serial;
  });

  return g_all ? 0 : 1;
}
