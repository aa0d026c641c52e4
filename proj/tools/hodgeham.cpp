// hodgeham: exact-arithmetic verification CLI for the Hodge decomposition
// of monomial convolution algebras.
//
//   hodgeham hodge  --k K [--nmax N] [--degmax D] [--module M] [--format F]
//   hodgeham verify SUITE [range flags]
//   hodgeham diff A.json B.json
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage error,
// 3 resource-cap refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hodgeham/report.hpp"
#include "json.hpp"

namespace {

using hodgeham::CheckResult;
using hodgeham::HodgeReport;
using hodgeham::ModuleSpec;
using json = nlohmann::json;

int default_jobs() {
  if (const char* env = std::getenv("HODGEHAM_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  return 0;
}

void print_failures(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (c.pass) continue;
    std::cerr << "FAIL " << c.name;
    if (!c.witness.empty()) std::cerr << ": " << c.witness;
    std::cerr << "\n";
  }
}

int cmd_hodge(int k, int n_max, int deg_max, const std::string& module_str,
              const std::string& out_path, const std::string& format,
              int jobs, uint64_t cap) {
  const ModuleSpec mod = hodgeham::parse_module_spec(module_str, k);
  const HodgeReport report =
      hodgeham::hodge_table(k, n_max, deg_max, mod, cap, jobs);
  const std::string text =
      format == "csv" ? report.to_csv() : report.to_json();
  const int werr = write_text(out_path, text);
  if (werr) return werr;
  print_failures(report.checks);
  return report.all_pass() ? 0 : 1;
}

// Range flags; -1 means "not given", letting the suite default apply.
struct VerifyRanges {
  int k = -1;
  int n_max = -1;
  int deg_max = -1;
  int p = -1;
};

int cmd_verify(const std::string& suite, const VerifyRanges& r,
               const std::string& out_path) {
  int report_k = 1;
  std::string deriv_sequence;
  const std::vector<CheckResult> checks = hodgeham::run_named_suite(
      suite, r.k, r.n_max, r.deg_max, r.p, &report_k, &deriv_sequence);
  for (const CheckResult& c : checks) {
    std::cout << (c.pass ? "pass" : "FAIL") << " " << c.name;
    if (!c.pass && !c.witness.empty()) std::cout << ": " << c.witness;
    std::cout << "\n";
  }
  if (!deriv_sequence.empty()) std::cout << "norms: " << deriv_sequence << "\n";
  if (!out_path.empty()) {
    const HodgeReport report = hodgeham::checks_report(
        report_k, ModuleSpec::regular(report_k), checks);
    const int werr = write_text(out_path, report.to_json());
    if (werr) return werr;
  }
  for (const CheckResult& c : checks)
    if (!c.pass) return 1;
  return 0;
}

bool load_report(const std::string& path, json& out, std::string& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err = "cannot read " + path;
    return false;
  }
  out = json::parse(in, nullptr, false);
  if (out.is_discarded()) {
    err = path + " is not valid JSON";
    return false;
  }
  if (!out.is_object() || !out.contains("algebra") || !out.contains("cells") ||
      !out.contains("checks") || !out["algebra"].is_object() ||
      !out["algebra"].contains("k") || !out["algebra"].contains("module") ||
      !out["cells"].is_array() || !out["checks"].is_array()) {
    err = path + " does not match the report schema";
    return false;
  }
  return true;
}

std::string json_cell_name(const json& cell) {
  if (!cell.is_object() || !cell.contains("n") || !cell.contains("i") ||
      !cell.contains("degree"))
    return cell.dump();
  return hodgeham::cell_name(cell["n"].get<int>(), cell["i"].get<int>(),
                             cell["degree"].get<std::vector<int>>());
}

int cmd_diff(const std::string& path_a, const std::string& path_b) {
  json a, b;
  std::string err;
  if (!load_report(path_a, a, err) || !load_report(path_b, b, err)) {
    std::cerr << "error: " << err << "\n";
    return 2;
  }
  if (a["algebra"] != b["algebra"]) {
    std::cout << "algebra differs: " << a["algebra"].dump() << " vs "
              << b["algebra"].dump() << "\n";
    return 1;
  }
  const json& ca = a["cells"];
  const json& cb = b["cells"];
  const size_t n_cells = std::min(ca.size(), cb.size());
  for (size_t i = 0; i < n_cells; ++i) {
    if (ca[i] != cb[i]) {
      std::cout << "cell " << json_cell_name(ca[i]) << " differs\n";
      return 1;
    }
  }
  if (ca.size() != cb.size()) {
    const json& extra = ca.size() > cb.size() ? ca[n_cells] : cb[n_cells];
    std::cout << "cell " << json_cell_name(extra) << " present in only one report\n";
    return 1;
  }
  const json& ka = a["checks"];
  const json& kb = b["checks"];
  const size_t n_checks = std::min(ka.size(), kb.size());
  for (size_t i = 0; i < n_checks; ++i) {
    if (ka[i] != kb[i]) {
      std::cout << "check " << ka[i].value("name", ka[i].dump())
                << " differs\n";
      return 1;
    }
  }
  if (ka.size() != kb.size()) {
    const json& extra = ka.size() > kb.size() ? ka[n_checks] : kb[n_checks];
    std::cout << "check " << extra.value("name", extra.dump())
              << " present in only one report\n";
    return 1;
  }
  std::cout << "reports identical\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hodge decomposition tables and verification suites"};
  app.require_subcommand(1);

  // hodge
  int k = 0, n_max = 3, deg_max = 4;
  std::string module_str = "regular", out_path, format = "json";
  int jobs = default_jobs();
  uint64_t cap = 200000;
  CLI::App* hodge = app.add_subcommand("hodge", "emit a Hodge dimension table");
  hodge->add_option("--k", k, "number of variables")->required();
  hodge->add_option("--nmax", n_max, "largest homological level");
  hodge->add_option("--degmax", deg_max, "largest total degree");
  hodge->add_option("--module", module_str, "regular|trunc:M|var:I");
  hodge->add_option("--out", out_path, "output path (default stdout)");
  hodge->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  hodge->add_option("--jobs", jobs, "parallel workers");
  hodge->add_option("--cap", cap, "largest admissible block dimension");

  // verify
  std::string suite_pos, suite_flag, verify_out;
  VerifyRanges flags;
  CLI::App* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("name", suite_pos, "suite name (positional)");
  verify->add_option("--suite", suite_flag, "suite name");
  verify->add_option("--k", flags.k, "number of variables");
  verify->add_option("--nmax", flags.n_max, "level bound");
  verify->add_option("--degmax", flags.deg_max, "total degree bound");
  verify->add_option("--p", flags.p, "derivation index");
  verify->add_option("--out", verify_out, "write the checks as a JSON report");

  // diff
  std::string diff_a, diff_b;
  CLI::App* diff = app.add_subcommand("diff", "structurally compare reports");
  diff->add_option("a", diff_a, "first report")->required();
  diff->add_option("b", diff_b, "second report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (hodge->parsed())
      return cmd_hodge(k, n_max, deg_max, module_str, out_path, format,
                       jobs < 1 ? 1 : jobs, cap);
    if (verify->parsed()) {
      const std::string suite =
          !suite_flag.empty() ? suite_flag : suite_pos;
      if (suite.empty()) {
        std::cerr << "error: no suite named (positional or --suite)\n";
        return 2;
      }
      return cmd_verify(suite, flags, verify_out);
    }
    return cmd_diff(diff_a, diff_b);
  } catch (const hodgeham::CapRefusal& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
