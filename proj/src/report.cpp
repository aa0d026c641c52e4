#include "hodgeham/report.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "hodgeham/harrison.hpp"
#include "hodgeham/kaehler.hpp"
#include "json.hpp"

namespace hodgeham {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string degree_str(const MultiDegree& N) { return ordered_json(N).dump(); }

std::vector<MultiDegree> degrees_up_to(int k, int deg_max) {
  std::vector<MultiDegree> out;
  for (int total = 0; total <= deg_max; ++total) {
    auto batch = multidegrees_with_total(k, total);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// One aggregated verdict: pass until the first recorded failure.
struct Verdict {
  CheckResult r;
  explicit Verdict(std::string name) {
    r.name = std::move(name);
    r.pass = true;
  }
  void fail(const std::string& witness) {
    if (r.pass) {
      r.pass = false;
      r.witness = witness;
    }
  }
  void require(bool ok, const std::string& witness) {
    if (!ok) fail(witness);
  }
};

SparseVec block_coords(const ChainVector& v, const ChainBlock& blk) {
  SparseVec out;
  for (const auto& [c, co] : v.terms) {
    int idx = blk.index_of(c);
    if (idx < 0) throw std::logic_error("vector left the degree block");
    out.push(static_cast<uint32_t>(idx), co);
  }
  return out;
}

BlockMatrix projector_block(int m, const MultiDegree& N, const ModuleSpec& mod,
                            int i) {
  const ChainBlock blk = ChainBlock::make(m, N, mod);
  BlockMatrix out(static_cast<uint32_t>(blk.basis.size()), 0);
  for (const MonomialChain& c : blk.basis)
    out.append_column(
        block_coords(bgs_project(i, ChainVector::single(m, mod, c)), blk));
  return out;
}

uint64_t positive_parts(const MultiDegree& N) {
  uint64_t out = 0;
  for (int part : N) out += part >= 1 ? 1 : 0;
  return out;
}

std::vector<ModuleSpec> structure_modules(int k) {
  std::vector<ModuleSpec> mods = {ModuleSpec::regular(k),
                                  ModuleSpec::truncation(k, 2)};
  if (k >= 2) mods.push_back(ModuleSpec::var_restriction(1, k));
  return mods;
}

}  // namespace

std::string cell_name(int n, int i, const MultiDegree& N) {
  return "n=" + std::to_string(n) + " i=" + std::to_string(i) +
         " degree=" + degree_str(N);
}

bool HodgeReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string HodgeReport::to_json() const {
  ordered_json j;
  j["algebra"] = ordered_json{{"k", k}, {"module", mod.str()}};
  j["cells"] = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json jc;
    jc["n"] = c.n;
    jc["i"] = c.i;
    jc["degree"] = c.degree;
    jc["dim_chain"] = c.dims.dim_chain;
    jc["dim_cycle"] = c.dims.dim_cycle;
    jc["dim_boundary"] = c.dims.dim_boundary;
    jc["dim_homology"] = c.dims.dim_homology;
    j["cells"].push_back(std::move(jc));
  }
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (c.witness.empty())
      jc["witness"] = nullptr;
    else
      jc["witness"] = c.witness;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

std::string HodgeReport::to_csv() const {
  std::string out = "n,i,degree,dim_chain,dim_cycle,dim_boundary,dim_homology\n";
  for (const auto& c : cells) {
    out += std::to_string(c.n) + "," + std::to_string(c.i) + ",\"" +
           degree_str(c.degree) + "\"," + std::to_string(c.dims.dim_chain) +
           "," + std::to_string(c.dims.dim_cycle) + "," +
           std::to_string(c.dims.dim_boundary) + "," +
           std::to_string(c.dims.dim_homology) + "\n";
  }
  return out;
}

HodgeReport checks_report(int k, const ModuleSpec& mod,
                          std::vector<CheckResult> checks) {
  HodgeReport rep;
  rep.k = k;
  rep.mod = mod;
  rep.checks = std::move(checks);
  return rep;
}

std::vector<CheckResult> run_named_suite(const std::string& suite, int k,
                                         int n_max, int deg_max, int p,
                                         int* report_k,
                                         std::string* deriv_sequence) {
  int rk = 1;
  std::vector<CheckResult> checks;
  const auto pick = [](int given, int dflt) { return given < 0 ? dflt : given; };
  if (suite == "idempotents") {
    checks = suite_idempotents(pick(n_max, 6));
  } else if (suite == "chainmap") {
    rk = pick(k, 2);
    checks = suite_chainmap(rk, pick(n_max, 5), pick(deg_max, 4));
  } else if (suite == "appendix") {
    checks = suite_appendix(pick(deg_max, 40));
  } else if (suite == "qkernel") {
    checks = suite_qkernel(pick(deg_max, 40));
  } else if (suite == "harrison-exact") {
    // The homotopy substitution stays on small one-variable blocks; only the
    // exactness scan follows the requested ranges.
    rk = pick(k, 3);
    const int nn = pick(n_max, 4);
    checks = suite_harrison_exact(rk, nn, pick(deg_max, 6), std::min(nn, 4),
                                  10);
  } else if (suite == "kunneth-omega") {
    rk = pick(k, 3);
    checks = suite_kunneth_omega(rk, pick(deg_max, 8));
  } else if (suite == "kunneth-harrison") {
    rk = 2;
    checks = suite_kunneth_harrison(pick(n_max, 2), pick(deg_max, 6));
  } else if (suite == "hh1-iso") {
    rk = pick(k, 2);
    checks = suite_hh1_iso(rk, pick(deg_max, 8));
  } else if (suite == "i-squared") {
    rk = pick(k, 2);
    checks = suite_i_squared(rk, pick(deg_max, 6));
  } else if (suite == "deriv-growth") {
    checks = suite_deriv_growth(pick(p, 3), pick(n_max, 40), deriv_sequence);
  } else {
    throw std::invalid_argument(
        "unknown suite '" + suite +
        "' (expected idempotents|chainmap|appendix|qkernel|harrison-exact|"
        "kunneth-omega|kunneth-harrison|hh1-iso|i-squared|deriv-growth)");
  }
  if (report_k) *report_k = rk;
  return checks;
}

HodgeReport hodge_table(int k, int n_max, int deg_max, const ModuleSpec& mod,
                        uint64_t cap, int jobs) {
  if (k < 1 || n_max < 1 || deg_max < 0 || cap == 0)
    throw std::invalid_argument("table configuration out of range");
  if (mod.k != k)
    throw std::invalid_argument("module arity disagrees with k");

  HodgeReport rep;
  rep.k = k;
  rep.mod = mod;
  const std::vector<MultiDegree> degrees = degrees_up_to(k, deg_max);

  // Refuse oversized cells up front, in emitted cell order.
  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      for (const MultiDegree& N : degrees) {
        const uint64_t need = block_dim(n + 1, N, mod) + block_dim(n, N, mod) +
                              block_dim(n - 1, N, mod);
        if (need > cap)
          throw CapRefusal("cell " + cell_name(n, i, N) +
                           " touches blocks of combined dimension " +
                           std::to_string(need) + " > cap " +
                           std::to_string(cap));
      }

  // One task per degree: all (n, i) rows including the unresolved i = 0 row,
  // homology and cohomology both. Task order is fixed; workers pull indices
  // from a shared counter, so the stored results do not depend on timing.
  struct Row {
    HomologyDims hom, coh;
  };
  std::vector<std::vector<Row>> rows(degrees.size());
  std::atomic<size_t> cursor{0};
  auto run = [&]() {
    HodgeEngine eng;
    for (;;) {
      const size_t g = cursor.fetch_add(1);
      if (g >= degrees.size()) break;
      auto& out = rows[g];
      for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i)
          out.push_back({eng.homology(n, degrees[g], mod, i),
                         eng.cohomology(n, degrees[g], mod, i)});
    }
  };
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(degrees.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  const auto row_at = [&](size_t g, int n, int i) -> const Row& {
    return rows[g][size_t(n) * (n + 1) / 2 - 1 + size_t(i)];
  };

  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i)
      for (size_t g = 0; g < degrees.size(); ++g)
        rep.cells.push_back({n, i, degrees[g], row_at(g, n, i).hom});

  // Structural verdicts at the requested ranges, clipped to the envelope
  // each invariant is stated on.
  const int s_n = std::min(n_max, 5);
  const int s_deg = std::min(deg_max, 6);
  Verdict ddzero("ddzero");
  Verdict degpres("face_degree_preservation");
  for (const MultiDegree& N : degrees) {
    if (total_degree(N) > s_deg) continue;
    for (int top = 2; top <= s_n + 1; ++top) {
      if (!boundary_block(top - 2, N, mod)
               .times(boundary_block(top - 1, N, mod))
               .is_zero())
        ddzero.fail("levels " + std::to_string(top) + "->" +
                    std::to_string(top - 2) + " degree " + degree_str(N));
    }
    for (int m = 1; m <= s_n; ++m) {
      for (const MonomialChain& c :
           ChainBlock::make(m, N, mod).basis)
        for (int j = 0; j <= m; ++j) {
          auto f = face_chain(j, c, m, mod);
          if (f && chain_degree(*f, m - 1, k) != N)
            degpres.fail("face " + std::to_string(j) + " of " +
                         chain_str(c, m, k));
        }
    }
  }
  rep.checks.push_back(ddzero.r);
  rep.checks.push_back(degpres.r);

  if (k <= 2) {
    const int c_deg = std::min(deg_max, 4);
    Verdict chainmap("chain_map_law");
    Verdict projcomm("projection_commutation");
    for (const MultiDegree& N : degrees) {
      if (total_degree(N) > c_deg) continue;
      for (int m = 2; m <= s_n; ++m) {
        const BlockMatrix d = boundary_block(m - 1, N, mod);
        for (int i = 1; i <= m; ++i) {
          const BlockMatrix hi = projector_block(m, N, mod, i);
          const BlockMatrix lo = projector_block(m - 1, N, mod, i);
          if (!(lo.times(d) == d.times(hi)))
            chainmap.fail("level " + std::to_string(m) + " i=" +
                          std::to_string(i) + " degree " + degree_str(N));
        }
      }
      for (int m = 1; m <= s_n; ++m) {
        const ChainBlock blk = ChainBlock::make(m, N, mod);
        for (const MonomialChain& c : blk.basis) {
          const ChainVector v = ChainVector::single(m, mod, c);
          const ChainVector dv = boundary(v);
          projcomm.require(degree_project(N, dv) == dv,
                           "boundary of " + chain_str(c, m, k));
          for (int i = 1; i <= m; ++i) {
            const ChainVector ev = bgs_project(i, v);
            projcomm.require(degree_project(N, ev) == ev,
                             "projection of " + chain_str(c, m, k));
          }
          if (mod.kind == ModuleSpec::Kind::Regular) {
            // Slot truncation commutes with the boundary and the
            // projections because legs are untouched.
            const ChainVector tv = truncation_project(2, v);
            projcomm.require(truncation_project(2, dv) == boundary(tv),
                             "truncated boundary of " + chain_str(c, m, k));
            projcomm.require(truncation_project(2, bgs_project(1, v)) ==
                                 bgs_project(1, tv),
                             "truncated projection of " + chain_str(c, m, k));
          }
        }
      }
    }
    // Mixed-degree probe: projecting a two-degree vector picks one block.
    for (int m = 1; m <= s_n; ++m) {
      MonomialChain prev;
      MultiDegree prev_deg;
      bool have_prev = false;
      for (const MultiDegree& N : degrees) {
        if (total_degree(N) > c_deg) continue;
        const ChainBlock blk = ChainBlock::make(m, N, mod);
        if (blk.basis.empty()) continue;
        if (have_prev) {
          ChainVector u = ChainVector::single(m, mod, prev);
          u.add(blk.basis.front(), Rational(1));
          const ChainVector picked = ChainVector::single(m, mod, prev);
          projcomm.require(degree_project(prev_deg, u) == picked,
                           "mixed vector at level " + std::to_string(m));
          projcomm.require(degree_project(prev_deg, boundary(u)) ==
                               boundary(picked),
                           "mixed boundary at level " + std::to_string(m));
          projcomm.require(degree_project(prev_deg, bgs_project(1, u)) ==
                               bgs_project(1, picked),
                           "mixed projection at level " + std::to_string(m));
        }
        prev = blk.basis.front();
        prev_deg = N;
        have_prev = true;
      }
    }
    rep.checks.push_back(chainmap.r);
    rep.checks.push_back(projcomm.r);
  }

  Verdict additivity("hodge_additivity");
  for (size_t g = 0; g < degrees.size(); ++g)
    for (int n = 1; n <= n_max; ++n) {
      HomologyDims sum;
      for (int i = 1; i <= n; ++i) {
        const HomologyDims& d = row_at(g, n, i).hom;
        sum.dim_chain += d.dim_chain;
        sum.dim_cycle += d.dim_cycle;
        sum.dim_boundary += d.dim_boundary;
        sum.dim_homology += d.dim_homology;
      }
      const HomologyDims& full = row_at(g, n, 0).hom;
      additivity.require(sum.dim_chain == full.dim_chain &&
                             sum.dim_cycle == full.dim_cycle &&
                             sum.dim_boundary == full.dim_boundary &&
                             sum.dim_homology == full.dim_homology,
                         cell_name(n, 0, degrees[g]));
    }
  rep.checks.push_back(additivity.r);

  if (mod.kind == ModuleSpec::Kind::Regular) {
    Verdict vanishing("hodge_vanishing");
    Verdict lie("lie_cell_oracle");
    for (size_t g = 0; g < degrees.size(); ++g)
      for (int n = 2; n <= n_max; ++n) {
        uint64_t lower = 0;
        for (int i = 1; i <= n - 1; ++i) {
          const uint64_t h = row_at(g, n, i).hom.dim_homology;
          lower += h;
          vanishing.require(h == 0, cell_name(n, i, degrees[g]));
        }
        const uint64_t top = row_at(g, n, n).hom.dim_homology;
        lie.require(top == row_at(g, n, 0).hom.dim_homology - lower,
                    cell_name(n, n, degrees[g]));
        lie.require(top == binomial(positive_parts(degrees[g]), uint64_t(n)),
                    cell_name(n, n, degrees[g]));
      }
    // The one-leg table is the subset count as well: one class per variable
    // present in the degree.
    for (size_t g = 0; g < degrees.size(); ++g)
      lie.require(row_at(g, 1, 1).hom.dim_homology ==
                      positive_parts(degrees[g]),
                  cell_name(1, 1, degrees[g]));
    rep.checks.push_back(vanishing.r);
    rep.checks.push_back(lie.r);
  }

  Verdict cohom("cohomology_matches");
  for (size_t g = 0; g < degrees.size(); ++g)
    for (int n = 1; n <= n_max; ++n)
      for (int i = 0; i <= n; ++i) {
        const Row& row = row_at(g, n, i);
        cohom.require(row.coh.dim_chain == row.hom.dim_chain &&
                          row.coh.dim_homology == row.hom.dim_homology,
                      cell_name(n, i, degrees[g]));
      }
  rep.checks.push_back(cohom.r);

  if (k == 1) {
    Verdict only_one("module_vanishing_one_variable");
    for (size_t g = 0; g < degrees.size(); ++g)
      for (int n = 2; n <= n_max; ++n)
        for (int i = 0; i <= n; ++i) {
          const Row& row = row_at(g, n, i);
          only_one.require(row.hom.dim_homology == 0 &&
                               row.coh.dim_homology == 0,
                           cell_name(n, i, degrees[g]));
        }
    rep.checks.push_back(only_one.r);
  }

  return rep;
}

std::vector<CheckResult> suite_idempotents(int n_max) {
  Verdict orth("pairwise_orthogonality");
  Verdict idem("idempotency");
  Verdict unity("partition_of_unity");
  Verdict vanish("vanishing_above_level");
  Verdict top("top_is_antisymmetrizer");
  Verdict eigen("shuffle_eigenvalue");
  for (int n = 1; n <= n_max; ++n) {
    const std::string at = "n=" + std::to_string(n);
    GroupAlgebraElement sum(n);
    const GroupAlgebraElement s = total_shuffle(n);
    for (int i = 1; i <= n; ++i) {
      const GroupAlgebraElement& e = eulerian_idempotent(n, i);
      sum = sum.plus(e);
      idem.require(e.times(e) == e, at + " i=" + std::to_string(i));
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        orth.require(e.times(eulerian_idempotent(n, j)).is_zero(),
                     at + " i=" + std::to_string(i) + " j=" +
                         std::to_string(j));
      }
      eigen.require(s.times(e) == e.scaled(Rational((1 << i) - 2)),
                    at + " i=" + std::to_string(i));
    }
    unity.require(sum == GroupAlgebraElement::unit(n), at);
    for (int i = n + 1; i <= n + 2; ++i)
      vanish.require(eulerian_idempotent(n, i).is_zero(),
                     at + " i=" + std::to_string(i));
    top.require(eulerian_idempotent(n, n) == antisymmetrizer(n), at);
  }
  return {orth.r, idem.r, unity.r, vanish.r, top.r, eigen.r};
}

std::vector<CheckResult> suite_chainmap(int k_max, int n_max, int deg_max) {
  Verdict law("projected_boundary_chain_map");
  for (int k = 1; k <= k_max; ++k) {
    const ModuleSpec mod = ModuleSpec::regular(k);
    for (const MultiDegree& N : degrees_up_to(k, deg_max))
      for (int m = 2; m <= n_max; ++m) {
        const BlockMatrix d = boundary_block(m - 1, N, mod);
        for (int i = 1; i <= m; ++i)
          law.require(projector_block(m - 1, N, mod, i).times(d) ==
                          d.times(projector_block(m, N, mod, i)),
                      "level " + std::to_string(m) + " i=" +
                          std::to_string(i) + " degree " + degree_str(N));
      }
  }
  return {law.r};
}

std::vector<CheckResult> suite_structure(int k_max, int n_max, int deg_max) {
  Verdict ddzero("ddzero");
  Verdict degpres("face_degree_preservation");
  Verdict proj("projection_commutation");
  for (int k = 1; k <= k_max; ++k)
    for (const ModuleSpec& mod : structure_modules(k))
      for (const MultiDegree& N : degrees_up_to(k, deg_max)) {
        for (int top = 2; top <= n_max + 1; ++top)
          ddzero.require(boundary_block(top - 2, N, mod)
                             .times(boundary_block(top - 1, N, mod))
                             .is_zero(),
                         mod.str() + " levels " + std::to_string(top) +
                             "->" + std::to_string(top - 2) + " degree " +
                             degree_str(N));
        for (int m = 1; m <= n_max; ++m)
          for (const MonomialChain& c : ChainBlock::make(m, N, mod).basis) {
            for (int j = 0; j <= m; ++j) {
              auto f = face_chain(j, c, m, mod);
              degpres.require(!f || chain_degree(*f, m - 1, k) == N,
                              mod.str() + " face " + std::to_string(j) +
                                  " of " + chain_str(c, m, k));
            }
            const ChainVector v = ChainVector::single(m, mod, c);
            const ChainVector dv = boundary(v);
            proj.require(degree_project(N, dv) == dv,
                         mod.str() + " boundary of " + chain_str(c, m, k));
            for (int i = 1; i <= m; ++i) {
              const ChainVector ev = bgs_project(i, v);
              proj.require(degree_project(N, ev) == ev,
                           mod.str() + " projection of " +
                               chain_str(c, m, k));
            }
            if (mod.kind == ModuleSpec::Kind::Regular) {
              const ChainVector tv = truncation_project(2, v);
              proj.require(truncation_project(2, dv) == boundary(tv),
                           "truncated boundary of " + chain_str(c, m, k));
              proj.require(truncation_project(2, bgs_project(1, v)) ==
                               bgs_project(1, tv),
                           "truncated projection of " + chain_str(c, m, k));
            }
          }
      }
  return {ddzero.r, degpres.r, proj.r};
}

std::vector<CheckResult> suite_appendix(int deg_max) {
  Verdict section("q_section_identity");
  Verdict homotopy("splitting_homotopy");
  Verdict norm("contraction_norm_bound");
  Verdict inverse("h_block_invertible");
  Verdict neumann("neumann_tail_bound");
  Verdict closed("inverse_homotopy_identity");
  for (const SplittingReport& r : verify_appendix_splitting(deg_max)) {
    const std::string at =
        "degree " + std::to_string(r.degree) +
        (r.witness.empty() ? std::string() : " at " + r.witness);
    section.require(r.qb_identity, at);
    homotopy.require(r.homotopy_identity, at);
    norm.require(r.norm_bound_ok, at);
    inverse.require(r.h_invertible, at);
    neumann.require(r.neumann_ok, at);
  }
  for (int N = 1; N <= deg_max; ++N)
    closed.require(splitting_homotopy_identity(N),
                   "degree " + std::to_string(N));
  return {section.r, homotopy.r, norm.r, inverse.r, neumann.r, closed.r};
}

std::vector<CheckResult> suite_qkernel(int deg_max) {
  Verdict kernel("q_kernel_equals_boundary_image");
  Verdict onto("q_surjective_positive_degree");
  for (int N = 0; N <= deg_max; ++N) {
    kernel.require(kernel_image_check(N), "degree " + std::to_string(N));
    onto.require(rank(q_block(N)) == (N >= 1 ? 1u : 0u),
                 "degree " + std::to_string(N));
  }
  return {kernel.r, onto.r};
}

std::vector<CheckResult> suite_harrison_exact(int k_max, int n_max,
                                              int deg_max, int homotopy_n_max,
                                              int homotopy_deg_max) {
  Verdict exact("harrison_cells_exact");
  for (int k = 1; k <= k_max; ++k)
    for (const ExactnessVerdict& v : harrison_block_exactness(
             k, n_max, deg_max, ModuleSpec::regular(k)))
      exact.require(v.exact, cell_name(v.n, 1, v.N));

  Verdict contraction("contracting_homotopy_substitution");
  const ModuleSpec one = ModuleSpec::regular(1);
  for (int n = 0; n <= homotopy_n_max; ++n)
    for (int N = 0; N <= homotopy_deg_max; ++N) {
      const std::string at =
          "level " + std::to_string(n) + " degree " + std::to_string(N);
      const ContractionData data = contracting_homotopy(n, {N}, one);
      const uint32_t dim = data.projector.rows();
      BlockMatrix lhs = boundary_block(n, {N}, one).times(data.rho);
      if (n >= 1)
        lhs = lhs.plus(data.rho_prev.times(boundary_block(n - 1, {N}, one)),
                       Rational(1));
      contraction.require(
          lhs == BlockMatrix::identity(dim).plus(data.projector, Rational(-1)),
          at);
      contraction.require(data.projector.times(data.projector) ==
                              data.projector,
                          at + " (idempotency)");
      contraction.require(
          data.projector.times(boundary_block(n, {N}, one)).is_zero(),
          at + " (kills boundaries)");
    }
  return {exact.r, contraction.r};
}

std::vector<CheckResult> suite_kunneth_omega(int k_max, int deg_max) {
  const VarSplit split = VarSplit::first(1, 2);
  Verdict c1("exchange_tau_intertwine");
  c1.require(verify_claim1(split, 4, 6, 25), "monomial tuple ranges");
  Verdict c2("assembly_tau_intertwine");
  c2.require(verify_claim2(split, 4, 6, 25), "monomial tuple ranges");
  Verdict c3("exchange_assembly_roundtrip");
  c3.require(verify_step3(split, 4, 6, 25), "monomial tuple ranges");
  Verdict dims("forms_dims_additive");
  for (int k = 1; k <= k_max; ++k)
    for (const MultiDegree& N : degrees_up_to(k, deg_max))
      dims.require(omega_kunneth_dims(N), "degree " + degree_str(N));
  return {c1.r, c2.r, c3.r, dims.r};
}

std::vector<CheckResult> suite_kunneth_harrison(int n_max, int deg_max) {
  Verdict cells("harrison_cells_kunneth");
  for (int n = 1; n <= n_max; ++n)
    for (const MultiDegree& N : degrees_up_to(2, deg_max))
      cells.require(harrison_kunneth_check(n, N),
                    cell_name(n, 1, N));
  return {cells.r};
}

std::vector<CheckResult> suite_hh1_iso(int k_max, int deg_max) {
  Verdict tau("sigma_boundary_is_minus_tau");
  Verdict iso("one_leg_homology_is_forms");
  for (int k = 1; k <= k_max; ++k)
    for (const MultiDegree& N : degrees_up_to(k, deg_max)) {
      tau.require(sigma_block(N)
                      .times(boundary_block(1, N, ModuleSpec::regular(k)))
                      .plus(tau_block(N), Rational(1))
                      .is_zero(),
                  "degree " + degree_str(N));
      iso.require(verify_hh1_iso(N), "degree " + degree_str(N));
    }
  return {tau.r, iso.r};
}

std::vector<CheckResult> suite_i_squared(int k_max, int deg_max) {
  Verdict square("ideal_square_is_tau_image");
  for (int k = 1; k <= k_max; ++k)
    for (const MultiDegree& N : degrees_up_to(k, deg_max))
      square.require(i_squared_check(N), "degree " + degree_str(N));
  return {square.r};
}

std::vector<CheckResult> suite_deriv_growth(int p_max, int n_max,
                                            std::string* sequence) {
  Verdict value("derivation_norm_equals_degree");
  Verdict growth("derivation_norms_unbounded");
  std::string seq;
  for (int p = 0; p <= p_max; ++p) {
    int prev = 0;
    for (int N = 1; N <= n_max; ++N) {
      const int norm = derivation_block_norm(p, N);
      value.require(norm == N,
                    "p=" + std::to_string(p) + " N=" + std::to_string(N));
      growth.require(norm > prev,
                     "p=" + std::to_string(p) + " N=" + std::to_string(N));
      prev = norm;
      if (p == 0) seq += (N > 1 ? " " : "") + std::to_string(norm);
    }
  }
  if (sequence) *sequence = seq;
  return {value.r, growth.r};
}

}  // namespace hodgeham
