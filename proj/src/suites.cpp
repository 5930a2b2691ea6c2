#include "glmcr/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>

#include "glmcr/dwpf.hpp"
#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"
#include "glmcr/graded.hpp"
#include "glmcr/identities.hpp"
#include "glmcr/monodromy.hpp"
#include "glmcr/params.hpp"

namespace glmcr {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"scalars",     "dwpf", "lemmas", "rtt",   "commutators", "mcr-rows",
                                              "mcr-columns", "xy",   "bethe",  "dual-bethe", "all"};
  return names;
}

void SuiteConfig::validate() const {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw ConfigError("unknown suite '" + suite + "'");
  if (sites && (*sites < 1 || *sites > 6)) throw ConfigError("--sites must be between 1 and 6");
  if (c.is_zero()) throw ConfigError("--c must be nonzero");
  if (draws && *draws < 1) throw ConfigError("--draws must be at least 1");
}

namespace {

std::string pad(std::size_t d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "d%03zu", d);
  return buf;
}

std::string idx_str(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s += std::to_string(x);
  return s;
}

struct Ctx {
  ParamSource src;
  std::vector<std::pair<std::string, std::string>> params;

  void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
  void param(const std::string& k, const VarSet& s) { param(k, s.str()); }
  void param(const std::string& k, const Rat& r) { param(k, r.str()); }
};

class Runner {
 public:
  Runner(const SuiteConfig& cfg, std::string suite, Report& rep)
      : cfg_(cfg), suite_(std::move(suite)), rep_(rep), c_(cfg.c) {}

  const Coupling& c() const { return c_; }

  std::size_t draws(std::size_t fallback) const { return cfg_.draws.value_or(fallback); }

  std::vector<std::size_t> lengths(std::initializer_list<std::size_t> fallback) const {
    if (cfg_.sites) return {*cfg_.sites};
    return fallback;
  }

  const Monodromy& chain(std::size_t L, EntryConvention conv = EntryConvention::koszul,
                         AuxOrder order = AuxOrder::last_site_leftmost) {
    const auto key = std::make_tuple(L, static_cast<int>(conv), static_cast<int>(order));
    auto it = chains_.find(key);
    if (it == chains_.end()) {
      ParamSource src(case_seed(cfg_.seed, "chain/L" + std::to_string(L)));
      ChainSpec spec{src.draw(L, c_), c_, order, conv};
      it = chains_.emplace(key, std::make_unique<Monodromy>(std::move(spec))).first;
    }
    return *it->second;
  }

  const VacuumPair& vacuum(std::size_t L) {
    auto it = vacua_.find(L);
    if (it == vacua_.end()) it = vacua_.emplace(L, build_vacuum(chain(L))).first;
    return it->second;
  }

  // Spectral points for a case on a chain: pole-free among themselves and
  // against the inhomogeneities.
  VarSet points(Ctx& ctx, const Monodromy& t, std::size_t n) {
    ctx.param("L", std::to_string(t.chain().sites()));
    ctx.param("xi", t.chain().xi);
    return ctx.src.draw(n, c_, t.chain().xi.span());
  }

  void run(const std::string& id, const std::string& ref, std::size_t largest_set,
           const std::function<CheckResult(Ctx&)>& body) {
    Case cs;
    cs.suite = suite_;
    cs.case_id = suite_ + "/" + id;
    cs.equation_ref = ref;
    Ctx ctx{ParamSource(case_seed(cfg_.seed, cs.case_id)), {}};
    ctx.param("c", c_.value());
    if (largest_set > cfg_.max_set_size) {
      cs.status = Status::skipped;
      cs.detail = "set size " + std::to_string(largest_set) + " exceeds max-set-size " + std::to_string(cfg_.max_set_size);
      cs.params = std::move(ctx.params);
      rep_.cases.push_back(std::move(cs));
      return;
    }
    for (auto& [key, t] : chains_) t->clear_cache();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const CheckResult r = body(ctx);
      cs.status = r.ok ? Status::pass : Status::fail;
      cs.detail = "terms=" + std::to_string(r.terms);
      if (!r.detail.empty()) cs.detail += "; " + r.detail;
    } catch (const CheckFailure& e) {
      cs.status = Status::fail;
      cs.detail = e.what();
    } catch (const std::exception& e) {
      cs.status = Status::fail;
      cs.detail = std::string("error: ") + e.what();
    }
    if (cfg_.timing) {
      cs.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    cs.params = std::move(ctx.params);
    rep_.cases.push_back(std::move(cs));
  }

 private:
  const SuiteConfig& cfg_;
  std::string suite_;
  Report& rep_;
  Coupling c_;
  std::map<std::tuple<std::size_t, int, int>, std::unique_ptr<Monodromy>> chains_;
  std::map<std::size_t, VacuumPair> vacua_;
};

VarSet slice(const VarSet& s, std::size_t from, std::size_t count) {
  std::vector<std::size_t> pos(count);
  for (std::size_t k = 0; k < count; ++k) pos[k] = from + k;
  return s.pick(pos);
}

CheckResult equal(const Rat& a, const Rat& b, const std::string& what) {
  CheckResult r;
  if (a != b) r.fail(what + ": " + a.str() + " vs " + b.str());
  r.terms = 1;
  return r;
}

// ---------------------------------------------------------------------------

void scalars_suite(Runner& run) {
  const Coupling& c = run.c();
  const Rat& cv = c.value();
  for (std::size_t d = 0; d < run.draws(20); ++d) {
    const std::string tag = pad(d);
    run.run("g-antisymmetry/" + tag, "g/antisymmetry", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("x", x);
      return equal(g(x[0], x[1], c) + g(x[1], x[0], c), Rat(0), "g(x,y)+g(y,x)");
    });
    run.run("h-inverse/" + tag, "h/inverse-of-shifted-g", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("x", x);
      return equal(h(x[0], x[1], c) * g(x[0], x[1] - cv, c), Rat(1), "h(x,y)g(x,y-c)");
    });
    run.run("f-shift-inverse/" + tag, "f/shift-inverse", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("x", x);
      return equal(f(x[0] - cv, x[1], c) * f(x[1], x[0], c), Rat(1), "f(x-c,y)f(y,x)");
    });
    run.run("f-minus-g/" + tag, "f/minus-g", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("x", x);
      CheckResult r = equal(f(x[0], x[1], c) - g(x[0], x[1], c), Rat(1), "f-g");
      r.merge(equal(h(x[0], x[1], c), f(x[0], x[1], c) / g(x[0], x[1], c), "h vs f/g"));
      return r;
    });
    run.run("set-product-factorization/" + tag, "set-product/factorization", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(6, c);
      const VarSet a = slice(x, 0, 2), a2 = slice(x, 2, 2), b = slice(x, 4, 2);
      ctx.param("A", a);
      ctx.param("A'", a2);
      ctx.param("B", b);
      CheckResult r;
      for (Fn fn : {Fn::g, Fn::f, Fn::h}) {
        r.merge(equal(set_product(fn, join(a, a2), b, c), set_product(fn, a, b, c) * set_product(fn, a2, b, c),
                      "factorization"));
      }
      return r;
    });
  }
}

void dwpf_suite(Runner& run) {
  const Coupling& c = run.c();
  const std::size_t D = run.draws(20);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run("symmetry/n" + std::to_string(n) + "/" + pad(d), "dwpf/symmetry", n, [&, n](Ctx& ctx) {
        const VarSet x = ctx.src.draw(2 * n, c);
        const KArgs args(slice(x, 0, n), slice(x, n, n), c);
        ctx.param("u", args.u);
        ctx.param("v", args.v);
        return K_symmetry_check(args);
      });
    }
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run("shift-properties/n" + std::to_string(n) + "/" + pad(d), "dwpf/shift-reflection", n + 1, [&, n](Ctx& ctx) {
        const VarSet x = ctx.src.draw(2 * n + 1, c);
        const KArgs args(slice(x, 0, n), slice(x, n, n), c);
        ctx.param("u", args.u);
        ctx.param("v", args.v);
        ctx.param("z", x[2 * n]);
        return K_shift_properties_check(args, x[2 * n]);
      });
    }
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run("cauchy/n" + std::to_string(n) + "/" + pad(d), "cauchy-determinant", n, [&, n](Ctx& ctx) {
        const VarSet x = ctx.src.draw(2 * n, c);
        ctx.param("u", slice(x, 0, n));
        ctx.param("v", slice(x, n, n));
        return cauchy_determinant_check(slice(x, 0, n), slice(x, n, n), c);
      });
      run.run("residue/n" + std::to_string(n) + "/" + pad(d), "dwpf/residue-recursion", n, [&, n](Ctx& ctx) {
        const VarSet x = ctx.src.draw(2 * n, c);
        ctx.param("u", slice(x, 0, n));
        ctx.param("v", slice(x, n, n));
        ResidueReport rr = K_residue_check(slice(x, 0, n), slice(x, n, n), c);
        rr.check.note("numerator degree " + std::to_string(rr.numerator_degree));
        return rr.check;
      });
      run.run("determinant-forms/n" + std::to_string(n) + "/" + pad(d), "dwpf/determinant-form", n, [&, n](Ctx& ctx) {
        const VarSet x = ctx.src.draw(2 * n, c);
        ctx.param("u", slice(x, 0, n));
        ctx.param("v", slice(x, n, n));
        return equal(K(slice(x, 0, n), slice(x, n, n), c), K_literal(slice(x, 0, n), slice(x, n, n), c),
                     "row-scaled vs literal determinant");
      });
    }
  }
  for (std::size_t d = 0; d < D; ++d) {
    run.run("reflection-rewrite/" + pad(d), "dwpf/reflection-rewrite", 1, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("u", x[0]);
      ctx.param("v", x[1]);
      return reflection_rewrite_check(x[0], x[1], c);
    });
  }
}

void lemmas_suite(Runner& run) {
  const Coupling& c = run.c();
  const std::size_t D = run.draws(20);
  auto lemma_case = [&](Lemma id, const std::string& sizes, std::size_t largest, std::size_t nu, std::size_t nv,
                        std::size_t nw, bool with_xi) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run(std::string(lemma_name(id)) + "/" + sizes + "/" + pad(d), std::string("lemma/") + lemma_name(id), largest,
              [&, id, nu, nv, nw, with_xi](Ctx& ctx) {
                const VarSet x = ctx.src.draw(nu + nv + nw + (with_xi ? 1 : 0), c);
                LemmaParams p{slice(x, 0, nu), slice(x, nu, nv), slice(x, nu + nv, nw), with_xi ? x[nu + nv + nw] : Rat(0)};
                if (nu) ctx.param("u", p.u);
                if (nv) ctx.param("v", p.v);
                if (nw) ctx.param("w", p.w);
                if (with_xi) ctx.param("xi", p.xi);
                LemmaOutcome out = lemma_sum_check(id, p, c);
                out.check.note("splits " + out.split_digest);
                return out.check;
              });
    }
  };
  for (std::size_t total = 0; total <= 6; ++total) {
    for (std::size_t m1 = 0; m1 <= total; ++m1) {
      const std::size_t m2 = total - m1;
      const std::string sizes = "m" + std::to_string(m1) + "-" + std::to_string(m2);
      lemma_case(Lemma::cauchy_sum, sizes, total, m1, m2, total, false);
      lemma_case(Lemma::dwpf_sum, sizes, total, m1, m2, total, false);
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::string sizes = "n" + std::to_string(n);
    lemma_case(Lemma::single_sum, sizes, n, n, n, 0, true);
    lemma_case(Lemma::single_sum_dual, sizes, n, n, n, 0, true);
    lemma_case(Lemma::forget_sum, sizes, n, n, 0, n, true);
  }
  for (std::size_t k = 0; k <= 5; ++k) lemma_case(Lemma::contour_sum, "k" + std::to_string(k), k, 0, 1, k, true);
  for (std::size_t n = 0; n <= 2; ++n) {
    const std::string sizes = "n" + std::to_string(n);
    lemma_case(Lemma::shifted_dwpf_sum, sizes, n + 1, n + 1, n, 0, true);
    lemma_case(Lemma::absorb_sum, sizes, n + 1, n, 0, n + 1, true);
  }
}

bool is_unit_first(const Vector& x) {
  if (x.empty() || x[0] != Rat(1)) return false;
  return std::all_of(x.begin() + 1, x.end(), [](const Rat& e) { return e.is_zero(); });
}

void rtt_suite(Runner& run) {
  const Coupling& c = run.c();
  const std::size_t D = run.draws(10);
  for (std::size_t d = 0; d < D; ++d) {
    run.run("yang-baxter/" + pad(d), "r-matrix/yang-baxter", 3, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(3, c);
      ctx.param("u", x);
      const SparseMatrix r12 = graded_embed(r_matrix(x[0], x[1], c), 0, 1, 3);
      const SparseMatrix r13 = graded_embed(r_matrix(x[0], x[2], c), 0, 2, 3);
      const SparseMatrix r23 = graded_embed(r_matrix(x[1], x[2], c), 1, 2, 3);
      CheckResult r;
      if (auto diff = first_difference(r12 * r13 * r23, r23 * r13 * r12)) r.fail("Yang-Baxter: " + diff->str());
      r.terms = 1;
      return r;
    });
    run.run("unitarity/" + pad(d), "r-matrix/unitarity", 2, [&](Ctx& ctx) {
      const VarSet x = ctx.src.draw(2, c);
      ctx.param("u", x);
      const SparseMatrix lhs = r_matrix(x[0], x[1], c) * r_matrix(x[1], x[0], c);
      const SparseMatrix rhs = SparseMatrix::identity(9) * (f(x[0], x[1], c) * f(x[1], x[0], c));
      CheckResult r;
      if (auto diff = first_difference(lhs, rhs)) r.fail("R(u,v)R(v,u): " + diff->str());
      r.terms = 1;
      return r;
    });
  }
  for (std::size_t L : run.lengths({1, 2, 3})) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run("rtt/L" + std::to_string(L) + "/" + pad(d), "rtt", 2, [&, L](Ctx& ctx) {
        const Monodromy& t = run.chain(L);
        const VarSet x = run.points(ctx, t, 2);
        ctx.param("u", x[0]);
        ctx.param("v", x[1]);
        return rtt_check(t, x[0], x[1]);
      });
    }
  }
  for (std::size_t L : run.lengths({1, 2, 3, 4})) {
    for (std::size_t d = 0; d < D; ++d) {
      run.run("vacuum/L" + std::to_string(L) + "/" + pad(d), "vacuum", 1, [&, L](Ctx& ctx) {
        const Monodromy& t = run.chain(L);
        const VarSet x = run.points(ctx, t, 1);
        ctx.param("u", x[0]);
        const VacuumPair& vac = run.vacuum(L);
        CheckResult r = vacuum_check(t, vac, x[0]);
        if (!is_unit_first(vac.omega)) r.fail("solved vacuum is not e1 (x) ... (x) e1");
        r.note("lambda = (" + vacuum_eigenvalue(t, vac, 1, x[0]).str() + ", " + vacuum_eigenvalue(t, vac, 2, x[0]).str() +
               ", " + vacuum_eigenvalue(t, vac, 3, x[0]).str() + ")");
        return r;
      });
    }
    for (std::size_t d = 0; d < D; ++d) {
      run.run("entry-parity/L" + std::to_string(L) + "/" + pad(d), "entry-grading", 1, [&, L](Ctx& ctx) {
        const Monodromy& t = run.chain(L);
        const VarSet x = run.points(ctx, t, 1);
        ctx.param("u", x[0]);
        return entry_parity_check(t, x[0]);
      });
    }
  }
}

void commutators_suite(Runner& run) {
  const std::size_t D = run.draws(5);
  for (std::size_t L : run.lengths({2})) {
    for (std::size_t d = 0; d < D; ++d) {
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          for (int k = 1; k <= 3; ++k)
            for (int l = 1; l <= 3; ++l) {
              const std::string id = "bracket/L" + std::to_string(L) + "/T" + idx_str({i, j}) + "-T" + idx_str({k, l}) + "/" + pad(d);
              run.run(id, "graded-commutator", 2, [&, L, i, j, k, l](Ctx& ctx) {
                const Monodromy& t = run.chain(L);
                const VarSet x = run.points(ctx, t, 2);
                ctx.param("u", x[0]);
                ctx.param("v", x[1]);
                return graded_commutator_check(t, i, j, k, l, x[0], x[1]).check;
              });
            }
    }
  }
  for (std::size_t L : run.lengths({1, 2, 3})) {
    for (std::size_t d = 0; d < D; ++d) {
      for (OddKind kind : {OddKind::column, OddKind::row}) {
        for (int j = 1; j <= 2; ++j) {
          const std::string kname = kind == OddKind::column ? "column" : "row";
          run.run("odd-exchange/" + kname + std::to_string(j) + "/L" + std::to_string(L) + "/" + pad(d),
                  "odd-exchange/" + kname, 2, [&, L, kind, j](Ctx& ctx) {
                    const Monodromy& t = run.chain(L);
                    const VarSet x = run.points(ctx, t, 2);
                    ctx.param("v", x);
                    return odd_exchange_check(t, kind, j, x[0], x[1]);
                  });
        }
      }
      const std::array<std::pair<int, int>, 8> entries{
          {{1, 3}, {2, 3}, {3, 1}, {3, 2}, {1, 2}, {2, 2}, {2, 1}, {3, 3}}};
      for (std::size_t n = 2; n <= 3; ++n) {
        for (auto [i, j] : entries) {
          run.run("product-symmetry/T" + idx_str({i, j}) + "/L" + std::to_string(L) + "/n" + std::to_string(n) + "/" + pad(d),
                  (parity(i) + parity(j)) % 2 ? "symmetric-odd-product" : "even-set-product", n,
                  [&, L, n, i, j](Ctx& ctx) {
                    const Monodromy& t = run.chain(L);
                    const VarSet x = run.points(ctx, t, n);
                    ctx.param("v", x);
                    return product_symmetry_check(t, i, j, x);
                  });
        }
      }
    }
  }
  for (std::size_t L : run.lengths({1, 2})) {
    run.run("convention-scan/L" + std::to_string(L), "graded-commutator/convention", 2, [&, L](Ctx& ctx) {
      const VarSet x = run.points(ctx, run.chain(L), 2);
      ctx.param("u", x[0]);
      ctx.param("v", x[1]);
      CheckResult r;
      auto scan = [&](const Monodromy& t, const std::string& label) {
        std::size_t bad1 = 0, bad2 = 0;
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
              for (int l = 1; l <= 3; ++l) {
                const CommutatorReport cr = graded_commutator_check(t, i, j, k, l, x[0], x[1]);
                bad1 += cr.form1 ? 0 : 1;
                bad2 += cr.form2 ? 0 : 1;
              }
        r.note(label + ": form1 " + (bad1 ? std::to_string(bad1) + " failing" : std::string("ok")) + ", form2 " +
               (bad2 ? std::to_string(bad2) + " failing" : std::string("ok")));
        r.terms += 162;
        return bad1 == 0 && bad2 == 0;
      };
      const bool chosen = scan(run.chain(L), "koszul");
      for (EntryConvention conv : {EntryConvention::row_parity, EntryConvention::odd_negated, EntryConvention::raw}) {
        scan(run.chain(L, conv), convention_name(conv));
      }
      scan(run.chain(L, EntryConvention::koszul, AuxOrder::first_site_leftmost), "koszul, reversed factor order");
      if (!chosen) r.fail("selected convention does not satisfy both commutator forms");
      return r;
    });
  }
}

void mcr_rows_suite(Runner& run) {
  const std::size_t D = run.draws(5);
  const std::array<McrEquation, 6> eqs{McrEquation::TijTik, McrEquation::Ti3Tj3, McrEquation::TijTi3,
                                       McrEquation::Ti3Tij, McrEquation::T33T3i, McrEquation::T3iT33};
  for (std::size_t L : run.lengths({2, 3})) {
    for (McrEquation eq : eqs) {
      std::vector<std::pair<std::size_t, std::size_t>> sizes{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
      if (eq == McrEquation::TijTi3) sizes.emplace_back(1, 3);
      for (const auto& idx : admissible_indices(eq)) {
        std::string itag;
        for (int x : idx)
          if (x) itag += std::to_string(x);
        for (auto [n, m] : sizes) {
          for (std::size_t d = 0; d < D; ++d) {
            const std::string id = std::string(mcr_name(eq)) + "/i" + itag + "/L" + std::to_string(L) + "/n" +
                                   std::to_string(n) + "m" + std::to_string(m) + "/" + pad(d);
            run.run(id, std::string("row-mcr/") + mcr_name(eq), std::max(n, m), [&, L, eq, idx, n, m](Ctx& ctx) {
              const Monodromy& t = run.chain(L);
              const VarSet x = run.points(ctx, t, n + m);
              McrCase mc{eq, idx, slice(x, 0, n), slice(x, n, m)};
              ctx.param("u", mc.u);
              ctx.param("v", mc.v);
              return mcr_check(t, mc);
            });
          }
        }
      }
    }
  }
}

void mcr_columns_suite(Runner& run) {
  const std::size_t D = run.draws(5);
  for (std::size_t L : run.lengths({2, 3})) {
    for (std::size_t b = 1; b <= 3; ++b) {
      for (std::size_t d = 0; d < D; ++d) {
        const std::string tail = "/L" + std::to_string(L) + "/b" + std::to_string(b) + "/" + pad(d);
        run.run("T22T12" + tail, "column-mcr/T22T12", b, [&, L, b](Ctx& ctx) {
          const Monodromy& t = run.chain(L);
          const VarSet x = run.points(ctx, t, b + 1);
          McrCase mc{McrEquation::T22T12, {0, 0, 0}, slice(x, 0, b), slice(x, b, 1)};
          ctx.param("u", mc.u);
          ctx.param("v", mc.v);
          return mcr_check(t, mc);
        });
        run.run("T23T13" + tail, "column-mcr/T23T13", b, [&, L, b](Ctx& ctx) {
          const Monodromy& t = run.chain(L);
          const VarSet x = run.points(ctx, t, b + 1);
          McrCase mc{McrEquation::T23T13, {0, 0, 0}, slice(x, 0, b), slice(x, b, 1)};
          ctx.param("u", mc.u);
          ctx.param("v", mc.v);
          CheckResult r = mcr_check(t, mc);
          mc.reading = Reading::as_printed;
          r.note(std::string("as-printed label reading ") + (mcr_check(t, mc).ok ? "holds" : "fails"));
          return r;
        });
      }
    }
  }
}

void xy_suite(Runner& run) {
  const std::size_t D = run.draws(3);
  for (std::size_t L : run.lengths({1, 2, 3})) {
    const std::string ltag = "/L" + std::to_string(L);
    for (std::size_t a = 0; a <= 4; ++a) {
      for (std::size_t b = 0; a + b <= 4; ++b) {
        const std::string ab = "/a" + std::to_string(a) + "b" + std::to_string(b);
        for (std::size_t d = 0; d < D; ++d) {
          auto sets = [&run, a, b, L](Ctx& ctx) {
            const Monodromy& t = run.chain(L);
            const VarSet x = run.points(ctx, t, a + b);
            const VarSet u = slice(x, 0, a), v = slice(x, a, b);
            ctx.param("u", u);
            ctx.param("v", v);
            return std::tuple<const Monodromy&, VarSet, VarSet>{t, u, v};
          };
          const std::size_t largest = std::max(a, b);
          run.run("equivalence" + ltag + ab + "/" + pad(d), "xy/equivalence", largest, [&, sets](Ctx& ctx) {
            auto [t, u, v] = sets(ctx);
            return xy_equivalence_check(t, u, v);
          });
          for (XYKind kind : {XYKind::X, XYKind::Y}) {
            const std::string kn = kind == XYKind::X ? "x" : "y";
            if (a >= 1) {
              run.run("recursion-" + kn + ltag + ab + "/" + pad(d), "xy/recursion-" + kn, largest, [&, sets, kind](Ctx& ctx) {
                auto [t, u, v] = sets(ctx);
                return recursion_check(t, kind, u, v);
              });
            }
            run.run("leading-term-" + kn + ltag + ab + "/" + pad(d), "xy/leading-term", largest, [&, sets, kind](Ctx& ctx) {
              auto [t, u, v] = sets(ctx);
              return xy_leading_term_check(t, kind, u, v);
            });
          }
        }
      }
    }
    for (std::size_t b = 0; b <= 3; ++b) {
      for (std::size_t d = 0; d < D; ++d) {
        run.run("base" + ltag + "/b" + std::to_string(b) + "/" + pad(d), "xy/base", b, [&, L, b](Ctx& ctx) {
          const Monodromy& t = run.chain(L);
          const VarSet v = run.points(ctx, t, b);
          ctx.param("v", v);
          return xy_base_check(t, v);
        });
      }
    }
  }
  for (std::size_t L : run.lengths({2})) {
    for (std::size_t b = 1; b <= 3; ++b) {
      for (std::size_t d = 0; d < D; ++d) {
        run.run("comm-a1/L" + std::to_string(L) + "/b" + std::to_string(b) + "/" + pad(d), "mcr/comm-a1", b,
                [&, L, b](Ctx& ctx) {
                  const Monodromy& t = run.chain(L);
                  const VarSet x = run.points(ctx, t, b + 1);
                  McrCase mc{McrEquation::CommA1, {0, 0, 0}, slice(x, 0, 1), slice(x, 1, b)};
                  ctx.param("u", mc.u);
                  ctx.param("v", mc.v);
                  return mcr_check(t, mc);
                });
      }
    }
  }
}

void bethe_suite(Runner& run, bool dual) {
  const std::size_t D = run.draws(3);
  const std::string ref = dual ? "bethe/dual-representations" : "bethe/representations";
  const std::array<std::pair<std::size_t, std::size_t>, 7> grid{{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}}};
  for (std::size_t L : run.lengths({2, 3})) {
    for (auto [a, b] : grid) {
      for (std::size_t d = 0; d < D; ++d) {
        const std::string tail = "/L" + std::to_string(L) + "/a" + std::to_string(a) + "b" + std::to_string(b) + "/" + pad(d);
        run.run("agreement" + tail, ref, std::max(a, b), [&, L, a, b](Ctx& ctx) {
          const Monodromy& t = run.chain(L);
          const VarSet x = run.points(ctx, t, a + b);
          const VarSet u = slice(x, 0, a), v = slice(x, a, b);
          ctx.param("u", u);
          ctx.param("v", v);
          const VacuumPair& vac = run.vacuum(L);
          return dual ? dual_bethe_agreement_check(t, vac, u, v) : bethe_agreement_check(t, vac, u, v);
        });
        if (!dual && a + b >= 3) {
          run.run("permutation-symmetry" + tail, "bethe/symmetry", std::max(a, b), [&, L, a, b](Ctx& ctx) {
            const Monodromy& t = run.chain(L);
            const VarSet x = run.points(ctx, t, a + b);
            const VarSet u = slice(x, 0, a), v = slice(x, a, b);
            ctx.param("u", u);
            ctx.param("v", v);
            return bethe_symmetry_check(t, run.vacuum(L), u, v);
          });
        }
      }
    }
  }
}

void run_one(const SuiteConfig& cfg, const std::string& name, Report& rep) {
  Runner run(cfg, name, rep);
  if (name == "scalars") scalars_suite(run);
  else if (name == "dwpf") dwpf_suite(run);
  else if (name == "lemmas") lemmas_suite(run);
  else if (name == "rtt") rtt_suite(run);
  else if (name == "commutators") commutators_suite(run);
  else if (name == "mcr-rows") mcr_rows_suite(run);
  else if (name == "mcr-columns") mcr_columns_suite(run);
  else if (name == "xy") xy_suite(run);
  else if (name == "bethe") bethe_suite(run, false);
  else if (name == "dual-bethe") bethe_suite(run, true);
  else throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.suite = cfg.suite;
  if (cfg.suite == "all") {
    for (const auto& name : suite_names()) {
      if (name != "all") run_one(cfg, name, rep);
    }
  } else {
    run_one(cfg, cfg.suite, rep);
  }
  rep.finalize();
  return rep;
}

}  // namespace glmcr
