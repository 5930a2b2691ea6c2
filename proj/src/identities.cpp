#include "glmcr/identities.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "glmcr/dwpf.hpp"
#include "glmcr/errors.hpp"
#include "glmcr/functions.hpp"

namespace glmcr {

const char* mcr_name(McrEquation eq) {
  switch (eq) {
    case McrEquation::TijTik:
      return "TijTik";
    case McrEquation::Ti3Tj3:
      return "Ti3Tj3";
    case McrEquation::TijTi3:
      return "TijTi3";
    case McrEquation::Ti3Tij:
      return "Ti3Tij";
    case McrEquation::T33T3i:
      return "T33T3i";
    case McrEquation::T3iT33:
      return "T3iT33";
    case McrEquation::T22T12:
      return "T22T12";
    case McrEquation::T23T13:
      return "T23T13";
    case McrEquation::CommA1:
      return "comm-a1";
  }
  return "?";
}

std::vector<std::array<int, 3>> admissible_indices(McrEquation eq) {
  std::vector<std::array<int, 3>> out;
  switch (eq) {
    case McrEquation::TijTik:
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
          for (int k = 1; k <= 2; ++k) out.push_back({i, j, k});
      break;
    case McrEquation::Ti3Tj3:
    case McrEquation::TijTi3:
    case McrEquation::Ti3Tij:
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) out.push_back({i, j, 0});
      break;
    case McrEquation::T33T3i:
    case McrEquation::T3iT33:
      out.push_back({1, 0, 0});
      out.push_back({2, 0, 0});
      break;
    default:
      out.push_back({0, 0, 0});
  }
  return out;
}

namespace {

struct Factor {
  int i;
  int j;
  const VarSet* args;
};

// Left-to-right product of set products; empty sets are identities.
Matrix ordered(const Monodromy& t, std::initializer_list<Factor> fs) {
  const Matrix* first = nullptr;
  Matrix acc;
  bool owned = false;
  for (const auto& f : fs) {
    if (f.args->empty()) continue;
    const Matrix& m = t.set_product(f.i, f.j, *f.args);
    if (!first) {
      first = &m;
    } else if (!owned) {
      acc = *first * m;
      owned = true;
    } else {
      acc = acc * m;
    }
  }
  if (owned) return acc;
  if (first) return *first;
  return Matrix::identity(t.dim());
}

VarSet single(const Rat& x) { return make_varset({x}); }

void require_size(const VarSet& s, std::size_t n, const char* what) {
  if (s.size() != n) throw SizeMismatchError(std::string(what) + " must have " + std::to_string(n) + " element(s)");
}

}  // namespace

McrSides mcr_sides(const Monodromy& t, const McrCase& mc) {
  const auto allowed = admissible_indices(mc.eq);
  if (std::find(allowed.begin(), allowed.end(), mc.idx) == allowed.end()) {
    throw RangeError(std::string("inadmissible indices for ") + mcr_name(mc.eq));
  }
  const Coupling& c = t.coupling();
  const auto [i, j, k] = mc.idx;
  const VarSet& u = mc.u;
  const VarSet& v = mc.v;
  McrSides out;
  out.rhs = Matrix(t.dim(), t.dim());

  auto row_sum = [&](auto&& lhs_factors, auto&& term) {
    out.lhs = lhs_factors();
    const VarSet w = join(u, v);
    for (const auto& s : enumerate_splits(w, {u.size(), v.size()})) {
      auto [coeff, m] = term(s.parts[0], s.parts[1]);
      out.rhs.add_scaled(m, coeff);
      ++out.terms;
    }
  };
  const Rat sign_n = sign_power(static_cast<long>(u.size()));

  switch (mc.eq) {
    case McrEquation::TijTik:
      row_sum([&] { return ordered(t, {{i, j, &u}, {i, k, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{sign_n * K(a, u.shifted(c.value()), c) * ff(b, a, c), ordered(t, {{i, k, &b}, {i, j, &a}})};
              });
      break;
    case McrEquation::Ti3Tj3:
      row_sum([&] { return ordered(t, {{i, 3, &u}, {j, 3, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{sign_n * hh(v, u, c) * K(u, a.shifted(c.value()), c) * gg(a, b, c),
                                 ordered(t, {{j, 3, &b}, {i, 3, &a}})};
              });
      break;
    case McrEquation::TijTi3:
      row_sum([&] { return ordered(t, {{i, j, &u}, {i, 3, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{hh(b, u, c) * gg(b, a, c), ordered(t, {{i, 3, &b}, {i, j, &a}})};
              });
      break;
    case McrEquation::Ti3Tij:
      row_sum([&] { return ordered(t, {{i, 3, &u}, {i, j, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{hh(v, a, c) * gg(b, a, c), ordered(t, {{i, j, &b}, {i, 3, &a}})};
              });
      break;
    case McrEquation::T33T3i:
      row_sum([&] { return ordered(t, {{3, 3, &u}, {3, i, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{hh(u, b, c) * gg(a, b, c), ordered(t, {{3, i, &b}, {3, 3, &a}})};
              });
      break;
    case McrEquation::T3iT33:
      row_sum([&] { return ordered(t, {{3, i, &u}, {3, 3, &v}}); },
              [&](const VarSet& a, const VarSet& b) {
                return std::pair{hh(a, v, c) * gg(a, b, c), ordered(t, {{3, 3, &b}, {3, i, &a}})};
              });
      break;
    case McrEquation::T22T12: {
      require_size(v, 1, "T22T12: v");
      out.lhs = ordered(t, {{2, 2, &v}, {1, 2, &u}});
      out.rhs.add_scaled(ordered(t, {{1, 2, &u}, {2, 2, &v}}), ff(v, u, c));
      out.terms = 1;
      for (const auto& s : enumerate_splits(u, {1, u.size() - 1})) {
        const VarSet& r = s.parts[0];
        const VarSet& rest = s.parts[1];
        out.rhs.add_scaled(ordered(t, {{1, 2, &v}, {1, 2, &rest}, {2, 2, &r}}), gg(r, v, c) * ff(r, rest, c));
        ++out.terms;
      }
      break;
    }
    case McrEquation::T23T13: {
      require_size(v, 1, "T23T13: v");
      const long b = static_cast<long>(u.size());
      out.lhs = ordered(t, {{2, 3, &u}, {1, 3, &v}});
      out.rhs.add_scaled(ordered(t, {{1, 3, &v}, {2, 3, &u}}), sign_power(b) * ff(v, u, c));
      out.terms = 1;
      for (const auto& s : enumerate_splits(u, {1, u.size() - 1})) {
        const VarSet& r = s.parts[0];
        const VarSet& rest = s.parts[1];
        const VarSet with_v = join(v, rest);
        const VarSet& odd_arg = mc.reading == Reading::corrected ? r : v;
        out.rhs.add_scaled(ordered(t, {{1, 3, &odd_arg}, {2, 3, &with_v}}), gg(v, r, c) * gg(rest, r, c) * hh(v, rest, c));
        ++out.terms;
      }
      break;
    }
    case McrEquation::CommA1: {
      require_size(u, 1, "comm-a1: u");
      out.lhs = ordered(t, {{1, 2, &u}, {2, 3, &v}}) - ordered(t, {{2, 3, &v}, {1, 2, &u}});
      for (const auto& s : enumerate_splits(v, {1, v.size() - 1})) {
        const VarSet& a = s.parts[0];
        const VarSet& rest = s.parts[1];
        Matrix m = ordered(t, {{1, 3, &u}, {2, 3, &rest}, {2, 2, &a}}) - ordered(t, {{1, 3, &a}, {2, 3, &rest}, {2, 2, &u}});
        out.rhs.add_scaled(m, gg(u, a, c) * gg(rest, a, c));
        ++out.terms;
      }
      break;
    }
  }
  return out;
}

CheckResult mcr_check(const Monodromy& t, const McrCase& mc) {
  CheckResult r;
  const McrSides s = mcr_sides(t, mc);
  if (auto d = first_difference(s.lhs, s.rhs)) r.fail(std::string(mcr_name(mc.eq)) + ": " + d->str());
  if (r.ok && s.lhs.is_zero()) r.note("both sides are the zero operator");
  r.terms = s.terms;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

template <class Body>
void double_partitions(const VarSet& u, const VarSet& v, std::size_t min_n, Body&& body) {
  const std::size_t top = std::min(u.size(), v.size());
  for (std::size_t n = min_n; n <= top; ++n) {
    const auto us = enumerate_splits(u, {n, u.size() - n});
    const auto vs = enumerate_splits(v, {n, v.size() - n});
    for (const auto& su : us) {
      for (const auto& sv : vs) body(n, su.parts[0], su.parts[1], sv.parts[0], sv.parts[1]);
    }
  }
}

}  // namespace

const char* xy_name(XYKind kind) { return kind == XYKind::X ? "X" : "Y"; }

Matrix x_operator(const Monodromy& t, const VarSet& u, const VarSet& v, std::size_t min_n) {
  const Coupling& c = t.coupling();
  Matrix acc(t.dim(), t.dim());
  double_partitions(u, v, min_n, [&](std::size_t, const VarSet& ua, const VarSet& ub, const VarSet& va, const VarSet& vb) {
    const Rat coeff = gg(va, ua, c) * ff(ua, ub, c) * gg(vb, va, c) * hh(ua, ua, c);
    acc.add_scaled(ordered(t, {{1, 3, &ua}, {1, 2, &ub}, {2, 3, &vb}, {2, 2, &va}}), coeff);
  });
  return acc;
}

Matrix y_operator(const Monodromy& t, const VarSet& u, const VarSet& v, std::size_t min_n) {
  const Coupling& c = t.coupling();
  Matrix acc(t.dim(), t.dim());
  double_partitions(u, v, min_n, [&](std::size_t, const VarSet& ua, const VarSet& ub, const VarSet& va, const VarSet& vb) {
    const Rat coeff = K(va, ua, c) * ff(ua, ub, c) * gg(vb, va, c);
    acc.add_scaled(ordered(t, {{1, 3, &va}, {2, 3, &vb}, {1, 2, &ub}, {2, 2, &ua}}), coeff);
  });
  return acc;
}

namespace {

Matrix xy_operator(const Monodromy& t, XYKind kind, const VarSet& u, const VarSet& v) {
  return kind == XYKind::X ? x_operator(t, u, v) : y_operator(t, u, v);
}

}  // namespace

CheckResult xy_equivalence_check(const Monodromy& t, const VarSet& u, const VarSet& v) {
  CheckResult r;
  const Matrix x = x_operator(t, u, v);
  if (auto d = first_difference(x, y_operator(t, u, v))) r.fail("X != Y: " + d->str());
  if (r.ok && x.is_zero()) r.note("both sides are the zero operator");
  r.terms = 2;
  return r;
}

CheckResult recursion_check(const Monodromy& t, XYKind kind, const VarSet& u, const VarSet& v) {
  if (u.empty()) throw SizeMismatchError("recursion_check needs a >= 1");
  CheckResult r;
  const Coupling& c = t.coupling();
  const VarSet last = single(u[u.size() - 1]);
  const VarSet rest = u.without(u.size() - 1);

  const Matrix lhs = xy_operator(t, kind, u, v);
  Matrix rhs = t.set_product(1, 2, last) * xy_operator(t, kind, rest, v);
  r.terms = 1;
  if (!v.empty()) {
    for (const auto& s : enumerate_splits(v, {1, v.size() - 1})) {
      const VarSet& vr = s.parts[0];
      const VarSet& vs = s.parts[1];
      const Rat coeff = gg(vr, last, c) * ff(vr, rest, c) * gg(vs, vr, c);
      rhs.add_scaled(t.set_product(1, 3, last) * xy_operator(t, kind, rest, vs) * t.set_product(2, 2, vr), coeff);
      ++r.terms;
    }
  }
  if (auto d = first_difference(lhs, rhs)) r.fail(std::string(xy_name(kind)) + " recursion: " + d->str());
  return r;
}

CheckResult xy_base_check(const Monodromy& t, const VarSet& v) {
  CheckResult r;
  const VarSet none;
  const Matrix& target = v.empty() ? Matrix::identity(t.dim()) : t.set_product(2, 3, v);
  if (auto d = first_difference(x_operator(t, none, v), target)) r.fail("X_{0,b} != T23(v): " + d->str());
  if (auto d = first_difference(y_operator(t, none, v), target)) r.fail("Y_{0,b} != T23(v): " + d->str());
  r.terms = 2;
  return r;
}

CheckResult xy_leading_term_check(const Monodromy& t, XYKind kind, const VarSet& u, const VarSet& v) {
  CheckResult r;
  const Matrix full = xy_operator(t, kind, u, v);
  const Matrix lead = kind == XYKind::X ? ordered(t, {{1, 2, &u}, {2, 3, &v}}) : ordered(t, {{2, 3, &v}, {1, 2, &u}});
  const Matrix tail = kind == XYKind::X ? x_operator(t, u, v, 1) : y_operator(t, u, v, 1);
  if (auto d = first_difference(full - lead, tail)) r.fail(std::string(xy_name(kind)) + " leading term: " + d->str());
  r.terms = 1;
  return r;
}

// ---------------------------------------------------------------------------

const char* bethe_rep_name(BetheRep rep) {
  switch (rep) {
    case BetheRep::rep1a:
      return "rep1a";
    case BetheRep::rep1b:
      return "rep1b";
    case BetheRep::rep2a:
      return "rep2a";
    case BetheRep::rep2b:
      return "rep2b";
  }
  return "?";
}

namespace {

class Lambda2 {
 public:
  Lambda2(const Monodromy& t, const VacuumPair& vac) : t_(t), vac_(vac) {}
  Rat operator()(const VarSet& s) {
    Rat p(1);
    for (const auto& x : s) {
      auto it = memo_.find(x);
      if (it == memo_.end()) it = memo_.emplace(x, vacuum_eigenvalue(t_, vac_, 2, x)).first;
      p *= it->second;
    }
    return p;
  }

 private:
  const Monodromy& t_;
  const VacuumPair& vac_;
  std::map<Rat, Rat> memo_;
};

struct BetheTerm {
  Rat coeff;
  std::array<Factor, 3> factors;  // left to right as written
};

BetheTerm bethe_term(BetheRep rep, bool dual, Reading reading, std::size_t n, std::size_t b, const VarSet& ua,
                     const VarSet& ub, const VarSet& va, const VarSet& vb, Lambda2& lambda2, const Coupling& c) {
  BetheTerm term{Rat(0), {}};
  switch (rep) {
    case BetheRep::rep1a:
      term.coeff = gg(va, ua, c) * ff(ua, ub, c) * gg(vb, va, c) * hh(ua, ua, c) * lambda2(va);
      term.factors = dual ? std::array<Factor, 3>{{{3, 2, &vb}, {2, 1, &ub}, {3, 1, &ua}}}
                          : std::array<Factor, 3>{{{1, 3, &ua}, {1, 2, &ub}, {2, 3, &vb}}};
      break;
    case BetheRep::rep1b:
      term.coeff = K(va, ua, c) * ff(ua, ub, c) * gg(vb, va, c) * lambda2(ua);
      term.factors = dual ? std::array<Factor, 3>{{{2, 1, &ub}, {3, 2, &vb}, {3, 1, &va}}}
                          : std::array<Factor, 3>{{{1, 3, &va}, {2, 3, &vb}, {1, 2, &ub}}};
      break;
    case BetheRep::rep2a:
      term.coeff = gg(va, ua, c) * ff(ub, ua, c) * gg(vb, va, c) * ff(va, ub, c) * hh(ua, ua, c) * lambda2(va);
      term.factors = dual ? std::array<Factor, 3>{{{3, 2, &vb}, {3, 1, &ua}, {2, 1, &ub}}}
                          : std::array<Factor, 3>{{{1, 2, &ub}, {1, 3, &ua}, {2, 3, &vb}}};
      break;
    case BetheRep::rep2b:
      term.coeff = K(va, ua, c) * ff(ua, ub, c) * gg(vb, va, c) * ff(vb, ua, c) * lambda2(ua);
      if (reading == Reading::corrected) term.coeff *= sign_power(static_cast<long>(n * (b - n)));
      term.factors = dual ? std::array<Factor, 3>{{{2, 1, &ub}, {3, 1, &va}, {3, 2, &vb}}}
                          : std::array<Factor, 3>{{{2, 3, &vb}, {1, 3, &va}, {1, 2, &ub}}};
      break;
  }
  return term;
}

Vector bethe_sum(const Monodromy& t, const VacuumPair& vac, BetheRep rep, bool dual, const VarSet& u, const VarSet& v,
                 Reading reading) {
  const Coupling& c = t.coupling();
  const std::size_t b = v.size();
  Lambda2 lambda2(t, vac);
  Vector acc(t.dim());
  double_partitions(u, v, 0, [&](std::size_t n, const VarSet& ua, const VarSet& ub, const VarSet& va, const VarSet& vb) {
    const BetheTerm term = bethe_term(rep, dual, reading, n, b, ua, ub, va, vb, lambda2, c);
    if (term.coeff.is_zero()) return;
    Vector x;
    if (dual) {
      x = vac.omega_dual;
      for (const auto& f : term.factors) {
        if (!f.args->empty()) x = x * t.set_product(f.i, f.j, *f.args);
      }
    } else {
      x = vac.omega;
      for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
        if (!it->args->empty()) x = t.set_product(it->i, it->j, *it->args) * x;
      }
    }
    for (std::size_t s = 0; s < acc.size(); ++s) {
      if (!x[s].is_zero()) acc[s].add_product(term.coeff, x[s]);
    }
  });
  if (dual) {
    const Rat pre = sign_power(static_cast<long>(b * (b - 1) / 2));
    if (pre.sign() < 0) {
      for (auto& e : acc) e = -e;
    }
  }
  return acc;
}

bool is_zero_vector(const Vector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rat& e) { return e.is_zero(); });
}

CheckResult agreement(const Monodromy& t, const VacuumPair& vac, bool dual, const VarSet& u, const VarSet& v) {
  CheckResult r;
  const char* tag = dual ? "dual " : "";
  const Vector ref = bethe_sum(t, vac, BetheRep::rep1a, dual, u, v, Reading::corrected);
  for (BetheRep rep : kBetheReps) {
    if (rep == BetheRep::rep1a) continue;
    if (auto d = first_difference(bethe_sum(t, vac, rep, dual, u, v, Reading::corrected), ref)) {
      r.fail(std::string(tag) + bethe_rep_name(rep) + " != rep1a: " + d->str());
    }
  }
  r.terms = 4;
  const bool printed = bethe_sum(t, vac, BetheRep::rep2b, dual, u, v, Reading::as_printed) == ref;
  r.note(std::string("as-printed ") + tag + "rep2b " + (printed ? "agrees" : "differs"));
  if (is_zero_vector(ref)) r.note("vector is zero");
  return r;
}

}  // namespace

Vector bethe_vector(const Monodromy& t, const VacuumPair& vac, BetheRep rep, const VarSet& u, const VarSet& v,
                    Reading reading) {
  return bethe_sum(t, vac, rep, false, u, v, reading);
}

Vector dual_bethe_vector(const Monodromy& t, const VacuumPair& vac, BetheRep rep, const VarSet& u, const VarSet& v,
                         Reading reading) {
  return bethe_sum(t, vac, rep, true, u, v, reading);
}

CheckResult bethe_agreement_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v) {
  return agreement(t, vac, false, u, v);
}

CheckResult dual_bethe_agreement_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v) {
  return agreement(t, vac, true, u, v);
}

CheckResult bethe_symmetry_check(const Monodromy& t, const VacuumPair& vac, const VarSet& u, const VarSet& v) {
  CheckResult r;
  const Vector ref = bethe_vector(t, vac, BetheRep::rep1a, u, v);
  auto permute_each = [&](const VarSet& s, bool is_u) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    while (std::next_permutation(order.begin(), order.end())) {
      std::vector<Rat> xs;
      for (auto i : order) xs.push_back(s[i]);
      const VarSet p = make_varset(std::move(xs));
      const Vector got = is_u ? bethe_vector(t, vac, BetheRep::rep1a, p, v) : bethe_vector(t, vac, BetheRep::rep1a, u, p);
      if (auto d = first_difference(got, ref)) r.fail(std::string("permuting ") + (is_u ? "u" : "v") + " changes the vector: " + d->str());
      ++r.terms;
    }
  };
  permute_each(u, true);
  permute_each(v, false);
  return r;
}

}  // namespace glmcr
