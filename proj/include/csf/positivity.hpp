#pragma once

// Schur positivity, niceness and strong niceness verdicts with witnesses,
// and the reproduction suites for the half graphs and the lattices m x 2,
// m x 3.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csf/graph_io.hpp"
#include "csf/schur.hpp"

namespace csf {

/// A dominance pair (larger >= smaller) breaking niceness or strong
/// niceness, with both stc values.
struct PairViolation {
  Partition larger;
  Partition smaller;
  Integer stc_larger;
  Integer stc_smaller;
};

struct PositivityReport {
  bool schur_positive = true;
  std::vector<std::pair<Partition, Integer>> negative_witnesses;
  std::optional<bool> nice;
  std::optional<PairViolation> nice_violation;
  std::optional<bool> strongly_nice;
  std::optional<PairViolation> strongly_nice_violation;
};

enum class NicenessMode { nice, strongly_nice };

inline PositivityReport check_schur_positive(const SymFuncExpansion& schur) {
  if (schur.basis != Basis::schur) throw PreconditionError("check_schur_positive: need Schur basis");
  PositivityReport r;
  for (const auto& [p, c] : schur.coeffs)
    if (c < 0) r.negative_witnesses.emplace_back(p, c);
  r.schur_positive = r.negative_witnesses.empty();
  return r;
}

inline PositivityReport check_schur_positive(const Graph& g, const ExpansionOptions& opts = {}) {
  return check_schur_positive(schur_expansion(g, opts));
}

/// Whether (larger, smaller) violates the property. Nice: larger > smaller,
/// stc(larger) > 0 and stc(smaller) = 0. Strongly nice: larger >= smaller
/// and stc(larger) > stc(smaller).
inline bool violates(NicenessMode mode, const Partition& larger, const Partition& smaller,
                     const Integer& stc_larger, const Integer& stc_smaller) {
  if (mode == NicenessMode::nice)
    return strictly_dominates(larger, smaller) && stc_larger > 0 && stc_smaller == 0;
  return dominates(larger, smaller) && stc_larger > stc_smaller;
}

/// Exhaustive pair scan over a monomial expansion (stc for every partition).
/// Reports the first violating pair in canonical order.
inline void check_niceness(const SymFuncExpansion& mono, NicenessMode mode, PositivityReport& r) {
  if (mono.basis != Basis::monomial) throw PreconditionError("check_niceness: need monomial basis");
  const auto parts = partitions_of(mono.degree);
  std::optional<PairViolation> found;
  for (std::size_t a = 0; a < parts.size() && !found; ++a) {
    const Integer sa = mono.coeff(parts[a]);
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      const Integer sb = mono.coeff(parts[b]);
      if (violates(mode, parts[a], parts[b], sa, sb)) {
        found = PairViolation{parts[a], parts[b], sa, sb};
        break;
      }
    }
  }
  if (mode == NicenessMode::nice) {
    r.nice = !found;
    r.nice_violation = found;
  } else {
    r.strongly_nice = !found;
    r.strongly_nice_violation = found;
  }
}

inline constexpr int kDefaultNicenessMaxOrder = 14;

inline PositivityReport check_niceness(const Graph& g, NicenessMode mode, const ExpansionOptions& opts = {},
                                       int max_order = kDefaultNicenessMaxOrder) {
  if (g.order() > max_order)
    throw PreconditionError("full niceness scan limited to order " + std::to_string(max_order));
  PositivityReport r;
  check_niceness(monomial_expansion(g, opts), mode, r);
  return r;
}

// ---------------------------------------------------------------------------
// Family-level coefficients

/// stc values for a built-in family: closed forms first, brute force on the
/// constructed graph otherwise (when allowed and the graph fits).
class FamilyStc {
 public:
  FamilyStc(Family f, ExpansionOptions opts = {}) : family_(f), opts_(opts) {}

  const Integer& operator()(const Partition& lambda) {
    if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
    return cache_.emplace(lambda, compute(lambda)).first->second;
  }
  const Family& family() const noexcept { return family_; }

 private:
  Integer compute(const Partition& lambda) {
    if (opts_.source != StcSource::brute_force)
      if (auto v = closed_form_stc(family_, lambda)) return *v;
    if (opts_.source == StcSource::closed_form)
      throw NoClosedForm("no closed form for stc(" + to_string(family_) + "; " + to_string(lambda) + ")");
    if (!graph_) graph_ = std::make_unique<Graph>(build_family(family_));
    return stc_brute(*graph_, lambda.as_composition(), opts_.count);
  }

  Family family_;
  ExpansionOptions opts_;
  std::unique_ptr<Graph> graph_;
  std::map<Partition, Integer> cache_;
};

/// [s_mu] X_G for a built-in family. Lattices with n in {2, 3} go through
/// the s_1^2 Pieri step over H_m^n, everything else through the tabloid sum.
inline Integer family_schur_coefficient(const Family& f, const Partition& mu,
                                        const ExpansionOptions& opts = {}) {
  if (f.kind == Family::Kind::lattice && f.m >= 2 && (f.n == 2 || f.n == 3) &&
      opts.source != StcSource::brute_force) {
    if (mu.weight() != f.m * f.n) throw PreconditionError("partition weight must be mn");
    const Family h{Family::Kind::hgraph, f.m, f.n};
    FamilyStc stc(h, opts);
    Integer total = 0;
    for (const auto& [nu, mult] : s1_squared_predecessors(mu))
      total += mult * schur_coefficient_from(nu, stc);
    return total;
  }
  FamilyStc stc(f, opts);
  return schur_coefficient_from(mu, stc);
}

// ---------------------------------------------------------------------------
// Reproduction suites

enum class Suite { half, ns_m2, ns_m3, sn_m3 };

inline std::string to_string(Suite s) {
  switch (s) {
    case Suite::half:
      return "half";
    case Suite::ns_m2:
      return "ns-m2";
    case Suite::ns_m3:
      return "ns-m3";
    case Suite::sn_m3:
      return "sn-m3";
  }
  return "?";
}

inline Suite parse_suite(std::string_view s) {
  if (s == "half") return Suite::half;
  if (s == "ns-m2") return Suite::ns_m2;
  if (s == "ns-m3") return Suite::ns_m3;
  if (s == "sn-m3") return Suite::sn_m3;
  throw PreconditionError("unknown suite '" + std::string(s) + "'");
}

/// Smallest m each suite's statements cover.
inline int suite_min_m(Suite s) {
  switch (s) {
    case Suite::half:
      return 6;
    case Suite::ns_m2:
    case Suite::ns_m3:
    case Suite::sn_m3:
      return 8;
  }
  return 0;
}

struct SuiteCheck {
  std::string name;
  Integer expected;
  Integer actual;
  bool ok() const { return expected == actual; }
};

struct SuiteRow {
  int m = 0;
  std::vector<SuiteCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

struct SuiteReport {
  Suite suite = Suite::half;
  std::vector<SuiteRow> rows;
  bool ok() const {
    for (const auto& r : rows)
      if (!r.ok()) return false;
    return true;
  }
};

struct SuiteOptions {
  int brute_max_m = 8;  ///< largest m also checked through brute-force stc
  CountOptions count;
};

/// Polynomials from the statements, evaluated exactly.
namespace formulas {
inline Integer half_negative(Integer m) { return exact_div(-m * (m - 1) * (m - 5), 3); }
inline Integer lattice2_negative(Integer m) { return exact_div(-m * (m - 2) * (m - 7), 3); }
inline Integer lattice3_negative(Integer m) {
  return exact_div(-4 * m * m * m + 48 * m * m - 176 * m + 288, 3);
}
/// stc(H_m; m(m-2)(m-4)4)
inline Integer sn_lambda(Integer m) {
  return exact_div(3 * m * m * m * m - 25 * m * m * m + 108 * m * m - 194 * m + 432, 3);
}
/// stc(H_m; m(m-3)^2 4)
inline Integer sn_mu(Integer m) {
  return exact_div(3 * m * m * m * m - 26 * m * m * m + 156 * m * m - 379 * m + 720, 3);
}
}  // namespace formulas

namespace detail {

inline Partition P(std::vector<int> v) { return Partition(std::move(v)); }

inline void add_check(SuiteRow& row, std::string name, const Integer& expected, const Integer& actual) {
  row.checks.push_back({std::move(name), expected, actual});
}

inline SuiteRow half_row(int m, const SuiteOptions& o) {
  SuiteRow row{m, {}};
  struct Target {
    std::string name;
    std::vector<int> shape;
    Integer expected;
  };
  std::vector<Target> targets = {
      {"(m-2)^2 4", {m - 2, m - 2, 4}, formulas::half_negative(m)},
      {"(m-1)(m-2)3", {m - 1, m - 2, 3}, 0},
      {"(m-1)(m-3)4", {m - 1, m - 3, 4}, 0},
      {"(m-1)^2 2", {m - 1, m - 1, 2}, 2 * m - 2},
  };
  const Family f{Family::Kind::half, m, 0};
  FamilyStc closed(f, {o.count, StcSource::closed_form});
  std::unique_ptr<Graph> g;
  for (const auto& t : targets) {
    if (!std::is_sorted(t.shape.rbegin(), t.shape.rend())) continue;  // not a partition at this m
    const Partition mu(t.shape);
    add_check(row, "[s_" + t.name + "] closed forms", t.expected, schur_coefficient_from(mu, closed));
    if (m <= o.brute_max_m) {
      if (!g) g = std::make_unique<Graph>(half_graph(m));
      add_check(row, "[s_" + t.name + "] brute force", t.expected,
                schur_coefficient(*g, mu, {o.count, StcSource::brute_force}));
    }
  }
  return row;
}

inline SuiteRow ns_m2_row(int m, const SuiteOptions& o) {
  SuiteRow row{m, {}};
  const Partition lambda = P({m - 2, m - 2, 4});
  const Integer expected = formulas::lattice2_negative(m);

  // The predecessors under s_1^2 and their multiplicities.
  const std::map<Partition, int, CanonicalOrder> nus = {
      {P({m - 3, m - 3, 4}), 1}, {P({m - 2, m - 3, 3}), 2}, {P({m - 2, m - 4, 4}), 1}, {P({m - 2, m - 2, 2}), 1}};
  const auto preds = s1_squared_predecessors(lambda);
  add_check(row, "s_1^2 predecessors are nu_1..nu_4 (nu_2 twice)", 1, chi(preds == nus));

  // [s_nu] X_{G_{m-1}} from closed forms, assembled through Pieri.
  FamilyStc half(Family{Family::Kind::half, m - 1, 0}, {o.count, StcSource::closed_form});
  const Integer nu1 = schur_coefficient_from(P({m - 3, m - 3, 4}), half);
  const Integer nu2 = schur_coefficient_from(P({m - 2, m - 3, 3}), half);
  const Integer nu3 = schur_coefficient_from(P({m - 2, m - 4, 4}), half);
  const Integer nu4 = schur_coefficient_from(P({m - 2, m - 2, 2}), half);
  add_check(row, "[s_nu1] X_{G_{m-1}}", formulas::half_negative(m - 1), nu1);
  add_check(row, "[s_nu2] X_{G_{m-1}}", 0, nu2);
  add_check(row, "[s_nu3] X_{G_{m-1}}", 0, nu3);
  add_check(row, "[s_nu4] X_{G_{m-1}}", 2 * (m - 1) - 2, nu4);
  add_check(row, "[s_(m-2)^2 4] via Pieri", expected, nu1 + 2 * nu2 + nu3 + nu4);

  const Family lattice{Family::Kind::lattice, m, 2};
  add_check(row, "[s_(m-2)^2 4] via isolated-vertex stc", expected,
            schur_coefficient_from(lambda, FamilyStc(lattice, {o.count, StcSource::closed_form})));
  if (m <= o.brute_max_m)
    add_check(row, "[s_(m-2)^2 4] brute force on inc(m x 2)", expected,
              schur_coefficient(product_chain_inc(m, 2), lambda, {o.count, StcSource::brute_force}));
  return row;
}

/// The six tabloids of m(m-3)^2 4 whose types fit in H_m, as (type, sign).
inline std::map<Partition, int> lattice3_kappa(int m) {
  return {{P({m, m - 1, m - 3, 2}), -1}, {P({m, m - 1, m - 4, 3}), 1}, {P({m, m - 2, m - 2, 2}), 1},
          {P({m, m - 2, m - 3, 3}), -1}, {P({m, m - 2, m - 4, 4}), -1}, {P({m, m - 3, m - 3, 4}), 1}};
}

inline SuiteRow ns_m3_row(int m, const SuiteOptions& o) {
  SuiteRow row{m, {}};
  const Partition lambda = P({m + 2, m - 3, m - 3, 4});
  const Partition mu = P({m, m - 3, m - 3, 4});
  const Integer expected = formulas::lattice3_negative(m);

  // Every predecessor other than mu only has tabloid types with a part
  // above alpha(H_m) = m.
  const auto preds = s1_squared_predecessors(lambda);
  add_check(row, "mu is an s_1^2 predecessor once", 1, preds.count(mu) ? preds.at(mu) : 0);
  int stray = 0;
  for (const auto& [nu, mult] : preds) {
    if (nu == mu) continue;
    for (const auto& t : enumerate_tabloids(nu))
      if (t.type.largest() <= m) ++stray;
  }
  add_check(row, "other predecessors have no tabloid type within alpha", 0, stray);

  std::map<Partition, int> fitting;
  for (const auto& t : enumerate_tabloids(mu))
    if (t.type.largest() <= m) fitting[t.type] += t.sign;
  add_check(row, "tabloids of mu within alpha match kappa_1..kappa_6", 1, chi(fitting == lattice3_kappa(m)));

  const Family h{Family::Kind::hgraph, m, 3};
  FamilyStc closed(h, {o.count, StcSource::closed_form});
  const Integer M = m;
  const std::vector<std::pair<Partition, Integer>> kappas = {
      {P({m, m - 1, m - 3, 2}), 9 * M * M - 19 * M + 54},
      {P({m, m - 1, m - 4, 3}), 3 * M * M * M - 18 * M * M + 41 * M + 18},
      {P({m, m - 2, m - 2, 2}), 12 * M * M - 8 * M + 54},
      {P({m, m - 2, m - 3, 3}), 4 * M * M * M - 15 * M * M + 49 * M + 18},
      {P({m, m - 2, m - 4, 4}), formulas::sn_lambda(M)},
      {P({m, m - 3, m - 3, 4}), formulas::sn_mu(M)},
  };
  Integer assembled = 0;
  int k = 1;
  for (const auto& [type, poly] : kappas) {
    const Integer v = closed(type);
    add_check(row, "stc(H_m; kappa_" + std::to_string(k) + ") closed form", poly, v);
    assembled += lattice3_kappa(m).at(type) * v;
    if (m <= o.brute_max_m)
      add_check(row, "stc(H_m; kappa_" + std::to_string(k) + ") brute force", poly,
                stc_brute(h_graph(m, 3), type.as_composition(), o.count));
    ++k;
  }
  add_check(row, "[s_mu^-] X_{H_m} signed kappa assembly", expected, assembled);
  add_check(row, "[s_mu^-] X_{H_m} tabloid sum", expected, schur_coefficient_from(mu, closed));
  add_check(row, "[s_mu] X_inc via Pieri", expected,
            family_schur_coefficient(Family{Family::Kind::lattice, m, 3}, lambda,
                                     {o.count, StcSource::automatic}));
  return row;
}

inline SuiteRow sn_m3_row(int m, const SuiteOptions& o) {
  SuiteRow row{m, {}};
  const Partition lam_minus = P({m, m - 2, m - 4, 4});
  const Partition mu_minus = P({m, m - 3, m - 3, 4});
  const Partition lam = P({m + 2, m - 2, m - 4, 4});
  const Partition mu = P({m + 2, m - 3, m - 3, 4});
  const Integer a = stc_h3_closed(m, lam_minus.as_composition());
  const Integer b = stc_h3_closed(m, mu_minus.as_composition());
  add_check(row, "stc(H_m; lambda^-) quartic", formulas::sn_lambda(m), a);
  add_check(row, "stc(H_m; mu^-) quartic", formulas::sn_mu(m), b);
  add_check(row, "isolated-vertex shift lambda -> lambda^-", 1, chi(isolated_vertex_shift(lam, m) == lam_minus));
  add_check(row, "isolated-vertex shift mu -> mu^-", 1, chi(isolated_vertex_shift(mu, m) == mu_minus));
  const Family lattice{Family::Kind::lattice, m, 3};
  add_check(row, "stc(inc; lambda) = stc(H_m; lambda^-)", a, *closed_form_stc(lattice, lam));
  add_check(row, "stc(inc; mu) = stc(H_m; mu^-)", b, *closed_form_stc(lattice, mu));
  add_check(row, "lambda strictly dominates mu", 1, chi(strictly_dominates(lam, mu)));
  add_check(row, "strongly-nice violation iff m >= 44", chi(m >= 44),
            chi(violates(NicenessMode::strongly_nice, lam_minus, mu_minus, a, b)));
  if (m <= o.brute_max_m) {
    const Graph h = h_graph(m, 3);
    add_check(row, "stc(H_m; lambda^-) brute force", a, stc_brute(h, lam_minus.as_composition(), o.count));
    add_check(row, "stc(H_m; mu^-) brute force", b, stc_brute(h, mu_minus.as_composition(), o.count));
  }
  return row;
}

}  // namespace detail

/// Runs one suite for every m in [m_lo, m_hi]; never throws on a mismatch.
inline SuiteReport run_suite(Suite s, int m_lo, int m_hi, const SuiteOptions& o = {}) {
  if (m_lo < suite_min_m(s) || m_hi < m_lo)
    throw PreconditionError("suite " + to_string(s) + " needs " + std::to_string(suite_min_m(s)) +
                            " <= m_lo <= m_hi");
  SuiteReport r{s, {}};
  for (int m = m_lo; m <= m_hi; ++m) {
    switch (s) {
      case Suite::half:
        r.rows.push_back(detail::half_row(m, o));
        break;
      case Suite::ns_m2:
        r.rows.push_back(detail::ns_m2_row(m, o));
        break;
      case Suite::ns_m3:
        r.rows.push_back(detail::ns_m3_row(m, o));
        break;
      case Suite::sn_m3:
        r.rows.push_back(detail::sn_m3_row(m, o));
        break;
    }
  }
  return r;
}

/// As run_suite, but any mismatch is a VerificationFailure naming the suite,
/// m and the failing check.
inline SuiteReport reproduce_theorems(Suite s, int m_lo, int m_hi, const SuiteOptions& o = {}) {
  auto r = run_suite(s, m_lo, m_hi, o);
  for (const auto& row : r.rows)
    for (const auto& c : row.checks)
      if (!c.ok())
        throw VerificationFailure(to_string(s) + " at m = " + std::to_string(row.m) + ": " + c.name +
                                  " expected " + c.expected.str() + ", got " + c.actual.str());
  return r;
}

}  // namespace csf
