#pragma once

// Expansions of the chromatic symmetric function X_G.
//
//   [m_lambda] X_G = stc(G; lambda)
//   [s_mu] X_G     = sum over special ribbon tabloids T of shape mu of
//                    sgn(T) * stc(G; type(T))
//
// The Schur oracle recovers the Schur side from the monomial side through
// Kostka numbers only, without touching tabloids.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csf/closed_forms.hpp"
#include "csf/counting.hpp"
#include "csf/graphs.hpp"
#include "csf/partitions.hpp"
#include "csf/tabloids.hpp"

namespace csf {

enum class Basis { schur, monomial, powersum };

inline std::string to_string(Basis b) {
  switch (b) {
    case Basis::schur:
      return "schur";
    case Basis::monomial:
      return "monomial";
    case Basis::powersum:
      return "powersum";
  }
  return "?";
}

/// Finite map partition -> coefficient in one basis; zeros are never stored
/// and keys iterate in canonical order.
struct SymFuncExpansion {
  Basis basis = Basis::schur;
  int degree = 0;
  std::map<Partition, Integer, CanonicalOrder> coeffs;

  Integer coeff(const Partition& p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
  void add(const Partition& p, const Integer& c) {
    if (p.weight() != degree)
      throw PreconditionError("expansion of degree " + std::to_string(degree) +
                              " cannot hold " + to_string(p));
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace(p, c);
    if (!inserted && (it->second += c) == 0) coeffs.erase(it);
  }
  friend bool operator==(const SymFuncExpansion&, const SymFuncExpansion&) = default;
};

inline SymFuncExpansion operator+(SymFuncExpansion a, const SymFuncExpansion& b) {
  if (a.basis != b.basis || a.degree != b.degree)
    throw PreconditionError("adding expansions of different basis or degree");
  for (const auto& [p, c] : b.coeffs) a.add(p, c);
  return a;
}

// ---------------------------------------------------------------------------
// stc resolution

enum class StcSource { automatic, closed_form, brute_force };

struct ExpansionOptions {
  CountOptions count;
  StcSource source = StcSource::automatic;
};

/// Adds `extra` isolated vertices: each may join any block.
///   stc(G + p; tau) = sum_i stc(G; tau - e_i)
/// Empty blocks are dropped (an empty block is stable in exactly one way).
inline std::optional<Integer> stc_with_isolated(
    const Partition& lambda, int extra,
    const std::function<std::optional<Integer>(const Partition&)>& base) {
  if (extra == 0) return base(lambda);
  std::optional<Integer> total = Integer(0);
  const auto& p = lambda.vec();
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::vector<int> q = p;
    if (--q[i] == 0) q.erase(q.begin() + static_cast<std::ptrdiff_t>(i));
    std::sort(q.begin(), q.end(), std::greater<>());
    auto v = stc_with_isolated(Partition(std::move(q)), extra - 1, base);
    if (!v) return std::nullopt;
    *total += *v;
  }
  return total;
}

/// inc(m x 3) has alpha(H_m) = m, so a block of size m + 2 must contain both
/// isolated vertices: stc(inc(m x 3); lambda) = stc(H_m; lambda^-) where
/// lambda^- replaces the part m + 2 by m.
inline Partition isolated_vertex_shift(const Partition& lambda, int m) {
  if (lambda.largest() != m + 2)
    throw PreconditionError("isolated_vertex_shift: largest part must be m + 2");
  std::vector<int> q = lambda.vec();
  q[0] = m;
  std::sort(q.begin(), q.end(), std::greater<>());
  return Partition(std::move(q));
}

/// stc for a built-in family from closed forms alone, or nullopt when no
/// formula applies. Types with a part larger than the independence number
/// count zero.
inline std::optional<Integer> closed_form_stc(const Family& f, const Partition& lambda) {
  auto half = [](int m, const Partition& l) -> std::optional<Integer> {
    if (l.largest() > m) return Integer(0);
    // the only stable m-sets with stable complement are the two sides
    if (l.length() == 2 && m >= 1) return Integer(2);
    if (l.length() == 3 && m >= 1) return stc_half_closed(m, l[0], l[1], l[2]);
    return std::nullopt;
  };
  auto h3 = [](int m, const Partition& l) -> std::optional<Integer> {
    if (l.largest() > m) return Integer(0);
    try {
      return stc_h3_closed(m, l.as_composition());
    } catch (const NoClosedForm&) {
      return std::nullopt;
    }
  };
  if (f.kind != Family::Kind::none && lambda.weight() != family_order(f))
    throw PreconditionError("type " + to_string(lambda) + " does not match the order of " + to_string(f));
  switch (f.kind) {
    case Family::Kind::half:
      return half(f.m, lambda);
    case Family::Kind::hgraph:
      if (f.n == 2 && f.m >= 2) return half(f.m - 1, lambda);
      if (f.n == 3) return h3(f.m, lambda);
      return std::nullopt;
    case Family::Kind::lattice:
      if (f.m >= 2 && (f.n == 2 || f.n == 3))
        return stc_with_isolated(lambda, 2, [&](const Partition& l) {
          return closed_form_stc({Family::Kind::hgraph, f.m, f.n}, l);
        });
      return std::nullopt;
    case Family::Kind::none:
      break;
  }
  return std::nullopt;
}

/// Memoized stc values for one graph.
class StcTable {
 public:
  StcTable(const Graph& g, ExpansionOptions opts = {}) : g_(g), opts_(opts) {}

  const Integer& operator()(const Partition& lambda) {
    if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
    return cache_.emplace(lambda, compute(lambda)).first->second;
  }

 private:
  Integer compute(const Partition& lambda) {
    if (opts_.source != StcSource::brute_force) {
      if (lambda.weight() != g_.order())
        throw PreconditionError("type " + to_string(lambda) + " does not match graph order");
      if (auto v = closed_form_stc(g_.family(), lambda)) return *v;
      if (opts_.source == StcSource::closed_form)
        throw NoClosedForm("no closed form for stc(" + to_string(g_.family()) + "; " +
                           to_string(lambda) + ")");
    }
    return stc_brute(g_, lambda.as_composition(), opts_.count);
  }

  const Graph& g_;
  ExpansionOptions opts_;
  std::map<Partition, Integer> cache_;
};

// ---------------------------------------------------------------------------
// Schur coefficients

/// Signed tabloid sum for [s_mu] with stc values supplied by the caller.
template <class Stc>
Integer schur_coefficient_from(const Partition& mu, Stc&& stc) {
  Integer total = 0;
  for (const auto& t : enumerate_tabloids(mu)) {
    const Integer& v = stc(t.type);
    if (t.sign > 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

inline Integer schur_coefficient(const Graph& g, const Partition& mu, const ExpansionOptions& opts = {}) {
  if (mu.weight() != g.order())
    throw PreconditionError("schur_coefficient: " + to_string(mu) + " does not match graph order " +
                            std::to_string(g.order()));
  StcTable table(g, opts);
  return schur_coefficient_from(mu, table);
}

inline SymFuncExpansion monomial_expansion(const Graph& g, const ExpansionOptions& opts = {}) {
  SymFuncExpansion e{Basis::monomial, g.order(), {}};
  StcTable table(g, opts);
  for (const auto& lambda : partitions_of(g.order())) e.add(lambda, table(lambda));
  return e;
}

inline SymFuncExpansion schur_expansion(const Graph& g, const ExpansionOptions& opts = {}) {
  SymFuncExpansion e{Basis::schur, g.order(), {}};
  StcTable table(g, opts);
  for (const auto& mu : partitions_of(g.order())) e.add(mu, schur_coefficient_from(mu, table));
  return e;
}

// ---------------------------------------------------------------------------
// Strips, Kostka numbers, Pieri rules

/// visit(nu) for every partition nu with lambda / nu a strip of size k.
template <class Visit>
void for_each_strip_removal(const Partition& lambda, int k, StripOrientation o, Visit&& visit) {
  const auto& l = lambda.vec();
  const int len = lambda.length();
  std::vector<int> nu(l);
  auto emit = [&] {
    std::vector<int> q(nu);
    while (!q.empty() && q.back() == 0) q.pop_back();
    visit(Partition(std::move(q)));
  };
  if (o == StripOrientation::horizontal) {
    // nu_i in [lambda_{i+1}, lambda_i]
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == len) {
        if (left == 0) emit();
        return;
      }
      const int lo = i + 1 < len ? l[static_cast<std::size_t>(i + 1)] : 0;
      const int hi = l[static_cast<std::size_t>(i)];
      for (int take = 0; take <= std::min(left, hi - lo); ++take) {
        nu[static_cast<std::size_t>(i)] = hi - take;
        self(self, i + 1, left - take);
      }
      nu[static_cast<std::size_t>(i)] = hi;
    };
    rec(rec, 0, k);
    return;
  }
  // vertical: remove at most one cell per row, top row first
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i < 0) {
      if (left == 0) emit();
      return;
    }
    if (left > i + 1) return;
    for (int take = 0; take <= std::min(left, 1); ++take) {
      const int v = l[static_cast<std::size_t>(i)] - take;
      if (i + 1 < len && v < nu[static_cast<std::size_t>(i + 1)]) continue;
      nu[static_cast<std::size_t>(i)] = v;
      self(self, i - 1, left - take);
    }
    nu[static_cast<std::size_t>(i)] = l[static_cast<std::size_t>(i)];
  };
  rec(rec, len - 1, k);
}

/// visit(lambda) for every partition lambda with lambda / mu a strip of size k.
template <class Visit>
void for_each_strip_addition(const Partition& mu, int k, StripOrientation o, Visit&& visit) {
  const auto& m = mu.vec();
  const int len = mu.length();
  if (o == StripOrientation::horizontal) {
    std::vector<int> lam(m);
    lam.push_back(0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == len + 1) {
        if (left != 0) return;
        std::vector<int> q(lam);
        while (!q.empty() && q.back() == 0) q.pop_back();
        visit(Partition(std::move(q)));
        return;
      }
      const int base = i < len ? m[static_cast<std::size_t>(i)] : 0;
      const int cap = i == 0 ? base + left : m[static_cast<std::size_t>(i - 1)];
      for (int v = base; v <= cap && v - base <= left; ++v) {
        lam[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, left - (v - base));
      }
      lam[static_cast<std::size_t>(i)] = base;
    };
    rec(rec, 0, k);
    return;
  }
  const int rows = len + k;
  std::vector<int> lam(static_cast<std::size_t>(rows), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == rows) {
      if (left != 0) return;
      std::vector<int> q(lam);
      while (!q.empty() && q.back() == 0) q.pop_back();
      visit(Partition(std::move(q)));
      return;
    }
    const int base = i < len ? m[static_cast<std::size_t>(i)] : 0;
    for (int add = 0; add <= std::min(left, 1); ++add) {
      const int v = base + add;
      if (i > 0 && v > lam[static_cast<std::size_t>(i - 1)]) continue;
      lam[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - add);
    }
  };
  rec(rec, 0, k);
}

/// Number of semistandard tableaux of the given shape and content: the
/// cells holding each value form a horizontal strip, so the filling is
/// peeled one value at a time from the largest.
inline Integer kostka(const Partition& shape, const Partition& content) {
  if (shape.weight() != content.weight())
    throw PreconditionError("kostka: shape and content weights differ");
  std::map<std::pair<Partition, int>, Integer> memo;
  auto rec = [&](auto&& self, const Partition& sh, int upto) -> Integer {
    if (upto == 0) return sh.empty() ? 1 : 0;
    if (sh.length() > upto) return 0;  // a column would need repeated values
    auto key = std::make_pair(sh, upto);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for_each_strip_removal(sh, content[static_cast<std::size_t>(upto - 1)],
                           StripOrientation::horizontal,
                           [&](const Partition& nu) { total += self(self, nu, upto - 1); });
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, shape, content.length());
}

/// Schur expansion recovered from the monomial expansion by back
/// substitution: [m_mu] = sum_{lambda >= mu} K_{lambda mu} [s_lambda], solved
/// in canonical order (a linear extension of dominance).
inline SymFuncExpansion schur_from_monomial(const SymFuncExpansion& mono) {
  if (mono.basis != Basis::monomial) throw PreconditionError("schur_from_monomial: need monomial basis");
  SymFuncExpansion s{Basis::schur, mono.degree, {}};
  for (const auto& mu : partitions_of(mono.degree)) {
    Integer c = mono.coeff(mu);
    for (const auto& [lambda, sc] : s.coeffs)
      if (dominates(lambda, mu)) c -= sc * kostka(lambda, mu);
    s.add(mu, c);
  }
  return s;
}

inline SymFuncExpansion schur_oracle(const Graph& g, const ExpansionOptions& opts = {}) {
  return schur_from_monomial(monomial_expansion(g, opts));
}

enum class PieriKind { row, column };

/// s_mu * s_k (row) or s_mu * s_{1^k} (column), extended linearly.
inline SymFuncExpansion pieri_multiply(const SymFuncExpansion& e, int k, PieriKind kind) {
  if (e.basis != Basis::schur) throw PreconditionError("pieri_multiply: need Schur basis");
  if (k < 1) throw PreconditionError("pieri_multiply: k must be positive");
  SymFuncExpansion out{Basis::schur, e.degree + k, {}};
  const auto o = kind == PieriKind::row ? StripOrientation::horizontal : StripOrientation::vertical;
  for (const auto& [mu, c] : e.coeffs)
    for_each_strip_addition(mu, k, o, [&](const Partition& lambda) { out.add(lambda, c); });
  return out;
}

/// Multiplication by s_1^2 = s_2 + s_11.
inline SymFuncExpansion multiply_s1_squared(const SymFuncExpansion& e) {
  return pieri_multiply(e, 2, PieriKind::row) + pieri_multiply(e, 2, PieriKind::column);
}

/// The partitions nu with [s_lambda] s_nu s_1^2 != 0, with that coefficient
/// (2 when lambda / nu is both a horizontal and a vertical strip).
inline std::map<Partition, int, CanonicalOrder> s1_squared_predecessors(const Partition& lambda) {
  std::map<Partition, int, CanonicalOrder> out;
  for (auto o : {StripOrientation::horizontal, StripOrientation::vertical})
    for_each_strip_removal(lambda, 2, o, [&](const Partition& nu) { ++out[nu]; });
  return out;
}

// ---------------------------------------------------------------------------
// Specialization at x_1 = .. = x_k = 1

/// Number of proper colorings with k colors, by direct backtracking.
inline Integer coloring_eval(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("coloring_eval: k must be positive");
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  Integer total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.order()) {
      ++total;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : members(g.neighbors(v) & all_vertices(v)))
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
    }
    color[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0);
  return total;
}

/// m_lambda(1^k): k! / (k - l)! over the product of multiplicity factorials.
inline Integer monomial_at_ones(const Partition& lambda, int k) {
  if (lambda.length() > k) return 0;
  Integer num = 1;
  for (int i = 0; i < lambda.length(); ++i) num *= k - i;
  Integer den = 1;
  for (int m : lambda.multiplicities()) den *= factorial(m);
  return exact_div(num, den);
}

/// s_lambda(1^k) by the hook-content formula.
inline Integer schur_at_ones(const Partition& lambda, int k) {
  Integer num = 1, den = 1;
  std::vector<int> col_len(static_cast<std::size_t>(lambda.largest()), 0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) ++col_len[static_cast<std::size_t>(c)];
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) {
      num *= k + c - r;
      den *= (lambda[static_cast<std::size_t>(r)] - c - 1) + (col_len[static_cast<std::size_t>(c)] - r - 1) + 1;
    }
  if (num == 0) return 0;
  return exact_div(num, den);
}

inline Integer evaluate_at_ones(const SymFuncExpansion& e, int k) {
  Integer total = 0;
  for (const auto& [p, c] : e.coeffs) {
    switch (e.basis) {
      case Basis::schur:
        total += c * schur_at_ones(p, k);
        break;
      case Basis::monomial:
        total += c * monomial_at_ones(p, k);
        break;
      case Basis::powersum:
        total += c * boost::multiprecision::pow(Integer(k), static_cast<unsigned>(p.length()));
        break;
    }
  }
  return total;
}

}  // namespace csf
