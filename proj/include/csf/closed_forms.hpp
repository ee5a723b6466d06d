#pragma once

// Closed-form stable-composition counts for the half graph G_m and for
// H_m = H_m^3. Arguments outside a formula's proven range are refused with
// PreconditionError / NoClosedForm; nothing is extrapolated.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csf/core.hpp"
#include "csf/graphs.hpp"
#include "csf/partitions.hpp"

namespace csf {

/// stc(G_m; abc) for a partition a >= b >= c >= 1 of 2m with a <= m.
inline Integer stc_half_closed(int m, int a, int b, int c) {
  if (m < 1 || !(a >= b && b >= c && c >= 1) || a + b + c != 2 * m || a > m)
    throw PreconditionError("stc_half_closed: need a >= b >= c >= 1, a + b + c = 2m, a <= m");
  if (a == m) return 2 * (1 + binomial(m, c));
  return 2 * (binomial(m, a) + binomial(m, b) + binomial(m, c));
}

/// The two pinned vertices v_0(n-1) and v_(m-1)0 of H_m^n (x_0 and z_{m-1}
/// when n = 3).
inline std::pair<int, int> lattice_pins(const Graph& h) {
  if (h.family().kind != Family::Kind::hgraph)
    throw PreconditionError("lattice_pins: graph was not built by h_graph");
  const int m = h.family().m, n = h.family().n;
  return {*h.vertex_at(0, n - 1), *h.vertex_at(m - 1, 0)};
}

/// Sum over j = 2..4 of stc_1j(H_m; mbcd).
inline Integer stc_h3_s1j_closed(int m, int b, int c, int d) {
  if (m < 5 || std::min({b, c, d}) < 1 || std::max({b, c, d}) > m - 1 || b + c + d != 2 * m - 2)
    throw PreconditionError(
        "stc_h3_s1j_closed: need m >= 5, 1 <= b,c,d <= m-1, b + c + d = 2m - 2");
  const int s = std::max({b, c, d});
  const int t = std::min({b, c, d});
  if (s == m - 1) return 6 * binomial(m - 1, t) + 4 + 2 * m * chi(t >= 2);
  if (s == m - 2)
    return 4 * (binomial(m, t) + binomial(m - 1, t - 1) + binomial(m - 2, t)) + 3 * m - 2 +
           m * chi(t == 2) + m * m * chi(t >= 3);
  Integer sum = 0;
  for (int k : {b, c, d}) sum += binomial(m, k) + 2 * binomial(m - 1, k) + binomial(m - 2, k);
  return 2 * sum;
}

/// stc_23(H_m; mbcd): x_0 in the size-b block, z_{m-1} in the size-c block.
inline Integer stc_h3_s23_closed(int m, int b, int c, int d) {
  if (m < 5 || std::min({b, c, d}) < 2 || std::max({b, c, d}) > m - 2 || b + c + d != 2 * m - 2)
    throw PreconditionError(
        "stc_h3_s23_closed: need m >= 5, 2 <= b,c,d <= m-2, b + c + d = 2m - 2");
  // The grid involution swaps x_0 and z_{m-1}, so the roles of b and c may be
  // exchanged.
  if (b != m - 2 && c == m - 2) std::swap(b, c);
  if (b == m - 2) {
    if (c == 2) return Integer(3 * m + 7);
    if (c == m - 2) return Integer(2 * m * m - 6 * m + 7);
    return 3 * binomial(m - 1, d) + binomial(m - 3, d) + binomial(c + 2, 2) + c + 3;
  }
  Integer n = 4 + binomial(m - 1, d) + 2 * binomial(m - 2, d) + binomial(m - 3, d);
  for (int k : {b, c}) n += binomial(k + 2, m - d) + binomial(k, m - d - 1);
  return n - chi(d == m - 2);
}

namespace detail {

struct H3Family {
  const char* name;
  // Returns the count if the sorted type belongs to the family at this m.
  std::function<std::optional<Integer>(int m, const std::vector<int>& p)> eval;
};

inline const std::vector<H3Family>& h3_families() {
  using V = std::vector<int>;
  static const std::vector<H3Family> families = {
      {"m^2(m-2)",
       [](int m, const V& p) -> std::optional<Integer> {
         if (m >= 3 && p == V{m, m, m - 2}) return Integer(6);
         return std::nullopt;
       }},
      {"m(m-1)^2",
       [](int m, const V& p) -> std::optional<Integer> {
         if (m >= 3 && p == V{m, m - 1, m - 1}) return Integer(12);
         return std::nullopt;
       }},
      {"m^2cd",
       [](int m, const V& p) -> std::optional<Integer> {
         if (p.size() != 4 || p[0] != m || p[1] != m) return std::nullopt;
         const int c = p[2], d = p[3];
         if (d < 1 || c > m - 3 || c + d != m - 2) return std::nullopt;
         return 6 * binomial(m - 2, c) + 12;
       }},
      {"m(m-1)cd",
       [](int m, const V& p) -> std::optional<Integer> {
         if (m < 4 || p.size() != 4 || p[0] != m || p[1] != m - 1) return std::nullopt;
         const int c = p[2], d = p[3];
         if (d < 1 || c > m - 2 || c + d != m - 1) return std::nullopt;
         return 18 * binomial(m - 1, c) + 34 + (8 * m + 2) * chi(std::min(c, d) >= 2);
       }},
      {"m(m-2)^2 2",
       [](int m, const V& p) -> std::optional<Integer> {
         if (m >= 5 && p == V{m, m - 2, m - 2, 2}) return Integer(12 * m * m - 8 * m + 54);
         return std::nullopt;
       }},
      {"m(m-2)cd",
       [](int m, const V& p) -> std::optional<Integer> {
         if (p.size() != 4 || p[0] != m || p[1] != m - 2) return std::nullopt;
         const int c = p[2], d = p[3];
         if (d < 3 || c > m - 3 || c + d != m) return std::nullopt;
         return 4 * c * c + 4 * d * m + 18 * m + 24 + 14 * binomial(m, d) +
                8 * binomial(m - 1, d - 1) + 8 * binomial(m - 2, d) +
                2 * (binomial(m - 3, c) + binomial(m - 3, d));
       }},
      {"mbcd",
       [](int m, const V& p) -> std::optional<Integer> {
         if (p.size() != 4 || p[0] != m) return std::nullopt;
         const int b = p[1], c = p[2], d = p[3];
         if (d < 3 || b > m - 3 || b + c + d != 2 * m - 2) return std::nullopt;
         Integer r = 24;
         for (int k : {b, c, d})
           r += 4 * binomial(m, k) + 10 * binomial(m - 1, k) + 8 * binomial(m - 2, k) +
                2 * binomial(m - 3, k);
         r += 4 * (binomial(b + 2, m - c) + binomial(c + 2, m - d) + binomial(d + 2, m - b) +
                   binomial(b, m - c - 1) + binomial(c, m - d - 1) + binomial(d, m - b - 1));
         return r;
       }},
  };
  return families;
}

}  // namespace detail

/// Name of the closed-form family covering type t of H_m, if any.
inline std::optional<std::string> h3_family_of(int m, const Composition& t) {
  const auto p = underlying_partition(t).vec();
  for (const auto& f : detail::h3_families())
    if (f.eval(m, p)) return f.name;
  return std::nullopt;
}

/// stc(H_m; t) from the closed form of whichever family covers the sorted
/// type. Throws NoClosedForm when none does.
inline Integer stc_h3_closed(int m, const Composition& t) {
  if (t.weight() != 3 * m - 2)
    throw PreconditionError("stc_h3_closed: type must have weight 3m - 2");
  const auto p = underlying_partition(t).vec();
  std::optional<Integer> value;
  std::string which;
  for (const auto& f : detail::h3_families()) {
    auto v = f.eval(m, p);
    if (!v) continue;
    if (value && *value != *v)
      throw std::logic_error(std::string("closed forms ") + which + " and " + f.name +
                             " disagree on " + to_string(t));
    value = std::move(v);
    which = f.name;
  }
  if (!value)
    throw NoClosedForm("no closed form for stc(H_" + std::to_string(m) + "; " + to_string(t) + ")");
  return *value;
}

}  // namespace csf
