#pragma once

// Exhaustive counts of stable compositions.
//
// stc(G; tau) counts ordered tuples (B_1, .., B_l) of pairwise disjoint
// stable sets covering V(G) with |B_i| = tau_i. The kernel counts the
// unordered set partitions into stable blocks with the right multiset of
// sizes, branching on the block that holds the lowest remaining vertex and
// memoizing on (remaining vertices, remaining sizes). The orderings are
// multiplied back in only at the end, so the pinned variant reuses it.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "csf/graphs.hpp"
#include "csf/partitions.hpp"

namespace csf {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;  ///< recursion-node cap
};

/// Restricts compositions to those with u in block i and v in block j
/// (1-based block indices).
struct PinnedSpec {
  int u = 0;
  int i = 1;
  int v = 0;
  int j = 1;
};

namespace detail {

using Wide = unsigned __int128;

/// Up to this order the number of set partitions fits in 128 bits.
inline constexpr int kWideMaxOrder = 40;

inline Integer to_integer(Wide w) {
  Integer hi = static_cast<std::uint64_t>(w >> 64);
  return (hi << 64) + static_cast<std::uint64_t>(w);
}
inline Integer to_integer(const Integer& x) { return x; }

template <class C>
class PartitionCounter {
 public:
  PartitionCounter(const Graph& g, const Partition& sizes, std::uint64_t budget)
      : g_(g), budget_(budget) {
    auto mult = sizes.multiplicities();
    for (int s = static_cast<int>(mult.size()) - 1; s >= 1; --s) {
      if (mult[static_cast<std::size_t>(s)] == 0) continue;
      sizes_.push_back(s);
      mult_.push_back(mult[static_cast<std::size_t>(s)]);
    }
    std::uint64_t r = 1;
    for (int m : mult_) {
      radix_.push_back(r);
      r *= static_cast<std::uint64_t>(m + 1);
    }
  }

  /// Code of a sub-multiset given as one multiplicity per distinct size.
  std::uint64_t code_of(const std::vector<int>& rem) const {
    std::uint64_t c = 0;
    for (std::size_t s = 0; s < rem.size(); ++s) c += static_cast<std::uint64_t>(rem[s]) * radix_[s];
    return c;
  }
  std::uint64_t full_code() const { return code_of(mult_); }
  bool has_size(std::uint64_t code, int size) const {
    for (std::size_t s = 0; s < sizes_.size(); ++s)
      if (sizes_[s] == size) return remaining(code, s) > 0;
    return false;
  }
  std::uint64_t remove_size(std::uint64_t code, int size) const {
    if (!has_size(code, size)) throw std::logic_error("size not in multiset");
    for (std::size_t s = 0; s < sizes_.size(); ++s)
      if (sizes_[s] == size) return code - radix_[s];
    return code;
  }
  /// Product of factorials of the multiplicities in code.
  Integer orderings(std::uint64_t code) const {
    Integer r = 1;
    for (std::size_t s = 0; s < sizes_.size(); ++s) r *= factorial(remaining(code, s));
    return r;
  }
  const std::vector<int>& distinct_sizes() const { return sizes_; }

  /// Number of set partitions of `rest` into stable blocks whose sizes form
  /// the multiset `code`.
  C count(VertexSet rest, std::uint64_t code) {
    if (rest == 0) return code == 0 ? C(1) : C(0);
    tick();
    Key key{rest, code};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int v = lowest(rest);
    const VertexSet cand = rest & g_.non_neighbors(v);
    C total = 0;
    for (std::size_t s = 0; s < sizes_.size(); ++s) {
      if (remaining(code, s) == 0) continue;
      const std::uint64_t next = code - radix_[s];
      enumerate(cand, sizes_[s] - 1, bit(v),
                [&](VertexSet block) { total += count(rest & ~block, next); });
    }
    memo_.emplace(key, total);
    return total;
  }

  /// Stable sets of size `need` drawn from `cand`, each reported joined with
  /// `base`. Every search node is charged to the budget.
  template <class Visit>
  void enumerate(VertexSet cand, int need, VertexSet base, Visit&& visit) {
    tick();
    if (need < 0) return;
    if (need == 0) {
      visit(base);
      return;
    }
    while (cand && popcount(cand) >= need) {
      int w = lowest(cand);
      cand &= ~bit(w);
      enumerate(cand & ~g_.neighbors(w), need - 1, base | bit(w), visit);
    }
  }

 private:
  struct Key {
    VertexSet rest;
    std::uint64_t code;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.rest * 0x9E3779B97F4A7C15ULL ^ (k.code + 0x632BE59BD9B4E019ULL);
      h ^= h >> 29;
      return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
    }
  };

  int remaining(std::uint64_t code, std::size_t s) const {
    return static_cast<int>((code / radix_[s]) % static_cast<std::uint64_t>(mult_[s] + 1));
  }
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::vector<int> sizes_;  // distinct sizes, descending
  std::vector<int> mult_;
  std::vector<std::uint64_t> radix_;
  std::unordered_map<Key, C, KeyHash> memo_;
  std::uint64_t nodes_ = 0;
};

/// Search order for the kernel. Grid-labelled graphs are swept along
/// i - j, which keeps the memo small on the lattice families.
inline std::vector<int> search_order(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& grid = g.grid();
  if (grid.size() != perm.size()) return perm;
  std::vector<int> idx = perm;
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    auto [ia, ja] = grid[static_cast<std::size_t>(a)];
    auto [ib, jb] = grid[static_cast<std::size_t>(b)];
    return std::pair(ia - ja, ja) < std::pair(ib - jb, jb);
  });
  for (int p = 0; p < g.order(); ++p) perm[static_cast<std::size_t>(idx[static_cast<std::size_t>(p)])] = p;
  return perm;
}

/// Runs f(counter, relabelled graph, perm) with the count type picked from
/// the graph order.
template <class F>
auto with_counter(const Graph& g, const Partition& sizes, std::uint64_t budget, F&& f) {
  const auto perm = search_order(g);
  const Graph h = g.relabeled(perm);
  if (h.order() <= kWideMaxOrder) {
    PartitionCounter<Wide> c(h, sizes, budget);
    return f(c, h, perm);
  }
  PartitionCounter<Integer> c(h, sizes, budget);
  return f(c, h, perm);
}

inline void check_weight(const Graph& g, const Composition& t) {
  if (t.weight() != g.order())
    throw PreconditionError("type " + to_string(t) + " has weight " + std::to_string(t.weight()) +
                            " but the graph has order " + std::to_string(g.order()));
}

/// Sum over stable blocks U of size a holding u and V of size b holding v
/// (u, v adjacent or a != b handled alike) of the partitions of the rest.
template <class C>
C pinned_sum(PartitionCounter<C>& c, const Graph& h, int u, int a, int v, int b, std::uint64_t rest_code) {
  const VertexSet all = h.vertices();
  C total = 0;
  c.enumerate(all & h.non_neighbors(u) & ~bit(v), a - 1, bit(u), [&](VertexSet ublock) {
    const VertexSet left = all & ~ublock;
    c.enumerate(left & h.non_neighbors(v), b - 1, bit(v),
                [&](VertexSet vblock) { total += c.count(left & ~vblock, rest_code); });
  });
  return total;
}

}  // namespace detail

/// stc(g; t) by exhaustive search.
inline Integer stc_brute(const Graph& g, const Composition& t, const CountOptions& opts = {}) {
  detail::check_weight(g, t);
  const auto sizes = underlying_partition(t);
  if (sizes.largest() > independence_number(g)) return 0;
  return detail::with_counter(g, sizes, opts.budget, [&](auto& c, const Graph& h, const auto&) {
    const auto code = c.full_code();
    return detail::to_integer(c.count(h.vertices(), code)) * c.orderings(code);
  });
}

/// Stable compositions of type t with pin.u in block pin.i and pin.v in
/// block pin.j.
inline Integer stc_pinned_brute(const Graph& g, const Composition& t, const PinnedSpec& pin,
                                const CountOptions& opts = {}) {
  detail::check_weight(g, t);
  if (pin.u == pin.v) throw PreconditionError("pinned vertices must differ");
  if (pin.u < 0 || pin.v < 0 || pin.u >= g.order() || pin.v >= g.order())
    throw PreconditionError("pinned vertex out of range");
  if (pin.i < 1 || pin.j < 1 || pin.i > t.length() || pin.j > t.length())
    throw PreconditionError("pinned block index out of range");
  if (underlying_partition(t).largest() > independence_number(g)) return 0;

  const int su = t[static_cast<std::size_t>(pin.i - 1)];
  const int sv = t[static_cast<std::size_t>(pin.j - 1)];
  return detail::with_counter(g, underlying_partition(t), opts.budget, [&](auto& c, const Graph& h, const auto& perm) {
    const int u = perm[static_cast<std::size_t>(pin.u)], v = perm[static_cast<std::size_t>(pin.v)];
    const VertexSet all = h.vertices();
    if (pin.i == pin.j) {
      if (h.adjacent(u, v)) return Integer(0);
      const auto rest_code = c.remove_size(c.full_code(), su);
      decltype(c.count(0, 0)) total = 0;
      c.enumerate(all & h.non_neighbors(u) & h.non_neighbors(v), su - 2, bit(u) | bit(v),
                  [&](VertexSet block) { total += c.count(all & ~block, rest_code); });
      return detail::to_integer(total) * c.orderings(rest_code);
    }
    const auto rest_code = c.remove_size(c.remove_size(c.full_code(), su), sv);
    return detail::to_integer(detail::pinned_sum(c, h, u, su, v, sv, rest_code)) * c.orderings(rest_code);
  });
}

/// Pinned counts for every way of giving u and v blocks of two different
/// positions of a partition lambda, keyed by the two block sizes (a, b):
/// the number of compositions of any type that lists a first, b second and
/// the rest of lambda after, with u in the first block and v in the second.
/// One memo serves every signature. `total` receives stc(g; lambda).
struct PinnedSignatures {
  std::map<std::pair<int, int>, Integer> by_sizes;
  Integer total;
};

inline PinnedSignatures pinned_signatures(const Graph& g, const Partition& lambda, int u, int v,
                                          const CountOptions& opts = {}) {
  if (lambda.weight() != g.order())
    throw PreconditionError("partition " + to_string(lambda) + " does not match the graph order");
  if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw PreconditionError("pinned vertices must be two distinct vertices");
  PinnedSignatures out;
  const auto& parts = lambda.vec();
  std::set<std::pair<int, int>> keys;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j) keys.insert({parts[i], parts[j]});
  if (lambda.largest() > independence_number(g)) {
    for (auto k : keys) out.by_sizes[k] = 0;
    out.total = 0;
    return out;
  }
  detail::with_counter(g, lambda, opts.budget, [&](auto& c, const Graph& h, const auto& perm) {
    const int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
    const auto full = c.full_code();
    out.total = detail::to_integer(c.count(h.vertices(), full)) * c.orderings(full);
    for (auto [a, b] : keys) {
      const auto rest = c.remove_size(c.remove_size(full, a), b);
      out.by_sizes[{a, b}] = detail::to_integer(detail::pinned_sum(c, h, pu, a, pv, b, rest)) * c.orderings(rest);
    }
    return 0;
  });
  return out;
}

}  // namespace csf
