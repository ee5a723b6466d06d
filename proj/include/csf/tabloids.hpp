#pragma once

// Special ribbon tabloids: decompositions of a Young diagram into ribbons
// whose heads lie in the first column, built by repeatedly peeling off the
// ribbon that contains the top row.
//
// For a shape with l rows (row 1 at the bottom) the top ribbon is fixed by
// the row b it reaches down to. It covers all of row l and, for each row r
// with b <= r < l, the cells in columns lambda_{r+1} .. lambda_r. It has
// lambda_b + l - b cells and height l - b; what remains is
// (lambda_1, .., lambda_{b-1}, lambda_{b+1} - 1, .., lambda_l - 1).

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "csf/partitions.hpp"

namespace csf {

struct Ribbon {
  int size = 0;
  int height = 0;     ///< rows spanned minus one
  int start_row = 0;  ///< 1-based bottom row of the ribbon in the ambient shape

  int sign() const noexcept { return height % 2 == 0 ? 1 : -1; }
  friend bool operator==(const Ribbon&, const Ribbon&) = default;
};

struct SpecialRibbonTabloid {
  Partition shape;
  Composition content;          ///< ribbon sizes, top ribbon first
  std::vector<Ribbon> ribbons;  ///< top ribbon first
  int sign = 1;
  Partition type;  ///< underlying partition of content
};

namespace detail {

// Tabloids of a shape, with each ribbon's start row relative to the shape.
using TabloidList = std::vector<SpecialRibbonTabloid>;

class TabloidCache {
 public:
  const TabloidList& get(const Partition& shape) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(shape); it != cache_.end()) return *it->second;
    }
    auto built = std::make_unique<TabloidList>(build(shape));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(shape, std::move(built));
    return *it->second;
  }

 private:
  TabloidList build(const Partition& shape) {
    TabloidList out;
    const int l = shape.length();
    if (l == 0) {
      out.push_back({shape, Composition{}, {}, 1, Partition{}});
      return out;
    }
    for (int b = l; b >= 1; --b) {
      Ribbon top{shape[static_cast<std::size_t>(b - 1)] + l - b, l - b, b};
      std::vector<int> rest;
      std::vector<int> row_of;  // residual row (0-based) -> ambient row (1-based)
      for (int r = 1; r < b; ++r) {
        rest.push_back(shape[static_cast<std::size_t>(r - 1)]);
        row_of.push_back(r);
      }
      for (int r = b + 1; r <= l; ++r) {
        int len = shape[static_cast<std::size_t>(r - 1)] - 1;
        if (len == 0) break;  // only the top rows can vanish
        rest.push_back(len);
        row_of.push_back(r - 1);
      }
      Partition residual(std::move(rest));
      for (const auto& sub : get(residual)) {
        SpecialRibbonTabloid t;
        t.shape = shape;
        t.ribbons.reserve(sub.ribbons.size() + 1);
        t.ribbons.push_back(top);
        for (Ribbon r : sub.ribbons) {
          r.start_row = row_of[static_cast<std::size_t>(r.start_row - 1)];
          t.ribbons.push_back(r);
        }
        std::vector<int> content;
        content.reserve(t.ribbons.size());
        for (const auto& r : t.ribbons) content.push_back(r.size);
        t.content = Composition(std::move(content));
        t.sign = top.sign() * sub.sign;
        t.type = underlying_partition(t.content);
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::shared_mutex mutex_;
  std::map<Partition, std::unique_ptr<TabloidList>> cache_;
};

inline TabloidCache& tabloid_cache() {
  static TabloidCache cache;
  return cache;
}

}  // namespace detail

/// Every special ribbon tabloid of the given shape, ordered by the bottom
/// row of the top ribbon (descending) at each peel level. Results are
/// memoized process-wide; the returned reference stays valid.
inline const std::vector<SpecialRibbonTabloid>& enumerate_tabloids(const Partition& shape) {
  return detail::tabloid_cache().get(shape);
}

/// entry[(mu, lambda)] = sum of signs over tabloids of shape mu and type
/// lambda. Zero entries are omitted.
inline std::map<std::pair<Partition, Partition>, long long> signed_type_matrix(int n) {
  if (n < 1) throw PreconditionError("signed_type_matrix: n must be positive");
  std::map<std::pair<Partition, Partition>, long long> m;
  for (const auto& mu : partitions_of(n)) {
    for (const auto& t : enumerate_tabloids(mu)) {
      auto key = std::make_pair(mu, t.type);
      if ((m[key] += t.sign) == 0) m.erase(key);
    }
  }
  return m;
}

}  // namespace csf
