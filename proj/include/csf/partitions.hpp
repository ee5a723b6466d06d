#pragma once

// Integer partitions and compositions, dominance order, strip predicates.
//
// Rows are indexed French style: part 0 is the bottom row of the diagram.
// Zero parts are never stored.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "csf/core.hpp"

namespace csf {

/// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw PreconditionError("composition parts must be positive");
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw PreconditionError("partition parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i, or 0 past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Multiplicity of each part value, indexed by value.
  std::vector<int> multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
  }

  Composition as_composition() const { return Composition(parts_); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Strict weak order realizing the canonical (decreasing lexicographic)
/// partition order used by every expansion map.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return std::lexicographical_compare(b.vec().begin(), b.vec().end(), a.vec().begin(),
                                        a.vec().end());
  }
};

inline std::string to_string(std::span<const int> parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}
inline std::string to_string(const Partition& p) { return "(" + to_string(p.parts()) + ")"; }
inline std::string to_string(const Composition& c) { return "(" + to_string(c.parts()) + ")"; }
inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << to_string(c);
}

inline Partition underlying_partition(const Composition& c) {
  std::vector<int> v = c.vec();
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

/// All partitions of n in canonical order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw PreconditionError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Dominance order: every prefix sum of a is at least that of b.
inline bool dominates(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight())
    throw PreconditionError("dominates: partitions " + to_string(a) + " and " + to_string(b) +
                            " have different weights");
  int sa = 0, sb = 0;
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()));
  for (std::size_t k = 0; k < len; ++k) {
    sa += a.part(k);
    sb += b.part(k);
    if (sa < sb) return false;
  }
  return true;
}

/// Strict dominance.
inline bool strictly_dominates(const Partition& a, const Partition& b) {
  return a != b && dominates(a, b);
}

/// outer / inner with inner contained in outer.
class SkewPair {
 public:
  SkewPair(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
      throw PreconditionError("skew shape: inner longer than outer");
    for (int i = 0; i < inner_.length(); ++i)
      if (inner_[i] > outer_[i]) throw PreconditionError("skew shape: inner not contained in outer");
  }
  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.weight() - inner_.weight(); }

 private:
  Partition outer_;
  Partition inner_;
};

enum class StripOrientation { horizontal, vertical };

/// Horizontal: no two cells of the skew shape share a column (interlacing).
/// Vertical: no two cells share a row.
inline bool is_strip(const SkewPair& s, StripOrientation orientation) {
  const auto& lam = s.outer();
  const auto& mu = s.inner();
  if (orientation == StripOrientation::horizontal) {
    for (int i = 0; i + 1 < lam.length(); ++i)
      if (lam[i + 1] > mu.part(i)) return false;
    return true;
  }
  for (int i = 0; i < lam.length(); ++i)
    if (lam[i] - mu.part(i) > 1) return false;
  return true;
}

/// Parses "6,6,4". Partitions must already be weakly decreasing.
inline std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw PreconditionError("empty part in '" + std::string(text) + "'");
    int v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9')
        throw PreconditionError("invalid part '" + std::string(tok) + "'");
      v = v * 10 + (ch - '0');
      if (v > 1'000'000) throw PreconditionError("part too large");
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return parts;
}

inline Partition parse_partition(std::string_view text) { return Partition(parse_parts(text)); }
inline Composition parse_composition(std::string_view text) {
  return Composition(parse_parts(text));
}

}  // namespace csf
