#pragma once

// Closed form against exhaustive counts over whole validity ranges. Shared
// by the unit tests (small m) and the acceptance runner (m up to 8, 9).

#include <string>
#include <vector>

#include "csf/csf.hpp"

namespace sweeps {

struct Outcome {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void record(bool good, const std::string& what) {
    ++checked;
    if (!good) failures.push_back(what);
  }
};

inline void half(int m, Outcome& out) {
  auto g = csf::half_graph(m);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= a; ++b) {
      int c = 2 * m - a - b;
      if (c < 1 || c > b) continue;
      auto want = csf::stc_brute(g, csf::Composition({a, b, c}));
      auto got = csf::stc_half_closed(m, a, b, c);
      out.record(got == want, "half m=" + std::to_string(m) + " " + std::to_string(a) + "," + std::to_string(b) + "," +
                                  std::to_string(c) + ": " + got.str() + " vs " + want.str());
    }
}

inline void h3(int m, Outcome& out) {
  auto h = csf::h_graph(m, 3);
  for (const auto& p : csf::partitions_of(3 * m - 2)) {
    if (p.largest() > m || p.length() > 4) continue;
    if (!csf::h3_family_of(m, p.as_composition())) continue;
    auto want = csf::stc_brute(h, p.as_composition());
    auto got = csf::stc_h3_closed(m, p.as_composition());
    out.record(got == want, "h3 m=" + std::to_string(m) + " " + csf::to_string(p) + ": " + got.str() + " vs " + want.str());
  }
}

inline void s1j(int m, Outcome& out) {
  auto h = csf::h_graph(m, 3);
  auto [u, v] = csf::lattice_pins(h);
  for (int b = 1; b <= m - 1; ++b)
    for (int c = 1; c <= m - 1; ++c) {
      int d = 2 * m - 2 - b - c;
      if (d < 1 || d > m - 1) continue;
      csf::Composition t({m, b, c, d});
      csf::Integer want = 0;
      for (int j = 2; j <= 4; ++j) want += csf::stc_pinned_brute(h, t, {u, 1, v, j});
      auto got = csf::stc_h3_s1j_closed(m, b, c, d);
      out.record(got == want, "s1j m=" + std::to_string(m) + " " + csf::to_string(t) + ": " + got.str() + " vs " + want.str());
    }
}

inline void s23(int m, Outcome& out) {
  auto h = csf::h_graph(m, 3);
  auto [u, v] = csf::lattice_pins(h);
  for (int b = 2; b <= m - 2; ++b)
    for (int c = 2; c <= m - 2; ++c) {
      int d = 2 * m - 2 - b - c;
      if (d < 2 || d > m - 2) continue;
      csf::Composition t({m, b, c, d});
      auto want = csf::stc_pinned_brute(h, t, {u, 2, v, 3});
      auto got = csf::stc_h3_s23_closed(m, b, c, d);
      out.record(got == want, "s23 m=" + std::to_string(m) + " " + csf::to_string(t) + ": " + got.str() + " vs " + want.str());
    }
}

}  // namespace sweeps
