#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace toploc::testing {

/// Reduced homology rank over F2 of the complex with the given face list,
/// by elimination on boolean boundary matrices.
inline std::size_t oracle_homology_f2(const std::vector<std::uint32_t>& faces, int i) {
  auto of_dim = [&](int k) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t f : faces) {
      if (std::popcount(f) == k + 1) out.push_back(f);
    }
    return out;
  };
  auto rank = [&](int k) -> std::size_t {
    auto rows = of_dim(k);
    auto cols = of_dim(k - 1);
    if (rows.empty() || cols.empty()) return 0;
    std::vector<std::vector<bool>> m(rows.size(), std::vector<bool>(cols.size(), false));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < cols.size(); ++b) m[a][b] = (rows[a] & cols[b]) == cols[b];
    }
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols.size() && rk < rows.size(); ++c) {
      std::size_t piv = rk;
      while (piv < rows.size() && !m[piv][c]) ++piv;
      if (piv == rows.size()) continue;
      std::swap(m[piv], m[rk]);
      for (std::size_t a = 0; a < rows.size(); ++a) {
        if (a != rk && m[a][c]) {
          for (std::size_t b = 0; b < cols.size(); ++b) m[a][b] = m[a][b] != m[rk][b];
        }
      }
      ++rk;
    }
    return rk;
  };
  return of_dim(i).size() - rank(i) - rank(i + 1);
}

/// Faces inside W of the Stanley-Reisner complex of the squarefree ideal with
/// the given generator supports.
inline std::vector<std::uint32_t> oracle_faces(const std::vector<std::uint32_t>& gens, std::uint32_t W) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s <= W; ++s) {
    if ((s & W) != s) continue;
    bool in_ideal = std::any_of(gens.begin(), gens.end(), [&](std::uint32_t g) { return (g & s) == g; });
    if (!in_ideal) out.push_back(s);
  }
  return out;
}

/// pd(S/I) as the largest i with some beta_{i,W} = dim H_{|W|-i-1}(Delta_W) nonzero.
inline int oracle_pd(const std::vector<std::uint32_t>& gens, unsigned n) {
  int pd = 0;
  for (std::uint32_t W = 0; W < (1u << n); ++W) {
    auto faces = oracle_faces(gens, W);
    int w = std::popcount(W);
    for (int i = 0; i <= w; ++i) {
      if (oracle_homology_f2(faces, w - i - 1) > 0) pd = std::max(pd, i);
    }
  }
  return pd;
}

}  // namespace toploc::testing
