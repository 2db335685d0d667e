#pragma once

// Brute-force reference implementations. Nothing here calls into the library:
// sets are bitmasks over [1, n] with n <= 31 and families are explicit lists.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

inline Mask mask_of(const std::vector<int>& s) {
  Mask m = 0;
  for (int e : s) m |= Mask{1} << (e - 1);
  return m;
}

inline std::vector<int> elems_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i + 1);
  return out;
}

// All r-subsets of [n], as masks, in increasing numeric order.
inline std::vector<Mask> rsets(int n, int r) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  return out;
}

inline std::uint64_t choose(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
  return c;
}

// a_i <= g_i on the first |g| positions (requires |a| >= |g|).
inline bool below(const std::vector<int>& a, const std::vector<int>& g) {
  if (a.size() < g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (a[i] > g[i]) return false;
  return true;
}

inline std::vector<Mask> family(int n, int r, const std::vector<std::vector<int>>& gens) {
  std::vector<Mask> out;
  for (Mask m : rsets(n, r)) {
    const auto a = elems_of(m);
    if (std::any_of(gens.begin(), gens.end(), [&](const auto& g) { return g.size() <= a.size() && below(a, g); }))
      out.push_back(m);
  }
  return out;
}

inline std::uint64_t hits(const std::vector<Mask>& fam, const std::vector<int>& x) {
  const Mask mx = mask_of(x);
  return std::count_if(fam.begin(), fam.end(), [&](Mask m) { return (m & mx) != 0; });
}

inline bool intersecting(const std::vector<Mask>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i; j < fam.size(); ++j)
      if ((fam[i] & fam[j]) == 0) return false;
  return true;
}

// Increasing r-subset of [n] drawn uniformly.
inline std::vector<int> random_rset(std::mt19937& rng, int n, int r) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(r);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace oracle
