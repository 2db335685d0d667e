#include "ekrlab/intersecting.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekrlab {

bool cross_intersecting(const RSet& a, const RSet& b) {
  if (a.r() != b.r()) throw std::invalid_argument("cross_intersecting needs equal sizes");
  const int r = a.r();
  for (int i = 1; i <= r; ++i) {
    if (a.at(i) >= i + r) break;  // a_i only grows faster than i from here
    for (int j = 1; j <= r; ++j)
      if (i + j > std::max(a.at(i), b.at(j))) return true;
  }
  return false;
}

std::optional<int> star_index(const RSet& a) {
  for (int s = 1; s <= a.r(); ++s) {
    bool below = true;
    for (int i = 1; i <= s && below; ++i) below = a.at(i) <= s + i - 1;
    if (below) return s;
  }
  return std::nullopt;
}

bool is_intersecting(const GeneratorFamily& f) {
  const auto& g = f.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j)
      if (!cross_intersecting(g[i], g[j])) return false;
  return true;
}

bool is_intersecting_naive(const GeneratorFamily& f) {
  // members as bitmasks over [n]; falls back to sorted merge when n > 64
  std::vector<std::vector<int>> members;
  for_each_member(f, [&](std::span<const int> b) { members.emplace_back(b.begin(), b.end()); });
  auto disjoint = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
      if (x[i] == y[j]) return false;
      if (x[i] < y[j]) ++i;
      else ++j;
    }
    return true;
  };
  if (f.n() <= 64) {
    std::vector<unsigned long long> masks;
    masks.reserve(members.size());
    for (const auto& m : members) {
      unsigned long long bits = 0;
      for (int x : m) bits |= 1ULL << (x - 1);
      masks.push_back(bits);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i; j < masks.size(); ++j)
        if ((masks[i] & masks[j]) == 0) return false;
    return true;
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i; j < members.size(); ++j)
      if (disjoint(members[i], members[j])) return false;
  return true;
}

}  // namespace ekrlab
