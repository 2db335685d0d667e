#include "ekrlab/sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace ekrlab {

RSet::RSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (!is_strictly_increasing(elems_) || (!elems_.empty() && (elems_.front() < 1 || elems_.back() > n_))) {
    throw std::invalid_argument("not an increasing subset of [" + std::to_string(n_) + "]: " + to_string(elems_));
  }
}

bool RSet::contains(int x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

bool is_strictly_increasing(std::span<const int> s) {
  return std::adjacent_find(s.begin(), s.end(), [](int a, int b) { return a >= b; }) == s.end();
}

std::string to_string(std::span<const int> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string to_string(const RSet& s) { return to_string(s.elems()); }

bool leq_compression(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("compression order needs equal sizes: " + to_string(a) + " vs " + to_string(b));
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool leq_compression(const RSet& a, const RSet& b) { return leq_compression(a.elems(), b.elems()); }

bool prec(std::span<const int> b, std::span<const int> c) {
  if (b.size() < c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (b[i] > c[i]) return false;
  return true;
}

BigNat binomial(long long m, long long k) {
  if (k < 0 || k > m) return 0;
  k = std::min(k, m - k);
  BigNat v = 1;
  for (long long i = 1; i <= k; ++i) {
    v *= m - k + i;
    v /= i;
  }
  return v;
}

void for_each_rset(int n, int r, const std::function<void(std::span<const int>)>& visit) {
  if (r < 0 || r > n) return;
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[i] = i + 1;
  while (true) {
    visit(cur);
    // rightmost position that can still move up
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i + 1) --i;
    if (i < 0) return;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<RSet> enumerate_rsets(int n, int r) {
  std::vector<RSet> out;
  for_each_rset(n, r, [&](std::span<const int> s) { out.emplace_back(n, std::vector<int>(s.begin(), s.end())); });
  return out;
}

}  // namespace ekrlab
