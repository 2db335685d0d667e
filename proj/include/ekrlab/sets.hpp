#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ekrlab/bignat.hpp"

namespace ekrlab {

// An r-element subset of [n] = {1,...,n}, stored in increasing order.
// Positions are 1-based in at(); the elements themselves are 1-based too.
class RSet {
 public:
  // Throws std::invalid_argument unless 1 <= e_1 < ... < e_r <= n.
  RSet(int n, std::vector<int> elems);

  int n() const { return n_; }
  int r() const { return static_cast<int>(elems_.size()); }
  std::span<const int> elems() const { return elems_; }

  // 1-based position: at(1) is the smallest element.
  int at(int i) const { return elems_[static_cast<std::size_t>(i - 1)]; }
  int back() const { return elems_.back(); }
  bool contains(int x) const;

  friend bool operator==(const RSet& a, const RSet& b) = default;
  // Lexicographic on elements, then n.
  friend auto operator<=>(const RSet& a, const RSet& b) {
    if (auto c = a.elems_ <=> b.elems_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_;
  std::vector<int> elems_;
};

bool is_strictly_increasing(std::span<const int> s);

// "{1,2,3}"
std::string to_string(std::span<const int> s);
std::string to_string(const RSet& s);

// Compression order: a_i <= b_i for every i. Throws on length mismatch.
bool leq_compression(std::span<const int> a, std::span<const int> b);
bool leq_compression(const RSet& a, const RSet& b);

// Generalized order B ≺ C: |B| >= |C| and b_i <= c_i for i <= |C|.
bool prec(std::span<const int> b, std::span<const int> c);
inline bool prec(const RSet& b, std::span<const int> c) { return prec(b.elems(), c); }

// binom(m, k), zero whenever k < 0 or k > m (so also for every m < 0).
BigNat binomial(long long m, long long k);

// Visits C([n], r) in lexicographic order. The span is only valid during the
// call. Nothing is visited when r > n or r < 0; r == 0 visits the empty set.
void for_each_rset(int n, int r, const std::function<void(std::span<const int>)>& visit);
std::vector<RSet> enumerate_rsets(int n, int r);

}  // namespace ekrlab
