#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ekrlab/bignat.hpp"
#include "ekrlab/families.hpp"

namespace ekrlab {

// Evaluates f_A |_{X=0} (1,...,1) = #{B <= A : B ∩ X = ∅} for a single
// normalized generator A through the largest-element recursion
//
//   f_{a_1..a_r} = sum_{i=r}^{a_r} [i ∉ X] f_{min(a_j, i+j-r), j<r}
//
// with f of a one-element generator {a_1} equal to #{i <= a_1 : i ∉ X}.
// The memo is keyed by the reduced generator; X is fixed per counter.
class AvoidCounter {
 public:
  explicit AvoidCounter(std::span<const int> x, bool memoize = true);

  BigNat count(std::span<const int> gen);
  std::size_t cache_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<int>& k) const noexcept;
  };

  BigNat recurse(const std::vector<int>& gen);
  bool excluded(int i) const { return i < static_cast<int>(in_x_.size()) && in_x_[i]; }

  std::vector<char> in_x_;
  bool memoize_;
  std::unordered_map<std::vector<int>, BigNat, KeyHash> memo_;
};

BigNat count_avoid(const RSet& a, std::span<const int> x);

// |F(X)| = sum over nonempty T ⊆ G of (-1)^{|T|+1} [avoid(meet T, ∅) - avoid(meet T, X)].
BigNat count_hits(const GeneratorFamily& f, std::span<const int> x);

// Enumerates members and tests each against X.
BigNat count_hits_naive(const GeneratorFamily& f, std::span<const int> x);

// |S_{n,r}(X)| for X ⊆ [2, n] with |X| = t: binom(n-1, r-1) - binom(n-1-t, r-1).
// Throws unless 1 <= t <= n-1.
BigNat star_count(int n, int r, int t);

// |S_{n,r}(X)| for any X: the whole star when 1 ∈ X, otherwise star_count on
// |X ∩ [2, n]| (zero for an empty intersection).
BigNat star_hits(int n, int r, std::span<const int> x);

enum class Method { naive, genfunc, closed_form };
std::string to_string(Method m);

struct CountReport {
  int n = 0;
  int r = 0;
  std::vector<int> x;
  BigNat hits;
  BigNat star;
  Method method = Method::genfunc;
  bool leq_star = true;
};

CountReport make_report(const GeneratorFamily& f, std::span<const int> x, Method method);

// The minimal X of each eventually-EKR case:
//   1: {r+2}   2: {4, r+2}   3: {2, 4, r+2}   4: {2, ..., t, r+2} with 4 <= t <= r
struct CanonicalX {
  int shape = 1;
  int t = 0;  // only read for shape 4

  // Throws std::invalid_argument for an unknown shape or t outside [4, r].
  std::vector<int> elements(int r) const;
  int size() const { return shape == 4 ? t : shape; }

  // Recognizes X as one of the shapes for this r.
  static std::optional<CanonicalX> match(std::span<const int> x, int r);
};

// |A_{n,r,s}(X)| in closed form for canonical X (n >= 2r, r >= 3, 1 <= s <= r).
BigNat slice_count(int n, int r, int s, CanonicalX shape);
// Same, recognizing the shape of X; throws if X is not canonical for r.
BigNat slice_count(int n, int r, int s, std::span<const int> x);

// The three blocks of the general closed form, with t = |X|:
//   count1 = sum_{i=s}^{2s-1} (binom(i-1,s-1) - binom(i-t,s-1)) binom(n-i,r-s)
//   count2 = sum_{i=s}^{min(r+1,2s-1)} binom(i-t,s-1) binom(n-i-1,r-s-1)
//   count3 = binom(r+2-t,s-1) binom(n-r-2,r-s) + sum_{i=r+3}^{2s-1} binom(i-t-1,s-2) binom(n-i,r-s)
// count3 is present only when 2s-1 >= r+2 and is zero otherwise.
struct FormulaParts {
  BigNat count1;
  BigNat count2;
  BigNat count3;
  BigNat d_sum;  // count1 + count2
  BigNat q_num;  // count3
  BigNat total() const { return count1 + count2 + count3; }
};

FormulaParts formula_parts(int n, int r, int s, int t);
BigNat g_sum(int n, int r, int s, int t);
BigNat d_sum(int n, int r, int s, int t);

// count3 / binom(n-2, r-2), exactly.
Rational q_ratio(int n, int r, int s, int t);
// q <= 3.25 r^{3/2} (0.954)^r, decided in exact rational arithmetic.
bool q_within_bound(const Rational& q, int r);
double q_bound(int r);

// Upper end of the range 2r <= n < (3r + 1 + sqrt(5r^2 - 22r + 25)) / 2 on which
// F(r, n, {{2,3}}) beats the star on X = {2, 4, r+2}. Requires r >= 4.
struct CounterexampleThreshold {
  int r = 0;
  double value = 0;
  long long floor = 0;  // floor(value); equals value when the root is exact

  // n < value, decided with integers only.
  bool greater_than(long long n) const;
};

CounterexampleThreshold counterexample_threshold(int r);

}  // namespace ekrlab
