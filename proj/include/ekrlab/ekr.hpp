#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekrlab/counting.hpp"
#include "ekrlab/families.hpp"

namespace ekrlab {

// Minimal X of eventually-EKR case `shape` (1..4); see CanonicalX.
std::vector<int> canonical_minimal_X(int r, int shape, int t = 0);

// Barber's classification for X ⊆ [2, n] with |X| <= r and X ⊄ [2, r+1].
// Throws std::invalid_argument outside that hypothesis.
bool eventually_ekr(std::span<const int> x, int r);

// n > φ²r, decided as 2n > 3r and (2n - 3r)^2 > 5r^2.
bool above_phi_squared(long long n, long long r);

enum class Scope { single_generator, exhaustive };
std::string to_string(Scope s);

struct EkrVerdict {
  int n = 0;
  int r = 0;
  std::vector<int> x;
  BigNat max_hits;
  BigNat star;
  std::vector<RSet> witness;  // generators of a family attaining max_hits
  bool is_ekr_here = true;
  Scope scope = Scope::single_generator;
  // single_generator scope only: |A_{n,r,s}(X)| for s = 1..r and every s attaining the max
  std::vector<BigNat> per_s;
  std::vector<int> argmax_s;
};

// Limits on exhaustive enumeration. These bound work, not semantics.
struct ScaleGuard {
  std::size_t max_candidates = 5000;
  std::size_t max_cliques = 1'000'000;
  std::size_t max_members = 200'000'000;  // naive enumeration

  // EKRLAB_SCALE_GUARD, when set to a positive integer, replaces max_candidates.
  static ScaleGuard from_env();
};

class ScaleGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Max over s of |A_{n,r,s}(X)|. Needs r >= 3 and n >= 2r.
EkrVerdict single_gen_verdict(int n, int r, std::span<const int> x);

// All maximal compressed intersecting families of C([n], r).
//
// The pigeonhole criterion i + j > max(a_i, b_j) can only fire on entries
// below 2r, so r-sets with the same trace on [1, 2r-1] are interchangeable:
// a maximal family contains either all or none of such a class. Candidates
// are the self-intersecting classes, represented by their largest member;
// families are the maximal cliques of the cross-intersecting graph on them
// (Bron-Kerbosch with pivoting).
class MaximalFamilies {
 public:
  MaximalFamilies(int n, int r, const ScaleGuard& guard = {});

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return cliques_.size(); }
  std::size_t candidate_count() const { return reps_.size(); }

  GeneratorFamily family(std::size_t i) const;
  std::vector<GeneratorFamily> families() const;

  // |A_i(X)| for every family, summed over classes.
  std::vector<BigNat> hits(std::span<const int> x) const;
  BigNat member_count(std::size_t i) const;

 private:
  BigNat class_hits(std::size_t v, std::span<const int> x) const;

  int n_;
  int r_;
  std::vector<RSet> reps_;
  std::vector<std::vector<int>> prefixes_;  // rep ∩ [1, 2r-1]
  std::vector<std::vector<int>> cliques_;   // sorted vertex lists, sorted
};

std::vector<GeneratorFamily> enumerate_maximal_families(int n, int r, const ScaleGuard& guard = {});

EkrVerdict exhaustive_verdict(int n, int r, std::span<const int> x, const ScaleGuard& guard = {});
EkrVerdict exhaustive_verdict(const MaximalFamilies& families, std::span<const int> x);

// The covering family F(r,n,{{1,r+1}}) ∪ F(r,n,{{2,3,r+2}}) ∪ A_{n,r,3} ∪ ... ∪ A_{n,r,r}.
GeneratorFamily nicegens_family(int n, int r);

struct CoverReport {
  std::size_t families = 0;
  std::size_t checked = 0;  // neither inside S nor inside A_{n,r,2}
  std::vector<GeneratorFamily> uncovered;
  bool ok() const { return uncovered.empty(); }
};

CoverReport nicegens_cover(int n, int r, const ScaleGuard& guard = {});
bool nicegens_cover_check(int n, int r, const ScaleGuard& guard = {});

struct ScanRow {
  int n = 0;
  CanonicalX shape;
  EkrVerdict verdict;
  bool above_phi2 = false;
  bool violation = false;  // above_phi2 and not EKR here
};

struct ScanReport {
  int r = 0;
  int n_lo = 0;
  int n_hi = 0;
  Scope scope = Scope::single_generator;
  std::vector<ScanRow> rows;  // ordered by (n, shape, t)

  std::vector<ScanRow> violations() const;
};

// Verdict for every canonical X and n in [max(n_lo, 2r), n_hi]. Work is split
// over n across `jobs` threads; row order does not depend on scheduling.
ScanReport scan_conjecture(int r, int n_lo, int n_hi, Scope scope, const ScaleGuard& guard = {},
                           unsigned jobs = 1);

// |F(X)| >= |F(X2)| for X <= X2 in the compression order. Throws unless the
// sets have equal size and X <= X2 pointwise.
bool borg_monotone_check(const GeneratorFamily& f, std::span<const int> x, std::span<const int> x2);

}  // namespace ekrlab
