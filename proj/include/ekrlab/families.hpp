#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ekrlab/bignat.hpp"
#include "ekrlab/sets.hpp"

namespace ekrlab {

// Pads a generator of size k <= r with the top r-k elements of [n], giving
// the r-set G' with A <= G' iff A ≺ G for every A in C([n], r). Returns
// nullopt when |G| > r (no r-set lies below G). Throws std::invalid_argument
// when G is not increasing inside [n] or when the padding would overlap G.
std::optional<RSet> normalize_generator(std::span<const int> g, int n, int r);

// Pointwise minimum. F(r,n,{meet(G,H)}) = F(r,n,{G}) ∩ F(r,n,{H}).
RSet meet(const RSet& g, const RSet& h);

// Drops duplicates and every generator lying below another one; the result
// is sorted lexicographically. Throws on empty input or mixed (n, r).
std::vector<RSet> reduce_antichain(std::vector<RSet> gens);

// The compressed family F(r, n, G): every r-set lying below some generator.
// Generators are normalized r-sets, reduced to an antichain on construction.
class GeneratorFamily {
 public:
  GeneratorFamily(int n, int r, std::vector<RSet> gens);

  // Generators of any size <= r; longer ones contribute nothing and are
  // dropped. Throws if nothing remains.
  static GeneratorFamily from_raw(int n, int r, const std::vector<std::vector<int>>& raw);

  // S_{n,r}: all r-sets containing 1.
  static GeneratorFamily star(int n, int r);
  // A_{n,r,s} = F(r, n, {[s, 2s-1]}).
  static GeneratorFamily slice(int n, int r, int s);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<RSet>& generators() const { return gens_; }

  friend bool operator==(const GeneratorFamily&, const GeneratorFamily&) = default;

 private:
  int n_;
  int r_;
  std::vector<RSet> gens_;
};

bool member(const GeneratorFamily& f, std::span<const int> b);
inline bool member(const GeneratorFamily& f, const RSet& b) { return member(f, b.elems()); }

// Visits every member once, in lexicographic order, by a depth-first walk
// bounded by the generators. The span is only valid during the call.
void for_each_member(const GeneratorFamily& f, const std::function<void(std::span<const int>)>& visit);
std::vector<RSet> enumerate_members(const GeneratorFamily& f);

// |F(r,n,G)| by inclusion-exclusion over generator meets.
BigNat size(const GeneratorFamily& f);

// Largest generator count accepted by the inclusion-exclusion routines.
inline constexpr std::size_t kMaxInclusionExclusionGenerators = 24;

// Calls visit(meet of T, |T|) for every nonempty subset T of gens.
void for_each_meet(std::span<const RSet> gens, const std::function<void(const RSet&, int)>& visit);

}  // namespace ekrlab
