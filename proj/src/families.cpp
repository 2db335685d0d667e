#include "ekrlab/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ekrlab/counting.hpp"

namespace ekrlab {

std::optional<RSet> normalize_generator(std::span<const int> g, int n, int r) {
  if (!is_strictly_increasing(g) || (!g.empty() && (g.front() < 1 || g.back() > n))) {
    throw std::invalid_argument("generator " + to_string(g) + " is not an increasing subset of [" +
                                std::to_string(n) + "]");
  }
  const int k = static_cast<int>(g.size());
  if (k > r) return std::nullopt;
  const int pad_from = n - (r - k) + 1;
  if (!g.empty() && g.back() >= pad_from) {
    throw std::invalid_argument("invalid generator " + to_string(g) + " for n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + ": padding overlaps it");
  }
  std::vector<int> out(g.begin(), g.end());
  for (int x = pad_from; x <= n; ++x) out.push_back(x);
  return RSet(n, std::move(out));
}

RSet meet(const RSet& g, const RSet& h) {
  if (g.r() != h.r() || g.n() != h.n()) throw std::invalid_argument("meet of generators from different (n, r)");
  std::vector<int> m(static_cast<std::size_t>(g.r()));
  for (int i = 1; i <= g.r(); ++i) m[i - 1] = std::min(g.at(i), h.at(i));
  // pointwise min of increasing sequences is increasing; RSet re-validates
  return RSet(g.n(), std::move(m));
}

std::vector<RSet> reduce_antichain(std::vector<RSet> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (const auto& g : gens) {
    if (g.n() != gens.front().n() || g.r() != gens.front().r())
      throw std::invalid_argument("generators from different (n, r)");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<RSet> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      dominated = i != j && leq_compression(gens[i], gens[j]);
    if (!dominated) kept.push_back(gens[i]);
  }
  return kept;
}

GeneratorFamily::GeneratorFamily(int n, int r, std::vector<RSet> gens) : n_(n), r_(r) {
  if (r < 1 || n < r) throw std::invalid_argument("need 1 <= r <= n");
  for (const auto& g : gens) {
    if (g.n() != n || g.r() != r)
      throw std::invalid_argument("generator " + to_string(g) + " is not an r-set of [n]");
  }
  gens_ = reduce_antichain(std::move(gens));
}

GeneratorFamily GeneratorFamily::from_raw(int n, int r, const std::vector<std::vector<int>>& raw) {
  std::vector<RSet> gens;
  for (const auto& g : raw) {
    if (auto norm = normalize_generator(g, n, r)) gens.push_back(std::move(*norm));
  }
  if (gens.empty()) throw std::invalid_argument("no generator of size <= r; the family is empty");
  return GeneratorFamily(n, r, std::move(gens));
}

GeneratorFamily GeneratorFamily::star(int n, int r) { return from_raw(n, r, {{1}}); }

GeneratorFamily GeneratorFamily::slice(int n, int r, int s) {
  if (s < 1 || s > r) throw std::invalid_argument("slice index s must lie in [1, r]");
  std::vector<int> g;
  for (int x = s; x <= 2 * s - 1; ++x) g.push_back(x);
  return from_raw(n, r, {g});
}

bool member(const GeneratorFamily& f, std::span<const int> b) {
  return std::any_of(f.generators().begin(), f.generators().end(),
                     [&](const RSet& g) { return leq_compression(b, g.elems()); });
}

namespace {

struct MemberWalk {
  const std::vector<RSet>& gens;
  int r;
  const std::function<void(std::span<const int>)>& visit;
  std::vector<int> cur;

  // alive: generators whose first `pos` entries dominate cur
  void step(int pos, const std::vector<int>& alive) {
    if (pos == r) {
      visit(cur);
      return;
    }
    int bound = 0;
    for (int gi : alive) bound = std::max(bound, gens[gi].at(pos + 1));
    const int lo = pos == 0 ? 1 : cur[pos - 1] + 1;
    std::vector<int> next;
    next.reserve(alive.size());
    for (int x = lo; x <= bound; ++x) {
      next.clear();
      for (int gi : alive)
        if (gens[gi].at(pos + 1) >= x) next.push_back(gi);
      cur[pos] = x;
      step(pos + 1, next);
    }
  }
};

}  // namespace

void for_each_member(const GeneratorFamily& f, const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> alive(f.generators().size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  MemberWalk walk{f.generators(), f.r(), visit, std::vector<int>(static_cast<std::size_t>(f.r()))};
  walk.step(0, alive);
}

std::vector<RSet> enumerate_members(const GeneratorFamily& f) {
  std::vector<RSet> out;
  for_each_member(f, [&](std::span<const int> b) { out.emplace_back(f.n(), std::vector<int>(b.begin(), b.end())); });
  return out;
}

namespace {

void meets_from(std::span<const RSet> gens, std::size_t next, const RSet& acc, int depth,
                const std::function<void(const RSet&, int)>& visit) {
  visit(acc, depth);
  for (std::size_t j = next; j < gens.size(); ++j) meets_from(gens, j + 1, meet(acc, gens[j]), depth + 1, visit);
}

}  // namespace

void for_each_meet(std::span<const RSet> gens, const std::function<void(const RSet&, int)>& visit) {
  if (gens.size() > kMaxInclusionExclusionGenerators) {
    throw std::invalid_argument("inclusion-exclusion over " + std::to_string(gens.size()) +
                                " generators exceeds the limit of " +
                                std::to_string(kMaxInclusionExclusionGenerators));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) meets_from(gens, i + 1, gens[i], 1, visit);
}

BigNat size(const GeneratorFamily& f) {
  AvoidCounter all({});
  BigInt total = 0;
  for_each_meet(f.generators(), [&](const RSet& m, int k) {
    if (k % 2) total += all.count(m.elems());
    else total -= all.count(m.elems());
  });
  return to_nat(std::move(total));
}

}  // namespace ekrlab
