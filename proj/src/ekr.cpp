#include "ekrlab/ekr.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "ekrlab/intersecting.hpp"

namespace ekrlab {

std::vector<int> canonical_minimal_X(int r, int shape, int t) {
  if (r < 3) throw std::invalid_argument("canonical minimal X needs r >= 3");
  return CanonicalX{shape, t}.elements(r);
}

bool eventually_ekr(std::span<const int> x, int r) {
  if (r < 3) throw std::invalid_argument("eventually_ekr needs r >= 3");
  if (!is_strictly_increasing(x) || (!x.empty() && x.front() < 2))
    throw std::invalid_argument("X must be an increasing subset of [2, n]");
  const int t = static_cast<int>(x.size());
  if (t > r) throw std::invalid_argument("|X| > r is outside the classification's hypothesis");
  if (x.empty() || x.back() <= r + 1)
    throw std::invalid_argument("X ⊆ [2, r+1] is outside the classification's hypothesis");
  auto has = [&](int v) { return std::binary_search(x.begin(), x.end(), v); };
  switch (t) {
    case 1: return true;
    case 2: return !has(2) && !has(3);
    case 3: return !(has(2) && has(3));
    default: return true;
  }
}

bool above_phi_squared(long long n, long long r) {
  const long long d = 2 * n - 3 * r;
  return d > 0 && d * d > 5 * r * r;
}

std::string to_string(Scope s) { return s == Scope::exhaustive ? "exhaustive" : "single_generator"; }

ScaleGuard ScaleGuard::from_env() {
  ScaleGuard g;
  if (const char* v = std::getenv("EKRLAB_SCALE_GUARD")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || parsed == 0)
      throw std::invalid_argument(std::string("EKRLAB_SCALE_GUARD must be a positive integer, got '") + v + "'");
    g.max_candidates = static_cast<std::size_t>(parsed);
  }
  return g;
}

EkrVerdict single_gen_verdict(int n, int r, std::span<const int> x) {
  if (r < 3) throw std::invalid_argument("single_gen_verdict needs r >= 3");
  if (n < 2 * r) throw std::invalid_argument("single_gen_verdict needs n >= 2r");
  EkrVerdict v;
  v.n = n;
  v.r = r;
  v.x.assign(x.begin(), x.end());
  v.scope = Scope::single_generator;
  v.star = star_hits(n, r, x);
  for (int s = 1; s <= r; ++s) v.per_s.push_back(count_hits(GeneratorFamily::slice(n, r, s), x));
  v.max_hits = *std::max_element(v.per_s.begin(), v.per_s.end());
  for (int s = 1; s <= r; ++s)
    if (v.per_s[s - 1] == v.max_hits) v.argmax_s.push_back(s);
  v.witness = GeneratorFamily::slice(n, r, v.argmax_s.front()).generators();
  v.is_ekr_here = v.max_hits <= v.star;
  return v;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
void reset(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
bool none(const Bits& b) {
  return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
}
Bits and_(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}
int popcount_and(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}
template <class F>
void for_each_bit(const Bits& b, F f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word) {
      f(static_cast<int>(w * 64 + __builtin_ctzll(word)));
      word &= word - 1;
    }
  }
}

struct CliqueSearch {
  const std::vector<Bits>& adj;
  std::size_t limit;
  std::vector<std::vector<int>>& out;
  std::vector<int> current;

  void run(Bits p, Bits x) {
    if (none(p) && none(x)) {
      if (out.size() >= limit)
        throw ScaleGuardExceeded("more than " + std::to_string(limit) + " maximal families");
      out.push_back(current);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
      const int c = popcount_and(p, adj[u]);
      if (c > best) best = c, pivot = u;
    };
    for_each_bit(p, consider);
    for_each_bit(x, consider);
    Bits todo = p;
    for (std::size_t w = 0; w < todo.size(); ++w) todo[w] &= ~adj[pivot][w];
    for_each_bit(todo, [&](int v) {
      current.push_back(v);
      run(and_(p, adj[v]), and_(x, adj[v]));
      current.pop_back();
      reset(p, v);
      set(x, v);
    });
  }
};

}  // namespace

MaximalFamilies::MaximalFamilies(int n, int r, const ScaleGuard& guard) : n_(n), r_(r) {
  if (r < 1 || n < r) throw std::invalid_argument("need 1 <= r <= n");
  const int tail = std::max(0, n - 2 * r + 1);  // size of [2r, n]
  const int span_top = std::min(2 * r - 1, n);
  for (int k = std::max(0, r - tail); k <= std::min(r, span_top); ++k) {
    for_each_rset(span_top, k, [&](std::span<const int> p) {
      std::vector<int> elems(p.begin(), p.end());
      for (int v = n - (r - k) + 1; v <= n; ++v) elems.push_back(v);
      RSet rep(n, std::move(elems));
      if (!star_index(rep)) return;
      if (reps_.size() >= guard.max_candidates)
        throw ScaleGuardExceeded("more than " + std::to_string(guard.max_candidates) + " candidate generators at n=" +
                                 std::to_string(n) + " r=" + std::to_string(r));
      prefixes_.emplace_back(p.begin(), p.end());
      reps_.push_back(std::move(rep));
    });
  }

  const int v = static_cast<int>(reps_.size());
  const std::size_t words = (static_cast<std::size_t>(v) + 63) / 64;
  std::vector<Bits> adj(static_cast<std::size_t>(v), Bits(words, 0));
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (cross_intersecting(reps_[a], reps_[b])) set(adj[a], b), set(adj[b], a);

  Bits all(words, 0);
  for (int a = 0; a < v; ++a) set(all, a);
  CliqueSearch search{adj, guard.max_cliques, cliques_, {}};
  if (v > 0) search.run(all, Bits(words, 0));
  std::sort(cliques_.begin(), cliques_.end());
}

GeneratorFamily MaximalFamilies::family(std::size_t i) const {
  std::vector<RSet> gens;
  for (int v : cliques_.at(i)) gens.push_back(reps_[v]);
  return GeneratorFamily(n_, r_, std::move(gens));
}

std::vector<GeneratorFamily> MaximalFamilies::families() const {
  std::vector<GeneratorFamily> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(family(i));
  return out;
}

BigNat MaximalFamilies::class_hits(std::size_t v, std::span<const int> x) const {
  const auto& p = prefixes_[v];
  const int tail = std::max(0, n_ - 2 * r_ + 1);
  const int free = r_ - static_cast<int>(p.size());
  const BigNat total = binomial(tail, free);
  const bool prefix_hit = std::any_of(p.begin(), p.end(), [&](int e) {
    return std::find(x.begin(), x.end(), e) != x.end();
  });
  if (prefix_hit) return total;
  const auto in_tail = std::count_if(x.begin(), x.end(), [&](int e) { return e >= 2 * r_ && e <= n_; });
  return total - binomial(tail - in_tail, free);
}

std::vector<BigNat> MaximalFamilies::hits(std::span<const int> x) const {
  std::vector<BigNat> per_class(reps_.size());
  for (std::size_t v = 0; v < reps_.size(); ++v) per_class[v] = class_hits(v, x);
  std::vector<BigNat> out;
  out.reserve(cliques_.size());
  if (binomial(n_, r_) < (BigNat(1) << 62)) {
    std::vector<std::uint64_t> small(per_class.size());
    for (std::size_t v = 0; v < per_class.size(); ++v) small[v] = per_class[v].convert_to<std::uint64_t>();
    for (const auto& c : cliques_) {
      std::uint64_t s = 0;
      for (int v : c) s += small[v];
      out.emplace_back(s);
    }
    return out;
  }
  for (const auto& c : cliques_) {
    BigNat s = 0;
    for (int v : c) s += per_class[v];
    out.push_back(std::move(s));
  }
  return out;
}

BigNat MaximalFamilies::member_count(std::size_t i) const {
  const int tail = std::max(0, n_ - 2 * r_ + 1);
  BigNat s = 0;
  for (int v : cliques_.at(i)) s += binomial(tail, r_ - static_cast<int>(prefixes_[v].size()));
  return s;
}

std::vector<GeneratorFamily> enumerate_maximal_families(int n, int r, const ScaleGuard& guard) {
  return MaximalFamilies(n, r, guard).families();
}

EkrVerdict exhaustive_verdict(const MaximalFamilies& families, std::span<const int> x) {
  EkrVerdict v;
  v.n = families.n();
  v.r = families.r();
  v.x.assign(x.begin(), x.end());
  v.scope = Scope::exhaustive;
  v.star = star_hits(v.n, v.r, x);
  const auto hits = families.hits(x);
  if (hits.empty()) {
    v.max_hits = 0;
  } else {
    const auto best = std::max_element(hits.begin(), hits.end());
    v.max_hits = *best;
    v.witness = families.family(static_cast<std::size_t>(best - hits.begin())).generators();
  }
  v.is_ekr_here = v.max_hits <= v.star;
  return v;
}

EkrVerdict exhaustive_verdict(int n, int r, std::span<const int> x, const ScaleGuard& guard) {
  return exhaustive_verdict(MaximalFamilies(n, r, guard), x);
}

GeneratorFamily nicegens_family(int n, int r) {
  std::vector<std::vector<int>> raw{{1, r + 1}, {2, 3, r + 2}};
  for (int s = 3; s <= r; ++s) {
    std::vector<int> g;
    for (int e = s; e <= 2 * s - 1; ++e) g.push_back(e);
    raw.push_back(std::move(g));
  }
  return GeneratorFamily::from_raw(n, r, raw);
}

CoverReport nicegens_cover(int n, int r, const ScaleGuard& guard) {
  const MaximalFamilies all(n, r, guard);
  const GeneratorFamily cover = nicegens_family(n, r);
  const GeneratorFamily slice2 = GeneratorFamily::slice(n, r, 2);
  CoverReport rep;
  rep.families = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    GeneratorFamily f = all.family(i);
    const auto& gens = f.generators();
    const bool inside_star = std::all_of(gens.begin(), gens.end(), [](const RSet& g) { return g.at(1) == 1; });
    const bool inside_slice2 = std::all_of(gens.begin(), gens.end(), [&](const RSet& g) { return member(slice2, g); });
    if (inside_star || inside_slice2) continue;
    ++rep.checked;
    // the cover is compressed, so containing the generators is enough
    if (!std::all_of(gens.begin(), gens.end(), [&](const RSet& g) { return member(cover, g); }))
      rep.uncovered.push_back(std::move(f));
  }
  return rep;
}

bool nicegens_cover_check(int n, int r, const ScaleGuard& guard) { return nicegens_cover(n, r, guard).ok(); }

std::vector<ScanRow> ScanReport::violations() const {
  std::vector<ScanRow> out;
  std::copy_if(rows.begin(), rows.end(), std::back_inserter(out), [](const ScanRow& row) { return row.violation; });
  return out;
}

ScanReport scan_conjecture(int r, int n_lo, int n_hi, Scope scope, const ScaleGuard& guard, unsigned jobs) {
  if (r < 3) throw std::invalid_argument("scan needs r >= 3");
  ScanReport rep;
  rep.r = r;
  rep.n_lo = n_lo;
  rep.n_hi = n_hi;
  rep.scope = scope;

  std::vector<CanonicalX> shapes{{1, 0}, {2, 0}, {3, 0}};
  for (int t = 4; t <= r; ++t) shapes.push_back({4, t});

  std::vector<int> ns;
  for (int n = std::max(n_lo, 2 * r); n <= n_hi; ++n) ns.push_back(n);
  std::vector<std::vector<ScanRow>> per_n(ns.size());

  auto work = [&](std::size_t idx) {
    const int n = ns[idx];
    std::optional<MaximalFamilies> families;
    if (scope == Scope::exhaustive) families.emplace(n, r, guard);
    for (const auto& shape : shapes) {
      const auto x = shape.elements(r);
      ScanRow row;
      row.n = n;
      row.shape = shape;
      row.verdict = scope == Scope::exhaustive ? exhaustive_verdict(*families, x) : single_gen_verdict(n, r, x);
      row.above_phi2 = above_phi_squared(n, r);
      row.violation = row.above_phi2 && !row.verdict.is_ekr_here;
      per_n[idx].push_back(std::move(row));
    }
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t idx; (idx = next++) < ns.size();) {
      try {
        work(idx);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(ns.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& rows : per_n)
    for (auto& row : rows) rep.rows.push_back(std::move(row));
  return rep;
}

bool borg_monotone_check(const GeneratorFamily& f, std::span<const int> x, std::span<const int> x2) {
  if (x.size() != x2.size()) throw std::invalid_argument("borg_monotone_check needs |X| == |X'|");
  if (!is_strictly_increasing(x) || !is_strictly_increasing(x2))
    throw std::invalid_argument("borg_monotone_check needs increasing sets");
  if (!leq_compression(x, x2)) throw std::invalid_argument("borg_monotone_check needs X <= X' pointwise");
  return count_hits(f, x) >= count_hits(f, x2);
}

}  // namespace ekrlab
