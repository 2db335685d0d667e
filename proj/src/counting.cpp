#include "ekrlab/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace ekrlab {

AvoidCounter::AvoidCounter(std::span<const int> x, bool memoize) : memoize_(memoize) {
  for (int v : x) {
    if (v < 1) continue;
    if (v >= static_cast<int>(in_x_.size())) in_x_.resize(static_cast<std::size_t>(v) + 1, 0);
    in_x_[v] = 1;
  }
}

std::size_t AvoidCounter::KeyHash::operator()(const std::vector<int>& k) const noexcept {
  return boost::hash_range(k.begin(), k.end());
}

BigNat AvoidCounter::count(std::span<const int> gen) {
  std::vector<int> g(gen.begin(), gen.end());
  return recurse(g);
}

BigNat AvoidCounter::recurse(const std::vector<int>& gen) {
  const int k = static_cast<int>(gen.size());
  if (k == 0) return 1;
  if (k == 1) {
    BigNat c = 0;
    for (int i = 1; i <= gen[0]; ++i)
      if (!excluded(i)) ++c;
    return c;
  }
  if (memoize_) {
    if (auto it = memo_.find(gen); it != memo_.end()) return it->second;
  }
  BigNat total = 0;
  std::vector<int> sub(static_cast<std::size_t>(k - 1));
  for (int i = k; i <= gen[k - 1]; ++i) {
    if (excluded(i)) continue;
    for (int j = 1; j < k; ++j) sub[j - 1] = std::min(gen[j - 1], i + j - k);
    total += recurse(sub);
  }
  if (memoize_) memo_.emplace(gen, total);
  return total;
}

BigNat count_avoid(const RSet& a, std::span<const int> x) { return AvoidCounter(x).count(a.elems()); }

BigNat count_hits(const GeneratorFamily& f, std::span<const int> x) {
  AvoidCounter all({});
  AvoidCounter avoid(x);
  BigInt total = 0;
  for_each_meet(f.generators(), [&](const RSet& m, int k) {
    BigInt term = BigInt(all.count(m.elems())) - avoid.count(m.elems());
    if (k % 2) total += term;
    else total -= term;
  });
  return to_nat(std::move(total));
}

BigNat count_hits_naive(const GeneratorFamily& f, std::span<const int> x) {
  std::vector<char> in_x(static_cast<std::size_t>(f.n()) + 1, 0);
  for (int v : x)
    if (v >= 1 && v <= f.n()) in_x[v] = 1;
  unsigned long long hits = 0;
  for_each_member(f, [&](std::span<const int> b) {
    for (int e : b) {
      if (in_x[e]) {
        ++hits;
        return;
      }
    }
  });
  return BigNat(hits);
}

BigNat star_count(int n, int r, int t) {
  if (t < 1 || t > n - 1) throw std::invalid_argument("star_count needs 1 <= t <= n-1");
  return to_nat(BigInt(binomial(n - 1, r - 1)) - binomial(n - 1 - t, r - 1));
}

BigNat star_hits(int n, int r, std::span<const int> x) {
  if (std::find(x.begin(), x.end(), 1) != x.end()) return binomial(n - 1, r - 1);
  const auto t = std::count_if(x.begin(), x.end(), [&](int v) { return v >= 2 && v <= n; });
  if (t == 0) return 0;
  return star_count(n, r, static_cast<int>(t));
}

std::string to_string(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::genfunc: return "genfunc";
    case Method::closed_form: return "closed_form";
  }
  return "?";
}

CountReport make_report(const GeneratorFamily& f, std::span<const int> x, Method method) {
  CountReport rep;
  rep.n = f.n();
  rep.r = f.r();
  rep.x.assign(x.begin(), x.end());
  switch (method) {
    case Method::naive: rep.hits = count_hits_naive(f, x); break;
    case Method::genfunc: rep.hits = count_hits(f, x); break;
    case Method::closed_form: {
      if (f.generators().size() != 1) throw std::invalid_argument("closed form needs a slice family A_{n,r,s}");
      int s = 0;
      for (int c = 1; c <= f.r() && !s; ++c)
        if (f == GeneratorFamily::slice(f.n(), f.r(), c)) s = c;
      if (!s) throw std::invalid_argument("closed form needs a slice family A_{n,r,s}");
      rep.hits = slice_count(f.n(), f.r(), s, x);
      break;
    }
  }
  rep.star = star_hits(f.n(), f.r(), x);
  rep.method = method;
  rep.leq_star = rep.hits <= rep.star;
  return rep;
}

std::vector<int> CanonicalX::elements(int r) const {
  switch (shape) {
    case 1: return {r + 2};
    case 2: return {4, r + 2};
    case 3: return {2, 4, r + 2};
    case 4: {
      if (t < 4 || t > r) throw std::invalid_argument("shape 4 needs 4 <= t <= r");
      std::vector<int> x;
      for (int v = 2; v <= t; ++v) x.push_back(v);
      x.push_back(r + 2);
      return x;
    }
    default: throw std::invalid_argument("canonical X shape must be 1..4");
  }
}

std::optional<CanonicalX> CanonicalX::match(std::span<const int> x, int r) {
  std::vector<int> v(x.begin(), x.end());
  for (int shape = 1; shape <= 3; ++shape)
    if (CanonicalX{shape, 0}.elements(r) == v) return CanonicalX{shape, 0};
  const int t = static_cast<int>(v.size());
  if (t >= 4 && t <= r && CanonicalX{4, t}.elements(r) == v) return CanonicalX{4, t};
  return std::nullopt;
}

namespace {

BigInt b(long long m, long long k) { return binomial(m, k); }

BigNat small_r3(int n, int s, int shape) {
  // r = 3, s in {2, 3}, X in {{5}, {4,5}, {2,4,5}}
  if (s == 2) {
    if (shape == 1) return 3;
    if (shape == 2) return 6;
    return BigNat(2 * n - 3);
  }
  if (shape == 1) return 6;
  if (shape == 2) return 9;
  return 10;
}

}  // namespace

BigNat slice_count(int n, int r, int s, CanonicalX shape) {
  if (r < 3) throw std::invalid_argument("slice_count needs r >= 3");
  if (s < 1 || s > r) throw std::invalid_argument("slice_count needs 1 <= s <= r");
  if (n < 2 * r) throw std::invalid_argument("slice_count needs n >= 2r");
  const int t = static_cast<int>(shape.elements(r).size());  // validates the shape
  if (s == 1) return star_count(n, r, t);
  if (r == 3) return small_r3(n, s, shape.shape);
  if (t == 2 && s == 2)
    return to_nat(2 * b(n - 3, r - 3) - b(n - 4, r - 4) + 2 * (2 * b(n - 4, r - 3) - b(n - 5, r - 4)));
  if (t == 2 && s == 3)
    return to_nat(2 * b(n - 4, r - 4) - b(n - 5, r - 5) + 3 * b(n - 4, r - 3) + 3 * b(n - 6, r - 4) +
                  3 * b(n - 5, r - 3));
  if (t == 3 && s == 2)
    return to_nat(b(n - 2, r - 2) + b(n - 3, r - 2) + 2 * b(n - 4, r - 3) - b(n - 5, r - 4));
  if (t == 3 && s == 3)
    return to_nat(b(n - 3, r - 3) + 3 * b(n - 4, r - 3) + 5 * b(n - 5, r - 3) + b(n - 6, r - 4));
  return formula_parts(n, r, s, t).total();
}

BigNat slice_count(int n, int r, int s, std::span<const int> x) {
  auto shape = CanonicalX::match(x, r);
  if (!shape) {
    throw std::invalid_argument("X = " + to_string(x) + " is not a canonical minimal set for r=" + std::to_string(r) +
                                "; use count_hits for arbitrary X");
  }
  return slice_count(n, r, s, *shape);
}

FormulaParts formula_parts(int n, int r, int s, int t) {
  BigInt c1 = 0, c2 = 0, c3 = 0;
  for (int i = s; i <= 2 * s - 1; ++i) c1 += (b(i - 1, s - 1) - b(i - t, s - 1)) * b(n - i, r - s);
  for (int i = s; i <= std::min(r + 1, 2 * s - 1); ++i) c2 += b(i - t, s - 1) * b(n - i - 1, r - s - 1);
  if (2 * s - 1 >= r + 2) {
    c3 = b(r + 2 - t, s - 1) * b(n - r - 2, r - s);
    for (int i = r + 3; i <= 2 * s - 1; ++i) c3 += b(i - t - 1, s - 2) * b(n - i, r - s);
  }
  FormulaParts p;
  p.count1 = to_nat(std::move(c1));
  p.count2 = to_nat(std::move(c2));
  p.count3 = to_nat(std::move(c3));
  p.d_sum = p.count1 + p.count2;
  p.q_num = p.count3;
  return p;
}

BigNat g_sum(int n, int r, int s, int t) { return formula_parts(n, r, s, t).count1; }

BigNat d_sum(int n, int r, int s, int t) { return formula_parts(n, r, s, t).d_sum; }

Rational q_ratio(int n, int r, int s, int t) {
  const BigNat den = binomial(n - 2, r - 2);
  if (den == 0) throw std::invalid_argument("q_ratio needs binom(n-2, r-2) > 0");
  return Rational(formula_parts(n, r, s, t).q_num, den);
}

bool q_within_bound(const Rational& q, int r) {
  if (q < 0) return true;
  // q^2 <= (13/4)^2 r^3 (477/500)^{2r}
  Rational rhs = Rational(169, 16) * BigInt(r) * r * r;
  const unsigned e = static_cast<unsigned>(2 * r);
  rhs *= Rational(BigInt(boost::multiprecision::pow(BigInt(477), e)), BigInt(boost::multiprecision::pow(BigInt(500), e)));
  return q * q <= rhs;
}

double q_bound(int r) { return 3.25 * std::pow(r, 1.5) * std::pow(0.954, r); }

bool CounterexampleThreshold::greater_than(long long n) const {
  const long long lhs = 2 * n - 3LL * r - 1;
  const long long disc = 5LL * r * r - 22LL * r + 25;
  return lhs < 0 || lhs * lhs < disc;
}

CounterexampleThreshold counterexample_threshold(int r) {
  if (r < 4) throw std::invalid_argument("counterexample threshold needs r >= 4");
  const long long disc = 5LL * r * r - 22LL * r + 25;
  CounterexampleThreshold th;
  th.r = r;
  th.value = (3.0 * r + 1 + std::sqrt(static_cast<double>(disc))) / 2;
  long long root = static_cast<long long>(std::sqrt(static_cast<double>(disc)));
  while (root * root > disc) --root;
  while ((root + 1) * (root + 1) <= disc) ++root;
  th.floor = (3LL * r + 1 + root) / 2;
  return th;
}

}  // namespace ekrlab
