#include "ekrlab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekrlab/counting.hpp"
#include "ekrlab/ekr.hpp"
#include "ekrlab/families.hpp"
#include "ekrlab/intersecting.hpp"
#include "ekrlab/literal.hpp"

namespace ekrlab::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Counts are JSON numbers while they fit in 64 bits and decimal strings beyond.
json big(const BigNat& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

double six_digits(double v) { return std::round(v * 1e6) / 1e6; }

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

double ms_since(Clock::time_point start) {
  return std::round(std::chrono::duration<double, std::milli>(Clock::now() - start).count() * 1e3) / 1e3;
}

struct CsvRow {
  std::string n, r, s_or_scope, x, hits, star, verdict;
};

struct Output {
  json query = json::object();
  json results = json::array();
  json violations = json::array();
  json timing = json::object();
  std::vector<CsvRow> rows;
  std::vector<std::string> notes;  // printed by the table format only
};

enum class Format { json, csv, table };

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Output& o, Format format, std::ostream& out) {
  static const CsvRow header{"n", "r", "s_or_scope", "X", "hits", "star", "verdict"};
  auto fields = [](const CsvRow& r) {
    return std::vector<std::string>{r.n, r.r, r.s_or_scope, r.x, r.hits, r.star, r.verdict};
  };
  switch (format) {
    case Format::json: {
      json doc = {{"query", o.query}, {"results", o.results}, {"violations", o.violations}, {"timing_ms", o.timing}};
      out << doc.dump(2) << '\n';
      return;
    }
    case Format::csv: {
      for (const auto* row : {&header}) {
        auto f = fields(*row);
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_field(f[i]);
        out << '\n';
      }
      for (const auto& row : o.rows) {
        auto f = fields(row);
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << csv_field(f[i]);
        out << '\n';
      }
      return;
    }
    case Format::table: {
      std::vector<std::vector<std::string>> all{fields(header)};
      for (const auto& row : o.rows) all.push_back(fields(row));
      std::vector<std::size_t> width(7, 0);
      for (const auto& f : all)
        for (std::size_t i = 0; i < f.size(); ++i) width[i] = std::max(width[i], f[i].size());
      for (const auto& f : all) {
        std::string line;
        for (std::size_t i = 0; i < f.size(); ++i) {
          line += f[i];
          if (i + 1 < f.size()) line += std::string(width[i] - f[i].size() + 2, ' ');
        }
        out << line << '\n';
      }
      for (const auto& note : o.notes) out << note << '\n';
      return;
    }
  }
}

struct Options {
  std::string format = "table";
  std::size_t max_candidates = 0;
  std::size_t max_cliques = 0;
  std::size_t max_members = 0;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  int n = 0, r = 0, s = 0, t = 0, shape = 0, gens = 2, n_lo = 0, n_hi = 0;
  std::string family, x, method = "genfunc", scope = "single";
};

ScaleGuard make_guard(const Options& o) {
  ScaleGuard g = ScaleGuard::from_env();
  if (o.max_candidates) g.max_candidates = o.max_candidates;
  if (o.max_cliques) g.max_cliques = o.max_cliques;
  if (o.max_members) g.max_members = o.max_members;
  return g;
}

void guard_naive(const GeneratorFamily& f, const ScaleGuard& g) {
  if (size(f) > g.max_members) {
    throw ScaleGuardExceeded("family has more than " + std::to_string(g.max_members) +
                             " members; raise --max-members to enumerate it");
  }
}

Scope parse_scope(const std::string& s) {
  if (s == "single" || s == "single_generator") return Scope::single_generator;
  if (s == "exhaustive") return Scope::exhaustive;
  throw std::invalid_argument("scope must be single or exhaustive");
}

std::string verdict_word(bool leq) { return leq ? "leq" : "gt"; }

json verdict_json(const EkrVerdict& v) {
  json j = {{"n", v.n},
            {"r", v.r},
            {"X", to_string(v.x)},
            {"scope", to_string(v.scope)},
            {"max_hits", big(v.max_hits)},
            {"star", big(v.star)},
            {"is_ekr_here", v.is_ekr_here},
            {"witness", format_generators(v.witness)}};
  if (!v.per_s.empty()) {
    json per = json::array();
    for (const auto& c : v.per_s) per.push_back(big(c));
    j["per_s"] = per;
    j["argmax_s"] = v.argmax_s;
  }
  return j;
}

CsvRow verdict_row(const EkrVerdict& v) {
  return {std::to_string(v.n), std::to_string(v.r), to_string(v.scope), to_string(v.x),
          v.max_hits.str(),    v.star.str(),        v.is_ekr_here ? "ekr" : "not_ekr"};
}

// count --family --X [--method]
int do_count(const Options& o, Output& out) {
  const auto guard = make_guard(o);
  const auto f = parse_family(o.family);
  const auto x = parse_set(o.x);
  out.query = {{"command", "count"}, {"family", format_family(f)}, {"X", to_string(x)}, {"method", o.method}};

  std::vector<Method> methods;
  if (o.method == "naive") methods = {Method::naive};
  else if (o.method == "genfunc") methods = {Method::genfunc};
  else if (o.method == "both") methods = {Method::naive, Method::genfunc};
  else throw std::invalid_argument("method must be naive, genfunc or both");

  std::vector<CountReport> reports;
  for (Method m : methods) {
    if (m == Method::naive) guard_naive(f, guard);
    const auto start = Clock::now();
    reports.push_back(make_report(f, x, m));
    out.timing[to_string(m)] = ms_since(start);
  }
  if (reports.size() == 2 && reports[0].hits != reports[1].hits) {
    throw std::logic_error("naive and genfunc counts disagree: " + reports[0].hits.str() + " vs " +
                           reports[1].hits.str());
  }
  for (const auto& rep : reports) {
    out.results.push_back({{"n", rep.n},
                           {"r", rep.r},
                           {"X", to_string(rep.x)},
                           {"method", to_string(rep.method)},
                           {"hits", big(rep.hits)},
                           {"star", big(rep.star)},
                           {"leq_star", rep.leq_star}});
    out.rows.push_back({std::to_string(rep.n), std::to_string(rep.r), to_string(rep.method), to_string(rep.x),
                        rep.hits.str(), rep.star.str(), verdict_word(rep.leq_star)});
  }
  return kOk;
}

// star --n --r --t
int do_star(const Options& o, Output& out) {
  const auto v = star_count(o.n, o.r, o.t);
  out.query = {{"command", "star"}, {"n", o.n}, {"r", o.r}, {"t", o.t}};
  out.results.push_back({{"n", o.n}, {"r", o.r}, {"t", o.t}, {"star", big(v)}});
  out.rows.push_back({std::to_string(o.n), std::to_string(o.r), "star", "t=" + std::to_string(o.t), v.str(), v.str(), ""});
  return kOk;
}

// slice --n --r --s --case [--t]
int do_slice(const Options& o, Output& out) {
  const CanonicalX shape{o.shape, o.t};
  const auto x = shape.elements(o.r);
  const auto closed = slice_count(o.n, o.r, o.s, shape);
  const auto gen = count_hits(GeneratorFamily::slice(o.n, o.r, o.s), x);
  const auto star = star_hits(o.n, o.r, x);
  out.query = {{"command", "slice"}, {"n", o.n}, {"r", o.r}, {"s", o.s}, {"case", o.shape}, {"X", to_string(x)}};
  out.results.push_back({{"n", o.n},
                         {"r", o.r},
                         {"s", o.s},
                         {"X", to_string(x)},
                         {"closed_form", big(closed)},
                         {"genfunc", big(gen)},
                         {"star", big(star)},
                         {"agree", closed == gen}});
  out.rows.push_back({std::to_string(o.n), std::to_string(o.r), std::to_string(o.s), to_string(x), closed.str(),
                      star.str(), verdict_word(closed <= star)});
  if (closed != gen) {
    out.notes.push_back("closed form and genfunc disagree: " + closed.str() + " vs " + gen.str());
    return kError;
  }
  return kOk;
}

// check --n --r --X --scope
int do_check(const Options& o, Output& out) {
  if (o.n < 2 * o.r) throw std::invalid_argument("check needs n >= 2r");
  const auto x = parse_set(o.x);
  const Scope scope = parse_scope(o.scope);
  const auto v = scope == Scope::exhaustive ? exhaustive_verdict(o.n, o.r, x, make_guard(o))
                                            : single_gen_verdict(o.n, o.r, x);
  out.query = {{"command", "check"}, {"n", o.n}, {"r", o.r}, {"X", to_string(x)}, {"scope", to_string(scope)}};
  out.results.push_back(verdict_json(v));
  out.rows.push_back(verdict_row(v));
  out.notes.push_back("witness " + format_generators(v.witness));
  if (!v.is_ekr_here) {
    out.violations.push_back(verdict_json(v));
    out.notes.push_back("VIOLATION: max |A(X)| = " + v.max_hits.str() + " > |S(X)| = " + v.star.str());
    return kViolation;
  }
  return kOk;
}

// scan --r --n-lo --n-hi --scope
int do_scan(const Options& o, Output& out) {
  const Scope scope = parse_scope(o.scope);
  const auto rep = scan_conjecture(o.r, o.n_lo, o.n_hi, scope, make_guard(o), o.jobs);
  const double phi2r = (3.0 + std::sqrt(5.0)) / 2.0 * o.r;
  out.query = {{"command", "scan"},     {"r", o.r},
               {"n_lo", o.n_lo},        {"n_hi", o.n_hi},
               {"scope", to_string(scope)}, {"phi_squared_r_threshold", six_digits(phi2r)}};
  for (const auto& row : rep.rows) {
    json j = verdict_json(row.verdict);
    j["above_phi_squared"] = row.above_phi2;
    j["violation"] = row.violation;
    out.results.push_back(j);
    if (row.violation) out.violations.push_back(j);
    CsvRow csv = verdict_row(row.verdict);
    if (!row.verdict.is_ekr_here) csv.verdict += row.above_phi2 ? "_above_phi2" : "_below_phi2";
    out.rows.push_back(csv);
  }
  out.notes.push_back("phi^2 r = " + fixed6(phi2r) + "; violations above it: " +
                      std::to_string(out.violations.size()));
  return out.violations.empty() ? kOk : kViolation;
}

// maximal --n --r
int do_maximal(const Options& o, Output& out) {
  const MaximalFamilies all(o.n, o.r, make_guard(o));
  const auto star = binomial(o.n - 1, o.r - 1);
  out.query = {{"command", "maximal"}, {"n", o.n}, {"r", o.r}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto f = all.family(i);
    const auto members = all.member_count(i);
    out.results.push_back({{"index", i}, {"generators", format_generators(f.generators())}, {"size", big(members)}});
    out.rows.push_back({std::to_string(o.n), std::to_string(o.r), "family#" + std::to_string(i),
                        format_generators(f.generators()), members.str(), star.str(), verdict_word(members <= star)});
  }
  out.notes.push_back(std::to_string(all.size()) + " maximal families over " + std::to_string(all.candidate_count()) +
                      " candidate generators");
  return kOk;
}

// cover --n --r
int do_cover(const Options& o, Output& out) {
  const auto rep = nicegens_cover(o.n, o.r, make_guard(o));
  out.query = {{"command", "cover"}, {"n", o.n}, {"r", o.r}, {"cover", format_family(nicegens_family(o.n, o.r))}};
  out.results.push_back({{"n", o.n},
                         {"r", o.r},
                         {"families", rep.families},
                         {"checked", rep.checked},
                         {"uncovered", rep.uncovered.size()},
                         {"ok", rep.ok()}});
  for (const auto& f : rep.uncovered) out.violations.push_back({{"family", format_family(f)}});
  out.rows.push_back({std::to_string(o.n), std::to_string(o.r), "cover", "", std::to_string(rep.checked),
                      std::to_string(rep.families), rep.ok() ? "pass" : "fail"});
  return rep.ok() ? kOk : kViolation;
}

// bench --n --r --gens [--X]
int do_bench(const Options& o, Output& out) {
  if (o.gens < 1 || o.gens + 1 > o.r) throw std::invalid_argument("bench needs 1 <= gens <= r-1");
  std::vector<std::vector<int>> raw;
  for (int s = 2; s <= o.gens + 1; ++s) {
    std::vector<int> g;
    for (int e = s; e <= 2 * s - 1; ++e) g.push_back(e);
    raw.push_back(std::move(g));
  }
  const auto f = GeneratorFamily::from_raw(o.n, o.r, raw);
  const auto x = o.x.empty() ? std::vector<int>{2, 4, o.r + 2} : parse_set(o.x);
  const auto guard = make_guard(o);
  guard_naive(f, guard);

  auto start = Clock::now();
  const auto naive = count_hits_naive(f, x);
  const double naive_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  // genfunc is fast enough that a single run is mostly timer noise
  BigNat gen;
  int reps = 0;
  start = Clock::now();
  double gen_total = 0;
  do {
    gen = count_hits(f, x);
    ++reps;
    gen_total = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  } while (gen_total < 50.0 && reps < 10000);
  const double gen_ms = gen_total / reps;

  if (naive != gen) throw std::logic_error("naive and genfunc counts disagree: " + naive.str() + " vs " + gen.str());
  const double speedup = gen_ms > 0 ? naive_ms / gen_ms : std::numeric_limits<double>::infinity();

  out.query = {{"command", "bench"}, {"n", o.n}, {"r", o.r}, {"gens", o.gens}, {"family", format_family(f)},
               {"X", to_string(x)}};
  out.results.push_back({{"hits", big(gen)},
                         {"agree", true},
                         {"genfunc_runs", reps},
                         {"speedup_ratio", six_digits(speedup)}});
  out.timing["naive"] = six_digits(naive_ms);
  out.timing["genfunc"] = six_digits(gen_ms);
  out.rows.push_back({std::to_string(o.n), std::to_string(o.r), "bench", to_string(x), gen.str(),
                      star_hits(o.n, o.r, x).str(), "agree"});
  out.notes.push_back("family " + format_family(f));
  out.notes.push_back("naive " + fixed6(naive_ms) + " ms, genfunc " + fixed6(gen_ms) + " ms (mean of " +
                      std::to_string(reps) + "), speedup " + fixed6(speedup) + "x");
  return kOk;
}

// Golden regression values, each reproduced by every applicable counter.
int do_paper_check(const Options&, Output& out) {
  out.query = {{"command", "paper-check"}};
  bool all_ok = true;
  auto record = [&](const std::string& name, const std::string& n, int r, const std::string& x, const std::string& expected,
                    const std::string& got, bool ok) {
    all_ok = all_ok && ok;
    out.results.push_back({{"check", name}, {"n", n}, {"r", r}, {"X", x}, {"expected", expected}, {"got", got},
                           {"pass", ok}});
    out.rows.push_back({n, std::to_string(r), name, x, got, expected, ok ? "PASS" : "FAIL"});
  };

  {
    const int n = 11, r = 5;
    const std::vector<int> x{4, 7};
    const int expected[] = {140, 121, 136, 140, 105};
    for (int s = 1; s <= r; ++s) {
      const auto f = GeneratorFamily::slice(n, r, s);
      const auto c = slice_count(n, r, s, x), g = count_hits(f, x), v = count_hits_naive(f, x);
      record("slice s=" + std::to_string(s), std::to_string(n), r, to_string(x), std::to_string(expected[s - 1]),
             c.str() + "/" + g.str() + "/" + v.str(), c == expected[s - 1] && g == c && v == c);
    }
    const auto st = star_count(n, r, 2);
    record("star", std::to_string(n), r, to_string(x), "140", st.str(), st == 140);
    const auto f = parse_family("n=11 r=5 gens=[{2,3,4};{3,4,6,7}]");
    const auto g = count_hits(f, x), v = count_hits_naive(f, x);
    record("two-generator family", std::to_string(n), r, to_string(x), "142", g.str() + "/" + v.str(), g == 142 && v == 142);
  }

  {
    // r = 3: (s, X) -> value as a function of n
    struct Entry {
      int s;
      std::vector<int> x;
      std::function<long long(int)> value;
      std::string formula;
    };
    const std::vector<Entry> entries{
        {2, {5}, [](int) { return 3; }, "3"},         {2, {4, 5}, [](int) { return 6; }, "6"},
        {2, {2, 4, 5}, [](int n) { return 2LL * n - 3; }, "2n-3"},
        {3, {5}, [](int) { return 6; }, "6"},         {3, {4, 5}, [](int) { return 9; }, "9"},
        {3, {2, 4, 5}, [](int) { return 10; }, "10"}};
    for (const auto& e : entries) {
      bool ok = true;
      for (int n = 6; n <= 20; ++n) {
        const auto f = GeneratorFamily::slice(n, 3, e.s);
        const BigNat want = e.value(n);
        ok = ok && slice_count(n, 3, e.s, e.x) == want && count_hits(f, e.x) == want && count_hits_naive(f, e.x) == want;
      }
      record("r=3 s=" + std::to_string(e.s), "6..20", 3, to_string(e.x), e.formula, ok ? e.formula : "mismatch",
             ok);
    }
  }

  for (int r = 4; r <= 10; ++r) {
    const auto th = counterexample_threshold(r);
    const std::vector<int> x{2, 4, r + 2};
    bool ok = true;
    std::string beats;
    for (int n = 2 * r; n <= 3 * r + 2; ++n) {
      const auto f = GeneratorFamily::from_raw(n, r, {{2, 3}});
      const bool wins = count_hits(f, x) > star_hits(n, r, x);
      if (wins) beats += (beats.empty() ? "" : ",") + std::to_string(n);
      ok = ok && wins == th.greater_than(n);
    }
    long long last = 2 * r - 1;
    while (th.greater_than(last + 1)) ++last;
    record("{2,3} beats star below " + fixed6(th.value), std::to_string(2 * r) + ".." + std::to_string(3 * r + 2), r,
           to_string(x), "n in [" + std::to_string(2 * r) + "," + std::to_string(last) + "]", "n in {" + beats + "}", ok);
  }

  out.notes.push_back(all_ok ? "all golden checks pass" : "GOLDEN CHECK FAILURE");
  return all_ok ? kOk : kError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and EKR verdicts for compressed intersecting families"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--max-candidates", o.max_candidates, "Candidate generator limit for exhaustive enumeration");
  app.add_option("--max-cliques", o.max_cliques, "Maximal family limit for exhaustive enumeration");
  app.add_option("--max-members", o.max_members, "Member limit for naive enumeration");
  app.add_option("--jobs", o.jobs, "Worker threads for scan")->check(CLI::PositiveNumber);

  std::function<int(const Options&, Output&)> handler;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, Output&)) {
    auto* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* count = sub("count", "Count |F(X)| for a generator family", do_count);
  count->add_option("--family", o.family, "n=<int> r=<int> gens=[{..};{..}]")->required();
  count->add_option("--X", o.x, "{a,b,...}")->required();
  count->add_option("--method", o.method, "naive | genfunc | both");

  auto* star = sub("star", "|S_{n,r}(X)| for |X| = t", do_star);
  star->add_option("--n", o.n)->required();
  star->add_option("--r", o.r)->required();
  star->add_option("--t", o.t)->required();

  auto* slice = sub("slice", "Closed-form |A_{n,r,s}(X)| for a canonical X, cross-checked", do_slice);
  slice->add_option("--n", o.n)->required();
  slice->add_option("--r", o.r)->required();
  slice->add_option("--s", o.s)->required();
  slice->add_option("--case", o.shape, "1: {r+2}  2: {4,r+2}  3: {2,4,r+2}  4: {2..t,r+2}")->required();
  slice->add_option("--t", o.t, "|X| for case 4");

  auto* check = sub("check", "EKR verdict at one (n, r, X)", do_check);
  check->add_option("--n", o.n)->required();
  check->add_option("--r", o.r)->required();
  check->add_option("--X", o.x)->required();
  check->add_option("--scope", o.scope, "single | exhaustive");

  auto* scan = sub("scan", "Conjecture scan over canonical X", do_scan);
  scan->add_option("--r", o.r)->required();
  scan->add_option("--n-lo", o.n_lo)->required();
  scan->add_option("--n-hi", o.n_hi)->required();
  scan->add_option("--scope", o.scope, "single | exhaustive");

  auto* maximal = sub("maximal", "List maximal compressed intersecting families", do_maximal);
  maximal->add_option("--n", o.n)->required();
  maximal->add_option("--r", o.r)->required();

  auto* cover = sub("cover", "Check the covering family on every maximal family", do_cover);
  cover->add_option("--n", o.n)->required();
  cover->add_option("--r", o.r)->required();

  auto* bench = sub("bench", "Wall time of naive enumeration vs the generating function", do_bench);
  bench->add_option("--n", o.n)->required();
  bench->add_option("--r", o.r)->required();
  bench->add_option("--gens", o.gens, "Number of generators [s,2s-1], s = 2..gens+1");
  bench->add_option("--X", o.x, "Defaults to {2,4,r+2}");

  sub("paper-check", "Golden regression table", do_paper_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  const Format format = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::table;
  Output result;
  try {
    const auto start = Clock::now();
    const int code = handler(o, result);
    result.timing["total"] = ms_since(start);
    emit(result, format, out);
    return code;
  } catch (const ScaleGuardExceeded& e) {
    err << "scale guard exceeded: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace ekrlab::cli
