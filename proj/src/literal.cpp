#include "ekrlab/literal.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ekrlab {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text) : src_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  int integer() {
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{} || p == s_.data() + pos_) fail("expected an integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

  std::vector<int> set() {
    expect("{");
    std::vector<int> out;
    if (!accept('}')) {
      do out.push_back(integer());
      while (accept(','));
      expect("}");
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] < 1) fail("set elements must be positive");
      if (i && out[i] <= out[i - 1]) fail("set elements must be strictly increasing");
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed literal '" + std::string(src_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

 private:
  std::string_view src_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> parse_set(std::string_view text) {
  Cursor c(text);
  auto out = c.set();
  if (!c.done()) c.fail("trailing characters");
  return out;
}

GeneratorFamily parse_family(std::string_view text) {
  Cursor c(text);
  c.expect("n=");
  const int n = c.integer();
  c.expect("r=");
  const int r = c.integer();
  c.expect("gens=[");
  std::vector<std::vector<int>> raw;
  do raw.push_back(c.set());
  while (c.accept(';'));
  c.expect("]");
  if (!c.done()) c.fail("trailing characters");
  return GeneratorFamily::from_raw(n, r, raw);
}

std::string format_generators(const std::vector<RSet>& gens) {
  std::string out = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ';';
    out += to_string(gens[i]);
  }
  return out + "]";
}

std::string format_family(const GeneratorFamily& f) {
  return "n=" + std::to_string(f.n()) + " r=" + std::to_string(f.r()) + " gens=" + format_generators(f.generators());
}

}  // namespace ekrlab
