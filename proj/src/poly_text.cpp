#include <cctype>
#include <optional>
#include <vector>

#include "grassgb/gf2_poly.hpp"

namespace grassgb {

namespace {

struct RawTerm {
  std::uint64_t r = 0, b = 0, c = 0;
};

// Recursive-descent parser over the text with whitespace removed; offsets_
// maps every kept character back to its position in the original input.
class PolyParser {
 public:
  PolyParser(std::string_view text, bool allow_a) : allow_a_(allow_a) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
    end_offset_ = text.size();
  }

  std::vector<RawTerm> parse() {
    if (chars_.empty()) fail("expected a polynomial");
    if (chars_.size() == 1 && chars_[0] == '0') return {};
    std::vector<RawTerm> terms;
    terms.push_back(term());
    while (pos_ < chars_.size()) {
      expect('+');
      terms.push_back(term());
    }
    return terms;
  }

 private:
  RawTerm term() {
    RawTerm out;
    factor(out);
    while (peek() == '*') {
      ++pos_;
      factor(out);
    }
    return out;
  }

  void factor(RawTerm& out) {
    const std::size_t start = pos_;
    const char ch = peek();
    if (ch == '1') {
      ++pos_;
      return;
    }
    std::uint64_t* slot = nullptr;
    if (ch == 'a') {
      if (!allow_a_) fail("the generator a needs a tower parameter");
      ++pos_;
      slot = &out.r;
    } else if (ch == 'w') {
      ++pos_;
      if (peek() == '2') {
        slot = &out.b;
      } else if (peek() == '3') {
        slot = &out.c;
      } else {
        fail("expected w2 or w3");
      }
      ++pos_;
    } else {
      fail(ch == '\0' ? "unexpected end of input" : std::string("unexpected '") + ch + "'");
    }
    std::uint64_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      exponent = integer();
    }
    *slot += exponent;
    if (*slot > kMaxExponent) fail_at(start, "exponent out of range");
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > kMaxExponent) fail_at(start, "exponent out of range");
      ++pos_;
    }
    return value;
  }

  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t kept_index, const std::string& what) const {
    const std::size_t original = kept_index < offsets_.size() ? offsets_[kept_index] : end_offset_;
    throw ParseError(what, original);
  }

  bool allow_a_;
  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

void append_power(std::string& out, const char* name, std::uint64_t exponent) {
  if (exponent == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (exponent != 1) {
    out += '^';
    out += std::to_string(exponent);
  }
}

template <class P>
std::string join_terms(const P& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& m : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(m);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  std::vector<Monomial> terms;
  for (const RawTerm& raw : PolyParser(text, false).parse()) {
    terms.push_back({static_cast<Exponent>(raw.b), static_cast<Exponent>(raw.c)});
  }
  return Polynomial::from_terms(std::move(terms));
}

ExtPolynomial parse_ext_polynomial(std::string_view text, unsigned t) {
  std::vector<ExtMonomial> terms;
  for (const RawTerm& raw : PolyParser(text, true).parse()) {
    terms.push_back({static_cast<Exponent>(raw.r), static_cast<Exponent>(raw.b),
                     static_cast<Exponent>(raw.c), t});
  }
  return ExtPolynomial::from_terms(t, std::move(terms));
}

std::string to_string(const Monomial& m) {
  std::string out;
  append_power(out, "w2", m.b);
  append_power(out, "w3", m.c);
  return out.empty() ? "1" : out;
}

std::string to_string(const ExtMonomial& m) {
  std::string out;
  append_power(out, "a", m.r);
  append_power(out, "w2", m.b);
  append_power(out, "w3", m.c);
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) { return join_terms(p); }
std::string to_string(const ExtPolynomial& p) { return join_terms(p); }

}  // namespace grassgb
