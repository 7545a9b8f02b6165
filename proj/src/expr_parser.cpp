#include "clifan/expr_parser.hpp"

#include <cctype>

namespace clifan {

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, int m) : text_(text), m_(m) {}

  PolyField parse() {
    PolyField f = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const { throw ParseError(message, at); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return text_.substr(start, pos_ - start);
  }

  long small_integer() {
    const std::size_t start = pos_;
    const auto d = digits();
    if (d.size() > 6) fail_at("integer too large", start);
    return std::stol(std::string(d));
  }

  PolyField expr() {
    PolyField acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  PolyField term() {
    PolyField acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  PolyField factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  PolyField power() {
    PolyField base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const long e = small_integer();
    if (e > kMaxExponent) fail_at("exponent exceeds " + std::to_string(kMaxExponent), at);
    PolyField out = PolyField::constant(Multivector(m_, Rational(1)));
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  PolyField primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == 'x') return variable();
    if (c == 'e') return blade();
    if (c == '(') {
      ++pos_;
      PolyField inner = expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  PolyField number() {
    Integer num(std::string(digits()), 10);
    Integer den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = Integer(std::string(digits()), 10);
      if (den == 0) fail_at("zero denominator", at);
    }
    Rational r(num, den);
    r.canonicalize();
    return PolyField::constant(Multivector(m_, r));
  }

  PolyField variable() {
    const std::size_t at = pos_;
    ++pos_;  // 'x'
    if (!peek_digit()) fail("expected variable index after 'x'");
    const long i = small_integer();
    if (i < 1 || i > m_) fail_at("unknown variable x" + std::to_string(i) + " (m = " + std::to_string(m_) + ")", at);
    return PolyField::variable(m_, static_cast<int>(i));
  }

  PolyField blade() {
    ++pos_;  // 'e'
    expect('[');
    Multivector v(m_, Rational(1));
    if (!accept(']')) {
      do {
        const std::size_t at = (skip_space(), pos_);
        const long i = small_integer();
        if (i < 1 || i > m_) fail_at("blade index " + std::to_string(i) + " out of range 1.." + std::to_string(m_), at);
        v = v * Multivector::basis_vector(m_, static_cast<int>(i));
      } while (accept(','));
      expect(']');
    }
    return PolyField::constant(v);
  }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyField parse_field(std::string_view text, int m) {
  if (m < 1 || m > kMaxDimension) throw DimensionError("unsupported dimension " + std::to_string(m));
  return Parser(text, m).parse();
}

Multivector parse_multivector(std::string_view text, int m) {
  const PolyField f = parse_field(text, m);
  if (f.degree() > 0) throw ParseError("expected a constant multivector", 0);
  return f.coefficient(MultiIndex::zero(m));
}

}  // namespace clifan
