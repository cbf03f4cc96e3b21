#include "rinehart/parse.hpp"

#include <algorithm>
#include <cctype>

namespace rinehart {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, std::span<const std::string> names)
      : text_(text), ring_(ring), names_(names), n_(names.empty() ? 1 : names.size()) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "parse error at position " + std::to_string(pos_) + ": " + what + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_, n_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    if (accept('-')) return -factor();
    Poly base = primary();
    if (accept('^')) {
      unsigned long e = posint();
      Poly result = Poly::constant(ring_, n_, 1);
      for (unsigned long k = 0; k < e; ++k) result *= base;
      return result;
    }
    return base;
  }

  unsigned long posint() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a positive integer");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("integer too large");
    unsigned long v = std::stoul(digits);
    if (v == 0) fail("expected a positive integer");
    return v;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class num(std::string(text_.substr(start, pos_ - start)));
      mpz_class den = 1;
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) {
          pos_ = save;
          fail("expected a denominator after '/'");
        }
        den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) fail("zero denominator");
      }
      mpq_class value(num, den);
      value.canonicalize();
      return Poly::constant(ring_, n_, Scalar::from_rational(ring_, value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), ident);
      if (it != names_.end()) return Poly::variable(ring_, n_, static_cast<std::size_t>(it - names_.begin()));
      if (ident == "al") {
        if (!ring_.is_quad()) {
          pos_ = start;
          fail("'al' is only available in quadratic extensions");
        }
        return Poly::constant(ring_, n_, Scalar::adjoined(ring_));
      }
      pos_ = start;
      fail("unknown variable '" + std::string(ident) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::span<const std::string> names_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring, std::span<const std::string> names) {
  return PolyParser(text, ring, names).parse();
}

Scalar parse_scalar(std::string_view text, const Ring& ring) {
  Poly p = PolyParser(text, ring, {}).parse();
  if (!p.is_constant()) throw Error(ErrorCode::ParseError, "expected a constant: \"" + std::string(text) + "\"");
  return p.constant_value();
}

bool valid_variable_name(std::string_view name) {
  if (name.empty() || name == "al") return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

}  // namespace rinehart
