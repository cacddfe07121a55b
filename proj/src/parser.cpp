#include "sympow/parser.hpp"

#include <cctype>

#include "sympow/errors.hpp"

namespace sympow {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

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

  Polynomial expr() {
    bool negate = accept('-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view digits = text_.substr(start, pos_ - start);
      if (digits.size() > 5 || std::stoul(std::string(digits)) > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return b;
  }

  Polynomial base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        fail("missing '*' between literal and variable");
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Polynomial::constant(ring_, FieldScalar::from_integer(value, ring_->field()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse_all(); }

std::vector<Polynomial> parse_poly_list(std::string_view text, const Ring& ring) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(',', start);
    const std::string_view piece = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in list item ") + std::to_string(out.size() + 1) + ": " + e.what(),
                       start + e.position());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string to_input_string(const Polynomial& f) {
  if (f.field().is_prime_field()) return f.to_string();
  // clear denominators, keep the sign of the leading coefficient
  if (f.is_zero()) return "0";
  mpz_class den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
  return f.scaled(FieldScalar::from_rational(mpq_class(den))).to_string();
}

}  // namespace sympow
