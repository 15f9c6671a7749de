#include "golod/parse.hpp"

#include <cctype>
#include <string>

namespace golod {
namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

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

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial first = product();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else break;
    }
    return acc;
  }

  Polynomial product() {
    Polynomial p = factor();
    while (accept('*')) p *= factor();
    char c = peek();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_') {
      fail("juxtaposition is not a product; use '*'");
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a non-negative integer exponent");
      }
      std::string digits = read_digits();
      if (digits.size() > 5) fail("exponent too large");
      base = pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(read_digits());
      std::size_t save = pos_;
      if (accept('/')) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          pos_ = save;
          fail("expected an integer denominator after '/'");
        }
        mpz_class den(read_digits());
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      value.canonicalize();
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char ch : piece)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) throw ParseError("empty list entry", 0, start + 1);
    try {
      out.push_back(parse_polynomial(ring, piece));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), 0, start + e.column());
    }
  };
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (!std::isspace(static_cast<unsigned char>(ch))) any = true;
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if (ch == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (any) flush(text.size());
  return out;
}

}  // namespace golod
