#include "toploc/algebra/poly_parse.hpp"

#include <cctype>

namespace toploc {

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Poly parse() {
    skip_space();
    if (pos_ == text_.size()) fail("expected a polynomial");
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    if (pos_ >= text_.size()) throw PolyParseError("unexpected end of polynomial: " + message, text_.size());
    throw PolyParseError(message, pos_);
  }

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

  Poly expr() {
    Poly result(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly t = term();
    result = negate ? -t : t;
    while (true) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        break;
      }
    }
    return result;
  }

  Poly term() {
    Poly result = factor();
    while (true) {
      if (accept('*')) {
        result = result * factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly divisor = factor();
        if (!divisor.is_constant() || divisor.is_zero()) {
          pos_ = at;
          fail("division is only allowed by a nonzero constant");
        }
        result = result.scaled(ring_->field().inv(divisor.constant_term()));
      } else {
        break;
      }
    }
    return result;
  }

  Poly factor() {
    Poly base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      if (pos_ - start > 5) {
        pos_ = start;
        fail("exponent too large");
      }
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      base = base.pow(e);
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a term");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Poly::constant(ring_, ring_->field().from_rational(mpq_class(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        throw PolyParseError("unknown variable '" + std::string(name) + "'", start, ErrorCode::UnknownIdentifier);
      }
      return Poly::variable(ring_, *index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

}  // namespace toploc
