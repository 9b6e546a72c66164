#include "mps/parse.hpp"

#include <cctype>

namespace mps {

namespace {

class Parser {
 public:
  Parser(const std::string& s, RingPtr ring) : s_(s), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw syntax_error(pos_, "unexpected trailing input");
    return p;
  }

 private:
  const std::string& s_;
  RingPtr ring_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (peek('/')) {
        // '/' inside a coeff is consumed by atom(); here it divides by a
        // var-free factor (a field constant).
        ++pos_;
        size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant())
          throw syntax_error(at, "division by a non-constant expression");
        if (d.is_zero()) throw division_by_zero("in polynomial literal");
        acc = acc.scaled(ring_->field()->inv(d.constant_term()));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    while (peek('^')) {
      ++pos_;
      skip_ws();
      size_t at = pos_;
      long k = integer();
      if (k <= 0) throw syntax_error(at, "exponent must be a positive integer");
      base = base.pow(static_cast<int>(k));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw syntax_error(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw syntax_error(pos_, "expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return coeff();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw syntax_error(pos_, std::string("unexpected character '") + c + "'");
  }

  long integer() {
    skip_ws();
    size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw syntax_error(pos_, "expected an integer");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v < 0) throw syntax_error(at, "integer literal too large");
      ++pos_;
    }
    return v;
  }

  Polynomial coeff() {
    mpz_class num;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    num.set_str(s_.substr(start, pos_ - start), 10);
    // a '/' directly followed by an integer is a rational literal
    size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        mpz_class den;
        den.set_str(s_.substr(dstart, pos_ - dstart), 10);
        if (den == 0) throw division_by_zero("zero denominator in coefficient");
        mpq_class q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, ring_->field()->from_mpq(q));
      }
      pos_ = slash;  // not a rational literal; let term() handle '/'
    } else {
      pos_ = save;
    }
    return Polynomial::constant(ring_, ring_->field()->from_mpq(mpq_class(num)));
  }

  Polynomial identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    int vi = ring_->var_index(name);
    if (vi >= 0) return Polynomial::variable(ring_, vi);
    const auto& F = ring_->field();
    if (F->kind() == Field::Kind::FunctionField) {
      const auto& ps = F->params();
      for (size_t i = 0; i < ps.size(); ++i)
        if (ps[i] == name)
          return Polynomial::constant(ring_, F->param(static_cast<int>(i)));
    }
    throw unknown_variable(start, name);
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace mps
