#ifndef SOLIDUS_PARSE_HPP
#define SOLIDUS_PARSE_HPP

#include <string>
#include <vector>

#include "solidus/mpoly.hpp"

namespace solidus {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Recursive-descent parser for the repo-wide polynomial grammar:
/// variables from the given list, integer or p/q coefficients, `^` powers,
/// `*` optional, parentheses, whitespace insignificant.
class poly_parser {
 public:
  poly_parser(std::string text, std::vector<std::string> vars)
      : text_(std::move(text)), vars_(std::move(vars)) {}

  mpoly<rational> parse() {
    pos_ = 0;
    mpoly<rational> p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected input at position " + std::to_string(pos_));
    return p;
  }

 private:
  mpoly<rational> expr() {
    bool neg = false;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      if (take() == '-') neg = !neg;
      skip_ws();
    }
    mpoly<rational> acc = term();
    if (neg) acc = -acc;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      bool minus = take() == '-';
      mpoly<rational> t = term();
      acc = minus ? acc - t : acc + t;
      skip_ws();
    }
    return acc;
  }

  mpoly<rational> term() {
    mpoly<rational> acc = factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        take();
        acc = acc * factor();
      } else if (c == '(' || isalnum(static_cast<unsigned char>(c))) {
        acc = acc * factor();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  mpoly<rational> factor() {
    mpoly<rational> base = atom();
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      long n = integer_literal();
      if (n < 0) throw parse_error("negative exponent");
      mpoly<rational> r = mpoly<rational>::constant(vars_, rational(1));
      for (long i = 0; i < n; ++i) r = r * base;
      return r;
    }
    return base;
  }

  mpoly<rational> atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      take();
      mpoly<rational> p = expr();
      skip_ws();
      if (take() != ')') throw parse_error("expected ')'");
      return p;
    }
    if (c == '-') {
      take();
      return -atom();
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      rational num(digits());
      skip_ws();
      if (peek() == '/') {
        take();
        skip_ws();
        rational d(digits());
        if (is_zero(d)) throw parse_error("zero denominator");
        num /= d;
        num.canonicalize();
      }
      return mpoly<rational>::constant(vars_, num);
    }
    if (isalpha(static_cast<unsigned char>(c))) {
      std::string name(1, take());
      for (const auto& v : vars_)
        if (v == name) return mpoly<rational>::var(vars_, name);
      throw parse_error("unknown variable '" + name + "'");
    }
    throw parse_error(std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    skip_ws();
    if (!isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected integer");
    std::string out;
    while (isdigit(static_cast<unsigned char>(peek()))) out += take();
    return out;
  }

  long integer_literal() {
    std::string d = digits();
    if (d.size() > 6) throw parse_error("exponent out of range");
    return std::stol(d);
  }

  void skip_ws() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() {
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input");
    return text_[pos_++];
  }

  std::string text_;
  std::vector<std::string> vars_;
  size_t pos_ = 0;
};

inline const std::vector<std::string>& p3_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "t"};
  return v;
}
inline const std::vector<std::string>& p2_vars() {
  static const std::vector<std::string> v{"x", "y", "t"};
  return v;
}
inline const std::vector<std::string>& grammar_vars() {
  static const std::vector<std::string> v{"x", "y", "z", "t", "w"};
  return v;
}

/// Parses over the full grammar universe, then shrinks to the variables the
/// caller expects; rejects stray variables.
inline mpoly<rational> parse_poly(const std::string& text,
                                  const std::vector<std::string>& want_vars) {
  mpoly<rational> p = poly_parser(text, grammar_vars()).parse();
  for (size_t i = 0; i < grammar_vars().size(); ++i) {
    const std::string& name = grammar_vars()[i];
    bool wanted =
        std::find(want_vars.begin(), want_vars.end(), name) != want_vars.end();
    if (!wanted && p.degree_in(static_cast<int>(i)) > 0)
      throw parse_error("variable '" + name + "' not allowed here");
  }
  // project down to want_vars in their order
  mpoly<rational> q(want_vars);
  for (const auto& [e, c] : p.terms()) {
    typename mpoly<rational>::exps d(want_vars.size(), 0);
    for (size_t i = 0; i < want_vars.size(); ++i) {
      auto it = std::find(grammar_vars().begin(), grammar_vars().end(), want_vars[i]);
      d[i] = e[it - grammar_vars().begin()];
    }
    q.add_term(d, c);
  }
  return q;
}

}  // namespace solidus

#endif
