#pragma once

// Polynomial text grammar:
//   poly := term (('+' | '-') term)*      (a leading '-' is allowed)
//   term := [coeff '*'] mono | coeff
//   mono := var ['^' exp] ('*' var ['^' exp])*
// Coefficients are integers or a/b; whitespace is ignored.

#include <cctype>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace gradedreg {

namespace detail {

template <class F>
class PolyParser {
 public:
  PolyParser(const F& field, const std::string& text, const std::vector<std::string>& names)
      : field_(field), names_(names) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Polynomial<F> parse() {
    if (s_.empty()) fail("empty polynomial");
    Polynomial<F> out;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto [mono, coeff] = term();
      if (negative) coeff = field_.neg(coeff);
      Polynomial<F> t;
      if (!field_.is_zero(coeff)) t.terms.emplace_back(std::move(mono), coeff);
      out = add(field_, out, t);
      if (pos_ == s_.size()) break;
      char c = s_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negative = c == '-';
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw error(errc::parse_error, "polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  std::pair<Monomial, typename F::Elem> term() {
    Monomial m(names_.size());
    auto coeff = field_.one();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad fraction");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      try {
        coeff = field_.parse(s_.substr(start, pos_ - start));
      } catch (const error& e) {
        fail(e.what());
      }
      if (peek() != '*') return {m, coeff};
      ++pos_;
    }
    for (;;) {
      std::size_t start = pos_;
      if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected variable");
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) fail("unknown variable '" + name + "'");
      std::uint32_t e = 1;
      if (peek() == '^') {
        ++pos_;
        std::size_t es = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (es == pos_) fail("expected exponent");
        e = std::uint32_t(std::stoul(s_.substr(es, pos_ - es)));
      }
      m.exps[it - names_.begin()] += e;
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, coeff};
  }

  const F& field_;
  const std::vector<std::string>& names_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_polynomial(const F& field, const std::string& text, const std::vector<std::string>& names) {
  return detail::PolyParser<F>(field, text, names).parse();
}

}  // namespace gradedreg
