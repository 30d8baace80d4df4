#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntf/error.hpp"
#include "ntf/ideal.hpp"

namespace ntf {

// Text forms:
//   monomial   x1^4*x3 or x1^4x3   (the identity is "1")
//   ideal      vars=3; x2^4, x1*x2^3, x1^3*x2, x1^4*x3
// The header may be omitted, in which case the ring is the smallest one
// holding every variable mentioned.

inline std::string to_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 1; i <= m.num_vars(); ++i) {
    const Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// x1^4x3: no separators, as monomials are usually written by hand.
inline std::string to_compact(const Monomial& m) {
  std::string s = to_text(m);
  std::erase(s, '*');
  return s;
}

inline std::string to_text(const MonomialIdeal& ideal) {
  std::string out = "vars=" + std::to_string(ideal.num_vars()) + ";";
  bool first = true;
  for (const auto& g : ideal.generators()) {
    out += first ? " " : ", ";
    out += to_text(g);
    first = false;
  }
  return out;
}

inline std::string to_text(const PrimeSupport& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.vars().size(); ++k) {
    if (k) out += ',';
    out += 'x' + std::to_string(p.vars()[k]);
  }
  return out + ")";
}

namespace detail {

class TextCursor {
 public:
  TextCursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  std::size_t position() const noexcept { return base_ + pos_; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::size_t number(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::size_t{0xFFFFFFFFu} - digit) / 10) {
        pos_ = start;
        fail(std::string(what) + " is too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, position());
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

struct RawMonomial {
  std::vector<std::pair<std::size_t, Exponent>> factors;
  std::size_t position = 0;
};

inline RawMonomial read_monomial(TextCursor& in) {
  RawMonomial m;
  m.position = in.position();
  if (in.peek() == '1') {
    if (in.number("monomial") != 1) in.fail("expected a variable like x3");
    return m;
  }
  do {
    if (!in.accept('x')) in.fail("expected a variable like x3");
    const std::size_t start = in.position();
    const std::size_t index = in.number("variable index");
    if (index == 0) throw parse_error("variable indices start at 1", start);
    Exponent e = 1;
    if (in.accept('^')) e = static_cast<Exponent>(in.number("exponent"));
    m.factors.emplace_back(index, e);
  } while (in.accept('*') || in.peek() == 'x');  // x1*x4 or x1x4
  return m;
}

inline Monomial build(const RawMonomial& raw, std::size_t n) {
  std::vector<Exponent> e(n, 0);
  for (const auto& [index, power] : raw.factors) {
    if (index > n) {
      throw parse_error("x" + std::to_string(index) + " outside the declared " + std::to_string(n) +
                            " variables",
                        raw.position);
    }
    e[index - 1] = checked_add(e[index - 1], power);
  }
  return Monomial(std::move(e));
}

inline MonomialIdeal parse_ideal_text(std::string_view text) {
  TextCursor in(text, 0);
  std::optional<std::size_t> n;
  if (in.peek() == 'v') {
    for (char c : std::string_view("vars")) {
      if (!in.accept(c)) in.fail("expected 'vars='");
    }
    in.expect('=');
    n = in.number("variable count");
    if (*n == 0) in.fail("the ring needs at least one variable");
    if (!in.accept(';') && !in.done()) in.fail("expected ';' after the header");
  }
  std::vector<RawMonomial> raws;
  if (!in.done()) {
    do {
      raws.push_back(read_monomial(in));
    } while (in.accept(','));
  }
  if (!in.done()) in.fail("unexpected character");
  if (!n) {
    std::size_t top = 0;
    for (const auto& r : raws) {
      for (const auto& f : r.factors) top = std::max(top, f.first);
    }
    if (top == 0) throw parse_error("cannot infer the ring; add a 'vars=N;' header", 0);
    n = top;
  }
  std::vector<Monomial> gens;
  for (const auto& r : raws) gens.push_back(build(r, *n));
  return MonomialIdeal(*n, std::move(gens));
}

}  // namespace detail

// A single monomial in a ring with n variables.
inline Monomial parse_monomial(std::string_view text, std::size_t n) {
  detail::TextCursor in(text, 0);
  const auto raw = detail::read_monomial(in);
  if (!in.done()) in.fail("unexpected character");
  return detail::build(raw, n);
}

// Comma-separated variable indices or names: "4,7" or "x4,x7".
inline std::vector<std::size_t> parse_index_list(std::string_view text) {
  detail::TextCursor in(text, 0);
  std::vector<std::size_t> out;
  if (in.done()) return out;
  do {
    in.accept('x');
    out.push_back(in.number("variable index"));
  } while (in.accept(','));
  if (!in.done()) in.fail("unexpected character");
  return out;
}

}  // namespace ntf
