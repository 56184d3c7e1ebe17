#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "derivation.hpp"
#include "polynomial.hpp"

namespace freediv {

/// "x:4,y:2,z:4" or "x,y,z" (weights default to 1).
inline RingPtr parse_ring(std::string_view text) {
  std::vector<std::string> vars;
  std::vector<std::int64_t> weights;
  std::size_t pos = 0;
  auto col = [&](std::size_t p) { return p + 1; };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string name(text.substr(start, pos - start));
    if (!GradedRing::valid_name(name)) throw ParseError("expected variable name", col(start));
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::int64_t w = 1;
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      std::size_t ws = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string num(text.substr(ws, pos - ws));
      if (num.empty() || num == "-" || num == "+") throw ParseError("expected integer weight", col(ws));
      if (num.size() > 15) throw ParseError("weight too large", col(ws));
      w = std::stoll(num);
      if (w <= 0) throw ParseError("weight of '" + name + "' must be positive", col(ws));
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    for (const auto& v : vars)
      if (v == name) throw ParseError("duplicate variable '" + name + "'", col(start));
    vars.push_back(name);
    weights.push_back(w);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", col(pos));
    ++pos;
  }
  return make_ring(std::move(vars), std::move(weights));
}

namespace detail {

// Recursive descent over
//   poly   := ["+"|"-"] term (("+"|"-") term)*
//   term   := [coeff ["*"]] factor ("*" factor)* | coeff
//   factor := var ["^" uint] | "(" poly ")" ["^" uint] | coeff
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", col());
    Polynomial p = poly();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", col());
    return p;
  }

 private:
  std::size_t col() const { return pos_ + 1; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial poly() {
    Polynomial acc(ring_);
    bool neg = false;
    if (at('+') || at('-')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') break;
      char c = s_[pos_];
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", col());
      ++pos_;
      Polynomial u = term();
      acc = c == '-' ? acc - u : acc + u;
    }
    return acc;
  }

  Polynomial term() {
    skip();
    if (!starts_factor()) {
      if (pos_ >= s_.size()) throw ParseError("expected term", col());
      throw ParseError(std::string("expected term, found '") + s_[pos_] + "'", col());
    }
    Polynomial acc = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        if (!starts_factor()) {
          if (pos_ >= s_.size()) throw ParseError("expected factor", col());
          throw ParseError(std::string("expected factor, found '") + s_[pos_] + "'", col());
        }
        acc = acc * factor();
      } else if (starts_factor() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        // juxtaposition such as 2x or 3(x+y)
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", col());
    std::string num(s_.substr(start, pos_ - start));
    if (num.size() > 5 || std::stoul(num) > 0xFFFF) {
      pos_ = start;
      throw ParseError("exponent too large", col());
    }
    return static_cast<unsigned>(std::stoul(num));
  }

  Polynomial factor() {
    skip();
    char c = s_[pos_];
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) throw ParseError("expected denominator", col());
      }
      std::string lit(s_.substr(start, pos_ - start));
      Rational q;
      try {
        q = parse_rational(lit);
      } catch (const ParseError&) {
        pos_ = start;
        throw ParseError("malformed coefficient '" + lit + "'", col());
      }
      return Polynomial::constant(ring_, q);
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      base = poly();
      if (!at(')')) {
        if (pos_ >= s_.size()) {
          pos_ = open;
          throw ParseError("unbalanced '('", col());
        }
        throw ParseError("expected ')'", col());
      }
      ++pos_;
    } else {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) {
        pos_ = start;
        throw ParseError("unknown variable '" + name + "'", col());
      }
      base = Polynomial::variable(ring_, *idx);
    }
    if (at('^')) {
      ++pos_;
      base = base.pow(exponent());
    }
    return base;
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).run();
}

/// "-2*y; 2*x; 0" (one entry per variable) or sparse "dx: -2*y, dy: 2*x".
inline Derivation parse_derivation(std::string_view text, const RingPtr& ring) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  bool sparse = false;
  if (first != std::string::npos && s[first] == 'd') {
    auto colon = s.find(':', first);
    if (colon != std::string::npos) {
      std::string head = s.substr(first + 1, colon - first - 1);
      while (!head.empty() && std::isspace(static_cast<unsigned char>(head.back()))) head.pop_back();
      sparse = ring->index_of(head).has_value();
    }
  }
  std::vector<Polynomial> cs(ring->size(), Polynomial(ring));
  if (!sparse) {
    std::size_t start = 0, k = 0;
    while (true) {
      std::size_t semi = s.find(';', start);
      std::string piece = s.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      if (k >= ring->size()) throw ParseError("too many derivation coefficients", start + 1);
      try {
        cs[k] = parse_poly(piece, ring);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at column")),
                         start + e.column);
      }
      ++k;
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    if (k != ring->size())
      throw ParseError("expected " + std::to_string(ring->size()) + " derivation coefficients, got " +
                           std::to_string(k),
                       s.size() + 1);
    return Derivation(ring, std::move(cs));
  }
  // Sparse form: entries "dv: poly" separated by commas at parenthesis depth 0.
  std::vector<bool> seen(ring->size(), false);
  std::size_t start = 0;
  while (start <= s.size()) {
    int depth = 0;
    std::size_t end = start;
    for (; end < s.size(); ++end) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      if (s[end] == ',' && depth == 0) break;
    }
    std::string piece = s.substr(start, end - start);
    auto colon = piece.find(':');
    auto lead = piece.find_first_not_of(" \t");
    if (colon == std::string::npos || lead == std::string::npos || piece[lead] != 'd')
      throw ParseError("expected 'dv: coefficient'", start + 1);
    std::string name = piece.substr(lead + 1, colon - lead - 1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    auto idx = ring->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", start + lead + 2);
    if (seen[*idx]) throw ParseError("repeated entry for '" + name + "'", start + lead + 1);
    seen[*idx] = true;
    try {
      cs[*idx] = parse_poly(piece.substr(colon + 1), ring);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at column")),
                       start + colon + 1 + e.column);
    }
    if (end >= s.size()) break;
    start = end + 1;
  }
  return Derivation(ring, std::move(cs));
}

}  // namespace freediv
