#pragma once

// The canonical text form of Seifert invariants:
//   SFS(g=<int>, s=<int>[, b=<int>]; <b1>/<a1>, <b2>/<a2>, ...)
// plus the compact closed form "(b; b1/a1, ...)" with g = 0, s = 0 implied.
// Whitespace-insensitive; parse errors carry the offending position.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sfq/seifert.hpp"

namespace sfq {

class SfsParseError : public std::invalid_argument {
 public:
  SfsParseError(const std::string& reason, std::size_t position)
      : std::invalid_argument(reason + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class SfsParser {
 public:
  explicit SfsParser(const std::string& text) : text_(text) {}

  SeifertData parse() {
    skip_ws();
    bool compact = true;
    if (peek() == 'S' || peek() == 's') {
      expect_keyword("SFS");
      compact = false;
    }
    expect('(');
    std::int64_t g = 0, s = 0;
    std::optional<std::int64_t> b;
    if (compact) {
      b = integer("obstruction");
    } else {
      expect_keyword("g");
      expect('=');
      g = integer("genus");
      expect(',');
      expect_keyword("s");
      expect('=');
      s = integer("boundary count");
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        expect_keyword("b");
        expect('=');
        b = integer("obstruction");
      }
    }
    expect(';');
    std::vector<FiberInvariant> fibers;
    skip_ws();
    if (peek() != ')') {
      for (;;) {
        std::size_t at = pos_;
        std::int64_t beta = integer("fiber numerator");
        expect('/');
        std::int64_t alpha = integer("fiber multiplicity");
        if (alpha < 2) throw SfsParseError("fiber multiplicity must be >= 2", at);
        if (beta <= 0 || beta >= alpha)
          throw SfsParseError("fiber invariant not normalized (need 0 < beta < alpha)", at);
        if (std::gcd(alpha, beta) != 1)
          throw SfsParseError("fiber invariant not reduced (gcd(alpha, beta) != 1)", at);
        fibers.push_back({alpha, beta});
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) throw SfsParseError("trailing input", pos_);
    if (s == 0 && !b) throw SfsParseError("obstruction b required when s = 0", pos_);
    if (s > 0 && b) throw SfsParseError("obstruction b must be absent when s > 0", pos_);
    if (g < 0) throw SfsParseError("genus must be >= 0", 0);
    if (s < 0) throw SfsParseError("boundary count must be >= 0", 0);
    return SeifertData(g, s, b, std::move(fibers));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SfsParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void expect_keyword(const std::string& kw) {
    skip_ws();
    std::size_t at = pos_;
    for (char c : kw) {
      if (pos_ >= text_.size() ||
          std::tolower(static_cast<unsigned char>(text_[pos_])) !=
              std::tolower(static_cast<unsigned char>(c)))
        throw SfsParseError("expected '" + kw + "'", at);
      ++pos_;
    }
  }
  std::int64_t integer(const std::string& what) {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SfsParseError("expected an integer for the " + what, at);
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t{1} << 56)) throw SfsParseError(what + " too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SeifertData parse_sfs(const std::string& text) { return detail::SfsParser(text).parse(); }

/// Canonical emission; parse(format(m)) == m.
inline std::string format_sfs(const SeifertData& m) {
  std::ostringstream os;
  os << "SFS(g=" << m.genus() << ", s=" << m.boundary_count();
  if (m.obstruction()) os << ", b=" << *m.obstruction();
  os << ";";
  bool first = true;
  for (const auto& f : m.fibers()) {
    os << (first ? " " : ", ") << f.beta << "/" << f.alpha;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace sfq
