#pragma once

// Words over a finite generating set, free reduction, and Dehn's algorithm
// for closed-surface groups. A word is a sequence of signed 1-based
// generator indices; negative means the inverse.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfq {

using Word = std::vector<int>;

inline Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word word_pow(const Word& w, std::int64_t k) {
  Word base = k >= 0 ? w : inverse_word(w);
  std::int64_t reps = k >= 0 ? k : -k;
  Word out;
  out.reserve(base.size() * reps);
  for (std::int64_t i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

/// [a, b] = a b a^-1 b^-1 on single generators.
inline Word commutator(int a, int b) { return {a, b, -a, -b}; }

/// Cancel adjacent x x^-1 pairs; the canonical form of a free-group element.
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int letter : w) {
    if (letter == 0) throw std::invalid_argument("free_reduce: zero letter");
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

/// Strip matching conjugation from both ends; returns (conjugator, core)
/// with w = conjugator * core * conjugator^-1 and core cyclically reduced.
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {conj, core};
}

/// The standard one-relator word of the closed orientable genus-g surface,
/// [a_1,b_1]...[a_g,b_g] over generators 1..2g (a_j = 2j-1, b_j = 2j).
inline Word surface_relator(std::int64_t genus) {
  Word r;
  for (std::int64_t j = 1; j <= genus; ++j) {
    Word c = commutator(static_cast<int>(2 * j - 1), static_cast<int>(2 * j));
    r.insert(r.end(), c.begin(), c.end());
  }
  return r;
}

/// Parse a word like "a b^-1 (a b)^2" over the given generator names.
/// Juxtaposition is product, ^ takes integer exponents, parentheses group.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_exponent = [&]() -> std::int64_t {
    skip_ws();
    if (pos >= text.size() || text[pos] != '^') return 1;
    ++pos;
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("parse_word: expected an integer exponent");
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return neg ? -v : v;
  };

  auto parse_sequence = [&](auto&& self) -> Word {
    Word out;
    for (;;) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')') return out;
      Word factor;
      if (text[pos] == '(') {
        ++pos;
        factor = self(self);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')')
          throw std::invalid_argument("parse_word: missing ')'");
        ++pos;
      } else {
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < names.size(); ++i) {
          const std::string& name = names[i];
          if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
            best = static_cast<int>(i);
            best_len = name.size();
          }
        }
        if (best < 0)
          throw std::invalid_argument("parse_word: unknown generator at position " +
                                      std::to_string(pos));
        pos += best_len;
        factor = {best + 1};
      }
      Word powered = word_pow(factor, parse_exponent());
      out.insert(out.end(), powered.begin(), powered.end());
    }
  };

  Word w = parse_sequence(parse_sequence);
  skip_ws();
  if (pos != text.size()) throw std::invalid_argument("parse_word: trailing input");
  return w;
}

/// Word problem for the closed orientable surface group of the given genus.
/// Genus 1 reduces to the abelian normal form; genus >= 2 runs Dehn's
/// algorithm on the symmetrized surface relator (replace any subword longer
/// than half the relator). Returns a word equal to w in the group, empty iff
/// w is trivial.
inline Word dehn_reduce(const Word& w, std::int64_t genus) {
  if (genus < 1) throw std::invalid_argument("dehn_reduce: genus must be >= 1");
  for (int letter : w) {
    if (letter == 0 || letter > 2 * genus || letter < -2 * genus)
      throw std::invalid_argument("dehn_reduce: letter out of range for this genus");
  }

  if (genus == 1) {
    std::int64_t ea = 0, eb = 0;
    for (int letter : w) {
      if (letter == 1) ++ea;
      else if (letter == -1) --ea;
      else if (letter == 2) ++eb;
      else --eb;
    }
    Word out = word_pow(Word{1}, ea);
    Word bw = word_pow(Word{2}, eb);
    out.insert(out.end(), bw.begin(), bw.end());
    return out;
  }

  // Symmetrized set: all cyclic rotations of the relator and its inverse.
  const Word r = surface_relator(genus);
  const std::size_t rlen = r.size();  // 4g
  std::vector<Word> sym;
  for (const Word& base : {r, inverse_word(r)}) {
    for (std::size_t i = 0; i < rlen; ++i) {
      Word rot(base.begin() + i, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + i);
      sym.push_back(std::move(rot));
    }
  }

  Word cur = free_reduce(w);
  const std::size_t half = rlen / 2;  // 2g
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (const Word& u : sym) {
        std::size_t match = 0;
        while (match < u.size() && i + match < cur.size() && cur[i + match] == u[match]) ++match;
        if (match > half) {
          // u = p q with |p| = match; p = q^-1 in the group, so replace the
          // matched subword with the strictly shorter q^-1.
          Word tail(u.begin() + match, u.end());
          Word repl = inverse_word(tail);
          Word next(cur.begin(), cur.begin() + i);
          next.insert(next.end(), repl.begin(), repl.end());
          next.insert(next.end(), cur.begin() + i + match, cur.end());
          cur = free_reduce(next);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

}  // namespace sfq
