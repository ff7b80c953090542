#pragma once

// Finite presentations with marked peripheral subgroups, their text form,
// and the Seifert presentation builders.
//
// Closed case: < x_1..x_m, a_1,b_1..a_g,b_g, t | t central,
//   x_i^{alpha_i} t^{beta_i}, x_1..x_m [a_1,b_1]..[a_g,b_g] t^{-b} >.
// The product relator carries t^{-b}: the extra boundary curve x_0 of the
// punctured base satisfies x_0 = (x_1..x_m [a,b]..)^{-1}, so the filling
// relation x_0 t^b = 1 eliminates to this form. (Sanity check: the relator
// matrix drops rank exactly when e = 0, as it must for a surface bundle.)
//
// Bounded case: generators gain y_1..y_s, no obstruction relator; the
// boundary tori are marked as peripheral subgroups {y_j, t}.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sfq/seifert.hpp"
#include "sfq/words.hpp"

namespace sfq {

struct PeripheralMark {
  std::string name;
  std::vector<Word> generators;
  bool extend_with_center = true;  // whether direct_with_Z appends its generator
  friend bool operator==(const PeripheralMark&, const PeripheralMark&) = default;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
  std::vector<PeripheralMark> peripheral_marks;

  int generator_count() const { return static_cast<int>(generator_names.size()); }

  void validate() const {
    auto check_word = [&](const Word& w) {
      for (int letter : w) {
        int idx = letter > 0 ? letter : -letter;
        if (idx < 1 || idx > generator_count())
          throw std::invalid_argument("Presentation: word references unknown generator");
      }
    };
    for (const auto& r : relators) check_word(r);
    for (const auto& mark : peripheral_marks)
      for (const auto& w : mark.generators) check_word(w);
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Render a word over the presentation's generator names, with runs folded
/// into ^k powers: "x1^3 t^-1".
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    int letter = w[i];
    std::size_t j = i;
    while (j < w.size() && w[j] == letter) ++j;
    std::int64_t exp = static_cast<std::int64_t>(j - i) * (letter > 0 ? 1 : -1);
    int idx = (letter > 0 ? letter : -letter) - 1;
    if (idx < 0 || idx >= static_cast<int>(names.size()))
      throw std::invalid_argument("format_word: letter out of range");
    if (!first) os << ' ';
    os << names[idx];
    if (exp != 1) os << '^' << exp;
    first = false;
    i = j;
  }
  return os.str();
}

/// Deterministic text form: "< g1, g2, ... | w1, w2, ... >" followed by one
/// "peripheral j: {...}" line per mark.
inline std::string to_text(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i) os << ", ";
    os << p.generator_names[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) os << ", ";
    os << format_word(p.relators[i], p.generator_names);
  }
  os << " >";
  for (std::size_t j = 0; j < p.peripheral_marks.size(); ++j) {
    os << "\nperipheral " << (j + 1) << ": {";
    const auto& mark = p.peripheral_marks[j];
    for (std::size_t i = 0; i < mark.generators.size(); ++i) {
      if (i) os << ", ";
      os << format_word(mark.generators[i], p.generator_names);
    }
    os << "}";
  }
  return os.str();
}

namespace detail {

inline void append_sfs_generator_names(const SeifertData& m, Presentation& p) {
  for (std::int64_t i = 1; i <= m.fiber_count(); ++i)
    p.generator_names.push_back("x" + std::to_string(i));
  for (std::int64_t j = 1; j <= m.genus(); ++j) {
    p.generator_names.push_back("a" + std::to_string(j));
    p.generator_names.push_back("b" + std::to_string(j));
  }
  for (std::int64_t l = 1; l <= m.boundary_count(); ++l)
    p.generator_names.push_back("y" + std::to_string(l));
  p.generator_names.push_back("t");
}

}  // namespace detail

/// pi_1 of a closed oriented Seifert fibered space over an oriented base.
inline Presentation presentation_closed_sfs(const SeifertData& m) {
  if (!m.is_closed())
    throw std::invalid_argument("presentation_closed_sfs: manifold must be closed");
  Presentation p;
  detail::append_sfs_generator_names(m, p);
  const int t = p.generator_count();

  for (int g = 1; g < t; ++g) p.relators.push_back(commutator(g, t));
  int idx = 1;
  for (const auto& f : m.fibers()) {
    p.relators.push_back(free_reduce(concat(word_pow({idx}, f.alpha), word_pow({t}, f.beta))));
    ++idx;
  }
  Word product;
  for (std::int64_t i = 1; i <= m.fiber_count(); ++i) product.push_back(static_cast<int>(i));
  for (std::int64_t j = 0; j < m.genus(); ++j) {
    int a = static_cast<int>(m.fiber_count() + 2 * j + 1);
    Word c = commutator(a, a + 1);
    product.insert(product.end(), c.begin(), c.end());
  }
  Word tb = word_pow({t}, -*m.obstruction());
  product.insert(product.end(), tb.begin(), tb.end());
  Word reduced = free_reduce(product);
  if (!reduced.empty()) p.relators.push_back(std::move(reduced));
  p.validate();
  return p;
}

/// pi_1 of a bounded oriented Seifert fibered space, with one peripheral
/// mark {y_j, t} per boundary torus.
inline Presentation presentation_bounded_sfs(const SeifertData& m) {
  if (m.is_closed())
    throw std::invalid_argument("presentation_bounded_sfs: manifold must have boundary");
  Presentation p;
  detail::append_sfs_generator_names(m, p);
  const int t = p.generator_count();

  for (int g = 1; g < t; ++g) p.relators.push_back(commutator(g, t));
  int idx = 1;
  for (const auto& f : m.fibers()) {
    p.relators.push_back(free_reduce(concat(word_pow({idx}, f.alpha), word_pow({t}, f.beta))));
    ++idx;
  }
  Word product;
  for (std::int64_t i = 1; i <= m.fiber_count(); ++i) product.push_back(static_cast<int>(i));
  for (std::int64_t j = 0; j < m.genus(); ++j) {
    int a = static_cast<int>(m.fiber_count() + 2 * j + 1);
    Word c = commutator(a, a + 1);
    product.insert(product.end(), c.begin(), c.end());
  }
  const int first_y = static_cast<int>(m.fiber_count() + 2 * m.genus() + 1);
  for (std::int64_t l = 0; l < m.boundary_count(); ++l)
    product.push_back(first_y + static_cast<int>(l));
  p.relators.push_back(free_reduce(product));

  for (std::int64_t l = 0; l < m.boundary_count(); ++l) {
    PeripheralMark mark;
    mark.name = "peripheral " + std::to_string(l + 1);
    mark.generators = {Word{first_y + static_cast<int>(l)}, Word{t}};
    p.peripheral_marks.push_back(std::move(mark));
  }
  p.validate();
  return p;
}

inline Presentation sfs_presentation(const SeifertData& m) {
  return m.is_closed() ? presentation_closed_sfs(m) : presentation_bounded_sfs(m);
}

}  // namespace sfq
