#pragma once

// Integer Smith normal form of small matrices, used for abelianization
// invariants of presentations.

#include <algorithm>
#include <vector>

#include "sfq/ints.hpp"
#include "sfq/presentation.hpp"

namespace sfq {

/// Diagonal of the Smith normal form of an integer matrix (row-major,
/// rows x cols), as d_1 | d_2 | ... with non-negative entries.
inline std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Int> diag;
  std::size_t r = 0, c = 0;
  while (r < rows && c < cols) {
    // Find a pivot.
    std::size_t pr = r, pc = c;
    bool found = false;
    for (std::size_t i = r; i < rows && !found; ++i)
      for (std::size_t j = c; j < cols && !found; ++j)
        if (a[i][j] != 0) { pr = i; pc = j; found = true; }
    if (!found) break;
    std::swap(a[r], a[pr]);
    for (auto& row : a) std::swap(row[c], row[pc]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) { std::swap(a[r], a[i]); clean = false; }
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        Int q = a[r][j] / a[r][c];
        for (std::size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
        if (a[r][j] != 0) {
          for (std::size_t i = r; i < rows; ++i) std::swap(a[i][c], a[i][j]);
          clean = false;
        }
      }
      if (clean) break;
    }
    diag.push_back(abs(a[r][c]));
    ++r; ++c;
  }
  diag.resize(std::min(rows, cols), Int(0));

  // Enforce the divisibility chain d_k | d_{k+1}.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i] != 0 && diag[i + 1] % diag[i] == 0) continue;
      Int g = gcd(diag[i], diag[i + 1]);
      Int l = (g == 0) ? Int(0) : diag[i] / g * diag[i + 1];
      if (g == diag[i] && l == diag[i + 1]) continue;
      diag[i] = g;
      diag[i + 1] = l;
      changed = true;
    }
  }
  return diag;
}

/// Abelianization of a presentation as (free rank, torsion coefficients > 1).
struct AbelianInvariants {
  std::int64_t free_rank = 0;
  std::vector<Int> torsion;  // each > 1, divisibility chain
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline AbelianInvariants abelianization(const Presentation& p) {
  std::size_t n = p.generator_names.size();
  std::vector<std::vector<Int>> m;
  for (const auto& rel : p.relators) {
    std::vector<Int> row(n, 0);
    for (int letter : rel) {
      int idx = (letter > 0 ? letter : -letter) - 1;
      row[idx] += letter > 0 ? 1 : -1;
    }
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = static_cast<std::int64_t>(n);
    return inv;
  }
  auto diag = smith_diagonal(std::move(m));
  std::size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = static_cast<std::int64_t>(n - nonzero);
  return inv;
}

}  // namespace sfq
