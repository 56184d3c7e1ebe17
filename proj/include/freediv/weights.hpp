#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace freediv {

struct WeightSearchOptions {
  // Bound on each free parameter when the solution space has dimension > 1.
  std::int64_t bound = 64;
  std::uint64_t max_candidates = 2'000'000;
};

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& A, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    Rational inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (std::size_t k = c; k < cols; ++k) A[i][k] -= f * A[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  A.resize(r);
  return pivots;
}

}  // namespace detail

/// Smallest positive integer weights making every polynomial weighted
/// homogeneous (and all of one degree when same_degree is set). Variables
/// that appear nowhere get weight 1. When the solution space has dimension
/// above 1 the minimal-sum solution within the search bound is returned.
inline std::optional<std::vector<std::int64_t>> find_weight_vector(const std::vector<Polynomial>& polys,
                                                                   bool same_degree,
                                                                   WeightSearchOptions opt = {}) {
  if (polys.empty()) throw InvalidArgument("find_weight_vector: empty input");
  const RingPtr& ring = polys.front().ring();
  const std::size_t n = ring->size();
  std::vector<std::vector<Rational>> rows;
  std::vector<bool> used(n, false);
  const Monomial* anchor = nullptr;
  for (const auto& p : polys) {
    if (!same_ring(p.ring(), ring)) throw RingMismatch();
    if (p.is_zero()) continue;
    const Monomial& m0 = p.terms().front().mono;
    for (const auto& t : p.terms()) {
      for (std::size_t i = 0; i < n; ++i)
        if (t.mono[i]) used[i] = true;
      if (t.mono == m0) continue;
      std::vector<Rational> row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = int(t.mono[i]) - int(m0[i]);
      rows.push_back(std::move(row));
    }
    if (same_degree) {
      if (anchor && *anchor != m0) {
        std::vector<Rational> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = int(m0[i]) - int((*anchor)[i]);
        rows.push_back(std::move(row));
      }
      if (!anchor) anchor = &m0;
    }
  }
  auto pivots = detail::rref(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c] && used[c]) free_vars.push_back(c);

  // Weights from free-parameter values; nullopt unless all positive integers.
  auto evaluate = [&](const std::vector<Rational>& fv) -> std::optional<std::vector<std::int64_t>> {
    std::vector<Rational> w(n, 0);
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c] && !used[c]) w[c] = 1;
    for (std::size_t k = 0; k < free_vars.size(); ++k) w[free_vars[k]] = fv[k];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rational s = 0;
      for (std::size_t k = 0; k < free_vars.size(); ++k) s -= rows[r][free_vars[k]] * fv[k];
      w[pivots[r]] = s;
    }
    std::vector<std::int64_t> out(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (w[c] <= 0 || w[c].get_den() != 1 || !w[c].get_num().fits_slong_p()) return std::nullopt;
      out[c] = w[c].get_num().get_si();
    }
    return out;
  };

  if (free_vars.empty()) {
    // Only unused variables are free; the used ones are forced to zero.
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) return std::nullopt;
    return std::vector<std::int64_t>(n, 1);
  }

  if (free_vars.size() == 1) {
    // One-dimensional: scale the kernel vector to a primitive integer one.
    std::vector<Rational> v(n, 0);
    v[free_vars[0]] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) v[pivots[r]] = -rows[r][free_vars[0]];
    Integer den = 1, num = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) den = lcm(den, Integer(v[c].get_den()));
    for (std::size_t c = 0; c < n; ++c)
      if (used[c]) num = gcd(num, Integer(Rational(v[c] * den).get_num()));
    if (num == 0) return std::nullopt;
    // v has the free slot equal to 1, so a positive solution must have scale > 0.
    Rational scale(den, num);
    scale.canonicalize();
    return evaluate({scale});
  }

  std::optional<std::vector<std::int64_t>> best;
  std::int64_t best_sum = 0;
  std::vector<std::int64_t> cur(free_vars.size(), 1);
  std::uint64_t visited = 0;
  while (true) {
    std::vector<Rational> fv(cur.begin(), cur.end());
    if (auto w = evaluate(fv)) {
      std::int64_t s = 0;
      for (auto x : *w) s += x;
      if (!best || s < best_sum) {
        best = w;
        best_sum = s;
      }
    }
    if (++visited > opt.max_candidates) break;
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == opt.bound) cur[k++] = 1;
    if (k == cur.size()) break;
    ++cur[k];
  }
  return best;
}

}  // namespace freediv
