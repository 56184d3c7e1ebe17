#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "derivation.hpp"
#include "polynomial.hpp"

namespace freediv {

/// Row-major rectangular matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(const RingPtr& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), a_(rows * cols, Polynomial(ring)) {}

  static PolyMatrix from_rows(const RingPtr& ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    PolyMatrix m(ring, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidArgument("matrix rows have different lengths");
      for (std::size_t j = 0; j < c; ++j) {
        if (rows[i][j].ring() && !same_ring(rows[i][j].ring(), ring)) throw RingMismatch();
        m.at(i, j) = rows[i][j].ring() ? rows[i][j] : Polynomial(ring);
      }
    }
    return m;
  }

  static PolyMatrix identity(const RingPtr& ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one(ring);
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Polynomial> row(std::size_t i) const {
    return std::vector<Polynomial>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                   a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  PolyMatrix without_column(std::size_t j) const {
    PolyMatrix m(ring_, rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0, c = 0; k < cols_; ++k)
        if (k != j) m.at(i, c++) = at(i, k);
    return m;
  }

  PolyMatrix without_row(std::size_t r) const {
    PolyMatrix m(ring_, rows_ - 1, cols_);
    for (std::size_t i = 0, o = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t k = 0; k < cols_; ++k) m.at(o, k) = at(i, k);
      ++o;
    }
    return m;
  }

  PolyMatrix with_row(const std::vector<Polynomial>& r) const {
    if (r.size() != cols_) throw InvalidArgument("row length does not match matrix");
    PolyMatrix m(ring_, rows_ + 1, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) m.at(i, k) = at(i, k);
    for (std::size_t k = 0; k < cols_; ++k) m.at(rows_, k) = r[k];
    return m;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> a_;
};

/// Laplace expansion along rows, memoized on the set of used columns.
inline Polynomial det_cofactor(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return one(M.ring());
  if (n > 20) throw InvalidArgument("cofactor expansion limited to 20 x 20");
  std::unordered_map<std::uint32_t, Polynomial> memo;
  // Minor on the last (n - row) rows using the columns not in `used`.
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial {
    if (row == n) return one(M.ring());
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial acc(M.ring());
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      if (!M.at(row, j).is_zero()) {
        Polynomial sub = self(self, row + 1, used | (1u << j));
        if (!sub.is_zero()) {
          Polynomial t = M.at(row, j) * sub;
          acc = sign > 0 ? acc + t : acc - t;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

/// Fraction-free elimination; every division is exact.
inline Polynomial det_bareiss(PolyMatrix M) {
  if (M.rows() != M.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return one(M.ring());
  Polynomial prev = one(M.ring());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && M.at(p, k).is_zero()) ++p;
      if (p == n) return Polynomial(M.ring());
      M.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        auto q = exact_divide(num, prev);
        if (!q) throw Error("Bareiss: inexact division");
        M.at(i, j) = std::move(*q);
      }
      M.at(i, k) = Polynomial(M.ring());
    }
    prev = M.at(k, k);
  }
  Polynomial d = M.at(n - 1, n - 1);
  return negate ? -d : d;
}

inline Polynomial det(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw InvalidArgument("determinant of a non-square matrix");
  return M.rows() <= 3 ? det_cofactor(M) : det_bareiss(M);
}

/// Row i holds the coefficients of derivation i.
inline PolyMatrix saito_matrix(const std::vector<Derivation>& derivs) {
  if (derivs.empty()) throw InvalidArgument("saito_matrix: no derivations");
  const RingPtr& ring = derivs.front().ring();
  if (derivs.size() != ring->size())
    throw InvalidArgument("saito_matrix: need " + std::to_string(ring->size()) + " derivations, got " +
                          std::to_string(derivs.size()));
  std::vector<std::vector<Polynomial>> rows;
  for (const auto& d : derivs) {
    if (!same_ring(d.ring(), ring)) throw RingMismatch();
    rows.push_back(d.coeffs());
  }
  return PolyMatrix::from_rows(ring, rows);
}

}  // namespace freediv
