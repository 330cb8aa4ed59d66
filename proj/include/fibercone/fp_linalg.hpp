#pragma once

#include <cstdint>
#include <vector>

namespace fibercone::fp {

inline std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

inline std::uint64_t invmod(std::uint64_t x, std::uint64_t p) { return powmod(x, p - 2, p); }

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const std::uint64_t& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix& m, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows && m.at(pivot_row, col) % p == 0) ++pivot_row;
    if (pivot_row == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pivot_row, c));
    const std::uint64_t inv = invmod(m.at(row, col) % p, p);
    for (std::size_t c = 0; c < m.cols; ++c) m.at(row, c) = mulmod(m.at(row, c) % p, inv, p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const std::uint64_t factor = m.at(r, col) % p;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < m.cols; ++c) {
        const std::uint64_t sub = mulmod(factor, m.at(row, c), p);
        m.at(r, c) = (m.at(r, c) % p + p - sub) % p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m, std::uint64_t p) { return rref_in_place(m, p).size(); }

/// Quotient of F_p^ambient by the column space of a matrix. The classes of
/// the coordinates outside the pivot set form a basis; project() returns
/// the coordinates of a vector in that basis.
struct Cokernel {
  std::size_t ambient = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_coords;
  Matrix reduced;  // rref rows spanning the image

  std::size_t dim() const { return free_coords.size(); }

  std::vector<std::uint64_t> project(std::vector<std::uint64_t> v, std::uint64_t p) const {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const std::uint64_t factor = v[pivots[r]] % p;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < ambient; ++c) {
        const std::uint64_t sub = mulmod(factor, reduced.at(r, c), p);
        v[c] = (v[c] % p + p - sub) % p;
      }
    }
    std::vector<std::uint64_t> out;
    out.reserve(free_coords.size());
    for (auto c : free_coords) out.push_back(v[c] % p);
    return out;
  }
};

inline Cokernel cokernel_of_columns(const Matrix& a, std::uint64_t p) {
  Cokernel ck;
  ck.ambient = a.rows;
  Matrix t(a.cols, a.rows);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
  ck.pivots = rref_in_place(t, p);
  t.rows = ck.pivots.size();
  t.data.resize(t.rows * t.cols);
  ck.reduced = std::move(t);
  std::size_t next = 0;
  for (std::size_t c = 0; c < ck.ambient; ++c) {
    if (next < ck.pivots.size() && ck.pivots[next] == c) {
      ++next;
    } else {
      ck.free_coords.push_back(c);
    }
  }
  return ck;
}

}  // namespace fibercone::fp
