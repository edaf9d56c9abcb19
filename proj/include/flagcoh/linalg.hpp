#pragma once

// Linear algebra over Z/p and the lifting of modular solutions to Q.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flagcoh/scalar.hpp"

namespace flagcoh::linalg {

/// Sparse row with strictly increasing column indices and nonzero values.
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint64_t> vals;
};

/// Rank over Z/p. Rows are processed in the given order; lower column
/// indices are eliminated first.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, std::uint64_t p);

/// Dense row-major matrix over Z/p.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct ModularSolve {
  /// Rank of the selected rows.
  std::size_t rank = 0;
  /// Columns holding a pivot, increasing.
  std::vector<std::size_t> pivot_columns;
  /// Rows that supplied the pivots.
  std::vector<std::size_t> pivot_rows;
  /// False when the selected rows are inconsistent.
  bool consistent = false;
  /// A solution with free variables set to zero (when consistent).
  std::vector<std::uint64_t> x;
};

/// Solves a x = b restricted to the listed rows by Gauss-Jordan elimination.
ModularSolve solve(const Matrix& a, std::span<const std::uint64_t> b, std::span<const std::size_t> rows,
                   std::uint64_t p);

/// Whether a x = b holds on every row.
bool satisfies(const Matrix& a, std::span<const std::uint64_t> b, std::span<const std::uint64_t> x, std::uint64_t p);

/// Primes just below 2^62, in decreasing order, skipping the first `skip`.
std::vector<std::uint64_t> large_primes(std::size_t count, std::size_t skip = 0);

/// Combines r mod m with a mod p into the residue modulo m * p.
void crt_step(Integer& r, Integer& m, std::uint64_t a, std::uint64_t p);

/// The fraction n/d with |n|, d <= sqrt(m/2) and n = a d mod m, if any.
std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& m);

}  // namespace flagcoh::linalg
