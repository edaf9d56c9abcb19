#include "flagcoh/linalg.hpp"

#include <algorithm>

namespace flagcoh::linalg {

std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, std::uint64_t p) {
  // Semi-echelon form: pivot rows are normalized to a leading 1 and only
  // their leading column is guaranteed clear in later rows.
  std::vector<std::int64_t> pivot_of(ncols, -1);
  std::vector<SparseRow> pivots;
  std::vector<std::uint64_t> dense(ncols, 0);
  for (auto& row : rows) {
    if (row.cols.empty()) continue;
    for (std::size_t k = 0; k < row.cols.size(); ++k) dense[row.cols[k]] = row.vals[k];
    std::size_t c = row.cols.front();
    row = SparseRow{};
    for (; c < ncols; ++c) {
      const std::uint64_t f = dense[c];
      if (f == 0) continue;
      if (pivot_of[c] < 0) break;
      const SparseRow& piv = pivots[static_cast<std::size_t>(pivot_of[c])];
      for (std::size_t k = 0; k < piv.cols.size(); ++k) {
        std::uint64_t& d = dense[piv.cols[k]];
        d = modp::sub(d, modp::mul(f, piv.vals[k], p), p);
      }
    }
    if (c == ncols) continue;
    const std::uint64_t inv = modp::inv(dense[c], p);
    SparseRow piv;
    for (std::size_t k = c; k < ncols; ++k) {
      if (dense[k] == 0) continue;
      piv.cols.push_back(static_cast<std::uint32_t>(k));
      piv.vals.push_back(modp::mul(dense[k], inv, p));
      dense[k] = 0;
    }
    pivot_of[c] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back(std::move(piv));
  }
  return pivots.size();
}

ModularSolve solve(const Matrix& a, std::span<const std::uint64_t> b, std::span<const std::size_t> rows,
                   std::uint64_t p) {
  const std::size_t n = a.cols;
  const std::size_t m = rows.size();
  // Augmented copy of the selected rows.
  std::vector<std::uint64_t> w(m * (n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    std::copy_n(&a.data[rows[r] * n], n, &w[r * (n + 1)]);
    w[r * (n + 1) + n] = b[rows[r]];
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return w[r * (n + 1) + c]; };
  std::vector<std::size_t> order(m);
  for (std::size_t r = 0; r < m; ++r) order[r] = r;

  ModularSolve out;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && at(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rank) {
      for (std::size_t k = 0; k <= n; ++k) std::swap(at(piv, k), at(rank, k));
      std::swap(order[piv], order[rank]);
    }
    const std::uint64_t inv = modp::inv(at(rank, c), p);
    for (std::size_t k = c; k <= n; ++k) at(rank, k) = modp::mul(at(rank, k), inv, p);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank) continue;
      const std::uint64_t f = at(r, c);
      if (f == 0) continue;
      for (std::size_t k = c; k <= n; ++k) at(r, k) = modp::sub(at(r, k), modp::mul(f, at(rank, k), p), p);
    }
    out.pivot_columns.push_back(c);
    out.pivot_rows.push_back(rows[order[rank]]);
    ++rank;
  }
  out.rank = rank;
  out.consistent = true;
  for (std::size_t r = rank; r < m; ++r) {
    if (at(r, n) != 0) out.consistent = false;
  }
  if (out.consistent) {
    out.x.assign(n, 0);
    for (std::size_t k = 0; k < rank; ++k) out.x[out.pivot_columns[k]] = at(k, n);
  }
  return out;
}

bool satisfies(const Matrix& a, std::span<const std::uint64_t> b, std::span<const std::uint64_t> x, std::uint64_t p) {
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (x[c] != 0) support.push_back(c);
  }
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::uint64_t s = 0;
    for (std::size_t c : support) s = modp::add(s, modp::mul(a.at(r, c), x[c], p), p);
    if (s != b[r]) return false;
  }
  return true;
}

std::vector<std::uint64_t> large_primes(std::size_t count, std::size_t skip) {
  std::vector<std::uint64_t> out;
  std::uint64_t candidate = (std::uint64_t{1} << 62) + 1;
  std::size_t seen = 0;
  while (out.size() < count) {
    candidate -= 2;
    const Integer c(static_cast<unsigned long>(candidate));
    if (mpz_probab_prime_p(c.get_mpz_t(), 40) == 0) continue;
    if (seen++ >= skip) out.push_back(candidate);
  }
  return out;
}

void crt_step(Integer& r, Integer& m, std::uint64_t a, std::uint64_t p) {
  if (m == 0) {
    r = Integer(std::to_string(a));
    m = Integer(std::to_string(p));
    return;
  }
  const Integer P(std::to_string(p));
  // r + m * k with k = (a - r) / m mod p.
  Integer diff = Integer(std::to_string(a)) - r;
  Integer minv;
  mpz_invert(minv.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
  Integer k = (diff * minv) % P;
  if (k < 0) k += P;
  r += m * k;
  m *= P;
}

std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& m) {
  // Half-extended Euclid on (m, a), stopping once the remainder drops below
  // the bound.
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer s0 = 0, s1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace flagcoh::linalg
