#include "annulus/linalg.hpp"

#include <algorithm>

#include "annulus/error.hpp"

namespace annulus {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = RadicalScalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<RadicalScalar>& entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m.at(k, k) = entries[k];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

bool Matrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != at(j, i).conj()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix product dimension mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RadicalScalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

std::size_t cost(const RadicalScalar& s) { return s.terms().size(); }

}  // namespace

std::size_t rank(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Scaling a row by the inverse of its first nonzero entry keeps the rank and
  // turns rows of the form (radical) * (Gaussian-rational row) into rational ones.
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t j = 0;
    while (j < cols && m.at(i, j).is_zero()) ++j;
    if (j == cols || m.at(i, j) == RadicalScalar(1)) continue;
    RadicalScalar inv = m.at(i, j).inverse();
    for (std::size_t c = j; c < cols; ++c)
      if (!m.at(i, c).is_zero()) m.at(i, c) *= inv;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero() && (best == rows || cost(m.at(i, c)) < cost(m.at(best, c)))) best = i;
    if (best == rows) continue;
    if (best != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(r, k), m.at(best, k));
    RadicalScalar inv = m.at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      RadicalScalar factor = m.at(i, c) * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m.at(r, k).is_zero()) m.at(i, k) -= factor * m.at(r, k);
    }
    ++r;
  }
  return r;
}

Inertia hermitian_inertia(Matrix m) {
  if (!m.is_hermitian()) fail(ErrorKind::Precondition, "inertia requested for a non-Hermitian matrix");
  const std::size_t n = m.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t k = 0; k < n; ++k) active[k] = k;
  Inertia out;

  auto remove = [&active](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    // drop indices whose remaining row vanishes
    for (std::size_t pos = 0; pos < active.size();) {
      std::size_t i = active[pos];
      bool zero_row = std::all_of(active.begin(), active.end(), [&](std::size_t j) { return m.at(i, j).is_zero(); });
      if (zero_row) {
        ++out.zero;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pos));
      } else {
        ++pos;
      }
    }
    if (active.empty()) break;

    std::size_t pivot = n;
    for (std::size_t i : active) {
      const RadicalScalar& d = m.at(i, i);
      if (d.is_zero()) continue;
      if (pivot == n) {
        pivot = i;
        continue;
      }
      const RadicalScalar& cur = m.at(pivot, pivot);
      bool larger = (d.is_rational() && cur.is_rational())
                        ? abs(d.rational_value()) > abs(cur.rational_value())
                        : compare_magnitude(d, cur) > 0;
      if (larger) pivot = i;
    }

    if (pivot != n) {
      const RadicalScalar p = m.at(pivot, pivot);
      (p.sign_of_real() > 0 ? out.positive : out.negative) += 1;
      RadicalScalar inv = p.inverse();
      remove(pivot);
      for (std::size_t j : active) {
        if (m.at(j, pivot).is_zero()) continue;
        RadicalScalar left = m.at(j, pivot) * inv;
        for (std::size_t k : active)
          if (!m.at(pivot, k).is_zero()) m.at(j, k) -= left * m.at(pivot, k);
      }
      continue;
    }

    // all remaining diagonal entries are zero: eliminate a 2x2 block
    std::size_t bi = n, bj = n;
    for (std::size_t a = 0; a < active.size() && bi == n; ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (!m.at(active[a], active[b]).is_zero()) {
          bi = active[a];
          bj = active[b];
          break;
        }
    if (bi == n) fail(ErrorKind::Contradiction, "inertia: nonzero row without an off-diagonal entry");
    const RadicalScalar b = m.at(bi, bj);
    RadicalScalar inv_b = b.inverse();
    RadicalScalar inv_bconj = b.conj().inverse();
    out.positive += 1;
    out.negative += 1;
    remove(bi);
    remove(bj);
    // A_jk -= A_ji conj(b)^-1 A_bj,k + A_j,bj b^-1 A_bi,k
    std::vector<std::vector<RadicalScalar>> update(active.size(), std::vector<RadicalScalar>(active.size()));
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y) {
        std::size_t j = active[x], k = active[y];
        RadicalScalar u;
        if (!m.at(j, bi).is_zero() && !m.at(bj, k).is_zero()) u += m.at(j, bi) * inv_bconj * m.at(bj, k);
        if (!m.at(j, bj).is_zero() && !m.at(bi, k).is_zero()) u += m.at(j, bj) * inv_b * m.at(bi, k);
        update[x][y] = std::move(u);
      }
    for (std::size_t x = 0; x < active.size(); ++x)
      for (std::size_t y = 0; y < active.size(); ++y)
        if (!update[x][y].is_zero()) m.at(active[x], active[y]) -= update[x][y];
  }
  return out;
}

std::optional<std::vector<RadicalScalar>> solve_linear(Matrix a, std::vector<RadicalScalar> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) fail(ErrorKind::InvalidArgument, "right-hand side has the wrong length");
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a.at(i, c).is_zero() && (best == rows || cost(a.at(i, c)) < cost(a.at(best, c)))) best = i;
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(r, k), a.at(best, k));
      std::swap(b[r], b[best]);
    }
    RadicalScalar inv = a.at(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!a.at(r, k).is_zero()) a.at(r, k) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      RadicalScalar factor = a.at(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a.at(r, k).is_zero()) a.at(i, k) -= factor * a.at(r, k);
      if (!b[r].is_zero()) b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<RadicalScalar> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = b[i];
  return x;
}

}  // namespace annulus
