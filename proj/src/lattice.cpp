#include "f1cones/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace f1cones {

namespace {

// Floor division for b != 0.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] -= q * row[src]
void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

IntVec zero_vec(std::size_t n) { return IntVec(n, Integer(0)); }

IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec v = zero_vec(n);
  v.at(i) = 1;
  return v;
}

IntVec make_vec(std::initializer_list<long long> xs) {
  IntVec v;
  v.reserve(xs.size());
  for (long long x : xs) v.emplace_back(x);
  return v;
}

Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec scale(const IntVec& a, const Integer& k) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  return r;
}

IntVec negate(const IntVec& a) { return scale(a, Integer(-1)); }

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVec& a) {
  Integer g = 0;
  for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
  return abs_int(g);
}

IntVec primitive(const IntVec& a) {
  Integer g = content(a);
  if (g == 0 || g == 1) return a;
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntMatrix IntMatrix::from_nested(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("from_nested: ragged input");
    std::size_t c = 0;
    for (long long x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  IntVec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVec> IntMatrix::row_vectors() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  IntVec out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << f1cones::to_string(row(r));
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

RowEchelon row_echelon(const IntMatrix& input) {
  RowEchelon out;
  out.hermite = input;
  out.transform = IntMatrix::identity(input.rows());
  IntMatrix& h = out.hermite;
  IntMatrix& u = out.transform;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs_int(h(i, c)) < abs_int(h(best, c))) best = i;
      }
      if (best == rows) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < rows; ++k) {
        if (h(k, c) == 0) continue;
        Integer q = h(k, c) / h(r, c);
        row_axpy(h, k, r, q);
        row_axpy(u, k, r, q);
        if (h(k, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(h(k, c), h(r, c));
      row_axpy(h, k, r, q);
      row_axpy(u, k, r, q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const IntMatrix& m) { return row_echelon(m).rank; }

std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

std::pair<IntMatrix, Integer> scaled_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Integer det = determinant(m);
  if (det == 0) throw std::invalid_argument("inverse: singular matrix");
  // Gauss-Jordan over the rationals.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a[i][n + j] * Rational(det);
      adj(i, j) = boost::multiprecision::numerator(v);
    }
  return {adj, det};
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return m;
  Integer det = determinant(m);
  if (det != 1 && det != -1) return std::nullopt;
  auto [adj, d] = scaled_inverse(m);
  if (d == -1)
    for (std::size_t i = 0; i < adj.rows(); ++i) negate_row(adj, i);
  return adj;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& generators, std::size_t dim) {
  if (generators.empty()) return {};
  RowEchelon e = row_echelon(IntMatrix::from_rows(generators, dim));
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < e.rank; ++r) out.push_back(e.hermite.row(r));
  return out;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  // Left kernel of m^T: rows of the transform beyond the rank.
  RowEchelon e = row_echelon(m.transpose());
  std::vector<IntVec> out;
  for (std::size_t r = e.rank; r < e.transform.rows(); ++r) out.push_back(e.transform.row(r));
  // Canonical form for reproducible output.
  return lattice_basis(out, m.cols());
}

std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  if (m.cols() == 0) return is_zero(b) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  RowEchelon e = row_echelon(m.transpose());  // U m^T = H
  IntVec residual = b;
  IntVec y = zero_vec(e.transform.rows());
  for (std::size_t i = 0; i < e.rank; ++i) {
    std::size_t p = e.pivot_cols[i];
    const Integer& piv = e.hermite(i, p);
    if (residual[p] % piv != 0) return std::nullopt;
    Integer q = residual[p] / piv;
    y[i] = q;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= q * e.hermite(i, c);
  }
  if (!is_zero(residual)) return std::nullopt;
  // x^T = y^T U
  IntVec x = zero_vec(m.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (y[i] == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) x[c] += y[i] * e.transform(i, c);
  }
  return x;
}

std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& generators, std::size_t dim) {
  if (generators.empty()) {
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < dim; ++i) out.push_back(unit_vec(dim, i));
    return out;
  }
  return kernel_basis(IntMatrix::from_rows(generators, dim));
}

std::vector<IntVec> saturate_lattice(const std::vector<IntVec>& generators, std::size_t dim) {
  return orthogonal_complement(orthogonal_complement(generators, dim), dim);
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm out;
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t n = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block moves to (t, t).
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          if (d(i, j) == 0) continue;
          if (bi == d.rows() || abs_int(d(i, j)) < abs_int(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == d.rows()) break;
      swap_rows(d, t, bi);
      swap_rows(u, t, bi);
      swap_cols(d, t, bj);
      swap_cols(v, t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            // row_t += row_i
            row_axpy(d, t, i, Integer(-1));
            row_axpy(u, t, i, Integer(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  out.invariants.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.invariants.push_back(d(t, t));
  out.diagonal = std::move(d);
  out.left = std::move(u);
  out.right = std::move(v);
  return out;
}

IntMatrix complete_to_unimodular(const std::vector<IntVec>& basis, std::size_t dim) {
  const std::size_t k = basis.size();
  if (k == 0) return IntMatrix::identity(dim);
  IntMatrix b = IntMatrix::from_rows(basis, dim);
  SmithForm s = smith_normal_form(b);
  for (const auto& inv : s.invariants)
    if (inv != 1) throw std::invalid_argument("complete_to_unimodular: sublattice not saturated");
  auto vinv = unimodular_inverse(s.right);
  IntMatrix w(dim, dim);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < dim; ++c) w(r, c) = b(r, c);
  for (std::size_t r = k; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) w(r, c) = (*vinv)(r, c);
  return w;
}

}  // namespace f1cones
