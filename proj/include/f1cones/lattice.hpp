#pragma once

// Exact integer linear algebra: vectors, matrices, Hermite and Smith normal
// forms, integer kernels and lattice membership. Everything here is exact;
// there is no floating point anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace f1cones {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVec = std::vector<Integer>;

IntVec zero_vec(std::size_t n);
IntVec unit_vec(std::size_t n, std::size_t i);
IntVec make_vec(std::initializer_list<long long> xs);

Integer dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Integer& k);
IntVec negate(const IntVec& a);
bool is_zero(const IntVec& a);
Integer content(const IntVec& a);  // gcd of entries, 0 for the zero vector
IntVec primitive(const IntVec& a); // divide by content, sign kept
int sign(const Integer& x);

std::string to_string(const IntVec& v);

/// Row-major dense integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);
  static IntMatrix from_nested(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  std::vector<IntVec> row_vectors() const;

  IntMatrix transpose() const;
  IntVec apply(const IntVec& v) const;  // M * v
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_identity() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank_of(const std::vector<IntVec>& vectors, std::size_t dim);

/// Inverse of a unimodular matrix; nullopt when det is not +-1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Rational inverse scaled to integers: returns (adj, det) with m * adj = det * I.
std::pair<IntMatrix, Integer> scaled_inverse(const IntMatrix& m);

/// U * A = H with U unimodular and H in row Hermite normal form
/// (positive pivots, entries above pivots reduced into [0, pivot)).
struct RowEchelon {
  IntMatrix hermite;
  IntMatrix transform;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, in order
  std::size_t rank = 0;
};
RowEchelon row_echelon(const IntMatrix& a);

/// Canonical basis of the lattice spanned by the given vectors (HNF rows).
std::vector<IntVec> lattice_basis(const std::vector<IntVec>& generators, std::size_t dim);

/// Integer basis of {x in Z^cols : m x = 0}; the returned lattice is saturated.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

/// Some x in Z^cols with m x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& m, const IntVec& b);

/// Basis of the saturation (Q-span intersected with Z^dim) of a lattice.
std::vector<IntVec> saturate_lattice(const std::vector<IntVec>& generators, std::size_t dim);

/// Basis of the orthogonal complement {x : <x, g> = 0 for all g}.
std::vector<IntVec> orthogonal_complement(const std::vector<IntVec>& generators, std::size_t dim);

/// U * A * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;   // U (rows x rows)
  IntMatrix right;  // V (cols x cols)
  std::vector<Integer> invariants;  // diagonal entries, length min(rows, cols)
};
SmithForm smith_normal_form(const IntMatrix& a);

/// Unimodular matrix whose first rows are a basis of a saturated sublattice
/// (given by basis rows); the remaining rows complete it to a basis of Z^dim.
IntMatrix complete_to_unimodular(const std::vector<IntVec>& saturated_basis, std::size_t dim);

}  // namespace f1cones
