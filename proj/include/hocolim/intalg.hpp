#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace hocolim {

using Integer = mpz_class;

/// Dense integer matrix, row-major. Throughout the engine, a matrix that
/// lists lattice generators holds them as COLUMNS; a matrix presenting a
/// group by relations holds one relator per ROW over generator columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;
  bool is_zero() const;

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant (fraction-free elimination); square matrices only.
Integer determinant(const IntMatrix& m);

/// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... , d_k > 0.
/// The inverses of U and V are tracked alongside.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv, V_inv;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

/// Pivot rule: smallest nonzero absolute value in the active block, ties
/// broken row-major.
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + sum Z/t_k with t_1 | t_2 | ...
struct FgAbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const FgAbelianGroup& other) const = default;
  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;
};

/// Z^cols / (row space of m): columns are generators, rows relators.
FgAbelianGroup cokernel_group(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Hermite normal form of the lattice spanned by the columns of m: returned
/// as a matrix whose columns are the nonzero basis vectors in echelon form
/// (pivot rows strictly increasing, pivots positive, entries to the left of
/// a pivot in its row reduced into [0, pivot)).
IntMatrix column_hermite_form(const IntMatrix& m);

/// True iff the column spans of the two generator matrices coincide.
/// Throws ValidationError when the ambient dimensions (row counts) differ.
bool subgroup_equal(const IntMatrix& gens1, const IntMatrix& gens2);

/// True iff every column of `sub` lies in the column span of `gens`.
bool lattice_contains(const IntMatrix& gens, const IntMatrix& sub);

}  // namespace hocolim
