#ifndef FPRES_INTMATRIX_HPP_
#define FPRES_INTMATRIX_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fpres/error.hpp"

namespace fpres {

/// Arbitrary-precision integer. Everything in this module is exact; there is
/// no floating point anywhere (normal-form coefficient growth makes machine
/// words unsafe).
using Int = boost::multiprecision::cpp_int;

using IntRow = std::vector<Int>;

/// Dense rectangular matrix of exact integers. Vectors are rows and act on
/// the left: the image of x under M is x*M. All modules of the library adhere
/// to this convention.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<IntRow> const& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int const& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntRow row(std::size_t r) const;
  void append_row(IntRow const& r);

  IntMatrix operator*(IntMatrix const& other) const;
  bool operator==(IntMatrix const& other) const = default;

  bool is_zero() const;
  std::string to_string() const;  // debug text grid

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntRow row_times_matrix(IntRow const& x, IntMatrix const& m);

struct HnfResult {
  IntMatrix h;  // canonical row Hermite normal form (zero rows at the bottom)
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank;
};

/// Canonical row-style Hermite normal form: pivots positive, entries above a
/// pivot reduced into [0, pivot), pivot columns strictly increasing, zero
/// rows last.
HnfResult hermite_normal_form(IntMatrix const& m);

/// Basis of the left integer kernel { x : x*M = 0 }, canonical HNF rows.
IntMatrix kernel_basis(IntMatrix const& m);

struct SnfResult {
  IntMatrix d;  // diagonal, d1 | d2 | ... , nonnegative
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * m * v == d
};

SnfResult smith_normal_form(IntMatrix const& m);

/// Exact determinant (Bareiss fraction-free elimination). Square input only.
Int determinant(IntMatrix const& m);

/// The row lattice spanned by a generating set, held as its canonical HNF
/// basis with zero rows removed. Equality of lattices is basis identity.
class RowLattice {
 public:
  RowLattice() : dim_(0) {}
  explicit RowLattice(IntMatrix const& generators);
  static RowLattice zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  IntMatrix const& basis() const noexcept { return basis_; }

  bool contains(IntRow const& v) const;
  bool contains(RowLattice const& other) const;
  bool operator==(RowLattice const& other) const = default;

 private:
  std::size_t dim_;
  IntMatrix basis_;
};

bool lattice_membership(IntRow const& v, RowLattice const& l);
bool lattice_equal(RowLattice const& a, RowLattice const& b);
bool lattice_contains(RowLattice const& outer, RowLattice const& inner);

}  // namespace fpres

#endif  // FPRES_INTMATRIX_HPP_
