#include "fpres/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace fpres {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<IntRow> const& rows) {
  if (rows.empty()) {
    return IntMatrix(0, 0);
  }
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw DimensionMismatchError("ragged row list");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

IntRow IntMatrix::row(std::size_t r) const {
  IntRow out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    out[c] = at(r, c);
  }
  return out;
}

void IntMatrix::append_row(IntRow const& r) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = r.size();
  }
  if (r.size() != cols_) {
    throw DimensionMismatchError("appended row has wrong length");
  }
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::operator*(IntMatrix const& other) const {
  if (cols_ != other.rows_) {
    throw DimensionMismatchError("matrix product shape mismatch");
  }
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Int const& a = at(i, k);
      if (a == 0) {
        continue;
      }
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int const& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      os << (c ? " " : "") << at(r, c);
    }
    os << "]\n";
  }
  return os.str();
}

IntRow row_times_matrix(IntRow const& x, IntMatrix const& m) {
  if (x.size() != m.rows()) {
    throw DimensionMismatchError("row * matrix shape mismatch");
  }
  IntRow out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] == 0) {
      continue;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c] += x[r] * m.at(r, c);
    }
  }
  return out;
}

namespace {

// floor division: q such that a - q*b is in [0, |b|)
Int floor_div(Int const& a, Int const& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) {
    q -= 1;
  }
  return q;
}

struct RowOps {
  IntMatrix* h;
  IntMatrix* u;  // may be null

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t c = 0; c < h->cols(); ++c) {
      std::swap(h->at(a, c), h->at(b, c));
    }
    if (u) {
      for (std::size_t c = 0; c < u->cols(); ++c) {
        std::swap(u->at(a, c), u->at(b, c));
      }
    }
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < h->cols(); ++c) {
      h->at(a, c) = -h->at(a, c);
    }
    if (u) {
      for (std::size_t c = 0; c < u->cols(); ++c) {
        u->at(a, c) = -u->at(a, c);
      }
    }
  }
  // row a -= q * row b
  void shear(std::size_t a, Int const& q, std::size_t b) {
    if (q == 0) {
      return;
    }
    for (std::size_t c = 0; c < h->cols(); ++c) {
      h->at(a, c) -= q * h->at(b, c);
    }
    if (u) {
      for (std::size_t c = 0; c < u->cols(); ++c) {
        u->at(a, c) -= q * u->at(b, c);
      }
    }
  }
};

std::size_t hermite_in_place(IntMatrix& h, IntMatrix* u) {
  RowOps ops{&h, u};
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // gcd-reduce the column below pivot_row to a single nonzero entry
    for (;;) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h.at(r, col) != 0
            && (best == h.rows() || abs(h.at(r, col)) < abs(h.at(best, col)))) {
          best = r;
        }
      }
      if (best == h.rows()) {
        break;  // column is zero below pivot_row
      }
      ops.swap_rows(pivot_row, best);
      bool cleared = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h.at(r, col) != 0) {
          Int q = h.at(r, col) / h.at(pivot_row, col);  // truncated is fine here
          ops.shear(r, q, pivot_row);
          if (h.at(r, col) != 0) {
            cleared = false;
          }
        }
      }
      if (cleared) {
        break;
      }
    }
    if (h.at(pivot_row, col) == 0) {
      continue;
    }
    if (h.at(pivot_row, col) < 0) {
      ops.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Int q = floor_div(h.at(r, col), h.at(pivot_row, col));
      ops.shear(r, q, pivot_row);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

HnfResult hermite_normal_form(IntMatrix const& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), 0};
  res.rank = hermite_in_place(res.h, &res.u);
  return res;
}

IntMatrix kernel_basis(IntMatrix const& m) {
  HnfResult res = hermite_normal_form(m);
  IntMatrix gens(0, 0);
  for (std::size_t r = res.rank; r < m.rows(); ++r) {
    gens.append_row(res.u.row(r));
  }
  if (gens.rows() == 0) {
    return IntMatrix(0, m.rows());
  }
  // rows of u past the rank span the kernel lattice; canonicalize them
  hermite_in_place(gens, nullptr);
  return gens;
}

SnfResult smith_normal_form(IntMatrix const& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = res.d;

  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      std::swap(d.at(r, a), d.at(r, b));
    }
    for (std::size_t r = 0; r < res.v.rows(); ++r) {
      std::swap(res.v.at(r, a), res.v.at(r, b));
    }
  };
  auto col_shear = [&](std::size_t a, Int const& q, std::size_t b) {
    // col a -= q * col b
    if (q == 0) {
      return;
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      d.at(r, a) -= q * d.at(r, b);
    }
    for (std::size_t r = 0; r < res.v.rows(); ++r) {
      res.v.at(r, a) -= q * res.v.at(r, b);
    }
  };
  auto col_negate = [&](std::size_t a) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      d.at(r, a) = -d.at(r, a);
    }
    for (std::size_t r = 0; r < res.v.rows(); ++r) {
      res.v.at(r, a) = -res.v.at(r, a);
    }
  };
  RowOps rops{&d, &res.u};

  std::size_t k = 0;
  std::size_t limit = std::min(d.rows(), d.cols());
  while (k < limit) {
    // find a nonzero entry in the remaining block, smallest in magnitude
    std::size_t pr = d.rows(), pc = 0;
    for (std::size_t r = k; r < d.rows(); ++r) {
      for (std::size_t c = k; c < d.cols(); ++c) {
        if (d.at(r, c) != 0
            && (pr == d.rows() || abs(d.at(r, c)) < abs(d.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr == d.rows()) {
      break;  // remaining block is all zero
    }
    rops.swap_rows(k, pr);
    col_swap(k, pc);
    bool dirty = false;
    for (std::size_t r = k + 1; r < d.rows(); ++r) {
      if (d.at(r, k) != 0) {
        rops.shear(r, d.at(r, k) / d.at(k, k), k);
        dirty = dirty || d.at(r, k) != 0;
      }
    }
    for (std::size_t c = k + 1; c < d.cols(); ++c) {
      if (d.at(k, c) != 0) {
        col_shear(c, d.at(k, c) / d.at(k, k), k);
        dirty = dirty || d.at(k, c) != 0;
      }
    }
    if (dirty) {
      continue;  // smaller remainders appeared; re-pick pivot
    }
    // pivot divides everything in its row/column; enforce divisibility of the
    // rest of the block
    bool fixed = false;
    for (std::size_t r = k + 1; r < d.rows() && !fixed; ++r) {
      for (std::size_t c = k + 1; c < d.cols() && !fixed; ++c) {
        if (d.at(r, c) % d.at(k, k) != 0) {
          rops.shear(k, Int(-1), r);  // row k += row r; reintroduces column work
          fixed = true;
        }
      }
    }
    if (fixed) {
      continue;
    }
    if (d.at(k, k) < 0) {
      col_negate(k);
    }
    ++k;
  }
  return res;
}

Int determinant(IntMatrix const& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("determinant of non-square matrix");
  }
  std::size_t n = m.rows();
  if (n == 0) {
    return 1;
  }
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a.at(r, k) != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) {
        return 0;
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(k, c), a.at(swap_row, c));
      }
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / prev;
      }
      a.at(r, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

RowLattice::RowLattice(IntMatrix const& generators) : dim_(generators.cols()) {
  IntMatrix h = generators;
  std::size_t rank = hermite_in_place(h, nullptr);
  basis_ = IntMatrix(0, dim_);
  for (std::size_t r = 0; r < rank; ++r) {
    basis_.append_row(h.row(r));
  }
}

RowLattice RowLattice::zero(std::size_t ambient_dim) {
  RowLattice l;
  l.dim_ = ambient_dim;
  l.basis_ = IntMatrix(0, ambient_dim);
  return l;
}

bool RowLattice::contains(IntRow const& v) const {
  if (v.size() != dim_) {
    throw DimensionMismatchError("vector dimension does not match lattice");
  }
  IntRow w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t p = 0;
    while (p < dim_ && basis_.at(r, p) == 0) {
      ++p;
    }
    if (w[p] == 0) {
      continue;
    }
    if (w[p] % basis_.at(r, p) != 0) {
      return false;
    }
    Int q = w[p] / basis_.at(r, p);
    for (std::size_t c = p; c < dim_; ++c) {
      w[c] -= q * basis_.at(r, c);
    }
  }
  return std::all_of(w.begin(), w.end(), [](Int const& x) { return x == 0; });
}

bool RowLattice::contains(RowLattice const& other) const {
  if (other.dim_ != dim_) {
    throw DimensionMismatchError("lattice dimensions differ");
  }
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    if (!contains(other.basis_.row(r))) {
      return false;
    }
  }
  return true;
}

bool lattice_membership(IntRow const& v, RowLattice const& l) { return l.contains(v); }

bool lattice_equal(RowLattice const& a, RowLattice const& b) { return a == b; }

bool lattice_contains(RowLattice const& outer, RowLattice const& inner) {
  return outer.contains(inner);
}

}  // namespace fpres
