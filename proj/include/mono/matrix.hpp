#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "mono/common.hpp"

namespace mono {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, exact arithmetic. Row convention throughout the
// library: matrices act on row vectors, so M(ab) = M(a)·M(b) with the
// left-to-right composition used everywhere else.
class IMatrix {
 public:
  IMatrix() = default;
  IMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static IMatrix identity(int n) {
    IMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const IMatrix& o) const = default;

  IMatrix operator*(const IMatrix& o) const {
    if (cols_ != o.rows_) throw mismatch_error("matrix dimension mismatch in product");
    IMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  IMatrix operator+(const IMatrix& o) const {
    IMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  IMatrix operator-(const IMatrix& o) const {
    IMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  IMatrix transposed() const {
    IMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_) if (x != 0) return false;
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ' ';
        s += at(i, j).str();
      }
      if (i + 1 < rows_) s += '\n';
    }
    return s;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

// Row vector helpers.
using IVec = std::vector<Int>;

inline IVec mul_row(const IVec& v, const IMatrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw mismatch_error("row-vector/matrix size mismatch");
  IVec r(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
  }
  return r;
}

// Smith normal form with transforms: returns D = U * A * V with U, V
// unimodular and D diagonal with d_i | d_{i+1}. Also produces the inverses of
// U and V (tracked op-by-op, so everything stays integral).
struct SmithResult {
  IMatrix d, u, v, u_inv, v_inv;
  int rank = 0;  // number of nonzero diagonal entries
};

SmithResult smith_normal_form(const IMatrix& a);

// Change of basis bringing a nondegenerate skew unimodular form J into the
// standard block-diagonal form diag([[0,1],[-1,0]], ...). Returns S with
// S^T J S standard. Throws precondition_error if the form is not unimodular.
IMatrix symplectic_basis(const IMatrix& j);

}  // namespace mono
