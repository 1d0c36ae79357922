#include "mono/matrix.hpp"

#include <algorithm>

namespace mono {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

struct Transforms {
  IMatrix u, u_inv, v, v_inv;

  explicit Transforms(int rows, int cols)
      : u(IMatrix::identity(rows)),
        u_inv(IMatrix::identity(rows)),
        v(IMatrix::identity(cols)),
        v_inv(IMatrix::identity(cols)) {}

  // row(i) += c * row(j) on D and U; inverse op recorded on u_inv.
  void row_add(IMatrix& d, int i, int j, const Int& c) {
    for (int k = 0; k < d.cols(); ++k) d.at(i, k) += c * d.at(j, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
    for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, j) -= c * u_inv.at(k, i);
  }
  void col_add(IMatrix& d, int i, int j, const Int& c) {
    for (int k = 0; k < d.rows(); ++k) d.at(k, i) += c * d.at(k, j);
    for (int k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
    for (int k = 0; k < v_inv.cols(); ++k) v_inv.at(j, k) -= c * v_inv.at(i, k);
  }
  void row_swap(IMatrix& d, int i, int j) {
    for (int k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
    for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
    for (int k = 0; k < u_inv.rows(); ++k) std::swap(u_inv.at(k, i), u_inv.at(k, j));
  }
  void col_swap(IMatrix& d, int i, int j) {
    for (int k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
    for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
    for (int k = 0; k < v_inv.cols(); ++k) std::swap(v_inv.at(i, k), v_inv.at(j, k));
  }
  void row_negate(IMatrix& d, int i) {
    for (int k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
    for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
    for (int k = 0; k < u_inv.rows(); ++k) u_inv.at(k, i) = -u_inv.at(k, i);
  }
};

}  // namespace

SmithResult smith_normal_form(const IMatrix& a) {
  IMatrix d = a;
  Transforms t(a.rows(), a.cols());
  const int n = std::min(a.rows(), a.cols());

  for (int p = 0; p < n; ++p) {
    // Locate the entry of smallest nonzero magnitude in the trailing block.
    int pr = -1, pc = -1;
    for (int i = p; i < d.rows(); ++i)
      for (int j = p; j < d.cols(); ++j)
        if (d.at(i, j) != 0 &&
            (pr < 0 || abs_int(d.at(i, j)) < abs_int(d.at(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    t.row_swap(d, p, pr);
    t.col_swap(d, p, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = p + 1; i < d.rows(); ++i) {
        if (d.at(i, p) == 0) continue;
        Int q = d.at(i, p) / d.at(p, p);
        t.row_add(d, i, p, -q);
        if (d.at(i, p) != 0) {  // remainder smaller than pivot: swap up, redo
          t.row_swap(d, p, i);
          clean = false;
        }
      }
      for (int j = p + 1; j < d.cols(); ++j) {
        if (d.at(p, j) == 0) continue;
        Int q = d.at(p, j) / d.at(p, p);
        t.col_add(d, j, p, -q);
        if (d.at(p, j) != 0) {
          t.col_swap(d, p, j);
          clean = false;
        }
      }
    }
    if (d.at(p, p) < 0) t.row_negate(d, p);
  }

  // Enforce the divisibility chain d_p | d_{p+1}.
  for (int p = 0; p + 1 < n; ++p) {
    if (d.at(p, p) == 0) break;
    for (int q = p + 1; q < n; ++q) {
      if (d.at(q, q) % d.at(p, p) == 0) continue;
      // Fold column q into the pivot block and re-reduce.
      t.col_add(d, p, q, 1);
      bool clean = false;
      while (!clean) {
        clean = true;
        if (d.at(q, p) != 0) {
          Int c = d.at(q, p) / d.at(p, p);
          t.row_add(d, q, p, -c);
          if (d.at(q, p) != 0) {
            t.row_swap(d, p, q);
            clean = false;
            continue;
          }
        }
        if (d.at(p, q) != 0) {
          Int c = d.at(p, q) / d.at(p, p);
          t.col_add(d, q, p, -c);
          if (d.at(p, q) != 0) {
            t.col_swap(d, p, q);
            clean = false;
          }
        }
      }
      if (d.at(p, p) < 0) t.row_negate(d, p);
      if (d.at(q, q) < 0) t.row_negate(d, q);
      q = p;  // re-scan the chain against the (possibly new) pivot
    }
  }

  SmithResult res{std::move(d), std::move(t.u), std::move(t.v), std::move(t.u_inv),
                  std::move(t.v_inv), 0};
  for (int p = 0; p < n; ++p)
    if (res.d.at(p, p) != 0) ++res.rank;
  return res;
}

IMatrix symplectic_basis(const IMatrix& j) {
  const int n = j.rows();
  if (n % 2 != 0 || j.cols() != n) throw precondition_error("skew form must be even-dimensional");
  IMatrix g = j;                      // running Gram matrix
  IMatrix s = IMatrix::identity(n);   // accumulated basis change (columns)

  auto col_add = [&](int i, int k, const Int& c) {
    // basis vector v_i += c v_k: congruent update of g, column op on s
    for (int r = 0; r < n; ++r) g.at(r, i) += c * g.at(r, k);
    for (int r = 0; r < n; ++r) g.at(i, r) += c * g.at(k, r);
    for (int r = 0; r < n; ++r) s.at(r, i) += c * s.at(r, k);
  };
  auto col_swap = [&](int i, int k) {
    for (int r = 0; r < n; ++r) std::swap(g.at(r, i), g.at(r, k));
    for (int r = 0; r < n; ++r) std::swap(g.at(i, r), g.at(k, r));
    for (int r = 0; r < n; ++r) std::swap(s.at(r, i), s.at(r, k));
  };

  for (int p = 0; p < n; p += 2) {
    // Pivot: minimal |g[r][c]| over the remaining block.
    int pr = -1, pc = -1;
    for (int r = p; r < n; ++r)
      for (int c = r + 1; c < n; ++c)
        if (g.at(r, c) != 0 && (pr < 0 || abs_int(g.at(r, c)) < abs_int(g.at(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr < 0) throw precondition_error("skew form is degenerate");
    // pr < pc, pr >= p; when pr > p we have pc >= p+2, so the first swap
    // cannot disturb column pc.
    if (pr != p) col_swap(p, pr);
    if (pc != p + 1) col_swap(p + 1, pc);

    // Euclid until the pairing g[p][p+1] divides everything in its row/col,
    // then clear; unimodularity forces the pivot to +-1 eventually.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (int c = p + 2; c < n; ++c) {
        if (g.at(p, c) == 0) continue;
        Int q = g.at(p, c) / g.at(p, p + 1);
        col_add(c, p + 1, -q);
        if (g.at(p, c) != 0) {
          col_swap(p + 1, c);
          stable = false;
        }
      }
      for (int c = p + 2; c < n; ++c) {
        if (g.at(p + 1, c) == 0) continue;
        Int q = g.at(p + 1, c) / g.at(p + 1, p);
        col_add(c, p, -q);
        if (g.at(p + 1, c) != 0) {
          col_swap(p, c);
          stable = false;
        }
      }
    }
    if (abs_int(g.at(p, p + 1)) != 1)
      throw precondition_error("skew form is not unimodular");
    if (g.at(p, p + 1) < 0) col_swap(p, p + 1);
  }
  return s;
}

}  // namespace mono
