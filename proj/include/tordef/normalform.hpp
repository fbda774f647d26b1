#pragma once

// Exact integer normal forms: column-style Hermite form, Smith form,
// saturated kernels and finite lattice quotients. Everything here is a pure
// function on immutable values; matrices of arbitrary-precision integers.

#include "tordef/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tordef {

struct HermiteForm {
  IntMat h;  // h = m * u
  IntMat u;  // unimodular
  std::vector<Eigen::Index> pivot_rows;  // pivot of column j sits at (pivot_rows[j], j)
};

// Column-style Hermite normal form H = M*U.
//
// Convention used throughout the library: the pivot of a column is its
// bottom-most nonzero entry, pivot columns come first with pivot rows
// strictly increasing, zero columns trail, pivots are positive and the
// entries to the right of a pivot in its row are reduced into [0, pivot).
// A nonsingular square input therefore yields an upper-triangular H with
// positive diagonal, e.g. the standard form (a b; 0 c) with 0 <= b < a.
inline HermiteForm hnf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMat h = m;
  IntMat u = identity_int(cols);

  auto colop = [&](Eigen::Index dst, Eigen::Index src, const Int& p, const Int& q,
                   const Int& r, const Int& s) {
    // (col_dst, col_src) <- (p*col_dst + q*col_src, r*col_dst + s*col_src)
    for (Eigen::Index i = 0; i < rows; ++i) {
      Int a = h(i, dst), b = h(i, src);
      h(i, dst) = p * a + q * b;
      h(i, src) = r * a + s * b;
    }
    for (Eigen::Index i = 0; i < cols; ++i) {
      Int a = u(i, dst), b = u(i, src);
      u(i, dst) = p * a + q * b;
      u(i, src) = r * a + s * b;
    }
  };

  Eigen::Index active = cols;  // columns [0, active) are still pivot-free
  std::vector<Eigen::Index> pivrows;
  for (Eigen::Index r = rows - 1; r >= 0 && active > 0; --r) {
    Eigen::Index last = active - 1;
    bool any = false;
    for (Eigen::Index j = 0; j < active; ++j)
      if (h(r, j) != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    // concentrate the gcd of row r (within active columns) into column `last`
    for (Eigen::Index j = 0; j < last; ++j) {
      if (h(r, j) == 0) continue;
      if (h(r, last) == 0) {
        colop(last, j, 0, 1, 1, 0);  // swap
        continue;
      }
      Int x, y;
      Int g = ext_gcd(h(r, last), h(r, j), x, y);
      Int a = h(r, last) / g, b = h(r, j) / g;
      // (x*last + y*j, -b*last + a*j): first gets gcd, second gets 0 at row r
      colop(last, j, x, y, -b, a);
    }
    if (h(r, last) < 0) {
      for (Eigen::Index i = 0; i < rows; ++i) h(i, last) = -h(i, last);
      for (Eigen::Index i = 0; i < cols; ++i) u(i, last) = -u(i, last);
    }
    pivrows.push_back(r);
    active = last;
  }

  // move the zero block behind the pivot columns, keeping pivot order
  const Eigen::Index k = static_cast<Eigen::Index>(pivrows.size());
  if (active > 0 && k > 0) {
    IntMat h2(rows, cols), u2(cols, cols);
    h2.leftCols(k) = h.middleCols(active, k);
    h2.rightCols(active) = h.leftCols(active);
    u2.leftCols(k) = u.middleCols(active, k);
    u2.rightCols(active) = u.leftCols(active);
    h = h2;
    u = u2;
  }
  std::reverse(pivrows.begin(), pivrows.end());

  // reduce entries right of each pivot into [0, pivot), bottom pivot first
  for (Eigen::Index t = k - 1; t >= 0; --t) {
    Eigen::Index r = pivrows[t];
    for (Eigen::Index j = t + 1; j < k; ++j) {
      if (h(r, j) == 0) continue;
      Int q = floor_div(h(r, j), h(r, t));
      if (q == 0) continue;
      for (Eigen::Index i = 0; i < rows; ++i) h(i, j) -= q * h(i, t);
      for (Eigen::Index i = 0; i < cols; ++i) u(i, j) -= q * u(i, t);
    }
  }

  HermiteForm out;
  out.h = std::move(h);
  out.u = std::move(u);
  out.pivot_rows = std::move(pivrows);
  return out;
}

inline Eigen::Index rank_int(const IntMat& m) {
  return static_cast<Eigen::Index>(hnf(m).pivot_rows.size());
}

// Basis of the integer kernel {x : M x = 0}, as columns in Hermite form.
// A kernel is saturated by construction.
inline IntMat kernel_basis(const IntMat& m) {
  HermiteForm f = hnf(m);
  const Eigen::Index k = static_cast<Eigen::Index>(f.pivot_rows.size());
  IntMat ker = f.u.rightCols(m.cols() - k);
  if (ker.cols() == 0) return IntMat(m.cols(), 0);
  return hnf(ker).h.leftCols(ker.cols());
}

struct SmithForm {
  IntMat s;  // diagonal, s = u * m * v
  IntMat u;  // unimodular (rows x rows)
  IntMat v;  // unimodular (cols x cols)
  std::vector<Int> divisors;  // d1 | d2 | ..., zeros trailing
};

// Smith normal form via gcd-pivot elimination with transform tracking.
inline SmithForm snf(const IntMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  IntMat s = m;
  IntMat u = identity_int(rows), v = identity_int(cols);

  auto rowop = [&](Eigen::Index dst, Eigen::Index src, const Int& p, const Int& q,
                   const Int& r, const Int& w) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      Int a = s(dst, j), b = s(src, j);
      s(dst, j) = p * a + q * b;
      s(src, j) = r * a + w * b;
    }
    for (Eigen::Index j = 0; j < rows; ++j) {
      Int a = u(dst, j), b = u(src, j);
      u(dst, j) = p * a + q * b;
      u(src, j) = r * a + w * b;
    }
  };
  auto colop = [&](Eigen::Index dst, Eigen::Index src, const Int& p, const Int& q,
                   const Int& r, const Int& w) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      Int a = s(i, dst), b = s(i, src);
      s(i, dst) = p * a + q * b;
      s(i, src) = r * a + w * b;
    }
    for (Eigen::Index i = 0; i < cols; ++i) {
      Int a = v(i, dst), b = v(i, src);
      v(i, dst) = p * a + q * b;
      v(i, src) = r * a + w * b;
    }
  };

  const Eigen::Index t = std::min(rows, cols);
  for (Eigen::Index k = 0; k < t; ++k) {
    // find a nonzero pivot in the trailing block
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < rows && pi < 0; ++i)
      for (Eigen::Index j = k; j < cols; ++j)
        if (s(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k) rowop(k, pi, 0, 1, 1, 0);
    if (pj != k) colop(k, pj, 0, 1, 1, 0);

    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = k + 1; i < rows; ++i) {
        if (s(i, k) == 0) continue;
        Int x, y;
        Int g = ext_gcd(s(k, k), s(i, k), x, y);
        Int a = s(k, k) / g, b = s(i, k) / g;
        rowop(k, i, x, y, -b, a);
      }
      for (Eigen::Index j = k + 1; j < cols; ++j) {
        if (s(k, j) == 0) continue;
        Int x, y;
        Int g = ext_gcd(s(k, k), s(k, j), x, y);
        Int a = s(k, k) / g, b = s(k, j) / g;
        colop(k, j, x, y, -b, a);
        // the column op may have reintroduced entries below the pivot
        for (Eigen::Index i = k + 1; i < rows; ++i)
          if (s(i, k) != 0) {
            again = true;
            break;
          }
      }
    }
    if (s(k, k) < 0) {
      for (Eigen::Index j = 0; j < cols; ++j) s(k, j) = -s(k, j);
      for (Eigen::Index j = 0; j < rows; ++j) u(k, j) = -u(k, j);
    }

    // divisibility: fold any non-divisible entry into the pivot and redo
    bool redo = false;
    for (Eigen::Index i = k + 1; i < rows && !redo; ++i)
      for (Eigen::Index j = k + 1; j < cols; ++j)
        if (s(i, j) % s(k, k) != 0) {
          rowop(k, i, 1, 1, 0, 1);
          redo = true;
          break;
        }
    if (redo) --k;
  }

  SmithForm out;
  out.divisors.reserve(static_cast<std::size_t>(t));
  for (Eigen::Index k = 0; k < t; ++k) out.divisors.push_back(s(k, k));
  out.s = std::move(s);
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

// One integer solution of M x = b, if any (via Smith form).
inline std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  SmithForm f = snf(m);
  IntVec c = f.u * b;
  IntVec z = IntVec::Zero(m.cols());
  const Eigen::Index t = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Int d = i < t ? f.s(i, i) : Int(0);
    if (d == 0) {
      if (c(i) != 0) return std::nullopt;
    } else {
      if (c(i) % d != 0) return std::nullopt;
      if (i < m.cols()) z(i) = c(i) / d;
    }
  }
  return IntVec(f.v * z);
}

// Does v lie in the lattice spanned by the columns of basis?
inline bool lattice_member(const IntMat& basis, const IntVec& v) {
  return solve_integer(basis, v).has_value();
}

// Summary of a sublattice L of Z^m given by generating columns: a basis of
// Sat L = (R-span of L) cap Z^m and the invariant factors of Sat L / L.
struct LatticeSummary {
  IntMat generators;
  Eigen::Index rank = 0;
  IntMat saturation_basis;            // m x rank, Hermite form
  std::vector<Int> quotient_divisors;  // invariant factors of Sat L / L, 1s dropped
  Int quotient_order = 1;              // [Sat L : L]
};

inline LatticeSummary saturation_quotient(const IntMat& gens) {
  LatticeSummary out;
  out.generators = gens;
  const Eigen::Index m = gens.rows();
  // Sat L = ker(K^T) where columns of K span the orthogonal complement.
  IntMat k = kernel_basis(IntMat(gens.transpose()));
  IntMat sat = kernel_basis(IntMat(k.transpose()));
  out.rank = sat.cols();
  out.saturation_basis = sat;
  if (out.rank == 0) {
    out.saturation_basis = IntMat(m, 0);
    return out;
  }
  // coordinates of the generators in the saturation basis are integral
  auto coords = solve_rat(to_rat(sat), to_rat(gens));
  if (!coords) throw std::logic_error("saturation_quotient: generators outside span");
  auto coords_int = to_int(*coords);
  if (!coords_int) throw std::logic_error("saturation_quotient: non-integral coordinates");
  SmithForm f = snf(*coords_int);
  for (const Int& d : f.divisors) {
    if (d == 0) throw std::logic_error("saturation_quotient: rank drop");
    out.quotient_order *= d;
    if (d != 1) out.quotient_divisors.push_back(d);
  }
  return out;
}

// Invariant factors of Z^n / (column span), including 1s, zeros for free part.
inline std::vector<Int> cokernel_divisors(const IntMat& m) {
  SmithForm f = snf(m);
  std::vector<Int> divs = f.divisors;
  for (Eigen::Index i = static_cast<Eigen::Index>(divs.size()); i < m.rows(); ++i)
    divs.push_back(0);
  return divs;
}

// Basis for the intersection of two column lattices in the same ambient space.
inline IntMat lattice_intersection(const IntMat& a, const IntMat& b) {
  IntMat stacked(a.rows(), a.cols() + b.cols());
  stacked.leftCols(a.cols()) = a;
  stacked.rightCols(b.cols()) = -b;
  IntMat ker = kernel_basis(stacked);  // (x; y) with a x = b y
  IntMat pts(a.rows(), ker.cols());
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    pts.col(j) = a * ker.col(j).head(a.cols());
  if (pts.cols() == 0) return IntMat(a.rows(), 0);
  HermiteForm f = hnf(pts);
  return f.h.leftCols(static_cast<Eigen::Index>(f.pivot_rows.size()));
}

}  // namespace tordef
