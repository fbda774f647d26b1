#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tordef {

// Exact scalars. All arithmetic in this library is integer or rational;
// floating point is never used.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = DenseMat<Int>;
using IntVec = DenseVec<Int>;
using RatMat = DenseMat<Rat>;
using RatVec = DenseVec<Rat>;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// g = gcd(a,b) with g = x*a + y*b. When a | b the coefficients are the pure
// pair (sign(a), 0), so eliminations keep the pivot row/column untouched.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (a != 0 && b % a == 0) {
    x = a < 0 ? -1 : 1;
    y = 0;
    return abs_int(a);
  }
  if (a == 0) {
    x = 0;
    y = b < 0 ? -1 : 1;
    return abs_int(b);
  }
  Int x1, y1;
  Int g = ext_gcd(b, Int(a % b), x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Floor division (rounds toward -inf), used when reducing entries into [0, pivot).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Int content(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd_int(g, v(i));
  return g;
}

// Divide out the gcd and fix the sign of the first nonzero entry to be positive.
inline IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g == 0) return v;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_int(IntMat m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_int: matrix not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---- rational Gaussian elimination helpers ----

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<Eigen::Index> rref(RatMat& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    Rat d = m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) /= d;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline Eigen::Index rank_rat(RatMat m) { return static_cast<Eigen::Index>(rref(m).size()); }

// One rational solution of M x = b, or nullopt when inconsistent.
inline std::optional<RatVec> solve_rat(const RatMat& m, const RatVec& b) {
  RatMat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x = RatVec::Zero(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = aug(static_cast<Eigen::Index>(r), m.cols());
  return x;
}

inline std::optional<RatMat> solve_rat(const RatMat& m, const RatMat& rhs) {
  RatMat x(m.cols(), rhs.cols());
  for (Eigen::Index j = 0; j < rhs.cols(); ++j) {
    auto col = solve_rat(m, RatVec(rhs.col(j)));
    if (!col) return std::nullopt;
    x.col(j) = *col;
  }
  return x;
}

inline std::optional<RatMat> inverse_rat(const RatMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  RatMat id = RatMat::Zero(m.rows(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) id(i, i) = 1;
  return solve_rat(m, id);
}

inline bool is_integral(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integral(q)) throw std::invalid_argument("to_int: not an integer");
  return Int(boost::multiprecision::numerator(q));
}

inline std::optional<IntMat> to_int(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) return std::nullopt;
      r(i, j) = Int(boost::multiprecision::numerator(m(i, j)));
    }
  return r;
}

inline IntMat identity_int(Eigen::Index n) {
  IntMat m = IntMat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

}  // namespace tordef
