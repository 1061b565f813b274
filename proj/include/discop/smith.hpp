#pragma once

#include "discop/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace discop {

// Smith normal form over a Euclidean domain (here Q or Q[h]) with invertible
// transform certificates: U * A * V = S, S diagonal with each invariant
// factor dividing the next. Inverses of the transforms are tracked alongside
// so cokernel classes can be both reduced and lifted.
template <class R>
struct SmithResult {
  Matrix<R> S, U, Uinv, V, Vinv;
  size_t rank = 0;

  std::vector<R> invariant_factors() const {
    std::vector<R> f;
    for (size_t i = 0; i < rank; ++i) f.push_back(S(i, i));
    return f;
  }

  bool all_factors_unit() const {
    for (size_t i = 0; i < rank; ++i)
      if (!RingTraits<R>::is_unit(S(i, i))) return false;
    return true;
  }

  // Certificate check: U*A*V == S, divisibility chain, diagonal S, and the
  // tracked inverses really invert U and V.
  bool verify(const Matrix<R>& a) const {
    if (U * a * V != S) return false;
    for (size_t i = 0; i < S.rows(); ++i)
      for (size_t j = 0; j < S.cols(); ++j)
        if (i != j && !RingTraits<R>::is_zero(S(i, j))) return false;
    for (size_t i = 0; i + 1 < rank; ++i)
      if (!RingTraits<R>::divides(S(i, i), S(i + 1, i + 1))) return false;
    for (size_t i = rank; i < std::min(S.rows(), S.cols()); ++i)
      if (!RingTraits<R>::is_zero(S(i, i))) return false;
    if (U * Uinv != Matrix<R>::identity(U.rows())) return false;
    if (V * Vinv != Matrix<R>::identity(V.rows())) return false;
    return true;
  }
};

template <class R>
SmithResult<R> smith_normal_form(const Matrix<R>& a) {
  using T = RingTraits<R>;
  SmithResult<R> res;
  const size_t m = a.rows(), n = a.cols();
  res.S = a;
  res.U = Matrix<R>::identity(m);
  res.Uinv = Matrix<R>::identity(m);
  res.V = Matrix<R>::identity(n);
  res.Vinv = Matrix<R>::identity(n);
  Matrix<R>& S = res.S;

  // Row op on S is mirrored on U; the inverse op goes on Uinv from the
  // right. Same for columns with V.
  auto swap_rows = [&](size_t i, size_t j) {
    S.swap_rows(i, j);
    res.U.swap_rows(i, j);
    res.Uinv.swap_cols(i, j);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    S.swap_cols(i, j);
    res.V.swap_cols(i, j);
    res.Vinv.swap_rows(i, j);
  };
  auto add_row = [&](size_t i, size_t j, const R& c) {  // row i += c*row j
    S.add_row(i, j, c);
    res.U.add_row(i, j, c);
    res.Uinv.add_col(j, i, -c);
  };
  auto add_col = [&](size_t i, size_t j, const R& c) {  // col i += c*col j
    S.add_col(i, j, c);
    res.V.add_col(i, j, c);
    res.Vinv.add_row(j, i, -c);
  };
  auto scale_row = [&](size_t i, const R& u) {
    S.scale_row(i, u);
    res.U.scale_row(i, u);
    res.Uinv.scale_col(i, T::inverse_unit(u));
  };

  size_t t = 0;
  while (t < m && t < n) {
    // Deterministic pivot: minimal Euclidean size, then row-major position.
    std::optional<std::pair<size_t, size_t>> pivot;
    int best = -1;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (T::is_zero(S(i, j))) continue;
        int sz = T::euclidean_size(S(i, j));
        if (!pivot || sz < best) {
          pivot = {{i, j}};
          best = sz;
        }
      }
    if (!pivot) break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);

    for (;;) {
      bool restart = false;
      for (size_t i = t + 1; i < m && !restart; ++i) {
        if (T::is_zero(S(i, t))) continue;
        auto [q, r] = T::divmod(S(i, t), S(t, t));
        add_row(i, t, -q);
        if (!T::is_zero(r)) {
          swap_rows(t, i);  // strictly smaller pivot; start over
          restart = true;
        }
      }
      if (restart) continue;
      for (size_t j = t + 1; j < n && !restart; ++j) {
        if (T::is_zero(S(t, j))) continue;
        auto [q, r] = T::divmod(S(t, j), S(t, t));
        add_col(j, t, -q);
        if (!T::is_zero(r)) {
          swap_cols(t, j);
          restart = true;
        }
      }
      if (restart) continue;

      // Pivot must divide the remaining block for the divisibility chain.
      bool fixed = true;
      for (size_t i = t + 1; i < m && fixed; ++i)
        for (size_t j = t + 1; j < n && fixed; ++j)
          if (!T::divides(S(t, t), S(i, j))) {
            add_row(t, i, R(1));
            fixed = false;
          }
      if (fixed) break;
    }

    R unit = T::canonical_unit(S(t, t));
    if (!(unit == R(1))) scale_row(t, T::inverse_unit(unit));
    ++t;
  }
  res.rank = t;
  return res;
}

template <class R>
size_t rank(const Matrix<R>& a) {
  return smith_normal_form(a).rank;
}

// Class of a vector in coker(A), in the deterministic basis induced by the
// Smith transforms. `moduli[i]` is the invariant factor the i-th coordinate
// lives against: coordinates with non-unit moduli are residues mod that
// factor, coordinates with zero modulus are free. Unit moduli contribute
// nothing and are dropped.
template <class R>
struct CokernelClass {
  std::vector<R> coords;
  std::vector<R> moduli;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!RingTraits<R>::is_zero(c)) return false;
    return true;
  }
};

template <class R>
CokernelClass<R> solve_modulo_image(const Vec<R>& v, const Matrix<R>& a,
                                    const SmithResult<R>& snf) {
  if (v.size() != a.rows())
    throw std::invalid_argument("solve_modulo_image: dimension mismatch");
  Vec<R> w = snf.U.apply(v);
  CokernelClass<R> out;
  for (size_t i = 0; i < snf.rank; ++i) {
    if (RingTraits<R>::is_unit(snf.S(i, i))) continue;
    out.coords.push_back(RingTraits<R>::divmod(w[i], snf.S(i, i)).second);
    out.moduli.push_back(snf.S(i, i));
  }
  for (size_t i = snf.rank; i < a.rows(); ++i) {
    out.coords.push_back(w[i]);
    out.moduli.push_back(R(0));
  }
  return out;
}

template <class R>
CokernelClass<R> solve_modulo_image(const Vec<R>& v, const Matrix<R>& a) {
  return solve_modulo_image(v, a, smith_normal_form(a));
}

// Solve A x = b over the ring; nullopt when no exact solution exists.
template <class R>
std::optional<Vec<R>> solve_linear(const Matrix<R>& a, const Vec<R>& b,
                                   const SmithResult<R>& snf) {
  if (b.size() != a.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  Vec<R> w = snf.U.apply(b);
  Vec<R> y(a.cols(), R(0));
  for (size_t i = 0; i < snf.rank; ++i) {
    auto [q, r] = RingTraits<R>::divmod(w[i], snf.S(i, i));
    if (!RingTraits<R>::is_zero(r)) return std::nullopt;
    y[i] = q;
  }
  for (size_t i = snf.rank; i < a.rows(); ++i)
    if (!RingTraits<R>::is_zero(w[i])) return std::nullopt;
  return snf.V.apply(y);
}

template <class R>
std::optional<Vec<R>> solve_linear(const Matrix<R>& a, const Vec<R>& b) {
  return solve_linear(a, b, smith_normal_form(a));
}

// Basis of ker(A) as columns, read off the Smith column transform.
template <class R>
std::vector<Vec<R>> kernel_basis(const Matrix<R>& a,
                                 const SmithResult<R>& snf) {
  std::vector<Vec<R>> basis;
  for (size_t j = snf.rank; j < a.cols(); ++j) basis.push_back(snf.V.col(j));
  return basis;
}

// Fraction-free (Bareiss) determinant; exact over any of our scalar rings.
template <class R>
R determinant(Matrix<R> a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = a.rows();
  if (n == 0) return R(1);
  R sign(1), prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (RingTraits<R>::is_zero(a(k, k))) {
      size_t p = k + 1;
      while (p < n && RingTraits<R>::is_zero(a(p, k))) ++p;
      if (p == n) return R(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a(i, j) = RingTraits<R>::exact_div(
            a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace discop
