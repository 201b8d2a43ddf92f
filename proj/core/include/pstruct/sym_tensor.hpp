// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_SYM_TENSOR_HPP
#define PSTRUCT_SYM_TENSOR_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "pstruct/errors.hpp"

namespace pstruct {

namespace detail {
inline void check_dim(int d) {
  if (d != 2 && d != 3) throw DimensionMismatchError("tensor dimension must be 2 or 3");
}
}  // namespace detail

/// Small dense vector with runtime dimension 2 or 3.
class VecD {
 public:
  explicit VecD(int dim) : dim_(dim), v_{} { detail::check_dim(dim); }
  VecD(double x, double y) : dim_(2), v_{x, y, 0.0} {}
  VecD(double x, double y, double z) : dim_(3), v_{x, y, z} {}

  int dim() const { return dim_; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }

  double norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += v_[static_cast<std::size_t>(i)] * v_[static_cast<std::size_t>(i)];
    return std::sqrt(s);
  }

 private:
  int dim_;
  std::array<double, 3> v_;
};

/// Small dense matrix with runtime dimension 2 or 3. Row-major.
class MatD {
 public:
  explicit MatD(int dim) : dim_(dim), e_{} { detail::check_dim(dim); }

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * dim_ + j)]; }
  double& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * dim_ + j)]; }

  double norm() const {
    double s = 0.0;
    for (int k = 0; k < dim_ * dim_; ++k) s += e_[static_cast<std::size_t>(k)] * e_[static_cast<std::size_t>(k)];
    return std::sqrt(s);
  }

  MatD& operator*=(double s) {
    for (double& v : e_) v *= s;
    return *this;
  }

 private:
  int dim_;
  std::array<double, 9> e_;
};

/// Symmetric second-order tensor with runtime dimension 2 or 3.
///
/// Packed storage of the d(d+1)/2 independent entries: diagonal entries
/// first, then the strict upper triangle in row-major order.
///   d=2: (0,0) (1,1) (0,1)
///   d=3: (0,0) (1,1) (2,2) (0,1) (0,2) (1,2)
/// Norms and inner products always run over the full d*d index range, so
/// off-diagonal packed entries count twice.
class SymTensor {
 public:
  explicit SymTensor(int dim) : dim_(dim), e_{} { detail::check_dim(dim); }

  int dim() const { return dim_; }
  int packed_size() const { return dim_ * (dim_ + 1) / 2; }

  double packed(int k) const { return e_[static_cast<std::size_t>(k)]; }
  double& packed(int k) { return e_[static_cast<std::size_t>(k)]; }

  double operator()(int i, int j) const { return e_[static_cast<std::size_t>(packed_index(i, j))]; }

  /// Sets the (i,j) and (j,i) entries together.
  void set(int i, int j, double v) { e_[static_cast<std::size_t>(packed_index(i, j))] = v; }

  double norm_squared() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += e_[static_cast<std::size_t>(i)] * e_[static_cast<std::size_t>(i)];
    for (int k = dim_; k < packed_size(); ++k) s += 2.0 * e_[static_cast<std::size_t>(k)] * e_[static_cast<std::size_t>(k)];
    return s;
  }
  double norm() const { return std::sqrt(norm_squared()); }

  SymTensor& operator+=(const SymTensor& o) {
    require_same_dim(o);
    for (int k = 0; k < packed_size(); ++k) e_[static_cast<std::size_t>(k)] += o.e_[static_cast<std::size_t>(k)];
    return *this;
  }
  SymTensor& operator-=(const SymTensor& o) {
    require_same_dim(o);
    for (int k = 0; k < packed_size(); ++k) e_[static_cast<std::size_t>(k)] -= o.e_[static_cast<std::size_t>(k)];
    return *this;
  }
  SymTensor& operator*=(double a) {
    for (int k = 0; k < packed_size(); ++k) e_[static_cast<std::size_t>(k)] *= a;
    return *this;
  }

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(double a, SymTensor t) { return t *= a; }
  friend SymTensor operator*(SymTensor t, double a) { return t *= a; }

  int packed_index(int i, int j) const {
    if (i == j) return i;
    const int a = i < j ? i : j;
    const int b = i < j ? j : i;
    // strict upper triangle, row-major, offset by the diagonal block
    if (dim_ == 2) return 2;           // (0,1)
    return a == 0 ? (b == 1 ? 3 : 4)   // (0,1) (0,2)
                  : 5;                 // (1,2)
  }

 private:
  void require_same_dim(const SymTensor& o) const {
    if (o.dim_ != dim_) throw DimensionMismatchError("SymTensor dimension mismatch");
  }

  int dim_;
  std::array<double, 6> e_;
};

/// Symmetric part (M + M^T)/2 of a full matrix.
inline SymTensor sym(const MatD& m) {
  SymTensor s(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  return s;
}

/// Frobenius inner product over the full d*d index range.
inline double frob_inner(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("frob_inner: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a.packed(i) * b.packed(i);
  for (int k = a.dim(); k < a.packed_size(); ++k) s += 2.0 * a.packed(k) * b.packed(k);
  return s;
}

/// Symmetrized outer product: (u (x)_s v)_ij = (u_i v_j + u_j v_i)/2.
inline SymTensor sym_outer(const VecD& u, const VecD& v) {
  if (u.dim() != v.dim()) throw DimensionMismatchError("sym_outer: dimension mismatch");
  SymTensor s(u.dim());
  for (int i = 0; i < u.dim(); ++i)
    for (int j = i; j < u.dim(); ++j) s.set(i, j, 0.5 * (u[i] * v[j] + u[j] * v[i]));
  return s;
}

/// Fourth-order tensor with the minor symmetries
/// A_ijkl = A_jikl = A_ijlk, runtime dimension 2 or 3.
///
/// Stored at full d^4 extent; set() writes all minor-symmetric aliases, so
/// the invariants hold by construction.
class FourthOrderTensor {
 public:
  explicit FourthOrderTensor(int dim) : dim_(dim), a_{} { detail::check_dim(dim); }

  int dim() const { return dim_; }

  double operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }

  /// Sets the entry and its minor-symmetric aliases.
  void set(int i, int j, int k, int l, double v) {
    a_[idx(i, j, k, l)] = v;
    a_[idx(j, i, k, l)] = v;
    a_[idx(i, j, l, k)] = v;
    a_[idx(j, i, l, k)] = v;
  }

  void add(int i, int j, int k, int l, double v) { set(i, j, k, l, (*this)(i, j, k, l) + v); }

  FourthOrderTensor& operator+=(const FourthOrderTensor& o) {
    if (o.dim_ != dim_) throw DimensionMismatchError("FourthOrderTensor dimension mismatch");
    for (std::size_t n = 0; n < a_.size(); ++n) a_[n] += o.a_[n];
    return *this;
  }
  FourthOrderTensor& operator*=(double s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  /// Application (A Q)_ij = sum_kl A_ijkl Q_kl over the full index range.
  /// Minor symmetry makes the result symmetric.
  SymTensor apply(const SymTensor& q) const {
    if (q.dim() != dim_) throw DimensionMismatchError("FourthOrderTensor::apply: dimension mismatch");
    SymTensor r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        double s = 0.0;
        for (int k = 0; k < dim_; ++k)
          for (int l = 0; l < dim_; ++l) s += (*this)(i, j, k, l) * q(k, l);
        r.set(i, j, s);
      }
    return r;
  }

  /// Quadratic form sum_ijkl A_ijkl Q1_ij Q2_kl.
  double quadratic_form(const SymTensor& q1, const SymTensor& q2) const {
    return frob_inner(apply(q2), q1);
  }

  double max_abs_entry() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::fmax(m, std::fabs(v));
    return m;
  }

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return static_cast<std::size_t>(((i * dim_ + j) * dim_ + k) * dim_ + l);
  }

  int dim_;
  std::array<double, 81> a_;
};

}  // namespace pstruct

#endif
