// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/sampling.hpp"

#include <cmath>

namespace pstruct {

SymTensor TensorSampler::unit_sym(int dim) {
  SymTensor t(dim);
  double n2;
  do {
    for (int k = 0; k < t.packed_size(); ++k) t.packed(k) = normal();
    n2 = t.norm_squared();
  } while (n2 == 0.0);
  t *= 1.0 / std::sqrt(n2);
  return t;
}

SymTensor TensorSampler::sym_tensor(int dim) {
  SymTensor t = unit_sym(dim);
  t *= magnitude();
  return t;
}

MatD TensorSampler::full_matrix(int dim, double scale) {
  MatD m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = scale * normal();
  return m;
}

SymTensor TensorSampler::unit_orthogonal_to(const SymTensor& q) {
  for (;;) {
    SymTensor t = unit_sym(q.dim());
    const double a = frob_inner(t, q);
    SymTensor proj = q;
    proj *= a;
    t -= proj;
    const double n2 = t.norm_squared();
    if (n2 > 1e-12) {
      t *= 1.0 / std::sqrt(n2);
      return t;
    }
  }
}

}  // namespace pstruct
