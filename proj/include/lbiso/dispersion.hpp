#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lbiso/scheme.hpp"
#include "lbiso/sym_tensor.hpp"

namespace lbiso {

/// diag(exp(-i k.v_j)) M^-1 J M, in population space.
Eigen::MatrixXcd amplification_symbol(const Scheme& scheme, double kx, double ky);

struct DispersionSample {
  double k = 0;        ///< |k|
  double error = 0;    ///< max over the slow modes of |lambda - exp(mu)|
  bool skipped = false;
};

struct DispersionReport {
  int order = 0;       ///< number of tensors compared
  double slope = 0;    ///< least-squares log-log slope; NaN with fewer than two usable samples
  std::vector<DispersionSample> samples;
};

/// Default sample: 8 log-spaced |k| in [1e-3, 1e-2] along a generic direction.
std::vector<std::pair<double, double>> default_wavevectors();

/// Compares the three slow eigenvalues of the amplification symbol with the
/// eigenvalues of exp(-sum contract(A^(n), k)), in 50-digit arithmetic, and
/// fits the error decay. Samples whose mode pairing is ambiguous are skipped.
DispersionReport dispersion_check(const Scheme& scheme, const std::vector<SymTensor>& tensors,
                                  const std::vector<std::pair<double, double>>& wavevectors);

}  // namespace lbiso
