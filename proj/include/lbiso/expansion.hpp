#pragma once

#include <vector>

#include "lbiso/diff_poly.hpp"
#include "lbiso/scheme.hpp"
#include "lbiso/sym_tensor.hpp"

namespace lbiso {

/// Lambda_n = M diag((v_j . grad)^n) M^-1 for n = 0..lambda.size()-1.
struct TransportFamily {
  std::vector<DiffOpMatrix> lambda;
};

/// Exact transport operators up to degree m+1; DomainError if m < 1.
TransportFamily transport_matrices(const MomentBasis& basis, const VelocitySet& velocities, int m);
TransportFamily transport_matrices(SchemeId id, int m);

/// Terms of the expansion, index k-1 holding degree k.
struct ExpansionState {
  std::vector<DiffOpMatrix> theta;  ///< N x N, dt W = sum theta_k W
  std::vector<DiffOpMatrix> defect; ///< (q-N) x N, Y = (E + sum B_k) W
  std::vector<SymTensor> tensors;   ///< A^(k) = symmetrize(-theta_k)
};

inline constexpr int kMaxExpansionOrder = 5;

/// Taylor expansion of the scheme up to derivative degree m (dt = dx = 1).
/// Throws SingularRelaxationError if some s_k = 0, DomainError unless 1 <= m <= 5.
ExpansionState expand(const Scheme& scheme, int m);

/// A^(1)..A^(m).
std::vector<SymTensor> equivalent_tensors(const Scheme& scheme, int m);

}  // namespace lbiso
