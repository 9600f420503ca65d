#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lbiso/rotation.hpp"
#include "lbiso/scheme.hpp"
#include "lbiso/sym_tensor.hpp"

namespace lbiso {

/// Distinct exact rotations: (1,0), the Pythagorean points (3/5,4/5),
/// (5/13,12/13), (8/17,15/17), (20/29,21/29), (7/25,24/25), (0,1), then sign
/// and swap variants, then compositions.
std::vector<Rotation> rational_rotations(std::size_t count);

/// Number of distinct angles that forces a trig polynomial of degree n+2 to vanish.
inline std::size_t required_sample_size(int order) { return static_cast<std::size_t>(2 * (order + 2) + 1); }

/// Phi_n(r)(A): rotation of the conserved moments and of every derivative index.
SymTensor apply_phi(const Rotation& r, const SymTensor& a);

/// Phi_n(r)(A) == A for every r of the sample; PreconditionError if the sample is too small.
bool is_fixed_point(const SymTensor& a, const std::vector<Rotation>& sample);

/// Phi_n(r)(A^(n)) - A^(n) for each order.
std::vector<SymTensor> lack_of_isotropy(const std::vector<SymTensor>& tensors, const Rotation& r);

struct OrderResidual {
  int order = 0;
  Rational max_abs;
};

struct IsotropyWitness {
  int order = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string derivs;
  Rotation rotation = Rotation::identity();
  Rational defect;
};

struct IsotropyReport {
  int order_achieved = 0;
  std::vector<OrderResidual> residuals;
  std::optional<IsotropyWitness> witness;  ///< first nonzero defect at the first failing order
};

/// Classifies A^(1)..A^(m) with a sample sized for the highest order.
IsotropyReport isotropy_report(const std::vector<SymTensor>& tensors);
/// Expands the scheme to m_max (1..5) and classifies.
IsotropyReport isotropy_order(const Scheme& scheme, int m_max);

/// Closed-form conditions for the d2q9 scheme; orders >= 5 are never satisfied.
bool check_d2q9(const Scheme& scheme, int order);
/// Closed-form conditions for the d2q13 scheme at orders 1-2. Order 3 tests the
/// necessary properties plus membership in one of the tabulated example families.
bool check_d2q13(const Scheme& scheme, int order);
/// Dispatches on the scheme id.
bool check_closed_form(const Scheme& scheme, int order);

/// Coefficients (a, b) tying the order-five moments to the heat flux in the
/// second-order d2q13 conditions.
struct RotationDilatation {
  Rational a;
  Rational b;
};
RotationDilatation d2q13_defab(const Rational& e_phix_qx, const Rational& e_phiy_qx, const Rational& sigma_xx,
                               const Rational& sigma_xy);

}  // namespace lbiso
