#include "lbiso/expansion.hpp"

#include "lbiso/errors.hpp"

namespace lbiso {

namespace {

// (vx dx + vy dy)^n.
DiffPoly directional_power(const Velocity& v, int n) {
  DiffPoly p;
  for (int a = 0; a <= n; ++a) {
    p.add_term(a, n - a, binomial(n, a) * pow(Rational(v.x), a) * pow(Rational(v.y), n - a));
  }
  return p;
}

void check_order(int m) {
  if (m < 1 || m > kMaxExpansionOrder) {
    throw DomainError("expansion order must be in [1, " + std::to_string(kMaxExpansionOrder) + "], got " +
                      std::to_string(m));
  }
}

}  // namespace

TransportFamily transport_matrices(const MomentBasis& basis, const VelocitySet& velocities, int m) {
  if (m < 1) throw DomainError("transport order must be at least 1");
  const auto& mat = basis.matrix;
  const RationalMatrix inv = mat.inverse();
  const std::size_t q = velocities.q();
  TransportFamily family;
  for (int n = 0; n <= m + 1; ++n) {
    std::vector<DiffPoly> powers(q);
    for (std::size_t j = 0; j < q; ++j) powers[j] = directional_power(velocities.velocities[j], n);
    DiffOpMatrix lam(q, q);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t j = 0; j < q; ++j) {
          const Rational w = mat(i, j) * inv(j, k);
          if (!w.is_zero()) lam(i, k) += powers[j] * w;
        }
    family.lambda.push_back(std::move(lam));
  }
  return family;
}

TransportFamily transport_matrices(SchemeId id, int m) {
  return transport_matrices(moment_basis(id), velocity_set(id), m);
}

ExpansionState expand(const Scheme& scheme, int m) {
  check_order(m);
  const auto& names = nonconserved_names(scheme.id());
  for (std::size_t k = 0; k < scheme.relaxation().size(); ++k) {
    if (scheme.relaxation()[k].is_zero()) throw SingularRelaxationError("s_" + names[k] + " = 0 makes S singular");
  }

  const std::size_t n = kConserved;
  const std::size_t nc = scheme.q() - n;
  const TransportFamily transport = transport_matrices(scheme.id(), m);

  // Degree-a blocks of T = sum (-1)^a / a! Lambda_a.
  std::vector<DiffOpMatrix> t_ww, t_wy, t_yw, t_yy;
  for (int a = 0; a <= m; ++a) {
    DiffOpMatrix t = transport.lambda[static_cast<std::size_t>(a)] * (pow(Rational(-1), a) / factorial(a));
    t_ww.push_back(t.block(0, 0, n, n));
    t_wy.push_back(t.block(0, n, n, nc));
    t_yw.push_back(t.block(n, 0, nc, n));
    t_yy.push_back(t.block(n, n, nc, nc));
  }

  RationalMatrix one_minus_s(nc, nc);
  RationalMatrix s_inverse(nc, nc);
  for (std::size_t k = 0; k < nc; ++k) {
    one_minus_s(k, k) = Rational(1) - scheme.relaxation()[k];
    s_inverse(k, k) = scheme.relaxation()[k].inverse();
  }

  ExpansionState state;
  // c[b]: degree-b part of E + (I - S) B.
  std::vector<DiffOpMatrix> c{DiffOpMatrix(scheme.equilibrium())};
  // powers[p][l]: degree-l part of theta^p, for p = 1..m.
  std::vector<std::vector<DiffOpMatrix>> powers(static_cast<std::size_t>(m + 1),
                                                std::vector<DiffOpMatrix>(static_cast<std::size_t>(m + 1),
                                                                          DiffOpMatrix(n, n)));
  // exp_theta[l]: degree-l part of exp(theta).
  std::vector<DiffOpMatrix> exp_theta{DiffOpMatrix::identity(n)};

  for (int l = 1; l <= m; ++l) {
    const auto ul = static_cast<std::size_t>(l);
    for (int p = 2; p <= l; ++p) {
      DiffOpMatrix acc(n, n);
      for (int k = 1; k <= l - p + 1; ++k) {
        acc += state.theta[static_cast<std::size_t>(k - 1)] *
               powers[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(l - k)];
      }
      powers[static_cast<std::size_t>(p)][ul] = std::move(acc);
    }

    DiffOpMatrix theta = t_ww[ul];
    for (int a = 1; a <= l; ++a) theta += t_wy[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(l - a)];
    for (int p = 2; p <= l; ++p) theta -= powers[static_cast<std::size_t>(p)][ul] * factorial(p).inverse();
    powers[1][ul] = theta;
    state.theta.push_back(theta);

    DiffOpMatrix e_l = theta;
    for (int p = 2; p <= l; ++p) e_l += powers[static_cast<std::size_t>(p)][ul] * factorial(p).inverse();
    exp_theta.push_back(e_l);

    DiffOpMatrix rhs = t_yw[ul];
    for (int a = 1; a <= l; ++a) rhs += t_yy[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(l - a)];
    rhs -= scheme.equilibrium() * exp_theta[ul];
    for (int b = 1; b < l; ++b) {
      rhs -= state.defect[static_cast<std::size_t>(b - 1)] * exp_theta[static_cast<std::size_t>(l - b)];
    }
    DiffOpMatrix b_l = s_inverse * rhs;
    c.push_back(one_minus_s * b_l);
    state.defect.push_back(std::move(b_l));

    state.tensors.push_back(symmetrize(-theta, l));
  }
  return state;
}

std::vector<SymTensor> equivalent_tensors(const Scheme& scheme, int m) { return expand(scheme, m).tensors; }

}  // namespace lbiso
