#include "lbiso/isotropy.hpp"

#include <algorithm>
#include <array>

#include "lbiso/errors.hpp"
#include "lbiso/expansion.hpp"
#include "lbiso/families.hpp"

namespace lbiso {

namespace {

void push_unique(std::vector<Rotation>& out, const Rotation& r, std::size_t count) {
  if (out.size() >= count) return;
  if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
}

// sigma = 1/s - 1/2 without the (0,2) range check.
Rational sigma_raw(const Scheme& scheme, std::string_view row) { return scheme.s(row).inverse() - Rational(1, 2); }

bool all_zero(const Scheme& scheme, std::initializer_list<std::pair<const char*, const char*>> entries) {
  return std::all_of(entries.begin(), entries.end(),
                     [&](const auto& e) { return scheme.E(e.first, e.second).is_zero(); });
}

bool first_order_zero_set(const Scheme& scheme) {
  return all_zero(scheme, {{"e", "qx"},
                           {"e", "qy"},
                           {"pxx", "rho"},
                           {"pxx", "qx"},
                           {"pxx", "qy"},
                           {"pxy", "rho"},
                           {"pxy", "qx"},
                           {"pxy", "qy"}});
}

}  // namespace

std::vector<Rotation> rational_rotations(std::size_t count) {
  std::vector<Rotation> out;
  if (count == 0) return out;
  const std::array<Rotation, 5> base = {Rotation(Rational(3, 5), Rational(4, 5)),
                                        Rotation(Rational(5, 13), Rational(12, 13)),
                                        Rotation(Rational(8, 17), Rational(15, 17)),
                                        Rotation(Rational(20, 29), Rational(21, 29)),
                                        Rotation(Rational(7, 25), Rational(24, 25))};
  push_unique(out, Rotation::identity(), count);
  for (const auto& r : base) push_unique(out, r, count);
  push_unique(out, Rotation::quarter_turn(), count);
  push_unique(out, Rotation(-1, 0), count);
  push_unique(out, Rotation(0, -1), count);
  for (const auto& r : base) {
    const Rational& c = r.c();
    const Rational& s = r.s();
    for (const auto& v : {Rotation(s, c), Rotation(-c, s), Rotation(c, -s), Rotation(-c, -s), Rotation(-s, c),
                          Rotation(s, -c), Rotation(-s, -c)}) {
      push_unique(out, v, count);
    }
  }
  // Compositions: keep rotating by the first Pythagorean angle, which is an
  // irrational multiple of pi, so every new point is distinct.
  Rotation current = base[0];
  while (out.size() < count) {
    current = current.compose(base[0]);
    push_unique(out, current, count);
  }
  return out;
}

SymTensor apply_phi(const Rotation& r, const SymTensor& a) {
  if (a.size() != kConserved) throw ShapeError("apply_phi expects tensors over the three conserved moments");
  const int n = a.order();
  const DiffPoly u = DiffPoly::monomial(1, 0, r.c()) + DiffPoly::monomial(0, 1, r.s());
  const DiffPoly w = DiffPoly::monomial(1, 0, -r.s()) + DiffPoly::monomial(0, 1, r.c());
  std::vector<DiffPoly> upow{Rational(1)}, wpow{Rational(1)};
  for (int k = 1; k <= n; ++k) {
    upow.push_back(upow.back() * u);
    wpow.push_back(wpow.back() * w);
  }
  DiffOpMatrix rotated(kConserved, kConserved);
  for (std::size_t l = 0; l < kConserved; ++l)
    for (std::size_t k = 0; k < kConserved; ++k)
      for (int x = 0; x <= n; ++x) {
        const Rational& v = a.at(l, k, x);
        if (v.is_zero()) continue;
        rotated(l, k) += upow[static_cast<std::size_t>(x)] * wpow[static_cast<std::size_t>(n - x)] * (v * binomial(n, x));
      }
  const DiffOpMatrix result = r.moment_block() * rotated * r.inverse().moment_block();
  return symmetrize(result, n);
}

bool is_fixed_point(const SymTensor& a, const std::vector<Rotation>& sample) {
  const std::size_t need = required_sample_size(a.order());
  if (sample.size() < need) {
    throw PreconditionError("fixed-point test at order " + std::to_string(a.order()) + " needs at least " +
                            std::to_string(need) + " rotations, got " + std::to_string(sample.size()));
  }
  return std::all_of(sample.begin(), sample.end(), [&](const Rotation& r) { return apply_phi(r, a) == a; });
}

std::vector<SymTensor> lack_of_isotropy(const std::vector<SymTensor>& tensors, const Rotation& r) {
  std::vector<SymTensor> out;
  out.reserve(tensors.size());
  for (const auto& a : tensors) out.push_back(apply_phi(r, a) - a);
  return out;
}

IsotropyReport isotropy_report(const std::vector<SymTensor>& tensors) {
  IsotropyReport report;
  if (tensors.empty()) return report;
  const auto sample = rational_rotations(required_sample_size(tensors.back().order()));
  bool intact = true;
  for (const auto& a : tensors) {
    OrderResidual res{a.order(), Rational(0)};
    for (const auto& r : sample) {
      const SymTensor defect = apply_phi(r, a) - a;
      const Rational d = tensor_distance(defect, SymTensor(a.order(), a.size()));
      if (d > res.max_abs) res.max_abs = d;
      if (intact && !report.witness && !defect.is_zero()) {
        for (std::size_t i = 0; i < a.size() && !report.witness; ++i)
          for (std::size_t j = 0; j < a.size() && !report.witness; ++j)
            for (int x = a.order(); x >= 0; --x) {
              if (!defect.at(i, j, x).is_zero()) {
                report.witness = IsotropyWitness{a.order(), i, j, derivative_string(a.order(), x), r, defect.at(i, j, x)};
                break;
              }
            }
      }
    }
    if (intact && res.max_abs.is_zero()) {
      report.order_achieved = a.order();
    } else {
      intact = false;
    }
    report.residuals.push_back(std::move(res));
  }
  return report;
}

IsotropyReport isotropy_order(const Scheme& scheme, int m_max) {
  return isotropy_report(equivalent_tensors(scheme, m_max));
}

RotationDilatation d2q13_defab(const Rational& e_phix_qx, const Rational& e_phiy_qx, const Rational& sigma_xx,
                               const Rational& sigma_xy) {
  const Rational denom = sigma_xx + sigma_xy;
  const Rational seven_mix = Rational(7) * sigma_xx + Rational(2) * sigma_xy;
  const Rational a =
      -Rational(1, 12) * (Rational(7) * seven_mix * e_phix_qx + Rational(5) * (Rational(17) * sigma_xx - Rational(4) * sigma_xy)) /
      denom;
  const Rational b = Rational(7, 12) * e_phiy_qx * seven_mix / denom;
  return {a, b};
}

bool check_d2q9(const Scheme& scheme, int order) {
  if (scheme.id() != SchemeId::d2q9) throw UnsupportedError("check_d2q9 called on " + to_string(scheme.id()));
  if (order < 1) throw PreconditionError("isotropy order must be at least 1");
  if (order >= 5) return false;
  if (!first_order_zero_set(scheme)) return false;
  if (order == 1) return true;

  const Rational sxx = sigma_raw(scheme, "pxx");
  const Rational sxy = sigma_raw(scheme, "pxy");
  const Rational flux = (sxx - Rational(4) * sxy) / (Rational(2) * sxy + sxx);
  if (!all_zero(scheme, {{"phix", "rho"}, {"phix", "qy"}, {"phiy", "rho"}, {"phiy", "qx"}})) return false;
  if (scheme.E("phix", "qx") != flux || scheme.E("phiy", "qy") != flux) return false;
  if (order == 2) return true;

  if (sxx != sxy || scheme.E("phix", "qx") != Rational(-1)) return false;
  const Rational e_rho = scheme.E("e", "rho");
  const bool eps2_momentum_free = all_zero(scheme, {{"eps2", "qx"}, {"eps2", "qy"}});
  const bool energy_link = Rational(2) * scheme.E("eps2", "rho") + 4 + Rational(3) * e_rho == Rational(0);
  const Rational sphix = sigma_raw(scheme, "phix");
  const Rational sphiy = sigma_raw(scheme, "phiy");
  const Rational twelfth = (Rational(12) * sxx).inverse();
  const bool flux_twelfth = sphix == twelfth && sphiy == twelfth;
  const Rational se = sigma_raw(scheme, "e");
  const bool p6 = eps2_momentum_free && energy_link;
  const bool p7 = eps2_momentum_free && flux_twelfth;
  const bool p8 = flux_twelfth && sxx == se;
  if (!(p6 || p7 || p8)) return false;
  if (order == 3) return true;

  const Rational sixth = (Rational(6) * sxx).inverse();
  if (!(energy_link && se == sxx && eps2_momentum_free && sphix == sixth && sphiy == sixth)) return false;
  return Rational(2) + Rational(3) * e_rho == Rational(0) || sigma_raw(scheme, "eps2") == sxx;
}

bool check_d2q13(const Scheme& scheme, int order) {
  if (scheme.id() != SchemeId::d2q13) throw UnsupportedError("check_d2q13 called on " + to_string(scheme.id()));
  if (order < 1) throw PreconditionError("isotropy order must be at least 1");
  if (order > 3) throw UnsupportedError("no closed-form d2q13 conditions beyond third order");
  if (!first_order_zero_set(scheme)) return false;
  if (order == 1) return true;

  if (!all_zero(scheme, {{"phix", "rho"}, {"phiy", "rho"}, {"xeps2", "rho"}, {"yeps2", "rho"}})) return false;
  const Rational& flux = scheme.E("phix", "qx");
  const Rational& twist = scheme.E("phiy", "qx");
  if (scheme.E("phiy", "qy") != flux || scheme.E("phix", "qy") != -twist) return false;
  const auto [a, b] = d2q13_defab(flux, twist, sigma_raw(scheme, "pxx"), sigma_raw(scheme, "pxy"));
  if (scheme.E("xeps2", "qx") != a || scheme.E("yeps2", "qy") != a) return false;
  if (scheme.E("xeps2", "qy") != b || scheme.E("yeps2", "qx") != -b) return false;
  if (order == 2) return true;

  if (!twist.is_zero() || !b.is_zero()) return false;
  if (a != -Rational(21, 8) * flux - Rational(65, 24)) return false;
  return match_annex_family(scheme).has_value();
}

bool check_closed_form(const Scheme& scheme, int order) {
  return scheme.id() == SchemeId::d2q9 ? check_d2q9(scheme, order) : check_d2q13(scheme, order);
}

}  // namespace lbiso
