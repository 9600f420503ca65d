#include "lbiso/dispersion.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

namespace lbiso {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = std::complex<Real>;
using MatrixC = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

template <typename R>
Eigen::Matrix<std::complex<R>, Eigen::Dynamic, Eigen::Dynamic> to_complex(const RationalMatrix& m) {
  Eigen::Matrix<std::complex<R>, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::complex<R>(to_real<R>(m(i, j)), R(0));
  return out;
}

template <typename R>
Eigen::Matrix<std::complex<R>, Eigen::Dynamic, Eigen::Dynamic> symbol(const Scheme& scheme, const R& kx,
                                                                       const R& ky) {
  using std::cos;
  using std::sin;
  auto g = to_complex<R>(scheme_step_matrix(scheme));
  const auto& vs = scheme.velocities().velocities;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const R phase = -(kx * vs[j].x + ky * vs[j].y);
    g.row(static_cast<Eigen::Index>(j)) *= std::complex<R>(cos(phase), sin(phase));
  }
  return g;
}

// Maximum pairing error, or NaN when the slow modes cannot be identified.
Real sample_error(const Scheme& scheme, const std::vector<SymTensor>& tensors, const Real& kx, const Real& ky) {
  const MatrixC g = symbol<Real>(scheme, kx, ky);
  Eigen::ComplexEigenSolver<MatrixC> g_solver(g);
  const MatrixC moments = to_complex<Real>(scheme.basis().matrix) * g_solver.eigenvectors();

  const Eigen::Index q = g.rows();
  std::vector<Real> weight(static_cast<std::size_t>(q));
  for (Eigen::Index c = 0; c < q; ++c) {
    Real slow = 0;
    Real total = 0;
    for (Eigen::Index r = 0; r < q; ++r) {
      const Real a = std::norm(moments(r, c));
      total += a;
      if (r < static_cast<Eigen::Index>(kConserved)) slow += a;
    }
    weight[static_cast<std::size_t>(c)] = slow / total;
  }
  std::vector<std::size_t> order(static_cast<std::size_t>(q));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  if (weight[order[2]] < 2 * weight[order[3]]) return std::numeric_limits<Real>::quiet_NaN();

  MatrixC theta = MatrixC::Zero(kConserved, kConserved);
  for (const auto& a : tensors) {
    const auto c = contract_wavevector<Real>(a, kx, ky);
    for (std::size_t i = 0; i < kConserved; ++i)
      for (std::size_t j = 0; j < kConserved; ++j)
        theta(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -= c[i * kConserved + j];
  }
  Eigen::ComplexEigenSolver<MatrixC> t_solver(theta, false);
  std::vector<Complex> predicted;
  for (Eigen::Index i = 0; i < t_solver.eigenvalues().size(); ++i) predicted.push_back(std::exp(t_solver.eigenvalues()(i)));

  Real worst = 0;
  std::vector<bool> used(predicted.size(), false);
  for (std::size_t s = 0; s < kConserved; ++s) {
    const Complex lambda = g_solver.eigenvalues()(static_cast<Eigen::Index>(order[s]));
    std::size_t best = 0;
    Real best_dist = -1;
    for (std::size_t p = 0; p < predicted.size(); ++p) {
      const Real d = std::abs(lambda - predicted[p]);
      if (best_dist < 0 || d < best_dist) {
        best_dist = d;
        best = p;
      }
    }
    if (used[best]) return std::numeric_limits<Real>::quiet_NaN();
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

}  // namespace

Eigen::MatrixXcd amplification_symbol(const Scheme& scheme, double kx, double ky) {
  return symbol<double>(scheme, kx, ky);
}

std::vector<std::pair<double, double>> default_wavevectors() {
  const double angle = 0.3;
  std::vector<std::pair<double, double>> out;
  const int count = 8;
  for (int i = 0; i < count; ++i) {
    const double k = std::pow(10.0, -3.0 + static_cast<double>(i) / (count - 1));
    out.emplace_back(k * std::cos(angle), k * std::sin(angle));
  }
  return out;
}

DispersionReport dispersion_check(const Scheme& scheme, const std::vector<SymTensor>& tensors,
                                  const std::vector<std::pair<double, double>>& wavevectors) {
  DispersionReport report;
  report.order = static_cast<int>(tensors.size());
  std::vector<double> xs, ys;
  for (const auto& [kx, ky] : wavevectors) {
    DispersionSample sample;
    sample.k = std::hypot(kx, ky);
    const Real err = sample_error(scheme, tensors, Real(kx), Real(ky));
    if (boost::multiprecision::isnan(err) || err <= 0) {
      sample.skipped = true;
    } else {
      sample.error = static_cast<double>(err);
      xs.push_back(std::log(sample.k));
      ys.push_back(static_cast<double>(log(err)));
    }
    report.samples.push_back(sample);
  }
  if (xs.size() < 2) {
    report.slope = std::numeric_limits<double>::quiet_NaN();
    return report;
  }
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  report.slope = sxy / sxx;
  return report;
}

}  // namespace lbiso
