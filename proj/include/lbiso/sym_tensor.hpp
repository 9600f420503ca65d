#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "lbiso/diff_poly.hpp"
#include "lbiso/rational.hpp"

namespace lbiso {

/// Canonical representative of an order-n equivalent-equation tensor in two
/// space dimensions. Derivative indices are stored as a multiset, i.e. by
/// the number of x indices, so the tensor is symmetric by construction.
class SymTensor {
 public:
  SymTensor() = default;
  SymTensor(int order, std::size_t size);

  int order() const { return order_; }
  std::size_t size() const { return size_; }
  /// Stored components: N^2 (n+1).
  std::size_t component_count() const { return data_.size(); }

  Rational& at(std::size_t i, std::size_t j, int x_count) { return data_[index(i, j, x_count)]; }
  const Rational& at(std::size_t i, std::size_t j, int x_count) const { return data_[index(i, j, x_count)]; }

  /// Entry keyed by a derivative string such as "xxy" (any order of letters).
  const Rational& at(std::size_t i, std::size_t j, const std::string& derivs) const;
  Rational& at(std::size_t i, std::size_t j, const std::string& derivs);

  bool is_zero() const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator-(const SymTensor& a);
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, int x_count) const;

  int order_ = 0;
  std::size_t size_ = 0;
  std::vector<Rational> data_;
};

/// Canonical derivative string with x_count x's followed by y's.
std::string derivative_string(int order, int x_count);
/// Number of x's in a derivative string; throws ConfigError on other letters.
int x_count_of(const std::string& derivs);

/// Generic count N^2 (d+n-1)! / (n! (d-1)!) of distinct components.
std::size_t symmetric_component_count(std::size_t size, int dim, int order);

/// Inverse of the maximal contraction: the coefficient of dx^a dy^(n-a) is
/// binom(n, a) times the symmetric entry with a x-indices.
SymTensor symmetrize(const DiffOpMatrix& op, int order);

/// Sum over all ordered index tuples, i.e. the operator A . grad^n.
DiffOpMatrix contract(const SymTensor& a);

/// Converts exactly representable values exactly; otherwise rounds once.
template <typename Real>
Real to_real(const Rational& v) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(v.to_double());
  } else {
    return Real(v.numerator().get_str()) / Real(v.denominator().get_str());
  }
}

/// Contraction with dx -> i kx, dy -> i ky; returns the N x N matrix row-major.
template <typename Real>
std::vector<std::complex<Real>> contract_wavevector(const SymTensor& a, const Real& kx, const Real& ky) {
  using Complex = std::complex<Real>;
  const int n = a.order();
  const std::size_t size = a.size();
  std::vector<Complex> out(size * size, Complex(Real(0), Real(0)));
  // i^n
  const Complex i_pow = [n] {
    switch (n % 4) {
      case 0: return Complex(Real(1), Real(0));
      case 1: return Complex(Real(0), Real(1));
      case 2: return Complex(Real(-1), Real(0));
      default: return Complex(Real(0), Real(-1));
    }
  }();
  std::vector<Real> monomials(static_cast<std::size_t>(n + 1));
  for (int x = 0; x <= n; ++x) {
    Real m(1);
    for (int p = 0; p < x; ++p) m *= kx;
    for (int p = 0; p < n - x; ++p) m *= ky;
    monomials[static_cast<std::size_t>(x)] = m * to_real<Real>(binomial(n, x));
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      Real acc(0);
      for (int x = 0; x <= n; ++x) {
        const Rational& v = a.at(i, j, x);
        if (v.is_zero()) continue;
        acc += to_real<Real>(v) * monomials[static_cast<std::size_t>(x)];
      }
      out[i * size + j] = i_pow * Complex(acc, Real(0));
    }
  return out;
}

/// Maximum absolute entry difference; throws ShapeError on mismatch.
Rational tensor_distance(const SymTensor& a, const SymTensor& b);

}  // namespace lbiso
