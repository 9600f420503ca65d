#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lbiso/rational.hpp"
#include "lbiso/rational_matrix.hpp"

namespace lbiso {

/// Exponents of the monomial dx^x_power dy^y_power.
struct Monomial {
  int x_power = 0;
  int y_power = 0;
  int degree() const { return x_power + y_power; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in the commuting derivative symbols dx, dy with exact
/// coefficients. Zero coefficients are never stored.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static DiffPoly monomial(int x_power, int y_power, const Rational& coefficient = 1);
  static DiffPoly dx() { return monomial(1, 0); }
  static DiffPoly dy() { return monomial(0, 1); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int k) const;
  DiffPoly homogeneous_part(int k) const;
  Rational coefficient(int x_power, int y_power) const;
  void add_term(int x_power, int y_power, const Rational& coefficient);

  /// Human readable form such as "2*dx*dy - 1/3*dy^2".
  std::string str() const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator-(const DiffPoly& a);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Matrix whose entries are DiffPoly operators.
class DiffOpMatrix {
 public:
  DiffOpMatrix() = default;
  DiffOpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit DiffOpMatrix(const RationalMatrix& constants);

  static DiffOpMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  DiffPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const DiffPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_homogeneous(int k) const;
  /// Keeps only the terms of total degree k in every entry.
  DiffOpMatrix homogeneous_part(int k) const;
  DiffOpMatrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;

  DiffOpMatrix& operator+=(const DiffOpMatrix& o);
  DiffOpMatrix& operator-=(const DiffOpMatrix& o);
  DiffOpMatrix& operator*=(const Rational& c);
  friend DiffOpMatrix operator+(DiffOpMatrix a, const DiffOpMatrix& b) { return a += b; }
  friend DiffOpMatrix operator-(DiffOpMatrix a, const DiffOpMatrix& b) { return a -= b; }
  friend DiffOpMatrix operator-(DiffOpMatrix a) { return a *= Rational(-1); }
  friend DiffOpMatrix operator*(DiffOpMatrix a, const Rational& c) { return a *= c; }
  friend DiffOpMatrix operator*(const DiffOpMatrix& a, const DiffOpMatrix& b);
  friend DiffOpMatrix operator*(const RationalMatrix& a, const DiffOpMatrix& b);
  friend DiffOpMatrix operator*(const DiffOpMatrix& a, const RationalMatrix& b);
  friend bool operator==(const DiffOpMatrix&, const DiffOpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<DiffPoly> data_;
};

}  // namespace lbiso
