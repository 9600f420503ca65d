#include "lbiso/diff_poly.hpp"

#include <algorithm>
#include <sstream>

#include "lbiso/errors.hpp"

namespace lbiso {

DiffPoly::DiffPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

DiffPoly DiffPoly::monomial(int x_power, int y_power, const Rational& coefficient) {
  DiffPoly p;
  p.add_term(x_power, y_power, coefficient);
  return p;
}

int DiffPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool DiffPoly::is_homogeneous(int k) const {
  return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return t.first.degree() == k; });
}

DiffPoly DiffPoly::homogeneous_part(int k) const {
  DiffPoly p;
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) p.terms_.emplace(m, c);
  return p;
}

Rational DiffPoly::coefficient(int x_power, int y_power) const {
  const auto it = terms_.find(Monomial{x_power, y_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPoly::add_term(int x_power, int y_power, const Rational& coefficient) {
  if (x_power < 0 || y_power < 0) throw DomainError("negative derivative exponent");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{x_power, y_power}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string DiffPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string factors;
    auto append = [&factors](const char* sym, int p) {
      if (p == 0) return;
      if (!factors.empty()) factors += "*";
      factors += sym;
      if (p > 1) factors += "^" + std::to_string(p);
    };
    append("dx", m.x_power);
    append("dy", m.y_power);
    if (factors.empty()) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << factors;
    } else {
      os << mag << "*" << factors;
    }
  }
  return os.str();
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x_power, m.y_power, c);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.x_power, m.y_power, -c);
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DiffPoly operator-(const DiffPoly& a) {
  DiffPoly r = a;
  return r *= Rational(-1);
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.x_power + mb.x_power, ma.y_power + mb.y_power, ca * cb);
  return r;
}

DiffOpMatrix::DiffOpMatrix(const RationalMatrix& constants)
    : rows_(constants.rows()), cols_(constants.cols()), data_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = DiffPoly(constants(i, j));
}

DiffOpMatrix DiffOpMatrix::identity(std::size_t n) { return DiffOpMatrix(RationalMatrix::identity(n)); }

bool DiffOpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const DiffPoly& p) { return p.is_zero(); });
}

bool DiffOpMatrix::is_homogeneous(int k) const {
  return std::all_of(data_.begin(), data_.end(), [k](const DiffPoly& p) { return p.is_homogeneous(k); });
}

DiffOpMatrix DiffOpMatrix::homogeneous_part(int k) const {
  DiffOpMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].homogeneous_part(k);
  return r;
}

DiffOpMatrix DiffOpMatrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw ShapeError("operator block out of range");
  DiffOpMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

DiffOpMatrix& DiffOpMatrix::operator+=(const DiffOpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("operator sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DiffOpMatrix& DiffOpMatrix::operator-=(const DiffOpMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("operator difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

DiffOpMatrix& DiffOpMatrix::operator*=(const Rational& c) {
  for (auto& p : data_) p *= c;
  return *this;
}

DiffOpMatrix operator*(const DiffOpMatrix& a, const DiffOpMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("operator product shape mismatch");
  DiffOpMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const DiffPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

DiffOpMatrix operator*(const RationalMatrix& a, const DiffOpMatrix& b) {
  if (a.cols() != b.rows_) throw ShapeError("operator product shape mismatch");
  DiffOpMatrix c(a.rows(), b.cols_);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += b(k, j) * a(i, k);
    }
  return c;
}

DiffOpMatrix operator*(const DiffOpMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows()) throw ShapeError("operator product shape mismatch");
  DiffOpMatrix c(a.rows_, b.cols());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

}  // namespace lbiso
