#include "lbiso/sym_tensor.hpp"

#include <algorithm>

#include "lbiso/errors.hpp"

namespace lbiso {

SymTensor::SymTensor(int order, std::size_t size)
    : order_(order), size_(size), data_(size * size * static_cast<std::size_t>(order + 1)) {
  if (order < 1) throw DomainError("tensor order must be at least 1");
}

std::size_t SymTensor::index(std::size_t i, std::size_t j, int x_count) const {
  if (i >= size_ || j >= size_ || x_count < 0 || x_count > order_) throw ShapeError("tensor index out of range");
  return (i * size_ + j) * static_cast<std::size_t>(order_ + 1) + static_cast<std::size_t>(x_count);
}

const Rational& SymTensor::at(std::size_t i, std::size_t j, const std::string& derivs) const {
  if (static_cast<int>(derivs.size()) != order_) throw ShapeError("derivative string has wrong length");
  return at(i, j, x_count_of(derivs));
}

Rational& SymTensor::at(std::size_t i, std::size_t j, const std::string& derivs) {
  if (static_cast<int>(derivs.size()) != order_) throw ShapeError("derivative string has wrong length");
  return at(i, j, x_count_of(derivs));
}

bool SymTensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (order_ != o.order_ || size_ != o.size_) throw ShapeError("tensor sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  if (order_ != o.order_ || size_ != o.size_) throw ShapeError("tensor difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

SymTensor operator-(const SymTensor& a) {
  SymTensor r = a;
  for (auto& v : r.data_) v = -v;
  return r;
}

std::string derivative_string(int order, int x_count) {
  return std::string(static_cast<std::size_t>(x_count), 'x') + std::string(static_cast<std::size_t>(order - x_count), 'y');
}

int x_count_of(const std::string& derivs) {
  int n = 0;
  for (char c : derivs) {
    if (c == 'x') {
      ++n;
    } else if (c != 'y') {
      throw ConfigError("derivative string '" + derivs + "' may only contain x and y");
    }
  }
  return n;
}

std::size_t symmetric_component_count(std::size_t size, int dim, int order) {
  // (d+n-1)! / (n! (d-1)!) = binom(d+n-1, n)
  const Rational c = binomial(dim + order - 1, order);
  return size * size * static_cast<std::size_t>(c.numerator().get_ui());
}

SymTensor symmetrize(const DiffOpMatrix& op, int order) {
  if (op.rows() != op.cols()) throw ShapeError("symmetrize expects a square operator matrix");
  SymTensor t(order, op.rows());
  for (std::size_t i = 0; i < op.rows(); ++i)
    for (std::size_t j = 0; j < op.cols(); ++j)
      for (const auto& [m, c] : op(i, j).terms()) {
        if (m.degree() != order) {
          throw DegreeError("operator entry (" + std::to_string(i) + "," + std::to_string(j) + ") has a term of degree " +
                            std::to_string(m.degree()) + ", expected " + std::to_string(order));
        }
        t.at(i, j, m.x_power) = c / binomial(order, m.x_power);
      }
  return t;
}

DiffOpMatrix contract(const SymTensor& a) {
  const int n = a.order();
  DiffOpMatrix op(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int x = 0; x <= n; ++x) op(i, j).add_term(x, n - x, a.at(i, j, x) * binomial(n, x));
  return op;
}

Rational tensor_distance(const SymTensor& a, const SymTensor& b) {
  if (a.order() != b.order() || a.size() != b.size()) throw ShapeError("tensor distance shape mismatch");
  Rational best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int x = 0; x <= a.order(); ++x) {
        Rational d = (a.at(i, j, x) - b.at(i, j, x)).abs();
        if (d > best) best = std::move(d);
      }
  return best;
}

}  // namespace lbiso
