#include "lbiso/rotation.hpp"

#include "lbiso/errors.hpp"

namespace lbiso {

Rotation::Rotation(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + s_ * s_ != Rational(1)) {
    throw DomainError("rotation point " + str() + " is not on the unit circle");
  }
}

Rotation Rotation::compose(const Rotation& other) const {
  return {c_ * other.c_ - s_ * other.s_, s_ * other.c_ + c_ * other.s_};
}

RationalMatrix Rotation::spatial() const {
  RationalMatrix r(2, 2);
  r(0, 0) = c_;
  r(0, 1) = -s_;
  r(1, 0) = s_;
  r(1, 1) = c_;
  return r;
}

RationalMatrix Rotation::moment_block() const {
  RationalMatrix r(3, 3);
  r(0, 0) = 1;
  r(1, 1) = c_;
  r(1, 2) = -s_;
  r(2, 1) = s_;
  r(2, 2) = c_;
  return r;
}

}  // namespace lbiso
