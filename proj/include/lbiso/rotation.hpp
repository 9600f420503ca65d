#pragma once

#include <string>

#include "lbiso/rational.hpp"
#include "lbiso/rational_matrix.hpp"

namespace lbiso {

/// Exact rotation of the plane, stored as a rational point (c, s) on the
/// unit circle: r = [[c, -s], [s, c]].
class Rotation {
 public:
  /// Throws DomainError unless c^2 + s^2 == 1 exactly.
  Rotation(Rational c, Rational s);
  static Rotation identity() { return {1, 0}; }
  static Rotation quarter_turn() { return {0, 1}; }

  const Rational& c() const { return c_; }
  const Rational& s() const { return s_; }

  /// this o other (angles add).
  Rotation compose(const Rotation& other) const;
  Rotation inverse() const { return {c_, -s_}; }

  /// 2x2 spatial rotation r.
  RationalMatrix spatial() const;
  /// 3x3 block matrix 1 (+) r acting on (rho, qx, qy).
  RationalMatrix moment_block() const;

  std::string str() const { return "(" + c_.str() + ", " + s_.str() + ")"; }
  friend bool operator==(const Rotation&, const Rotation&) = default;

 private:
  Rational c_;
  Rational s_;
};

}  // namespace lbiso
