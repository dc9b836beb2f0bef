#pragma once

#include <string>
#include <vector>

#include "holo/recurrence.hpp"
#include "holo/scale.hpp"

namespace holo {

/// A rational point of the projective line.
struct Point {
  bool infinite = false;
  Rational value;

  static Point infinity() { return {true, 0}; }
  static Point at(const Rational& v) { return {false, v}; }
  std::string to_string() const;
  friend bool operator==(const Point& a, const Point& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

enum class PointKind { ordinary, regular_singular, irregular };
enum class LogFlag { none, possible, certain };

std::string to_string(PointKind k);
std::string to_string(LogFlag f);

struct IndicialExponent {
  Rational value;
  int multiplicity;
  friend bool operator==(const IndicialExponent& a, const IndicialExponent& b) {
    return a.value == b.value && a.multiplicity == b.multiplicity;
  }
};

struct NewtonSlope {
  Rational slope;
  long length;
  friend bool operator==(const NewtonSlope& a, const NewtonSlope& b) {
    return a.slope == b.slope && a.length == b.length;
  }
};

struct SingularPointReport {
  Point location;
  PointKind kind = PointKind::ordinary;
  /// Lowest slice of the local theta-form, made monic.
  Poly indicial;
  std::vector<IndicialExponent> exponents;
  /// Irreducible-over-Q pieces without rational roots: (factor, multiplicity).
  std::vector<std::pair<Poly, int>> nonrational_exponents;
  int log_degree_bound = 0;
  LogFlag log_flag = LogFlag::none;
  /// Positive slopes (irregular part) followed by the slope-0 segment, if any.
  std::vector<NewtonSlope> newton_slopes;
  long ramification = 1;
  /// Degree of the exponential part's polynomial in Z^{-1/r}, as a power of 1/Z.
  Rational exp_part_degree = 0;

  friend bool operator==(const SingularPointReport& a, const SingularPointReport& b);
};

/// The operator in the local parameter t (t = z - z0, or t = 1/z at
/// infinity) written as sum_k t^k P_k(theta), theta = t d/dt.
ThetaOp local_theta_form(const DiffOp& ode, const Point& z0);

Poly indicial_polynomial(const DiffOp& ode, const Point& z0);
std::vector<NewtonSlope> newton_polygon(const DiffOp& ode, const Point& z0);
SingularPointReport classify_point(const DiffOp& ode, const Point& z0);

struct AsymptoticVerdict {
  bool compatible = false;
  std::string reason;
};

/// A holonomic singular expansion only carries Z^a (log Z)^k with
/// k a nonnegative integer up to the log degree bound. Incompatible when
/// gamma != 0, beta is not a nonnegative integer, or beta exceeds the
/// report's log degree bound.
AsymptoticVerdict forbidden_asymptotics_check(const SingularPointReport& report, const AsymptoticScale& scale);

}  // namespace holo
