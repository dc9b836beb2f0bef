#include "holo/singclass.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace holo {

std::string AsymptoticScale::to_string() const {
  std::ostringstream os;
  os << "(" << holo::to_string(alpha) << ", " << holo::to_string(beta);
  if (beta_imag != 0) os << (beta_imag > 0 ? "+" : "") << beta_imag << "i";
  os << ", " << holo::to_string(gamma);
  if (gamma_imag != 0) os << (gamma_imag > 0 ? "+" : "") << gamma_imag << "i";
  os << ")";
  return os.str();
}

std::string Point::to_string() const { return infinite ? "infinity" : holo::to_string(value); }

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::ordinary:
      return "ordinary";
    case PointKind::regular_singular:
      return "regular_singular";
    case PointKind::irregular:
      return "irregular";
  }
  return "?";
}

std::string to_string(LogFlag f) {
  switch (f) {
    case LogFlag::none:
      return "none";
    case LogFlag::possible:
      return "possible";
    case LogFlag::certain:
      return "certain";
  }
  return "?";
}

bool operator==(const SingularPointReport& a, const SingularPointReport& b) {
  return a.kind == b.kind && a.indicial == b.indicial && a.exponents == b.exponents &&
         a.nonrational_exponents == b.nonrational_exponents && a.log_degree_bound == b.log_degree_bound &&
         a.log_flag == b.log_flag && a.newton_slopes == b.newton_slopes && a.ramification == b.ramification &&
         a.exp_part_degree == b.exp_part_degree;
}

ThetaOp local_theta_form(const DiffOp& ode, const Point& z0) {
  ThetaOp out;
  const int e = ode.order();
  for (int i = 0; i <= e; ++i) {
    const Poly& c = ode.coefficient_of_derivative(i);
    if (c.is_zero()) continue;
    if (!z0.infinite) {
      // D_z = D_t = t^{-1} theta (theta-1) ... per power.
      const Poly local = c.shifted(z0.value);
      const Poly ff = falling_factorial(static_cast<std::size_t>(i));
      for (int j = 0; j <= local.degree(); ++j)
        if (local[static_cast<std::size_t>(j)] != 0)
          out = out + ThetaOp::monomial(j - i, local[static_cast<std::size_t>(j)] * ff);
    } else {
      // z = 1/t, D_z = -t theta, (t theta)^i = t^i theta (theta+1) ... (theta+i-1).
      const Poly rf = rising_factorial(static_cast<std::size_t>(i)) * Rational(i % 2 ? -1 : 1);
      for (int j = 0; j <= c.degree(); ++j)
        if (c[static_cast<std::size_t>(j)] != 0) out = out + ThetaOp::monomial(i - j, c[static_cast<std::size_t>(j)] * rf);
    }
  }
  return out;
}

Poly indicial_polynomial(const DiffOp& ode, const Point& z0) {
  const ThetaOp t = local_theta_form(ode, z0);
  return t.terms().begin()->second.monic();
}

namespace {

/// v_j = lowest t-power whose slice has a theta^j term; absent degrees omitted.
std::map<int, long> theta_valuations(const ThetaOp& t) {
  std::map<int, long> v;
  for (const auto& [k, p] : t.terms())
    for (int j = 0; j <= p.degree(); ++j)
      if (p[static_cast<std::size_t>(j)] != 0 && !v.count(j)) v[j] = k;
  return v;
}

}  // namespace

std::vector<NewtonSlope> newton_polygon(const DiffOp& ode, const Point& z0) {
  const auto v = theta_valuations(local_theta_form(ode, z0));
  std::vector<NewtonSlope> out;
  int ic = v.rbegin()->first;
  long vc = v.rbegin()->second;
  for (;;) {
    bool have = false;
    Rational best;
    int bj = 0;
    for (const auto& [j, vj] : v) {
      if (j >= ic) break;
      Rational s(vc - vj, ic - j);
      s.canonicalize();
      if (!have || s > best) {
        have = true;
        best = s;
        bj = j;
      }
    }
    if (!have || best <= 0) break;
    out.push_back({best, ic - bj});
    vc = v.at(bj);
    ic = bj;
  }
  if (ic > 0) out.push_back({0, ic});
  return out;
}

namespace {

long lcm_of_denominators(const std::vector<NewtonSlope>& slopes) {
  long r = 1;
  for (const auto& s : slopes) r = std::lcm(r, s.slope.get_den().get_si());
  return r;
}

PointKind fuchs_kind(const DiffOp& ode, const Point& z0) {
  const auto [shift, op] = to_derivative_form(local_theta_form(ode, z0));
  const auto& c = op.by_order();
  const int e = static_cast<int>(c.size()) - 1;
  const int ve = c.back().valuation();
  bool ordinary = true, regular = true;
  for (int i = 0; i < e; ++i) {
    if (c[static_cast<std::size_t>(i)].is_zero()) continue;
    const int vi = c[static_cast<std::size_t>(i)].valuation();
    if (vi < ve) ordinary = false;
    if (vi - ve < i - e) regular = false;
  }
  if (ordinary) return PointKind::ordinary;
  return regular ? PointKind::regular_singular : PointKind::irregular;
}

/// Integer k with b(x) = a(x + k) for monic a, b of equal degree, if any.
bool integer_shift_equivalent(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree() || a.degree() < 1) return false;
  const int d = a.degree();
  Rational k = (b[static_cast<std::size_t>(d - 1)] - a[static_cast<std::size_t>(d - 1)]) / Rational(d);
  k.canonicalize();
  return k.get_den() == 1 && a.shifted(k) == b;
}

}  // namespace

SingularPointReport classify_point(const DiffOp& ode, const Point& z0) {
  SingularPointReport rep;
  rep.location = z0;
  const int e = ode.order();
  rep.indicial = indicial_polynomial(ode, z0);
  if (rep.indicial.degree() > 0) {
    const RootReport roots = rational_roots(rep.indicial);
    for (const auto& r : roots.rational) rep.exponents.push_back({r.value, r.multiplicity});
    rep.nonrational_exponents = roots.nonrational;
  }
  rep.newton_slopes = newton_polygon(ode, z0);
  rep.ramification = lcm_of_denominators(rep.newton_slopes);
  for (const auto& s : rep.newton_slopes) rep.exp_part_degree = std::max(rep.exp_part_degree, s.slope);
  rep.kind = fuchs_kind(ode, z0);

  if (rep.kind == PointKind::ordinary) {
    rep.log_degree_bound = 0;
    rep.log_flag = LogFlag::none;
  } else if (rep.kind == PointKind::irregular) {
    rep.log_degree_bound = std::max(e - 1, 0);
    rep.log_flag = e > 1 ? LogFlag::possible : LogFlag::none;
  } else {
    // Exponents in one class modulo Z can produce logs; repeated roots must.
    struct Class {
      int total = 0;
      int members = 0;
      bool repeated = false;
    };
    std::vector<Class> classes;
    std::vector<Rational> reps;
    for (const auto& x : rep.exponents) {
      std::size_t c = 0;
      for (; c < reps.size(); ++c) {
        Rational diff = x.value - reps[c];
        diff.canonicalize();
        if (diff.get_den() == 1) break;
      }
      if (c == reps.size()) {
        reps.push_back(x.value);
        classes.emplace_back();
      }
      classes[c].total += x.multiplicity;
      classes[c].members += 1;
      classes[c].repeated |= x.multiplicity > 1;
    }
    std::vector<Poly> factor_reps;
    std::vector<Class> factor_classes;
    for (const auto& [f, m] : rep.nonrational_exponents) {
      std::size_t c = 0;
      for (; c < factor_reps.size(); ++c)
        if (integer_shift_equivalent(factor_reps[c], f)) break;
      if (c == factor_reps.size()) {
        factor_reps.push_back(f);
        factor_classes.emplace_back();
      }
      factor_classes[c].total += m;
      factor_classes[c].members += 1;
      factor_classes[c].repeated |= m > 1;
    }
    classes.insert(classes.end(), factor_classes.begin(), factor_classes.end());
    rep.log_degree_bound = 0;
    rep.log_flag = LogFlag::none;
    for (const auto& c : classes) {
      rep.log_degree_bound = std::max(rep.log_degree_bound, c.total - 1);
      if (c.repeated) rep.log_flag = LogFlag::certain;
      else if (c.members > 1 && rep.log_flag == LogFlag::none) rep.log_flag = LogFlag::possible;
    }
  }
  return rep;
}

AsymptoticVerdict forbidden_asymptotics_check(const SingularPointReport& report, const AsymptoticScale& scale) {
  AsymptoticVerdict v;
  if (scale.gamma != 0 || scale.gamma_imag != 0) {
    v.reason = "iterated logarithm (gamma = " + to_string(scale.gamma) +
               ") has no slot in Z^a (log Z)^k expansions";
    return v;
  }
  if (scale.beta_imag != 0 || scale.beta.get_den() != 1 || scale.beta < 0) {
    v.reason = "log power beta = " + to_string(scale.beta) + " is not a nonnegative integer";
    return v;
  }
  if (scale.beta > report.log_degree_bound) {
    v.reason = "log power beta = " + to_string(scale.beta) + " exceeds the log degree bound " +
               std::to_string(report.log_degree_bound) + " at " + report.location.to_string();
    return v;
  }
  v.compatible = true;
  Rational a = -(scale.alpha + 1);
  a.canonicalize();
  v.reason = "slot Z^(" + to_string(a) + ") (log Z)^" + to_string(scale.beta);
  return v;
}

}  // namespace holo
