#include "holo/json_io.hpp"

#include <fstream>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw MalformedInput("expected a rational string, got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw MalformedInput("bad rational " + j.dump());
  }
}

Poly poly_from(const Json& j) {
  if (!j.is_array()) throw MalformedInput("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from(x));
  return Poly(std::move(c));
}

std::string theta_string(const Poly& p) {
  std::string out;
  for (char c : p.to_string('t')) out += c == 't' ? std::string("theta") : std::string(1, c);
  return out;
}

std::string complex_string(Complex z) {
  std::ostringstream os;
  os.precision(18);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

}  // namespace

Json to_json(const Recurrence& r) {
  Json j;
  j["kind"] = "recurrence";
  j["order"] = r.order();
  j["coefficients"] = Json::array();
  for (const auto& p : r.coeffs()) j["coefficients"].push_back(poly_json(p));
  if (!r.initial_terms().empty()) {
    j["initial_terms"] = Json::array();
    for (const auto& x : r.initial_terms()) j["initial_terms"].push_back(to_string(x));
  }
  return j;
}

Json to_json(const DiffOp& op) {
  Json j;
  j["kind"] = "ode";
  j["order"] = op.order();
  j["coefficients"] = Json::array();
  for (const auto& p : op.coeffs()) j["coefficients"].push_back(poly_json(p));
  return j;
}

Json to_json(const Operator& op) {
  return std::visit([](const auto& o) { return to_json(o); }, op);
}

Operator operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("coefficients"))
    throw MalformedInput("operator JSON needs \"kind\" and \"coefficients\"");
  const auto kind = j["kind"];
  std::vector<Poly> coeffs;
  for (const auto& p : j["coefficients"]) coeffs.push_back(poly_from(p));
  if (coeffs.empty()) throw MalformedInput("empty coefficient list");
  if (j.contains("order") && j["order"] != static_cast<long>(coeffs.size()) - 1)
    throw MalformedInput("\"order\" disagrees with the coefficient count");
  try {
    if (kind == "recurrence") {
      std::vector<Rational> init;
      if (j.contains("initial_terms"))
        for (const auto& x : j["initial_terms"]) init.push_back(rational_from(x));
      return Recurrence(std::move(coeffs), std::move(init));
    }
    if (kind == "ode") return DiffOp(std::move(coeffs));
  } catch (const MalformedInput&) {
    throw;
  } catch (const Error& e) {
    throw MalformedInput(e.what());
  }
  throw MalformedInput("unknown operator kind " + kind.dump());
}

Operator read_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return operator_from_json(j);
}

std::string theta_polynomial(const Poly& p) { return theta_string(p); }

Json to_json(const SingularPointReport& r) {
  Json j;
  j["location"] = r.location.to_string();
  j["kind"] = to_string(r.kind);
  j["indicial_polynomial"] = theta_string(r.indicial);
  j["indicial_exponents"] = Json::array();
  for (const auto& x : r.exponents)
    j["indicial_exponents"].push_back({{"root", to_string(x.value)}, {"multiplicity", x.multiplicity}});
  for (const auto& [f, m] : r.nonrational_exponents)
    j["indicial_exponents"].push_back(
        {{"nonrational_factor", theta_string(f)}, {"degree", f.degree()}, {"multiplicity", m}});
  j["log_degree_bound"] = r.log_degree_bound;
  j["log_flag"] = to_string(r.log_flag);
  j["newton_slopes"] = Json::array();
  for (const auto& s : r.newton_slopes) j["newton_slopes"].push_back({{"slope", to_string(s.slope)}, {"length", s.length}});
  j["ramification"] = r.ramification;
  j["exp_part_degree"] = to_string(r.exp_part_degree);
  return j;
}

Json to_json(const GuessResult& g) {
  Json j;
  j["found"] = g.found();
  j["max_order"] = g.max_order;
  j["max_degree"] = g.max_degree;
  j["terms_used"] = g.terms_used;
  if (g.held_out) {
    j["held_out"] = g.held_out;
    j["max_residual"] = g.max_residual;
  }
  if (!g.warning.empty()) j["warning"] = g.warning;
  if (g.found()) j["recurrence"] = to_json(*g.recurrence);
  return j;
}

Json to_json(const AsymptoticScale& s) {
  Json j{{"alpha", to_string(s.alpha)}, {"beta", to_string(s.beta)}, {"gamma", to_string(s.gamma)}};
  if (s.experimental()) {
    j["beta_imag"] = s.beta_imag;
    j["gamma_imag"] = s.gamma_imag;
    j["experimental"] = true;
  }
  return j;
}

Json to_json(const TransferReport& t) {
  Json j;
  j["scale"] = to_json(t.scale);
  j["singular_element"] = t.element;
  j["theta"] = static_cast<double>(t.theta);
  j["trend_toward_one"] = t.trend_toward_one;
  j["trend_from_k"] = t.trend_from;
  j["samples"] = Json::array();
  for (const auto& s : t.samples)
    j["samples"].push_back({{"k", s.k},
                            {"terms", s.terms},
                            {"z", complex_string(s.z)},
                            {"partial_sum", complex_string(s.partial_sum)},
                            {"element", complex_string(s.element)},
                            {"ratio", static_cast<double>(s.ratio)},
                            {"tail_estimate", static_cast<double>(s.tail_estimate)},
                            {"rounding_estimate", static_cast<double>(s.rounding_estimate)}});
  return j;
}

Rational parse_rational_arg(const std::string& text) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return parse_rational(text);
    // Exact decimal.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    Integer den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return parse_rational(digits + "/" + den.get_str());
  } catch (const std::exception&) {
    throw MalformedInput("not a rational number: " + text);
  }
}

}  // namespace holo
