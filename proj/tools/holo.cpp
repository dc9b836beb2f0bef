#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "holo/abelian.hpp"
#include "holo/annihilators.hpp"
#include "holo/closure.hpp"
#include "holo/errors.hpp"
#include "holo/guess.hpp"
#include "holo/hpeval/hpeval.hpp"
#include "holo/json_io.hpp"
#include "holo/parallel.hpp"
#include "holo/primes.hpp"
#include "holo/singclass.hpp"
#include "holo/witness.hpp"

using namespace holo;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kMalformed = 3, kExhausted = 4 };

struct Globals {
  bool json = false;
  long precision_bits = 0;  // 0 = automatic
  double tol = 1e-20;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string out;
};

Globals g;

void emit(const Json& j, const std::string& summary) {
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << j.dump(2) << "\n";
  }
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << summary << "\n";
}

std::string operator_summary(const Operator& op) {
  return std::visit([](const auto& o) { return o.to_string(); }, op);
}

Recurrence require_recurrence(const std::string& path) {
  const Operator op = read_operator_file(path);
  if (!std::holds_alternative<Recurrence>(op)) throw MalformedInput(path + ": expected a recurrence");
  return std::get<Recurrence>(op);
}

DiffOp require_ode(const std::string& path) {
  const Operator op = read_operator_file(path);
  if (const auto* r = std::get_if<Recurrence>(&op)) return rec_to_ode(*r);
  return std::get<DiffOp>(op);
}

Point parse_point(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return Point::infinity();
  try {
    return Point::at(parse_rational_arg(text));
  } catch (const MalformedInput&) {
    throw NonRationalPoint("point must be rational or infinity: " + text);
  }
}

std::vector<Rational> read_terms(const std::string& path) {
  std::vector<Rational> terms;
  for (const auto& x : read_bfile(path)) terms.emplace_back(x);
  return terms;
}

AsymptoticScale scale_from(const std::string& a, const std::string& b, const std::string& c, double bi, double ci) {
  AsymptoticScale s{parse_rational_arg(a), parse_rational_arg(b), parse_rational_arg(c), bi, ci};
  return s;
}

int run(int argc, char** argv) {
  CLI::App app{"Holonomic sequence laboratory"};
  app.require_subcommand(1);
  app.add_flag("--json", g.json, "Machine-readable JSON on stdout");
  app.add_option("--precision-bits", g.precision_bits, "Working precision (default automatic)");
  app.add_option("--tol", g.tol, "Residual tolerance for float guessing");
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--jobs", g.jobs, "Worker thread cap")
      ->check(CLI::NonNegativeNumber)
      ->trigger_on_parse()
      ->each([](const std::string& v) { set_max_jobs(static_cast<unsigned>(std::stoul(v))); });
  app.add_option("--out", g.out, "Also write the JSON result to this file");

  // guess
  auto* guess = app.add_subcommand("guess", "Search a recurrence for b-file terms");
  std::string guess_input;
  int max_order = 4, max_degree = 4;
  std::string guess_mode = "exact";
  guess->add_option("--input", guess_input, "b-file")->required();
  guess->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  guess->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);
  guess->add_option("--mode", guess_mode)->check(CLI::IsMember({"exact", "float"}));
  guess->callback([&] {
    const auto terms = read_terms(guess_input);
    GuessResult r;
    if (guess_mode == "exact") {
      r = guess_exact(terms, max_order, max_degree);
    } else {
      const hp::Bits bits = g.precision_bits > 0 ? g.precision_bits : 256;
      std::vector<hp::BigReal> real;
      for (const auto& t : terms) real.push_back(hp::BigReal::from(t, bits));
      r = guess_float(real, max_order, max_degree, g.tol);
    }
    emit(to_json(r), r.found() ? "found: " + r.recurrence->to_string()
                               : "not found with order <= " + std::to_string(max_order) +
                                     ", degree <= " + std::to_string(max_degree));
  });

  // closure
  auto* closure = app.add_subcommand("closure", "Closure operations on recurrences");
  std::string op_name, a_path, b_path;
  long shift = 1;
  closure->add_option("--op", op_name)
      ->required()
      ->check(CLI::IsMember({"sum", "hadamard", "cauchy", "shift", "difference"}));
  closure->add_option("--a", a_path, "First operator JSON")->required();
  closure->add_option("--b", b_path, "Second operator JSON");
  closure->add_option("--shift", shift);
  closure->callback([&] {
    const Recurrence a = require_recurrence(a_path);
    Recurrence r;
    if (op_name == "shift") r = closure_shift(a, shift);
    else if (op_name == "difference") r = closure_difference(a);
    else {
      if (b_path.empty()) throw CLI::ValidationError("--b", "required for " + op_name);
      const Recurrence b = require_recurrence(b_path);
      r = op_name == "sum" ? closure_sum(a, b) : op_name == "hadamard" ? closure_hadamard(a, b) : closure_cauchy(a, b);
    }
    emit(to_json(r), r.to_string());
  });

  // transform
  auto* transform = app.add_subcommand("transform", "Alternating binomial transform");
  std::string rec_path, seq_path;
  long count = 20;
  bool from_one = false;
  auto* rec_opt = transform->add_option("--rec", rec_path, "Recurrence JSON: output the transformed operator");
  auto* seq_opt = transform->add_option("--input", seq_path, "b-file: output transformed terms");
  rec_opt->excludes(seq_opt);
  transform->add_option("--count", count, "Number of transformed terms")->check(CLI::PositiveNumber);
  transform->add_flag("--from-one", from_one, "Start the sum at k = 1");
  transform->callback([&] {
    if (!rec_path.empty()) {
      const Recurrence r = binomial_transform_op(require_recurrence(rec_path));
      emit(to_json(r), r.to_string());
      return;
    }
    if (seq_path.empty()) throw CLI::ValidationError("transform", "one of --rec or --input is required");
    const auto terms = read_terms(seq_path);
    if (static_cast<long>(terms.size()) < count) throw InsufficientTerms("b-file shorter than --count");
    const auto t = binomial_diff_seq(SequenceStream::exact(terms), count, !from_one);
    Json j = Json::array();
    std::string s;
    for (long n = 0; n < count; ++n) {
      j.push_back(to_string(t.exact_term(n)));
      s += (n ? " " : "") + to_string(t.exact_term(n));
    }
    emit(Json{{"terms", j}}, s);
  });

  // classify
  auto* classify = app.add_subcommand("classify", "Classify singular points of an ODE");
  std::string ode_path, point_text;
  bool all_points = false;
  classify->add_option("--ode", ode_path, "ODE (or recurrence) JSON")->required();
  classify->add_option("--point", point_text, "Rational point or 'infinity'");
  classify->add_flag("--all", all_points, "Every rational singular point and infinity");
  classify->callback([&] {
    const DiffOp ode = require_ode(ode_path);
    std::vector<Point> pts;
    if (!point_text.empty()) pts.push_back(parse_point(point_text));
    if (all_points || pts.empty()) {
      const auto sp = singular_points(ode);
      for (const auto& r : sp.rational) pts.push_back(Point::at(r.value));
      pts.push_back(Point::infinity());
    }
    Json j = Json::array();
    std::string s;
    for (const auto& p : pts) {
      const auto rep = classify_point(ode, p);
      j.push_back(to_json(rep));
      s += p.to_string() + ": " + to_string(rep.kind) + ", indicial " + theta_polynomial(rep.indicial);
      for (const auto& x : rep.exponents) s += ", exponent " + to_string(x.value) + "x" + std::to_string(x.multiplicity);
      for (const auto& [f, m] : rep.nonrational_exponents)
        s += ", nonrational factor of degree " + std::to_string(f.degree()) + "x" + std::to_string(m);
      s += ", log bound " + std::to_string(rep.log_degree_bound) + " (" + to_string(rep.log_flag) + ")";
      for (const auto& sl : rep.newton_slopes) s += ", slope " + to_string(sl.slope) + "/" + std::to_string(sl.length);
      s += ", r = " + std::to_string(rep.ramification) + "\n";
    }
    if (!s.empty()) s.pop_back();
    emit(pts.size() == 1 ? j[0] : j, s);
  });

  // transfer / verify
  std::string alpha = "0", beta = "0", gamma = "0";
  double beta_imag = 0, gamma_imag = 0;
  auto add_scale = [&](CLI::App* sub) {
    sub->add_option("--alpha", alpha);
    sub->add_option("--beta", beta);
    sub->add_option("--gamma", gamma);
    sub->add_option("--beta-imag", beta_imag);
    sub->add_option("--gamma-imag", gamma_imag);
  };
  auto* transfer_cmd = app.add_subcommand("transfer", "Singular element for x^alpha (log x)^beta (log log x)^gamma");
  add_scale(transfer_cmd);
  transfer_cmd->callback([&] {
    const auto s = scale_from(alpha, beta, gamma, beta_imag, gamma_imag);
    const hp::Bits bits = g.precision_bits > 0 ? g.precision_bits : 128;
    const auto el = transfer(s, bits);
    Json j{{"scale", to_json(s)},
           {"singular_element", el.to_string()},
           {"gamma_factor", el.gamma_factor.value().to_string(30)},
           {"pole_order", to_string(el.pole_order)},
           {"log_power", to_string(el.log_power)},
           {"loglog_power", to_string(el.loglog_power)}};
    emit(j, el.to_string() + (s.experimental() ? "  (complex exponents: experimental)" : ""));
  });

  auto* verify = app.add_subcommand("verify", "Numerical sector check of a transfer");
  add_scale(verify);
  std::string sequence = "pi", verify_input, exponent = "1";
  double theta = 0;
  int kmax = 14;
  verify->add_option("--sequence", sequence, "ones | linear | power | pi")->check(CLI::IsMember({"ones", "linear", "power", "pi"}));
  verify->add_option("--exponent", exponent, "Exponent for --sequence power");
  verify->add_option("--input", verify_input, "b-file instead of a built-in sequence");
  verify->add_option("--theta", theta, "Sector angle in radians, |theta| <= pi/4");
  verify->add_option("--kmax", kmax)->check(CLI::Range(4, 20));
  verify->callback([&] {
    if (std::fabs(theta) > std::atan(1.0) + 1e-12) throw CLI::ValidationError("--theta", "|theta| <= pi/4");
    const auto s = scale_from(alpha, beta, gamma, beta_imag, gamma_imag);
    const long N = transfer_truncation(kmax) + 1;
    std::vector<long double> table;
    RealTerms u;
    if (!verify_input.empty()) {
      const auto terms = read_bfile(verify_input);
      if (static_cast<long>(terms.size()) < N)
        throw InsufficientTerms("b-file needs " + std::to_string(N) + " terms for --kmax " + std::to_string(kmax));
      for (const auto& t : terms) table.push_back(static_cast<long double>(t.get_d()));
      u = [&table](long n) { return table[static_cast<std::size_t>(n)]; };
    } else if (sequence == "ones") {
      u = [](long) { return 1.0L; };
    } else if (sequence == "linear") {
      u = [](long n) { return static_cast<long double>(n + 1); };
    } else if (sequence == "power") {
      const long double e = parse_rational_arg(exponent).get_d();
      u = [e](long n) { return std::pow(static_cast<long double>(n), e); };
    } else {
      for (auto c : primes::prime_pi_table(static_cast<std::uint64_t>(N))) table.push_back(c);
      u = [&table](long n) { return table[static_cast<std::size_t>(n)]; };
    }
    const auto rep = verify_transfer(u, s, theta, kmax);
    std::string out = rep.element;
    for (const auto& x : rep.samples)
      out += "\nk = " + std::to_string(x.k) + ": ratio " + std::to_string(static_cast<double>(x.ratio));
    out += std::string("\ntrend toward 1: ") + (rep.trend_toward_one ? "yes" : "no");
    emit(to_json(rep), out);
  });

  // primes
  auto* primes_cmd = app.add_subcommand("primes", "Prime tables");
  primes_cmd->require_subcommand(1);
  std::uint64_t nth_n = 0, pi_x = 0;
  std::string li_x;
  bool standard = false, series = false;
  auto* nth = primes_cmd->add_subcommand("nth", "g_n with g_0 = 1");
  nth->add_option("n", nth_n)->required();
  nth->add_flag("--standard", standard, "Standard p_1 = 2 indexing; n = 0 rejected");
  nth->callback([&] {
    if (standard && nth_n == 0) throw CLI::ValidationError("n", "p_0 is undefined in standard indexing");
    const auto p = primes::nth_prime(nth_n);
    emit(Json{{"n", nth_n}, {"value", p}}, std::to_string(p));
  });
  auto* pi_cmd = primes_cmd->add_subcommand("pi", "Prime counting function");
  pi_cmd->add_option("x", pi_x)->required();
  pi_cmd->callback([&] {
    const auto c = primes::prime_pi(pi_x);
    emit(Json{{"x", pi_x}, {"value", c}}, std::to_string(c));
  });
  auto* li_cmd = primes_cmd->add_subcommand("li", "Logarithmic integral from 2");
  li_cmd->add_option("x", li_x)->required();
  li_cmd->add_flag("--series", series, "Asymptotic series (principal-value li) instead of quadrature");
  li_cmd->callback([&] {
    const Rational x = parse_rational_arg(li_x);
    const hp::Bits bits = g.precision_bits > 0 ? g.precision_bits : 128;
    const auto v = series ? primes::li_series(x, 0, bits) : primes::li(x, bits);
    emit(Json{{"x", li_x}, {"value", v.value().to_string(25)}, {"error_bound", v.error_double()},
              {"method", series ? "series" : "romberg"}},
         v.value().to_string(25) + " +- " + std::to_string(v.error_double()));
  });

  // witness
  auto* wit = app.add_subcommand("witness", "Non-holonomicity experiments");
  wit->require_subcommand(1);
  long nmax = 0;
  std::string w_alpha = "1/2";
  int depth = 14;
  auto report = [&](const witness::Report& r) {
    std::string s = r.experiment + ":";
    for (const auto& [name, v] : r.verdicts) s += "\n  " + name + ": " + (v.value ? "true" : "false") + " (" + v.detail + ")";
    emit(r.to_json(), s);
  };
  auto* w_log = wit->add_subcommand("log", "Binomial transform of log n");
  w_log->add_option("--nmax", nmax)->check(CLI::Range(2L, 5000L));
  w_log->callback([&] { report(witness::log(nmax ? nmax : 2000)); });
  auto* w_pow = wit->add_subcommand("powers", "Binomial transform of n^alpha");
  w_pow->add_option("--alpha", w_alpha);
  w_pow->add_option("--nmax", nmax)->check(CLI::Range(2L, 20000L));
  w_pow->callback([&] { report(witness::powers(parse_rational_arg(w_alpha), nmax ? nmax : 5000)); });
  auto* w_primes = wit->add_subcommand("primes", "nth prime against n H_n");
  w_primes->add_option("--nmax", nmax)->check(CLI::Range(100L, 1000000L));
  w_primes->callback([&] { report(witness::primes(nmax ? nmax : 1000000)); });
  auto* w_misc = wit->add_subcommand("misc", "Lambert W, children rounds, Bell, binom(2n,n)^k, pi(n) transfer");
  w_misc->add_option("--depth", depth)->check(CLI::Range(8, 16));
  w_misc->callback([&] { report(witness::misc(depth)); });

  for (auto* sub : {guess, closure, transform, classify, transfer_cmd, verify, primes_cmd, wit}) sub->fallthrough();
  for (auto* sub : {nth, pi_cmd, li_cmd, w_log, w_pow, w_primes, w_misc}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const InsufficientTerms& e) {
    std::cerr << "insufficient terms: " << e.what() << "\n";
    return kMalformed;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExhausted;
  } catch (const NonRationalPoint& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const AlphaNegative& e) {
    std::cerr << "alpha must be nonnegative: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
}
