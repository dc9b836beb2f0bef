#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "holo/abelian.hpp"
#include "holo/guess.hpp"
#include "holo/recurrence.hpp"
#include "holo/singclass.hpp"

namespace holo {

using Json = nlohmann::json;
using Operator = std::variant<Recurrence, DiffOp>;

/// {"kind": "recurrence" | "ode", "order": d, "coefficients": [[c_0, c_1, ...], ...]}.
/// Coefficient i multiplies f_{n+d-i} (resp. y^{(d-i)}); entries are
/// ascending powers as "p/q" strings. Recurrences may add "initial_terms".
Json to_json(const Recurrence& r);
Json to_json(const DiffOp& op);
Json to_json(const Operator& op);
/// Throws MalformedInput.
Operator operator_from_json(const Json& j);
Operator read_operator_file(const std::string& path);

/// A polynomial in theta, e.g. "theta^2 - 1".
std::string theta_polynomial(const Poly& p);
Json to_json(const SingularPointReport& r);
Json to_json(const GuessResult& g);
Json to_json(const TransferReport& t);
Json to_json(const AsymptoticScale& s);

/// "1/2" or "0.5" style exact parsing for CLI arguments; MalformedInput on junk.
Rational parse_rational_arg(const std::string& text);

}  // namespace holo
