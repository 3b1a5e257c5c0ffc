#include "snakepath/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace snakepath {

namespace {

// value^k for integer k; negative k only makes sense for |value| = 1.
Int int_pow(const Int& value, int k) {
  if (k >= 0) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= value;
    return r;
  }
  if (value == 0)
    throw ZeroSubstitutionIntoLaurent(
        "substituting 0 for a variable with negative exponent");
  if (value == 1) return 1;
  if (value == -1) return (k % 2 == 0) ? 1 : -1;
  throw std::domain_error(
      "substituting |value| >= 2 into a negative exponent leaves Z");
}

}  // namespace

Poly Poly::substitute(Var v, const Int& value) const {
  const int vi = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.e[vi] = 0;
    r.add_term(rest, c * int_pow(value, m.e[vi]));
  }
  return r;
}

Poly Poly::substitute(Var v, const Monomial& repl) const {
  const int vi = static_cast<int>(v);
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.e[vi] = 0;
    r.add_term(rest * repl.pow(m.e[vi]), c);
  }
  return r;
}

int Poly::max_exponent(Var v) const {
  const int vi = static_cast<int>(v);
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.e[vi]);
  return best;
}

int Poly::min_exponent(Var v) const {
  const int vi = static_cast<int>(v);
  int best = 0;
  for (const auto& [m, c] : terms_) best = std::min(best, m.e[vi]);
  return best;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    std::string vars;
    for (int i = 0; i < 4; ++i) {
      if (m.e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += var_name(static_cast<Var>(i));
      if (m.e[i] != 1) vars += "^" + std::to_string(m.e[i]);
    }
    if (vars.empty()) {
      out << a.str();
    } else if (a == 1) {
      out << vars;
    } else {
      out << a.str() << "*" << vars;
    }
  }
  return out.str();
}

std::string Poly::to_json() const {
  nlohmann::ordered_json j;
  j["vars"] = {"y", "t", "q", "p"};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json term;
    term["c"] = c.str();
    term["e"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

Poly Poly::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial JSON lacks a terms array");
  Poly f;
  for (const auto& term : j["terms"]) {
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("polynomial term needs 4 exponents");
    Monomial m;
    for (int i = 0; i < 4; ++i) m.e[i] = e[i].get<int>();
    f.add_term(m, Int(term.at("c").get<std::string>()));
  }
  return f;
}

std::string Series::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& f : coeffs) j.push_back(nlohmann::ordered_json::parse(f.to_json()));
  return j.dump();
}

Poly q_integer(int n, QFlavor flavor) {
  if (n < 0) throw std::invalid_argument("q_integer wants n >= 0");
  Poly r;
  for (int i = 0; i < n; ++i) {
    Monomial m = Monomial::var(Var::q, i);
    if (flavor == QFlavor::pq) m = m * Monomial::var(Var::p, n - 1 - i);
    r.add_term(m, 1);
  }
  return r;
}

Poly q_derivative(const Poly& f, QFlavor flavor) {
  Poly r;
  for (const auto& [m, c] : f.terms()) {
    const int b = m.exponent(Var::t);
    if (b < 0)
      throw std::invalid_argument("q_derivative wants nonnegative t-exponents");
    if (b == 0) continue;
    Monomial lowered = m;
    lowered.e[static_cast<int>(Var::t)] = b - 1;
    r += Poly::monomial(lowered, c) * q_integer(b, flavor);
  }
  return r;
}

namespace {

// (D + UDU)^n 1 resp. (D + DUU)^n 1 with U = multiplication by t.
Poly derivative_poly_flavored(DerivKind kind, int n, QFlavor qf) {
  const Poly t = Poly::variable(Var::t);
  if (kind == DerivKind::P) {
    if (n == 0) return t;
    const Poly one_plus_t2 = Poly::one() + Poly::variable(Var::t, 2);
    return one_plus_t2 * derivative_poly_flavored(DerivKind::R, n - 1, qf);
  }
  Poly f = Poly::one();
  for (int i = 0; i < n; ++i) {
    if (kind == DerivKind::Q)
      f = q_derivative(f, qf) + t * q_derivative(t * f, qf);
    else
      f = q_derivative(f, qf) + q_derivative(t * t * f, qf);
  }
  return f;
}

}  // namespace

Poly derivative_poly(DerivKind kind, int n, DerivFlavor flavor) {
  if (n < 0) throw std::invalid_argument("derivative_poly wants n >= 0");
  const QFlavor qf = flavor == DerivFlavor::pq ? QFlavor::pq : QFlavor::q;
  Poly f = derivative_poly_flavored(kind, n, qf);
  if (flavor == DerivFlavor::classic) f = f.substitute(Var::q, 1);
  return f;
}

SpringerTriple springer_numbers(int n) {
  if (n < 0) throw std::invalid_argument("springer_numbers wants n >= 0");
  if (n == 0) return {1, 1, 1};
  const Poly pn = derivative_poly(DerivKind::P, n, DerivFlavor::classic);
  const Poly qn = derivative_poly(DerivKind::Q, n, DerivFlavor::classic);
  const Int p1 = pn.substitute(Var::t, 1).constant_term();
  const Int s = qn.substitute(Var::t, 1).constant_term();
  const Int pow2 = Int(1) << n;
  if (p1 % pow2 != 0)
    throw InternalInconsistency("P_n(1) not divisible by 2^n");
  return {p1 / pow2, s, p1 - s};
}

}  // namespace snakepath
