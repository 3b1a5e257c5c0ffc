#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snakepath/errors.hpp"

// Exact Laurent polynomial arithmetic over Z in the four variables
// (y, t, q, p), plus the q-calculus built on top of it: q-integers,
// the q-derivative acting on powers of t, the derivative polynomial
// families P_n, Q_n, R_n, and the integer specializations E_n, S_n, S_n^D.

namespace snakepath {

using Int = boost::multiprecision::cpp_int;

enum class Var : int { y = 0, t = 1, q = 2, p = 3 };

inline const char* var_name(Var v) {
  static constexpr const char* names[4] = {"y", "t", "q", "p"};
  return names[static_cast<int>(v)];
}

// A monomial y^a t^b q^c p^d with integer (possibly negative) exponents.
// Monomials carry no coefficient; ordering is lexicographic on (a, b, c, d),
// which is also the canonical term order used for serialization.
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  static Monomial unit() { return {}; }
  static Monomial var(Var v, int k = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = k;
    return m;
  }

  int exponent(Var v) const { return e[static_cast<int>(v)]; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  Monomial pow(int k) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] * k;
    return r;
  }

  auto operator<=>(const Monomial&) const = default;
};

// Sparse Laurent polynomial: canonical map from monomial to nonzero
// coefficient.  The zero polynomial is the empty map.
class Poly {
 public:
  using TermMap = std::map<Monomial, Int>;

  Poly() = default;
  explicit Poly(Int c) { add_term(Monomial::unit(), std::move(c)); }
  explicit Poly(long c) : Poly(Int(c)) {}

  static Poly zero() { return Poly{}; }
  static Poly one() { return Poly(Int(1)); }
  static Poly monomial(const Monomial& m, Int c = Int(1)) {
    Poly f;
    f.add_term(m, std::move(c));
    return f;
  }
  static Poly variable(Var v, int k = 1) {
    return monomial(Monomial::var(v, k));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Int coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }
  Int constant_term() const { return coefficient(Monomial::unit()); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial::unit());
  }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Int& c, const Poly& f) {
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, k] : f.terms_) r.terms_.emplace(m, c * k);
    return r;
  }
  friend Poly operator*(const Poly& f, const Int& c) { return c * f; }
  friend Poly operator*(const Monomial& m, const Poly& f) {
    Poly r;
    for (const auto& [mm, c] : f.terms_) r.terms_.emplace(m * mm, c);
    return r;
  }

  bool operator==(const Poly&) const = default;

  // Replaces v by an integer value.  Throws ZeroSubstitutionIntoLaurent when
  // value = 0 meets a negative exponent; |value| >= 2 against a negative
  // exponent leaves the ring of integers and is rejected as a domain error.
  Poly substitute(Var v, const Int& value) const;

  // Replaces v by a coefficient-free monomial (exact for any exponent sign).
  Poly substitute(Var v, const Monomial& m) const;

  // Largest and smallest exponent of v that occurs (0 for the zero poly).
  int max_exponent(Var v) const;
  int min_exponent(Var v) const;

  // Human-readable form, terms in canonical order, e.g. "1 - 2*t + t^2*q".
  std::string str() const;

  // {"vars":["y","t","q","p"],"terms":[{"c":"<int>","e":[a,b,c,d]},...]}
  // with terms in canonical order; coefficients are decimal strings.
  std::string to_json() const;
  static Poly from_json(const std::string& text);

 private:
  TermMap terms_;
};

// Truncated power series in one formal variable with Poly coefficients;
// coeffs[k] is the coefficient of x^k.
struct Series {
  std::vector<Poly> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string to_json() const;
};

enum class QFlavor { q, pq };

// [n]_q = 1 + q + ... + q^{n-1}, or its (p,q) form p^{n-1} + ... + q^{n-1}.
Poly q_integer(int n, QFlavor flavor = QFlavor::q);

// Linear operator with D(t^n) = [n] t^{n-1} applied to the t-exponents of f;
// coefficients may involve y, q, p.  Requires nonnegative t-exponents.
Poly q_derivative(const Poly& f, QFlavor flavor = QFlavor::q);

enum class DerivKind { P, Q, R };
enum class DerivFlavor { classic, q, pq };

// Derivative polynomial families, built by iterating the operators
//   Q: f -> D(f) + t D(t f)        R: f -> D(f) + D(t^2 f)
// from the constant 1, with D the (flavored) q-derivative.  P_0 = t and
// P_n = (1 + t^2) R_{n-1} for n >= 1.  The classic flavor is q = 1.
Poly derivative_poly(DerivKind kind, int n, DerivFlavor flavor);

// E_n (zigzag), S_n, S_n^D: E_n = P_n(1)/2^n, S_n = Q_n(1), and
// S_n^D = P_n(1) - Q_n(1) for n >= 1; the n = 0 column is (1, 1, 1).
// Throws InternalInconsistency if P_n(1) is not divisible by 2^n.
struct SpringerTriple {
  Int zigzag;  // E_n
  Int snake;   // S_n
  Int snake_d; // S_n^D
};
SpringerTriple springer_numbers(int n);

}  // namespace snakepath
