#pragma once

#include <functional>
#include <string>

#include "snakepath/algebra.hpp"

// Jacobi-type continued fractions
//
//   1 / (1 - mu_0 x - lambda_1 x^2 / (1 - mu_1 x - lambda_2 x^2 / ...))
//
// expanded as power series in x.  Expansion goes through the equivalent
// weighted-lattice-walk sum (coefficient of x^n = walks of length n from
// height 0 to 0, level step at height h weighted mu_h, up step weighted 1,
// down step from height h weighted lambda_h), never by symbolic division.

namespace snakepath {

struct CFSpec {
  std::function<Poly(int)> mu;      // level weight at height h >= 0
  std::function<Poly(int)> lambda;  // down weight from height h >= 1
  std::string name;
};

// Coefficients 0..order.  A walk of length n never climbs above n/2, so only
// ladder values up to that height are evaluated.
Series expand(const CFSpec& spec, int order);

// Same walk with heights clamped to max_height; exposes how deep a
// truncation of the ladder the first coefficients actually depend on.
Series expand_with_depth(const CFSpec& spec, int order, int max_height);

enum class SpecName { B, Q, R, Etan, Esec };

// The five ladders used throughout ([h] = q_integer(h)):
//   B:    mu_h = y^2 [h+1] + [h] + y t q^h ([h] + [h+1])
//         lambda_h = [h]^2 (y^2 + y t q^{h-1}) (1 + y t q^h)
//   Q:    mu_h = t q^h ([h] + [h+1]),   lambda_h = (1 + t^2 q^{2h-1}) [h]^2
//   R:    mu_h = t q^h (1+q) [h+1],     lambda_h = (1 + t^2 q^{2h}) [h][h+1]
//   Etan: mu_h = 0,                     lambda_h = [h][h+1]
//   Esec: mu_h = 0,                     lambda_h = [h]^2
CFSpec builtin_spec(SpecName name);

const char* spec_name(SpecName name);

// q-analog of the zigzag number E_n.  The Etan/Esec ladders have mu = 0, so
// their series live in x^2; E_n(q) is the coefficient of x^{2 floor(n/2)} of
// the parity-matching spec (Esec for even n, Etan for odd n).
Poly q_euler_number(int n);

}  // namespace snakepath
