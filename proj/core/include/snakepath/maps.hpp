#pragma once

#include "snakepath/algebra.hpp"
#include "snakepath/errors.hpp"
#include "snakepath/paths.hpp"
#include "snakepath/snakes.hpp"

namespace snakepath {

// Structural maps between the path families and the snake families: the
// two-to-one restructuring map phi, the sign-reversing involutions psi1 and
// psi2, and the snake-to-path bijections lambda1 and lambda2.

struct PhiResult {
  Monomial first_weight;  // weight of the dropped initial step, y^2 or yt
  BMPath path;            // the restructured path, one step shorter

  bool operator==(const PhiResult&) const = default;
};

// Splits a path of the M scheme into the weight of its first step and an
// H-scheme path of length n-1; ρ(input) = first_weight · ρ(result path).
PhiResult phi(const BMPath& mu);
BMPath phi_inv(const PhiResult& r);

// Weight-involution on H-scheme paths: swaps the first offending level step
// (straight carrying q^a versus wavy carrying y^2 q^a), else the first
// offending matched up/down weight pair; scales ρ by y^{±2}, preserves the
// powers of t and q. Fixed points are exactly the F paths.
BMPath psi1(const BMPath& mu);

// The starred analogue on Mstar-scheme paths: scales ρ by (y^2 q)^{±1},
// preserves the power of t. Fixed points are exactly the G paths.
BMPath psi2(const BMPath& mu);

// Snake-to-path bijections. lambda1 sends a snake with positive first entry
// to a Tstar path of the same length; lambda2 sends a snake of size n+1 with
// both outer sign conditions to a T path of length n. Element j becomes step
// j: valleys rise, double ascents/descents stay level (straight/wavy), peaks
// fall; weights encode the block statistics of the underlying permutation.
BMPath lambda1(const Snake& s);
Snake lambda1_inv(const BMPath& path);
BMPath lambda2(const Snake& s);
Snake lambda2_inv(const BMPath& path);

}  // namespace snakepath
