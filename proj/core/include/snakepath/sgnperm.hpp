#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snakepath/algebra.hpp"
#include "snakepath/errors.hpp"

namespace snakepath {

// Signed permutation in window notation: window[i-1] = sigma(i) for
// i = 1..n, entries are +-1..+-n with pairwise distinct absolute values,
// and sigma(-i) = -sigma(i) implicitly.
struct SignedPerm {
  std::vector<int> window;

  int size() const { return static_cast<int>(window.size()); }

  // sigma(i) for i in -n..n, i != 0.
  int operator()(int i) const {
    return i > 0 ? window[i - 1] : -window[-i - 1];
  }

  bool is_positive() const {
    for (int v : window)
      if (v < 0) return false;
    return true;
  }

  static SignedPerm identity(int n);

  // Throws std::invalid_argument unless the window is a valid signed
  // permutation of its length.
  static SignedPerm checked(std::vector<int> window);

  bool operator==(const SignedPerm&) const = default;

  // Space-separated window, e.g. "6 -3 -5 1 4 -7 -2".
  std::string str() const;
};

enum class PermClass { A, Bn, Dn, BnStar, DnStar, AltA, RAltA, AStar };

const char* perm_class_name(PermClass cls);
std::optional<PermClass> perm_class_from_name(const std::string& name);

// Hard cap for exhaustive enumeration; defaults to 9, overridden by the
// SNAKEPATH_MAX_N environment variable (read once per process).
int max_enumeration_n();

// Visits every window of the class in lexicographic order under the value
// order -1 < 1 < -2 < 2 < ... (compare absolute values, negative first).
// Returns the number of windows visited.  Throws BoundExceeded when
// n > max_enumeration_n().
std::uint64_t for_each_in_class(
    int n, PermClass cls, const std::function<void(const SignedPerm&)>& visit);

// Restricts the walk to windows whose first entry is `first`; the visit
// order within the shard matches the full walk.  Useful for splitting an
// enumeration across threads.
std::uint64_t for_each_in_class_with_first(
    int n, PermClass cls, int first,
    const std::function<void(const SignedPerm&)>& visit);

// Same order, materialized.
std::vector<SignedPerm> enumerate_class(int n, PermClass cls);

std::uint64_t class_size(int n, PermClass cls);

// Statistics on positive windows only; these throw NotTypeA when any entry
// is negative.
int exc(const SignedPerm& s);       // #{i : sigma(i) > i}
int wex(const SignedPerm& s);       // #{i : sigma(i) >= i}
int cro(const SignedPerm& s);       // #{i<j : j <= s(i) < s(j) or s(i) < s(j) < i}
int stat31_2(const SignedPerm& s);  // vincular 31-2 occurrences

// Statistics on arbitrary signed windows.
int neg_entries(const SignedPerm& s);  // #{i : sigma(i) < 0}
int fwex(const SignedPerm& s);         // 2 #{i : sigma(i) >= i} + neg_entries
int cro_b(const SignedPerm& s);        // type B crossings
int nest_b(const SignedPerm& s);       // type B nestings

enum class PermStat { exc, wex, cro, stat31_2, fwex, neg, cro_b, nest_b };

int eval_stat(PermStat stat, const SignedPerm& s);
const char* perm_stat_name(PermStat stat);

enum class SignRule {
  none,
  neg_one_pow_exc,           // (-1)^exc
  neg_one_pow_wex,           // (-1)^wex
  neg_one_pow_fwex_floor,    // (-1)^floor(fwex/2)
  neg_one_pow_fwex_ceil,     // (-1)^ceil(fwex/2)
  neg_inv_q_pow_fwex_floor,  // (-1/q)^floor(fwex/2)
  neg_inv_q_pow_fwex_ceil,   // (-1/q)^ceil(fwex/2)
  neg_inv_q_pow_wex,         // (-1/q)^wex
};

// A weighting recipe: each listed statistic contributes its value as the
// exponent of its variable, multiplied by the sign rule's contribution.
struct WeightRecipe {
  std::vector<std::pair<PermStat, Var>> exponents;
  SignRule sign = SignRule::none;
};

// The weight of a single window under the recipe.
Poly recipe_weight(const WeightRecipe& recipe, const SignedPerm& s);

// Sum of recipe weights over the class.
Poly enumerator(int n, PermClass cls, const WeightRecipe& recipe);

// Same sum, split across threads by the first window entry and folded in
// the fixed value order, so the result is identical to the sequential one.
Poly enumerator_parallel(int n, PermClass cls, const WeightRecipe& recipe);

}  // namespace snakepath
