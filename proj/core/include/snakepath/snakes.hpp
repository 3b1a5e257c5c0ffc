#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "snakepath/algebra.hpp"
#include "snakepath/errors.hpp"
#include "snakepath/sgnperm.hpp"

namespace snakepath {

// Snakes are signed permutations alternating sigma_1 > sigma_2 < sigma_3 > ...
// in four flavors distinguished by extra conditions and by the boundary
// entries sigma_0, sigma_{n+1} used for the sign-change statistic:
//   S   : no extra condition;          boundary (-(n+1), (-1)^n (n+1))
//   S0  : sigma_1 > 0;                 boundary (0, (-1)^n (n+1))
//   S00 : sigma_1 > 0, (-1)^n sigma_n < 0;  boundary (0, 0)
//   SD  : even sign count, sigma_1 + sigma_2 < 0;  boundary (positive
//         sentinel, none) and the change count stops at i = n-1
enum class SnakeFlavor { S, S0, S00, SD };

const char* snake_flavor_name(SnakeFlavor flavor);
std::optional<SnakeFlavor> snake_flavor_from_name(const std::string& name);

struct SnakeBoundary {
  int left;
  std::optional<int> right;
};

SnakeBoundary snake_boundary(SnakeFlavor flavor, int n);

struct Snake {
  SignedPerm body;
  SnakeFlavor flavor;

  int size() const { return body.size(); }
  bool operator==(const Snake&) const = default;

  // Throws NotASnake unless the body satisfies the flavor's conditions.
  static Snake checked(SignedPerm body, SnakeFlavor flavor);
};

bool is_snake(const SignedPerm& s, SnakeFlavor flavor);

// Enumeration order is inherited from the underlying signed-permutation
// walk (value order -1 < 1 < -2 < 2 < ...).
std::uint64_t for_each_snake(int n, SnakeFlavor flavor,
                             const std::function<void(const Snake&)>& visit);
std::vector<Snake> enumerate_snakes(int n, SnakeFlavor flavor);
std::uint64_t count_snakes(int n, SnakeFlavor flavor);

// Number of sign changes over the flavor's boundary-extended word.  A zero
// boundary entry never produces a change.  Flavor SD counts changes at
// indices {0} with a positive sentinel and 1..n-1 only.
int cs(const Snake& s);

// Entry j (1-based) records the sign changes attributed to the element j:
// 0 or 2 at valleys of |sigma| depending on the adjacent products, 1 at
// double ascents and double descents, 0 at peaks.  Flavors S0/S00 only.
std::vector<int> cs_vector(const Snake& s);

// Rebuilds the unique flavor snake with the given absolute word and
// cs-vector.  Throws InconsistentVector when no snake matches.
Snake recover_signs(const std::vector<int>& abs_word,
                    const std::vector<int>& csv, SnakeFlavor flavor);

// Shape of the element with value j in the boundary-extended absolute word.
enum class ElementShape { valley, double_ascent, double_descent, peak };
ElementShape element_shape(const Snake& s, int j);
// True when j is a valley whose two adjacent products are both negative.
bool element_sign_changing(const Snake& s, int j);

// Boundary convention for positive words: pi_0 = 0 with pi_{n+1} = n+1, or
// zeros at both ends.
enum class WordBoundary { zero_left, zero_both };

struct BlockCounts {
  int alpha;  // number of blocks of the word restricted to {0,...,k}
  int beta;   // blocks strictly right of the block containing k
};

// Blocks are maximal runs of entries <= k in the boundary-extended word.
// For k = 0 under zero_both the element k means the left boundary zero.
BlockCounts blocks(const std::vector<int>& word, int k, WordBoundary boundary);

struct PatternCounts {
  int p13_2;  // #{j : 0 <= j < i-1, pi_j < pi_i < pi_{j+1}}
  int p2_31;  // #{j : i < j <= n, pi_j > pi_i > pi_{j+1}}
};

// Pattern counts at position i (1-based); boundary entries participate.
PatternCounts pattern_stats(const std::vector<int>& word, int i,
                            WordBoundary boundary);
// Same counts at the position holding value k.
PatternCounts pattern_stats_of_value(const std::vector<int>& word, int k,
                                     WordBoundary boundary);
int pat2_31_total(const std::vector<int>& word, WordBoundary boundary);

// patQ (flavor S0): sum over sign-changing valleys j of
// 2(13-2 + 2-31)(j) - #X plus the same pattern sum over double
// ascents/descents.  patR (flavor S00) subtracts 1 inside each doubled
// valley term and adds the number of peaks instead of -#X.
enum class PatKind { patQ, patR };
int pat_stat(const Snake& s, PatKind kind);

// Weighted fold over the flavor; the parallel variant shards by the first
// window entry and folds in the fixed order, so the sum is identical.
Poly snake_enumerator(int n, SnakeFlavor flavor,
                      const std::function<Poly(const Snake&)>& weight);
Poly snake_enumerator_parallel(int n, SnakeFlavor flavor,
                               const std::function<Poly(const Snake&)>& weight);

}  // namespace snakepath
