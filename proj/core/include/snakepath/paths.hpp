#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "snakepath/algebra.hpp"
#include "snakepath/errors.hpp"

namespace snakepath {

// Weighted bicolored Motzkin paths: up (U), straight level (L), wavy level
// (W), and down (D) steps, each carrying a monomial weight drawn from a
// height-indexed menu.

enum class StepKind { U, L, W, D };

// Height change of a step: U is +1, D is -1, level steps 0.
int step_delta(StepKind kind);
char step_letter(StepKind kind);
std::optional<StepKind> step_from_letter(char c);

struct Step {
  StepKind kind;
  Monomial weight;

  bool operator==(const Step&) const = default;
};

struct BMPath {
  std::vector<Step> steps;

  int size() const { return static_cast<int>(steps.size()); }
  bool operator==(const BMPath&) const = default;

  std::string str() const;
  nlohmann::ordered_json to_json() const;
  static BMPath from_json(const nlohmann::ordered_json& j);
};

// Menu schemes M, Mstar, H, T, Tstar plus the fixed-set predicates F and G
// (F lives inside H, G inside Mstar).
enum class SchemeId { M, Mstar, H, T, Tstar, F, G };

bool is_menu_scheme(SchemeId id);
SchemeId ambient_scheme(SchemeId id);
std::string scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

// Heights at which each step starts; throws MalformedPath if the path dips
// below the axis or fails to return to it.
std::vector<int> start_heights(const BMPath& path);

// Admissible weights for a step of the given kind starting at height h,
// in a fixed deterministic order. Empty when the kind is forbidden at h.
std::vector<Monomial> allowed_weights(SchemeId scheme, StepKind kind, int h);

// Sum of the menu as a polynomial.
Poly menu_sum(SchemeId scheme, StepKind kind, int h);

// Shape validity plus menu membership of every weight.
void validate_path(const BMPath& path, SchemeId scheme);

// Product of the step weights.
Monomial path_weight(const BMPath& path);

// All n-step paths of the scheme, deterministic order: at each position the
// step kinds are tried in order U < L < W < D, weights in menu order.
std::uint64_t for_each_path(SchemeId scheme, int n,
                            const std::function<void(const BMPath&)>& visit);
std::vector<BMPath> enumerate_paths(SchemeId scheme, int n);
std::uint64_t count_paths(SchemeId scheme, int n);

// Total weight of all n-step paths, via a height-indexed DP over summed
// menus; never enumerates.
Poly weight_sum(SchemeId scheme, int n);

// Pairs (uIndex, dIndex), 1-based, matching each up step with the down step
// that faces it across a horizontal segment; computed with a stack.
std::vector<std::pair<int, int>> matching_pairs(const BMPath& path);

// Membership in the fixed sets F (inside H) resp. G (inside Mstar): every
// level step is yt-flavored and every matched U/D weight pair is either
// (y^2 q^a, q^b) or (yt q^.., yt q^..). Throws SchemeMismatch when the path
// is not even in the ambient scheme.
bool is_fixed(const BMPath& path, SchemeId predicate);

}  // namespace snakepath
