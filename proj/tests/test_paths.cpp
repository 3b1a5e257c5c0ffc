#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <random>

#include "snakepath/algebra.hpp"
#include "snakepath/cfrac.hpp"
#include "snakepath/paths.hpp"
#include "snakepath/sgnperm.hpp"

using namespace snakepath;

namespace {

Monomial mono(int ey, int et, int eq) {
  Monomial m;
  m.e = {ey, et, eq, 0};
  return m;
}

Poly mk(std::initializer_list<std::pair<long, std::array<int, 4>>> terms) {
  Poly f;
  for (const auto& [c, e] : terms) {
    Monomial m;
    m.e = e;
    f.add_term(m, Int(c));
  }
  return f;
}

BMPath path_of(std::initializer_list<std::pair<char, Monomial>> steps) {
  BMPath p;
  for (const auto& [k, w] : steps) p.steps.push_back(Step{*step_from_letter(k), w});
  return p;
}

Poly enumerated_weight_sum(SchemeId scheme, int n) {
  Poly total;
  for_each_path(scheme, n, [&](const BMPath& p) {
    total.add_term(path_weight(p), Int(1));
  });
  return total;
}

const WeightRecipe kTypeB{
    {{PermStat::fwex, Var::y}, {PermStat::neg, Var::t}, {PermStat::cro_b, Var::q}},
    SignRule::none};

const std::vector<SchemeId> kMenuSchemes = {
    SchemeId::M, SchemeId::Mstar, SchemeId::H, SchemeId::T, SchemeId::Tstar};

}  // namespace

TEST_CASE("step and scheme plumbing") {
  for (StepKind k : {StepKind::U, StepKind::L, StepKind::W, StepKind::D})
    CHECK(step_from_letter(step_letter(k)) == k);
  CHECK_FALSE(step_from_letter('X').has_value());
  CHECK(step_delta(StepKind::U) == 1);
  CHECK(step_delta(StepKind::W) == 0);

  for (SchemeId id : {SchemeId::M, SchemeId::Mstar, SchemeId::H, SchemeId::T,
                      SchemeId::Tstar, SchemeId::F, SchemeId::G})
    CHECK(scheme_from_name(scheme_name(id)) == id);
  CHECK_FALSE(scheme_from_name("Mstarstar").has_value());
  CHECK(ambient_scheme(SchemeId::F) == SchemeId::H);
  CHECK(ambient_scheme(SchemeId::G) == SchemeId::Mstar);
  CHECK_FALSE(is_menu_scheme(SchemeId::G));
}

TEST_CASE("menu slices at low heights") {
  CHECK(allowed_weights(SchemeId::T, StepKind::L, 0) ==
        std::vector<Monomial>{mono(0, 1, 1)});
  CHECK(allowed_weights(SchemeId::Tstar, StepKind::W, 0).empty());
  CHECK(allowed_weights(SchemeId::M, StepKind::U, 0) ==
        std::vector<Monomial>{mono(2, 0, 0), mono(1, 1, 0)});
  CHECK(allowed_weights(SchemeId::M, StepKind::W, 0).empty());
  CHECK(allowed_weights(SchemeId::Mstar, StepKind::L, 0) ==
        std::vector<Monomial>{mono(1, 1, 0)});
  CHECK(allowed_weights(SchemeId::Mstar, StepKind::L, 1) ==
        std::vector<Monomial>{mono(2, 0, 1), mono(1, 1, 1), mono(1, 1, 2)});
  CHECK(allowed_weights(SchemeId::H, StepKind::W, 0) ==
        std::vector<Monomial>{mono(2, 0, 0), mono(1, 1, 0)});
  CHECK(allowed_weights(SchemeId::T, StepKind::W, 0) ==
        std::vector<Monomial>{mono(0, 1, 0)});
  CHECK(allowed_weights(SchemeId::Tstar, StepKind::U, 1) ==
        std::vector<Monomial>{mono(0, 0, 0), mono(0, 0, 1), mono(0, 2, 3),
                              mono(0, 2, 4)});
}

TEST_CASE("menus aggregate to the continued-fraction ladders") {
  const std::vector<std::pair<SchemeId, SpecName>> pairs = {
      {SchemeId::M, SpecName::B},
      {SchemeId::T, SpecName::R},
      {SchemeId::Tstar, SpecName::Q}};
  for (const auto& [scheme, spec_name] : pairs) {
    const CFSpec spec = builtin_spec(spec_name);
    for (int h = 0; h <= 6; ++h)
      CHECK(menu_sum(scheme, StepKind::L, h) + menu_sum(scheme, StepKind::W, h) ==
            spec.mu(h));
    for (int h = 1; h <= 6; ++h)
      CHECK(menu_sum(scheme, StepKind::U, h - 1) *
                menu_sum(scheme, StepKind::D, h) ==
            spec.lambda(h));
  }
}

TEST_CASE("weight sums match the continued fractions") {
  CHECK(weight_sum(SchemeId::M, 0) == Poly::one());
  CHECK(weight_sum(SchemeId::T, 1) ==
        mk({{1, {0, 1, 0, 0}}, {1, {0, 1, 1, 0}}}));
  CHECK(weight_sum(SchemeId::Tstar, 2) ==
        mk({{1, {0, 0, 0, 0}}, {1, {0, 2, 0, 0}}, {1, {0, 2, 1, 0}}}));

  const Series b = expand(builtin_spec(SpecName::B), 8);
  const Series r = expand(builtin_spec(SpecName::R), 8);
  const Series qq = expand(builtin_spec(SpecName::Q), 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(weight_sum(SchemeId::M, n) == b.coeffs[n]);
    CHECK(weight_sum(SchemeId::T, n) == r.coeffs[n]);
    CHECK(weight_sum(SchemeId::Tstar, n) == qq.coeffs[n]);
  }
}

TEST_CASE("enumeration agrees with the weight-sum recurrence") {
  CHECK(enumerate_paths(SchemeId::M, 1).size() == 2);
  for (SchemeId scheme : kMenuSchemes) {
    const auto empty_only = enumerate_paths(scheme, 0);
    REQUIRE(empty_only.size() == 1);
    CHECK(empty_only[0].steps.empty());
    for (int n = 0; n <= 5; ++n)
      CHECK(enumerated_weight_sum(scheme, n) == weight_sum(scheme, n));
  }

  // Deterministic order: U before level steps, menu order within a kind.
  const auto m2 = enumerate_paths(SchemeId::M, 2);
  REQUIRE(!m2.empty());
  CHECK(m2[0] == path_of({{'U', mono(2, 0, 0)}, {'D', mono(0, 0, 0)}}));
  CHECK(m2 == enumerate_paths(SchemeId::M, 2));
}

TEST_CASE("path sets carry the signed-permutation enumerators") {
  // Two-step starred paths, by hand.
  CHECK(enumerated_weight_sum(SchemeId::Mstar, 2) ==
        mk({{1, {2, 2, 0, 0}},
            {1, {2, 0, 0, 0}},
            {1, {3, 1, 1, 0}},
            {1, {1, 1, 0, 0}},
            {1, {2, 2, 1, 0}}}));
  for (int n = 0; n <= 6; ++n) {
    CHECK(weight_sum(SchemeId::M, n) ==
          enumerator(n, PermClass::Bn, kTypeB));
    CHECK(weight_sum(SchemeId::Mstar, n) ==
          enumerator(n, PermClass::BnStar, kTypeB));
  }
}

TEST_CASE("restructuring factor between M and H") {
  const Poly prefix = Poly::variable(Var::y, 2) +
                      Poly::variable(Var::y) * Poly::variable(Var::t);
  for (int n = 1; n <= 7; ++n)
    CHECK(prefix * weight_sum(SchemeId::H, n - 1) == weight_sum(SchemeId::M, n));
}

TEST_CASE("validation accepts enumerated paths and rejects corrupted ones") {
  std::vector<std::pair<SchemeId, BMPath>> pool;
  for (SchemeId scheme : kMenuSchemes)
    for (int n = 1; n <= 4; ++n)
      for_each_path(scheme, n, [&](const BMPath& p) {
        validate_path(p, scheme);
        pool.emplace_back(scheme, p);
      });
  REQUIRE(!pool.empty());

  std::mt19937 rng(987654321);
  auto pick = [&rng](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  int rejected = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    auto [scheme, p] = pool[pick(pool.size())];
    Step& s = p.steps[pick(p.steps.size())];
    switch (trial % 4) {
      case 0:
        s.weight.e[2] += 50;
        break;
      case 1:
        s.kind = s.kind == StepKind::D ? StepKind::U : StepKind::D;
        break;
      case 2:
        s.weight.e[0] = 7;
        break;
      case 3:
        s.weight.e[2] = -3;
        break;
    }
    try {
      validate_path(p, scheme);
    } catch (const MalformedPath&) {
      ++rejected;
    } catch (const SchemeMismatch&) {
      ++rejected;
    }
  }
  CHECK(rejected == 10000);
}

TEST_CASE("matching pairs") {
  const Monomial one = Monomial::unit();
  CHECK(matching_pairs(path_of({{'U', one}, {'U', one}, {'D', one}, {'D', one}})) ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
  CHECK(matching_pairs(path_of({{'U', one}, {'L', one}, {'D', one}, {'W', one}})) ==
        std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(matching_pairs(BMPath{}).empty());

  // Oracle: the partner of an up step is the first later step after which
  // the height returns to the up step's starting level.
  auto oracle = [](const BMPath& p) {
    const std::vector<int> hs = start_heights(p);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= p.size(); ++i) {
      if (p.steps[i - 1].kind != StepKind::U) continue;
      for (int j = i + 1; j <= p.size(); ++j) {
        const int after = (j < p.size() ? hs[j] : 0);
        if (after == hs[i - 1]) {
          pairs.emplace_back(i, j);
          break;
        }
      }
    }
    return pairs;
  };
  for (int n = 0; n <= 6; ++n)
    for_each_path(SchemeId::Tstar, n, [&](const BMPath& p) {
      const auto pairs = matching_pairs(p);
      CHECK(pairs == oracle(p));
      for (const auto& [i, j] : pairs) {
        CHECK(p.steps[i - 1].kind == StepKind::U);
        CHECK(p.steps[j - 1].kind == StepKind::D);
      }
      // Non-crossing: no pair interleaves another.
      for (const auto& a : pairs)
        for (const auto& b : pairs)
          CHECK_FALSE((a.first < b.first && b.first < a.second &&
                       a.second < b.second));
    });
  for (int n = 0; n <= 4; ++n)
    for_each_path(SchemeId::M, n,
                  [&](const BMPath& p) { CHECK(matching_pairs(p) == oracle(p)); });
}

TEST_CASE("fixed sets inside H and Mstar") {
  CHECK(is_fixed(BMPath{}, SchemeId::F));
  CHECK(is_fixed(BMPath{}, SchemeId::G));
  CHECK_THROWS_AS(is_fixed(BMPath{}, SchemeId::T), std::invalid_argument);
  // A T-scheme level step is not admissible in H.
  CHECK_THROWS_AS(is_fixed(path_of({{'L', mono(0, 1, 1)}}), SchemeId::F),
                  SchemeMismatch);

  for (int n = 0; n <= 5; ++n) {
    Poly f_sum, g_sum;
    int checked_f = 0;
    for_each_path(SchemeId::H, n, [&](const BMPath& p) {
      if (!is_fixed(p, SchemeId::F)) return;
      f_sum.add_term(path_weight(p), Int(1));
      CHECK((path_weight(p).exponent(Var::t) - n) % 2 == 0);
      ++checked_f;
    });
    for_each_path(SchemeId::Mstar, n, [&](const BMPath& p) {
      if (!is_fixed(p, SchemeId::G)) return;
      g_sum.add_term(path_weight(p), Int(1));
      CHECK((path_weight(p).exponent(Var::t) - n) % 2 == 0);
    });
    const Poly yn = Poly::variable(Var::y, n);
    CHECK(f_sum == yn * derivative_poly(DerivKind::R, n, DerivFlavor::q));
    CHECK(g_sum == yn * derivative_poly(DerivKind::Q, n, DerivFlavor::q));
    if (n == 2) CHECK(checked_f > 0);
  }
}

TEST_CASE("serialization round-trips") {
  const BMPath p = path_of({{'U', mono(2, 0, 1)},
                            {'W', mono(1, 1, 2)},
                            {'D', mono(0, 0, 0)},
                            {'L', mono(0, 1, 1)}});
  CHECK(BMPath::from_json(p.to_json()) == p);
  CHECK(path_of({{'L', mono(1, 1, 0)}}).to_json().dump() ==
        R"({"steps":[{"k":"L","e":[1,1,0]}]})");
  CHECK(path_of({{'L', mono(1, 1, 0)}}).str() == "L(1,1,0)");
  CHECK_THROWS_AS(
      BMPath::from_json(nlohmann::ordered_json::parse(
          R"({"steps":[{"k":"Z","e":[0,0,0]}]})")),
      MalformedPath);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(count_paths(SchemeId::T, max_enumeration_n() + 1),
                  BoundExceeded);
  CHECK_THROWS_AS(count_paths(SchemeId::T, -1), std::invalid_argument);
  CHECK_THROWS_AS(count_paths(SchemeId::F, 2), SchemeMismatch);
}
