#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <doctest.h>

#include "snakepath/algebra.hpp"
#include "snakepath/cfrac.hpp"
#include "snakepath/sgnperm.hpp"

using namespace snakepath;

namespace {

SignedPerm sp(std::vector<int> w) { return SignedPerm::checked(std::move(w)); }

Poly mk(std::initializer_list<std::pair<long, std::array<int, 4>>> terms) {
  Poly p;
  for (const auto& [c, e] : terms) {
    Monomial m;
    m.e = e;
    p.add_term(m, Int(c));
  }
  return p;
}

const WeightRecipe kTypeB{{{PermStat::fwex, Var::y},
                           {PermStat::neg, Var::t},
                           {PermStat::cro_b, Var::q}},
                          SignRule::none};

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("window basics and validation") {
  const SignedPerm id3 = SignedPerm::identity(3);
  CHECK(id3.window == std::vector<int>{1, 2, 3});
  CHECK(id3(2) == 2);
  CHECK(id3(-2) == -2);
  const SignedPerm s = sp({6, -3, -5, 1, 4, -7, -2});
  CHECK(s(2) == -3);
  CHECK(s(-2) == 3);
  CHECK(s.str() == "6 -3 -5 1 4 -7 -2");
  CHECK_FALSE(s.is_positive());
  CHECK_THROWS_AS(SignedPerm::checked({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm::checked({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm::checked({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPerm::checked({3, 1}), std::invalid_argument);
}

TEST_CASE("class names round-trip") {
  for (PermClass cls : {PermClass::A, PermClass::Bn, PermClass::Dn,
                        PermClass::BnStar, PermClass::DnStar, PermClass::AltA,
                        PermClass::RAltA, PermClass::AStar}) {
    auto back = perm_class_from_name(perm_class_name(cls));
    REQUIRE(back.has_value());
    CHECK(*back == cls);
  }
  CHECK_FALSE(perm_class_from_name("nope").has_value());
}

TEST_CASE("enumeration order: -1 < 1 < -2 < 2") {
  const auto d2 = enumerate_class(2, PermClass::Dn);
  REQUIRE(d2.size() == 4);
  CHECK(d2[0].window == std::vector<int>{-1, -2});
  CHECK(d2[1].window == std::vector<int>{1, 2});
  CHECK(d2[2].window == std::vector<int>{-2, -1});
  CHECK(d2[3].window == std::vector<int>{2, 1});

  const auto b2s = enumerate_class(2, PermClass::BnStar);
  REQUIRE(b2s.size() == 5);
  CHECK(b2s[0].window == std::vector<int>{-1, -2});
  CHECK(b2s[1].window == std::vector<int>{-2, -1});
  CHECK(b2s[2].window == std::vector<int>{-2, 1});
  CHECK(b2s[3].window == std::vector<int>{2, -1});
  CHECK(b2s[4].window == std::vector<int>{2, 1});

  const auto alt4 = enumerate_class(4, PermClass::AltA);
  REQUIRE(alt4.size() == 5);
  CHECK(alt4[0].window == std::vector<int>{2, 1, 4, 3});
  CHECK(alt4[1].window == std::vector<int>{3, 1, 4, 2});
  CHECK(alt4[2].window == std::vector<int>{3, 2, 4, 1});
  CHECK(alt4[3].window == std::vector<int>{4, 1, 3, 2});
  CHECK(alt4[4].window == std::vector<int>{4, 2, 3, 1});
}

TEST_CASE("enumeration restarts from scratch each call") {
  std::vector<std::string> first, second;
  for_each_in_class(3, PermClass::Dn,
                    [&](const SignedPerm& s) { first.push_back(s.str()); });
  for_each_in_class(3, PermClass::Dn,
                    [&](const SignedPerm& s) { second.push_back(s.str()); });
  CHECK(first == second);
  CHECK(first.size() == 24);
}

TEST_CASE("class sizes") {
  for (PermClass cls : {PermClass::A, PermClass::Bn, PermClass::Dn,
                        PermClass::BnStar, PermClass::DnStar, PermClass::AltA,
                        PermClass::RAltA, PermClass::AStar})
    CHECK(class_size(0, cls) == 1);

  for (int n = 1; n <= 6; ++n) {
    const Int np = factorial(n);
    CHECK(Int(class_size(n, PermClass::A)) == np);
    CHECK(Int(class_size(n, PermClass::Bn)) == (Int(1) << n) * np);
    CHECK(Int(class_size(n, PermClass::Dn)) == (Int(1) << (n - 1)) * np);
  }
  for (int n = 1; n <= 8; ++n) {
    const Int e = springer_numbers(n).zigzag;
    CHECK(Int(class_size(n, PermClass::AltA)) == e);
    CHECK(Int(class_size(n, PermClass::RAltA)) == e);
  }
  // Derangements: 0, 1, 2, 9, 44.
  CHECK(class_size(1, PermClass::AStar) == 0);
  CHECK(class_size(2, PermClass::AStar) == 1);
  CHECK(class_size(3, PermClass::AStar) == 2);
  CHECK(class_size(4, PermClass::AStar) == 9);
  CHECK(class_size(5, PermClass::AStar) == 44);
  // Every window of the star classes avoids sigma(i) = i.
  for_each_in_class(4, PermClass::DnStar, [&](const SignedPerm& s) {
    for (int i = 1; i <= 4; ++i) CHECK(s(i) != i);
    CHECK(neg_entries(s) % 2 == 0);
  });
}

TEST_CASE("enumeration cap") {
  const int cap = max_enumeration_n();
  CHECK(cap >= 1);
  CHECK_THROWS_AS(class_size(cap + 1, PermClass::Bn), BoundExceeded);
  CHECK_THROWS_AS(enumerator(cap + 1, PermClass::A, kTypeB), BoundExceeded);
  CHECK_THROWS_AS(class_size(-1, PermClass::Bn), std::invalid_argument);
}

TEST_CASE("type A statistics reject signed windows") {
  const SignedPerm s = sp({-1});
  CHECK_THROWS_AS(exc(s), NotTypeA);
  CHECK_THROWS_AS(wex(s), NotTypeA);
  CHECK_THROWS_AS(cro(s), NotTypeA);
  CHECK_THROWS_AS(stat31_2(s), NotTypeA);
  CHECK(neg_entries(s) == 1);
  CHECK(fwex(s) == 1);
}

TEST_CASE("statistic values on pinned windows") {
  CHECK(cro(sp({6, 4, 5, 3, 1, 7, 2})) == 3);
  CHECK(wex(sp({2, 4, 1, 3})) == 2);
  CHECK(cro(sp({2, 4, 1, 3})) == 1);
  CHECK(stat31_2(sp({4, 1, 3, 2})) == 2);
  CHECK(stat31_2(sp({2, 1, 4, 3})) == 0);
  CHECK(stat31_2(sp({3, 1, 4, 2})) == 1);

  const SignedPerm w = sp({6, -3, -5, 1, 4, -7, -2});
  CHECK(cro_b(w) == 8);
  CHECK(nest_b(w) == 8);

  CHECK(fwex(SignedPerm::identity(3)) == 6);
  CHECK(fwex(sp({2, 1})) == 2);
  CHECK(fwex(sp({-1, -2})) == 2);
  CHECK(cro_b(SignedPerm::identity(4)) == 0);
  CHECK(nest_b(SignedPerm::identity(4)) == 0);
  CHECK(cro_b(sp({-2, -1})) == 1);
  CHECK(nest_b(sp({-1, -2})) == 1);
  CHECK(cro_b(sp({2, -1})) == 1);
  CHECK(nest_b(sp({1, -2})) == 1);
}

TEST_CASE("type B crossings restrict to type A crossings on positive windows") {
  for (int n = 0; n <= 6; ++n)
    for_each_in_class(n, PermClass::A, [](const SignedPerm& s) {
      CHECK(cro_b(s) == cro(s));
      CHECK(fwex(s) == 2 * wex(s));
    });
}

TEST_CASE("weak excedances are shifted excedances in type A") {
  const Poly y = Poly::variable(Var::y);
  for (int n = 1; n <= 7; ++n) {
    const Poly by_wex = enumerator(n, PermClass::A, {{{PermStat::wex, Var::y}}});
    const Poly by_exc = enumerator(n, PermClass::A, {{{PermStat::exc, Var::y}}});
    CHECK(by_wex == y * by_exc);
  }
}

TEST_CASE("alternating permutations carry the q-zigzag distribution") {
  for (int n = 0; n <= 8; ++n)
    CHECK(enumerator(n, PermClass::AltA, {{{PermStat::stat31_2, Var::q}}}) ==
          q_euler_number(n));
}

TEST_CASE("fixed-point-free windows of size 4 under (-1/q)^wex q^cro") {
  WeightRecipe r;
  r.exponents = {{PermStat::cro, Var::q}};
  r.sign = SignRule::neg_inv_q_pow_wex;
  CHECK(enumerator(4, PermClass::AStar, r) == mk({{2, {0, 0, -2, 0}},
                                                  {2, {0, 0, -1, 0}},
                                                  {1, {0, 0, 0, 0}}}));
}

TEST_CASE("type B enumerator matches the B-series coefficients") {
  const Series s = expand(builtin_spec(SpecName::B), 5);
  for (int n = 0; n <= 5; ++n)
    CHECK(enumerator(n, PermClass::Bn, kTypeB) == s.coeffs[n]);
}

TEST_CASE("t = 0 slice of the type B enumerator is the type A one in y^2") {
  for (int n = 0; n <= 5; ++n) {
    const Poly b0 =
        enumerator(n, PermClass::Bn, kTypeB).substitute(Var::t, Int(0));
    const Poly a = enumerator(n, PermClass::A,
                              {{{PermStat::wex, Var::y}, {PermStat::cro, Var::q}}})
                       .substitute(Var::y, Monomial::var(Var::y, 2));
    CHECK(b0 == a);
  }
}

TEST_CASE("sign rules") {
  WeightRecipe r;
  r.exponents = {{PermStat::neg, Var::t}};

  r.sign = SignRule::neg_one_pow_fwex_floor;
  CHECK(enumerator(1, PermClass::Bn, r) ==
        mk({{1, {0, 1, 0, 0}}, {-1, {0, 0, 0, 0}}}));

  r.sign = SignRule::neg_one_pow_fwex_ceil;
  CHECK(enumerator(1, PermClass::Bn, r) ==
        mk({{-1, {0, 1, 0, 0}}, {-1, {0, 0, 0, 0}}}));

  // ceil rule over q on the one-element window (-1): fwex = 1, so the
  // weight is -q^-1 t.
  r.sign = SignRule::neg_inv_q_pow_fwex_ceil;
  CHECK(recipe_weight(r, sp({-1})) == mk({{-1, {0, 1, -1, 0}}}));
  r.sign = SignRule::neg_inv_q_pow_fwex_floor;
  CHECK(recipe_weight(r, sp({-1})) == mk({{1, {0, 1, 0, 0}}}));
  // exc(1,3,2) = 1 but wex(1,3,2) = 2.
  r.sign = SignRule::neg_one_pow_exc;
  CHECK(recipe_weight(r, sp({1, 3, 2})) == mk({{-1, {0, 0, 0, 0}}}));
  r.sign = SignRule::neg_one_pow_wex;
  CHECK(recipe_weight(r, sp({1, 3, 2})) == mk({{1, {0, 0, 0, 0}}}));
}

TEST_CASE("parallel enumeration folds to the sequential result") {
  WeightRecipe full;
  full.exponents = {{PermStat::fwex, Var::y},
                    {PermStat::neg, Var::t},
                    {PermStat::cro_b, Var::q},
                    {PermStat::nest_b, Var::p}};
  full.sign = SignRule::neg_one_pow_fwex_floor;
  for (int n = 0; n <= 5; ++n) {
    const Poly seq = enumerator(n, PermClass::Bn, full);
    const Poly par = enumerator_parallel(n, PermClass::Bn, full);
    CHECK(seq == par);
    CHECK(seq.to_json() == par.to_json());
  }
  // Classes whose shards are partly empty.
  CHECK(enumerator_parallel(6, PermClass::AltA,
                            {{{PermStat::stat31_2, Var::q}}}) ==
        enumerator(6, PermClass::AltA, {{{PermStat::stat31_2, Var::q}}}));
  CHECK(enumerator_parallel(4, PermClass::DnStar, kTypeB) ==
        enumerator(4, PermClass::DnStar, kTypeB));
}
