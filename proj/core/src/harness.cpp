#include "snakepath/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "snakepath/cfrac.hpp"
#include "snakepath/sgnperm.hpp"
#include "snakepath/snakes.hpp"

namespace snakepath {

namespace {

Int parity_sign(int k) { return ((k % 2) + 2) % 2 == 0 ? Int(1) : Int(-1); }

// (-1/q)^k as an exact Laurent monomial; no rational arithmetic involved.
Poly neg_inv_q_pow(int k) {
  return Poly::monomial(Monomial::var(Var::q, -k), parity_sign(k));
}

Poly constant(Int c) { return Poly(std::move(c)); }

Poly t_plus_one() { return Poly::variable(Var::t) + Poly::one(); }
Poly t_minus_one() { return Poly::variable(Var::t) - Poly::one(); }

Poly r_prev(int n, DerivFlavor flavor) {
  return derivative_poly(DerivKind::R, n - 1, flavor);
}

Int two_pow(int k) { return Int(1) << k; }

WeightRecipe recipe(std::vector<std::pair<PermStat, Var>> exponents,
                    SignRule sign) {
  WeightRecipe r;
  r.exponents = std::move(exponents);
  r.sign = sign;
  return r;
}

Poly signed_sum(int n, PermClass cls, SignRule sign,
                std::vector<std::pair<PermStat, Var>> exponents = {}) {
  return enumerator(n, cls, recipe(std::move(exponents), sign));
}

const std::vector<std::pair<PermStat, Var>> kNegCro = {
    {PermStat::neg, Var::t}, {PermStat::cro_b, Var::q}};

std::vector<int> absolute_word(const Snake& s) {
  std::vector<int> w;
  w.reserve(s.body.window.size());
  for (int v : s.body.window) w.push_back(v < 0 ? -v : v);
  return w;
}

// t^{cs} q^{2-31 + patQ} over the flavor's boundary convention.
Poly snake_q_weight(const Snake& s) {
  Monomial m;
  m.e[static_cast<int>(Var::t)] = cs(s);
  m.e[static_cast<int>(Var::q)] =
      pat2_31_total(absolute_word(s), WordBoundary::zero_left) +
      pat_stat(s, PatKind::patQ);
  return Poly::monomial(m);
}

// t^{cs} q^{2-31 + patR - m} for a snake of size m.
Poly snake_r_weight(const Snake& s) {
  Monomial m;
  m.e[static_cast<int>(Var::t)] = cs(s);
  m.e[static_cast<int>(Var::q)] =
      pat2_31_total(absolute_word(s), WordBoundary::zero_both) +
      pat_stat(s, PatKind::patR) - s.size();
  return Poly::monomial(m);
}

struct Entry {
  std::string id;
  int max_n;
  std::function<Poly(int)> lhs;
  std::function<Poly(int)> rhs;
  bool alternate = false;
  std::string note;
};

const std::string kSwapNoteTQ =
    "as stated: odd n pairs with (-1)^{n/2}(t+1)R_{n-1}(t,q) and even n with "
    "(-1)^{(n-1)/2}(t-1)R_{n-1}(t,q), which makes both exponents "
    "non-integral; the verified form interchanges the parity labels: even n "
    "-> (-1)^{n/2}(t+1)R_{n-1}(t,q), odd n -> (-1)^{(n-1)/2}(t-1)R_{n-1}(t,q)";

const std::string kSliceNote =
    "as stated the right side reads A_n(y,q); the verified form evaluates "
    "the first argument at y^2, matching fwex = 2 wex on positive windows";

std::vector<Entry> build_registry() {
  std::vector<Entry> reg;

  reg.push_back(
      {"Eulercan1", 9,
       [](int n) { return signed_sum(n, PermClass::A, SignRule::neg_one_pow_exc); },
       [](int n) {
         if (n % 2 == 0) return Poly::zero();
         return constant(parity_sign((n - 1) / 2) * springer_numbers(n).zigzag);
       }});

  reg.push_back(
      {"Eulercan2", 8,
       [](int n) {
         return signed_sum(n, PermClass::AStar, SignRule::neg_one_pow_exc);
       },
       [](int n) {
         if (n % 2 != 0) return Poly::zero();
         return constant(parity_sign(n / 2) * springer_numbers(n).zigzag);
       }});

  reg.push_back(
      {"JV1", 8,
       [](int n) {
         return signed_sum(n, PermClass::A, SignRule::neg_one_pow_wex,
                           {{PermStat::cro, Var::q}});
       },
       [](int n) {
         if (n % 2 == 0) return Poly::zero();
         return parity_sign((n + 1) / 2) * q_euler_number(n);
       }});

  reg.push_back(
      {"JV2", 8,
       [](int n) {
         return signed_sum(n, PermClass::AStar, SignRule::neg_inv_q_pow_wex,
                           {{PermStat::cro, Var::q}});
       },
       [](int n) {
         if (n % 2 != 0) return Poly::zero();
         return neg_inv_q_pow(n / 2) * q_euler_number(n);
       }});

  reg.push_back(
      {"thm:signFwexB.i", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_floor,
                           kNegCro);
       },
       [](int n) {
         if (n % 2 == 0)
           return parity_sign(n / 2) * (t_plus_one() * r_prev(n, DerivFlavor::q));
         return parity_sign((n - 1) / 2) *
                (t_minus_one() * r_prev(n, DerivFlavor::q));
       },
       true, kSwapNoteTQ});

  reg.push_back(
      {"thm:signFwexB.ii", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_ceil,
                           kNegCro);
       },
       [](int n) {
         if (n % 2 == 0)
           return parity_sign(n / 2) * (t_minus_one() * r_prev(n, DerivFlavor::q));
         return parity_sign((n + 1) / 2) *
                (t_plus_one() * r_prev(n, DerivFlavor::q));
       }});

  reg.push_back(
      {"thm:signFwexD", 7,
       [](int n) {
         return signed_sum(n, PermClass::Dn, SignRule::neg_one_pow_fwex_floor,
                           kNegCro);
       },
       [](int n) {
         if (n % 2 == 0)
           return parity_sign(n / 2) *
                  (Poly::variable(Var::t) * r_prev(n, DerivFlavor::q));
         return parity_sign((n + 1) / 2) * r_prev(n, DerivFlavor::q);
       }});

  reg.push_back(
      {"thm:signFwexB*.i", 7,
       [](int n) {
         return signed_sum(n, PermClass::BnStar,
                           SignRule::neg_inv_q_pow_fwex_floor, kNegCro);
       },
       [](int n) {
         return neg_inv_q_pow(n / 2) * derivative_poly(DerivKind::Q, n, DerivFlavor::q);
       }});

  reg.push_back(
      {"thm:signFwexB*.ii", 7,
       [](int n) {
         return signed_sum(n, PermClass::BnStar,
                           SignRule::neg_inv_q_pow_fwex_ceil, kNegCro);
       },
       [](int n) {
         return neg_inv_q_pow((n + 1) / 2) *
                derivative_poly(DerivKind::Q, n, DerivFlavor::q);
       }});

  reg.push_back(
      {"thm:signFwexD*", 7,
       [](int n) {
         return signed_sum(n, PermClass::DnStar,
                           SignRule::neg_inv_q_pow_fwex_floor, kNegCro);
       },
       [](int n) {
         if (n % 2 != 0) return Poly::zero();
         return neg_inv_q_pow(n / 2) *
                derivative_poly(DerivKind::Q, n, DerivFlavor::q);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn.i", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_floor);
       },
       [](int n) {
         if (n % 2 != 0) return Poly::zero();
         return constant(parity_sign(n / 2) * two_pow(n) *
                         springer_numbers(n).zigzag);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn.ii", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_ceil);
       },
       [](int n) {
         if (n % 2 == 0) return Poly::zero();
         return constant(parity_sign((n + 1) / 2) * two_pow(n) *
                         springer_numbers(n).zigzag);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn.iii", 7,
       [](int n) {
         return signed_sum(n, PermClass::Dn, SignRule::neg_one_pow_fwex_floor);
       },
       [](int n) {
         return constant(parity_sign((n + 1) / 2) * two_pow(n - 1) *
                         springer_numbers(n).zigzag);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn*.i", 7,
       [](int n) {
         return signed_sum(n, PermClass::BnStar,
                           SignRule::neg_one_pow_fwex_floor);
       },
       [](int n) {
         return constant(parity_sign(n / 2) * springer_numbers(n).snake);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn*.ii", 7,
       [](int n) {
         return signed_sum(n, PermClass::BnStar,
                           SignRule::neg_one_pow_fwex_ceil);
       },
       [](int n) {
         return constant(parity_sign((n + 1) / 2) * springer_numbers(n).snake);
       }});

  reg.push_back(
      {"cor:(-1)-eval-Bn*.iii", 7,
       [](int n) {
         return signed_sum(n, PermClass::DnStar,
                           SignRule::neg_one_pow_fwex_floor);
       },
       [](int n) {
         if (n % 2 != 0) return Poly::zero();
         return constant(parity_sign(n / 2) * springer_numbers(n).snake);
       }});

  reg.push_back(
      {"cor:sign-S_n^D.i", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_floor) -
                signed_sum(n, PermClass::BnStar,
                           SignRule::neg_one_pow_fwex_floor);
       },
       [](int n) {
         auto sp = springer_numbers(n);
         if (n % 2 == 0) return constant(parity_sign(n / 2) * sp.snake_d);
         return constant(parity_sign((n + 1) / 2) * sp.snake);
       }});

  reg.push_back(
      {"cor:sign-S_n^D.ii", 7,
       [](int n) {
         return signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_ceil) -
                signed_sum(n, PermClass::BnStar,
                           SignRule::neg_one_pow_fwex_ceil);
       },
       [](int n) {
         auto sp = springer_numbers(n);
         if (n % 2 == 0) return constant(parity_sign(n / 2 + 1) * sp.snake);
         return constant(parity_sign((n + 1) / 2) * sp.snake_d);
       }});

  reg.push_back(
      {"Bn-t0-slice", 8,
       [](int n) {
         Series s = expand(builtin_spec(SpecName::B), n);
         return s.coeffs[n].substitute(Var::t, Int(0));
       },
       [](int n) {
         return enumerator(n, PermClass::A,
                           recipe({{PermStat::wex, Var::y},
                                   {PermStat::wex, Var::y},
                                   {PermStat::cro, Var::q}},
                                  SignRule::none));
       },
       true, kSliceNote});

  reg.push_back(
      {"thm:T*->snake-0", 7,
       [](int n) { return snake_enumerator(n, SnakeFlavor::S0, snake_q_weight); },
       [](int n) { return derivative_poly(DerivKind::Q, n, DerivFlavor::q); }});

  reg.push_back(
      {"thm:T->snakes-00", 6,
       [](int n) {
         return snake_enumerator(n + 1, SnakeFlavor::S00, snake_r_weight);
       },
       [](int n) { return derivative_poly(DerivKind::R, n, DerivFlavor::q); }});

  return reg;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> reg = build_registry();
  return reg;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : registry())
    if (e.id == id) return e;
  throw UnknownIdentity("no identity registered under \"" + id + "\"");
}

// Optional global override for every per-identity bound.
int bound_override() {
  static const int value = [] {
    const char* env = std::getenv("SNAKEPATH_MAX_N");
    if (env == nullptr) return -1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) return -1;
    return static_cast<int>(v);
  }();
  return value;
}

IdentityCheck run_entry(const Entry& e, int n) {
  auto t0 = std::chrono::steady_clock::now();
  IdentityCheck c;
  c.id = e.id;
  c.n = n;
  c.lhs = e.lhs(n);
  c.rhs = e.rhs(n);
  if (c.lhs == c.rhs) {
    c.verdict = e.alternate ? Verdict::matchesAlternate : Verdict::match;
  } else {
    c.verdict = Verdict::mismatch;
  }
  c.note = e.note;
  auto t1 = std::chrono::steady_clock::now();
  c.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return c;
}

nlohmann::ordered_json poly_json(const Poly& f) {
  return nlohmann::ordered_json::parse(f.to_json());
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::match:
      return "match";
    case Verdict::mismatch:
      return "mismatch";
    case Verdict::matchesAlternate:
      return "matchesAlternate";
  }
  throw InternalInconsistency("unhandled verdict");
}

nlohmann::ordered_json IdentityCheck::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["n"] = n;
  j["lhs"] = poly_json(lhs);
  j["rhs"] = poly_json(rhs);
  j["verdict"] = verdict_name(verdict);
  j["note"] = note;
  j["millis"] = millis;
  return j;
}

std::vector<std::string> registered_identities() {
  std::vector<std::string> ids;
  ids.reserve(registry().size());
  for (const auto& e : registry()) ids.push_back(e.id);
  return ids;
}

int identity_max_n(const std::string& id) {
  const Entry& e = find_entry(id);
  int over = bound_override();
  return over > 0 ? over : e.max_n;
}

IdentityCheck verify(const std::string& id, int n) {
  const Entry& e = find_entry(id);
  if (n < 1) throw std::invalid_argument("identity size must be positive");
  if (n > identity_max_n(id))
    throw BoundExceeded("identity \"" + id + "\" is bounded at n = " +
                        std::to_string(identity_max_n(id)) +
                        "; raise SNAKEPATH_MAX_N to override");
  return run_entry(e, n);
}

std::vector<IdentityCheck> verify_all(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");

  struct Job {
    const Entry* entry;
    int n;
  };
  std::vector<Job> jobs;
  for (const auto& e : registry()) {
    int over = bound_override();
    int top = std::min(nmax, over > 0 ? over : e.max_n);
    for (int n = 1; n <= top; ++n) jobs.push_back({&e, n});
  }

  // Independent jobs over a small pool; the report keeps the (id, n) order
  // of the jobs vector regardless of completion order.
  std::vector<IdentityCheck> results(jobs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, jobs.size() == 0 ? 1 : jobs.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        results[i] = run_entry(*jobs[i].entry, jobs[i].n);
      }
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

IdentityCheck conjecture_pq(int n) {
  if (n < 1) throw std::invalid_argument("conjecture size must be positive");
  int top = bound_override() > 0 ? bound_override() : 6;
  if (n > top)
    throw BoundExceeded("the p,q refinement is explored up to n = " +
                        std::to_string(top) +
                        "; raise SNAKEPATH_MAX_N to override");

  auto t0 = std::chrono::steady_clock::now();
  IdentityCheck c;
  c.id = "conjecture:pq";
  c.n = n;
  c.lhs = signed_sum(n, PermClass::Bn, SignRule::neg_one_pow_fwex_floor,
                     {{PermStat::neg, Var::t},
                      {PermStat::nest_b, Var::p},
                      {PermStat::cro_b, Var::q}});
  if (n % 2 == 0) {
    c.rhs = parity_sign(n / 2) * (t_plus_one() * r_prev(n, DerivFlavor::pq));
  } else {
    c.rhs = parity_sign((n - 1) / 2) *
            (t_minus_one() * r_prev(n, DerivFlavor::pq));
  }
  c.verdict = c.lhs == c.rhs ? Verdict::matchesAlternate : Verdict::mismatch;
  c.note =
      "conjectural refinement, reported and never asserted; as stated: odd n "
      "-> (-1)^{n/2}(t+1)R_{n-1}(t,p,q), even n -> "
      "(-1)^{(n-1)/2}(t-1)R_{n-1}(t,p,q); the compared reading interchanges "
      "the parity labels: even n -> (-1)^{n/2}(t+1)R_{n-1}(t,p,q), odd n -> "
      "(-1)^{(n-1)/2}(t-1)R_{n-1}(t,p,q)";
  auto t1 = std::chrono::steady_clock::now();
  c.millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return c;
}

DiscussionTables discussion_tables(int nmax) {
  if (nmax < 1) throw std::invalid_argument("nmax must be positive");
  int top = bound_override() > 0 ? bound_override() : 7;
  if (nmax > top)
    throw BoundExceeded("discussion tables are bounded at n = " +
                        std::to_string(top) +
                        "; raise SNAKEPATH_MAX_N to override");

  DiscussionTables tables;
  tables.note =
      "table A row n = 2 is 1 - 2t; the grouped reading -(2t + 1) is "
      "rejected by direct enumeration";
  for (int n = 1; n <= nmax; ++n) {
    // Half-sign rule matching the S^D branch: floor for even n, ceil for odd.
    SignRule rule = n % 2 == 0 ? SignRule::neg_one_pow_fwex_floor
                               : SignRule::neg_one_pow_fwex_ceil;
    Poly a = signed_sum(n, PermClass::Bn, rule, {{PermStat::neg, Var::t}}) -
             signed_sum(n, PermClass::BnStar, rule, {{PermStat::neg, Var::t}});
    tables.table_a.push_back(std::move(a));
    tables.table_b.push_back(snake_enumerator(n, SnakeFlavor::SD, [](const Snake& s) {
      return Poly::variable(Var::t, cs(s));
    }));
  }
  return tables;
}

nlohmann::ordered_json DiscussionTables::to_json() const {
  nlohmann::ordered_json j;
  j["table_a"] = nlohmann::ordered_json::array();
  j["table_b"] = nlohmann::ordered_json::array();
  for (const auto& f : table_a) j["table_a"].push_back(poly_json(f));
  for (const auto& f : table_b) j["table_b"].push_back(poly_json(f));
  j["note"] = note;
  return j;
}

nlohmann::ordered_json report_json(const std::vector<IdentityCheck>& checks) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : checks) j.push_back(c.to_json());
  return j;
}

}  // namespace snakepath
