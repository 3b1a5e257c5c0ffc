#include "snakepath/sgnperm.hpp"

#include <cstdlib>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace snakepath {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm s;
  s.window.resize(n);
  for (int i = 1; i <= n; ++i) s.window[i - 1] = i;
  return s;
}

SignedPerm SignedPerm::checked(std::vector<int> window) {
  const int n = static_cast<int>(window.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : window) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw std::invalid_argument("SignedPerm: invalid window");
    seen[a] = 1;
  }
  SignedPerm s;
  s.window = std::move(window);
  return s;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    os << window[i];
  }
  return os.str();
}

const char* perm_class_name(PermClass cls) {
  switch (cls) {
    case PermClass::A: return "A";
    case PermClass::Bn: return "Bn";
    case PermClass::Dn: return "Dn";
    case PermClass::BnStar: return "BnStar";
    case PermClass::DnStar: return "DnStar";
    case PermClass::AltA: return "AltA";
    case PermClass::RAltA: return "RAltA";
    case PermClass::AStar: return "AStar";
  }
  return "?";
}

std::optional<PermClass> perm_class_from_name(const std::string& name) {
  for (PermClass cls : {PermClass::A, PermClass::Bn, PermClass::Dn,
                        PermClass::BnStar, PermClass::DnStar, PermClass::AltA,
                        PermClass::RAltA, PermClass::AStar})
    if (name == perm_class_name(cls)) return cls;
  return std::nullopt;
}

int max_enumeration_n() {
  static const int cached = [] {
    if (const char* s = std::getenv("SNAKEPATH_MAX_N")) {
      const int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 9;
  }();
  return cached;
}

namespace {

bool positive_only(PermClass cls) {
  return cls == PermClass::A || cls == PermClass::AltA ||
         cls == PermClass::RAltA || cls == PermClass::AStar;
}

bool no_fixed_points(PermClass cls) {
  return cls == PermClass::AStar || cls == PermClass::BnStar ||
         cls == PermClass::DnStar;
}

bool even_sign_count(PermClass cls) {
  return cls == PermClass::Dn || cls == PermClass::DnStar;
}

struct ClassWalker {
  int n;
  PermClass cls;
  const std::function<void(const SignedPerm&)>* visit;
  SignedPerm cur;
  std::vector<char> used;
  std::uint64_t count = 0;

  // pos is the 1-based position about to receive v.
  bool value_ok(int pos, int v) const {
    if (v < 0 && positive_only(cls)) return false;
    if (v == pos && no_fixed_points(cls)) return false;
    if (pos >= 2 && (cls == PermClass::AltA || cls == PermClass::RAltA)) {
      const int prev = cur.window[pos - 2];
      const bool want_descent = (cls == PermClass::AltA) == (pos % 2 == 0);
      if (want_descent ? prev < v : prev > v) return false;
    }
    return true;
  }

  bool leaf_ok() const {
    return !even_sign_count(cls) || neg_entries(cur) % 2 == 0;
  }

  void rec(int pos) {
    if (pos > n) {
      if (leaf_ok()) {
        ++count;
        (*visit)(cur);
      }
      return;
    }
    // Candidate values in the order -1 < 1 < -2 < 2 < ... so the stream of
    // windows comes out lexicographically under that value order.
    for (int k = 1; k <= n; ++k) {
      if (used[k]) continue;
      for (const int v : {-k, k}) {
        if (!value_ok(pos, v)) continue;
        used[k] = 1;
        cur.window[pos - 1] = v;
        rec(pos + 1);
        used[k] = 0;
      }
    }
  }
};

void check_enumeration_bound(int n) {
  if (n < 0) throw std::invalid_argument("enumeration: negative size");
  if (n > max_enumeration_n())
    throw BoundExceeded("enumeration size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(max_enumeration_n()) +
                        " (raise SNAKEPATH_MAX_N to override)");
}

// Walks the class, optionally pinning the first window entry; used to shard
// the enumeration across threads without changing the visit order within a
// shard.
std::uint64_t walk_class(int n, PermClass cls, std::optional<int> first,
                         const std::function<void(const SignedPerm&)>& visit) {
  ClassWalker w;
  w.n = n;
  w.cls = cls;
  w.visit = &visit;
  w.cur.window.assign(n, 0);
  w.used.assign(n + 1, 0);
  if (first) {
    if (n == 0) return 0;
    if (!w.value_ok(1, *first)) return 0;
    w.used[std::abs(*first)] = 1;
    w.cur.window[0] = *first;
    w.rec(2);
  } else {
    w.rec(1);
  }
  return w.count;
}

}  // namespace

std::uint64_t for_each_in_class(
    int n, PermClass cls, const std::function<void(const SignedPerm&)>& visit) {
  check_enumeration_bound(n);
  return walk_class(n, cls, std::nullopt, visit);
}

std::uint64_t for_each_in_class_with_first(
    int n, PermClass cls, int first,
    const std::function<void(const SignedPerm&)>& visit) {
  check_enumeration_bound(n);
  if (first == 0 || std::abs(first) > n)
    throw std::invalid_argument("for_each_in_class_with_first: bad first entry");
  return walk_class(n, cls, first, visit);
}

std::vector<SignedPerm> enumerate_class(int n, PermClass cls) {
  std::vector<SignedPerm> out;
  for_each_in_class(n, cls, [&](const SignedPerm& s) { out.push_back(s); });
  return out;
}

std::uint64_t class_size(int n, PermClass cls) {
  return for_each_in_class(n, cls, [](const SignedPerm&) {});
}

namespace {

void require_positive(const SignedPerm& s, const char* what) {
  if (!s.is_positive())
    throw NotTypeA(std::string(what) + ": window has negative entries");
}

}  // namespace

int exc(const SignedPerm& s) {
  require_positive(s, "exc");
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) c += s(i) > i;
  return c;
}

int wex(const SignedPerm& s) {
  require_positive(s, "wex");
  int c = 0;
  for (int i = 1; i <= s.size(); ++i) c += s(i) >= i;
  return c;
}

int cro(const SignedPerm& s) {
  require_positive(s, "cro");
  const int n = s.size();
  int c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (j <= s(i) && s(i) < s(j)) ++c;      // i < j <= s(i) < s(j)
      if (s(i) < s(j) && s(j) < i) ++c;       // s(i) < s(j) < i < j
    }
  return c;
}

int stat31_2(const SignedPerm& s) {
  require_positive(s, "31-2");
  const int n = s.size();
  int c = 0;
  for (int i = 1; i + 1 <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      if (s(i + 1) < s(j) && s(j) < s(i)) ++c;
  return c;
}

int neg_entries(const SignedPerm& s) {
  int c = 0;
  for (int v : s.window) c += v < 0;
  return c;
}

int fwex(const SignedPerm& s) {
  int weak = 0;
  for (int i = 1; i <= s.size(); ++i) weak += s(i) >= i;
  return 2 * weak + neg_entries(s);
}

int cro_b(const SignedPerm& s) {
  const int n = s.size();
  int c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j && j <= s(i) && s(i) < s(j)) ++c;      // i < j <= s(i) < s(j)
      if (-i < j && j <= -s(i) && -s(i) < s(j)) ++c;   // -i < j <= -s(i) < s(j)
      if (i > j && j > s(i) && s(i) > s(j)) ++c;       // i > j > s(i) > s(j)
    }
  return c;
}

int nest_b(const SignedPerm& s) {
  const int n = s.size();
  int c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j && j <= s(j) && s(j) < s(i)) ++c;      // i < j <= s(j) < s(i)
      if (-i < j && j <= s(j) && s(j) < -s(i)) ++c;    // -i < j <= s(j) < -s(i)
      if (j > i && i > s(i) && s(i) > s(j)) ++c;       // j > i > s(i) > s(j)
    }
  return c;
}

int eval_stat(PermStat stat, const SignedPerm& s) {
  switch (stat) {
    case PermStat::exc: return exc(s);
    case PermStat::wex: return wex(s);
    case PermStat::cro: return cro(s);
    case PermStat::stat31_2: return stat31_2(s);
    case PermStat::fwex: return fwex(s);
    case PermStat::neg: return neg_entries(s);
    case PermStat::cro_b: return cro_b(s);
    case PermStat::nest_b: return nest_b(s);
  }
  throw std::invalid_argument("eval_stat: unknown statistic");
}

const char* perm_stat_name(PermStat stat) {
  switch (stat) {
    case PermStat::exc: return "exc";
    case PermStat::wex: return "wex";
    case PermStat::cro: return "cro";
    case PermStat::stat31_2: return "31-2";
    case PermStat::fwex: return "fwex";
    case PermStat::neg: return "neg";
    case PermStat::cro_b: return "cro_B";
    case PermStat::nest_b: return "nest_B";
  }
  return "?";
}

Poly recipe_weight(const WeightRecipe& recipe, const SignedPerm& s) {
  Monomial m;
  for (const auto& [stat, var] : recipe.exponents)
    m.e[static_cast<int>(var)] += eval_stat(stat, s);
  int k = 0;
  bool over_q = false;
  switch (recipe.sign) {
    case SignRule::none: break;
    case SignRule::neg_one_pow_exc: k = exc(s); break;
    case SignRule::neg_one_pow_wex: k = wex(s); break;
    case SignRule::neg_one_pow_fwex_floor: k = fwex(s) / 2; break;
    case SignRule::neg_one_pow_fwex_ceil: k = (fwex(s) + 1) / 2; break;
    case SignRule::neg_inv_q_pow_fwex_floor:
      k = fwex(s) / 2;
      over_q = true;
      break;
    case SignRule::neg_inv_q_pow_fwex_ceil:
      k = (fwex(s) + 1) / 2;
      over_q = true;
      break;
    case SignRule::neg_inv_q_pow_wex:
      k = wex(s);
      over_q = true;
      break;
  }
  if (over_q) m.e[static_cast<int>(Var::q)] -= k;
  Poly out;
  out.add_term(m, k % 2 ? Int(-1) : Int(1));
  return out;
}

Poly enumerator(int n, PermClass cls, const WeightRecipe& recipe) {
  Poly total;
  for_each_in_class(n, cls, [&](const SignedPerm& s) {
    total += recipe_weight(recipe, s);
  });
  return total;
}

Poly enumerator_parallel(int n, PermClass cls, const WeightRecipe& recipe) {
  check_enumeration_bound(n);
  if (n == 0) return enumerator(n, cls, recipe);
  std::vector<std::future<Poly>> parts;
  for (int k = 1; k <= n; ++k)
    for (const int v : {-k, k})
      parts.push_back(std::async(std::launch::async, [=] {
        Poly local;
        walk_class(n, cls, v, [&](const SignedPerm& s) {
          local += recipe_weight(recipe, s);
        });
        return local;
      }));
  // Shards are folded in the same first-entry order the sequential walk
  // uses, and coefficients are exact, so the sum is identical.
  Poly total;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace snakepath
