#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "snakepath/algebra.hpp"
#include "snakepath/cfrac.hpp"
#include "snakepath/errors.hpp"
#include "snakepath/harness.hpp"
#include "snakepath/maps.hpp"
#include "snakepath/paths.hpp"
#include "snakepath/sgnperm.hpp"
#include "snakepath/snakes.hpp"

// Command line front end.  Exit codes: 0 on success with every comparison
// matching, 2 when any requested comparison mismatches, 3 on usage errors.

namespace {

using namespace snakepath;
using nlohmann::ordered_json;

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

int run_verify(const std::string& id, int nmax, const std::string& format) {
  std::vector<IdentityCheck> checks;
  if (id.empty()) {
    checks = verify_all(nmax);
  } else {
    int top = std::min(nmax, identity_max_n(id));
    for (int n = 1; n <= top; ++n) checks.push_back(verify(id, n));
  }

  bool mismatch = false;
  for (const auto& c : checks) mismatch |= c.verdict == Verdict::mismatch;

  if (format == "json") {
    std::cout << report_json(checks).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "id,n,verdict,millis,lhs,rhs,note\n";
    for (const auto& c : checks)
      std::cout << csv_quote(c.id) << ',' << c.n << ','
                << verdict_name(c.verdict) << ',' << c.millis << ','
                << csv_quote(c.lhs.str()) << ',' << csv_quote(c.rhs.str())
                << ',' << csv_quote(c.note) << '\n';
  } else {
    std::size_t mismatches = 0;
    for (const auto& c : checks) {
      std::cout << verdict_name(c.verdict) << "  " << c.id << "  n=" << c.n
                << "  (" << c.millis << " ms)\n";
      if (c.verdict == Verdict::mismatch) {
        ++mismatches;
        std::cout << "  lhs: " << c.lhs.str() << "\n  rhs: " << c.rhs.str()
                  << '\n';
      }
    }
    std::cout << "checks: " << checks.size() << ", mismatches: " << mismatches
              << '\n';
  }
  return mismatch ? 2 : 0;
}

int run_expand(const std::string& name, int order, const std::string& format) {
  static const std::vector<std::pair<std::string, SpecName>> kSpecs = {
      {"B", SpecName::B},
      {"Q", SpecName::Q},
      {"R", SpecName::R},
      {"Etan", SpecName::Etan},
      {"Esec", SpecName::Esec}};
  auto it = std::find_if(kSpecs.begin(), kSpecs.end(),
                         [&](const auto& p) { return p.first == name; });
  if (it == kSpecs.end()) throw std::invalid_argument("unknown spec " + name);

  Series s = expand(builtin_spec(it->second), order);
  if (format == "json") {
    ordered_json j;
    j["spec"] = name;
    j["order"] = order;
    j["coeffs"] = ordered_json::parse(s.to_json());
    std::cout << j.dump(2) << '\n';
  } else {
    for (int k = 0; k <= s.order(); ++k)
      std::cout << "[x^" << k << "] " << s.coeffs[k].str() << '\n';
  }
  return 0;
}

std::optional<PermStat> stat_from_name(const std::string& name) {
  for (PermStat s :
       {PermStat::exc, PermStat::wex, PermStat::cro, PermStat::stat31_2,
        PermStat::fwex, PermStat::neg, PermStat::cro_b, PermStat::nest_b})
    if (name == perm_stat_name(s)) return s;
  return std::nullopt;
}

std::optional<Var> var_from_name(const std::string& name) {
  for (Var v : {Var::y, Var::t, Var::q, Var::p})
    if (name == var_name(v)) return v;
  return std::nullopt;
}

SignRule sign_from_name(const std::string& name) {
  static const std::vector<std::pair<std::string, SignRule>> kRules = {
      {"none", SignRule::none},
      {"exc", SignRule::neg_one_pow_exc},
      {"wex", SignRule::neg_one_pow_wex},
      {"fwex-floor", SignRule::neg_one_pow_fwex_floor},
      {"fwex-ceil", SignRule::neg_one_pow_fwex_ceil},
      {"overq-fwex-floor", SignRule::neg_inv_q_pow_fwex_floor},
      {"overq-fwex-ceil", SignRule::neg_inv_q_pow_fwex_ceil},
      {"overq-wex", SignRule::neg_inv_q_pow_wex}};
  for (const auto& [n, r] : kRules)
    if (n == name) return r;
  throw std::invalid_argument("unknown sign rule " + name);
}

int run_enumerate(const std::string& cls_name, int n, const std::string& stats,
                  const std::string& sign, const std::string& format) {
  auto cls = perm_class_from_name(cls_name);
  if (!cls) throw std::invalid_argument("unknown class " + cls_name);

  WeightRecipe recipe;
  recipe.sign = sign_from_name(sign);
  if (!stats.empty()) {
    std::size_t pos = 0;
    while (pos < stats.size()) {
      std::size_t comma = stats.find(',', pos);
      if (comma == std::string::npos) comma = stats.size();
      std::string token = stats.substr(pos, comma - pos);
      std::size_t eq = token.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("stat token needs stat=var: " + token);
      auto st = stat_from_name(token.substr(0, eq));
      auto v = var_from_name(token.substr(eq + 1));
      if (!st || !v) throw std::invalid_argument("bad stat token " + token);
      recipe.exponents.emplace_back(*st, *v);
      pos = comma + 1;
    }
  }

  Poly sum = enumerator(n, *cls, recipe);
  if (format == "json") {
    ordered_json j;
    j["class"] = cls_name;
    j["n"] = n;
    j["count"] = class_size(n, *cls);
    j["sum"] = ordered_json::parse(sum.to_json());
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "class " << cls_name << ", n=" << n
              << ", count=" << class_size(n, *cls) << '\n'
              << sum.str() << '\n';
  }
  return 0;
}

// One trace row per domain element; with checking on, each row is validated
// against the map's defining properties.
int run_bijection(const std::string& map, int n, bool check,
                  const std::string& format) {
  ordered_json trace = ordered_json::array();
  bool ok = true;
  std::uint64_t elements = 0;

  auto involution_rows = [&](SchemeId domain, SchemeId fixed_set,
                             const std::function<BMPath(const BMPath&)>& f,
                             int dq) {
    for_each_path(domain, n, [&](const BMPath& p) {
      ++elements;
      BMPath img = f(p);
      bool fixed = img == p;
      ordered_json row;
      row["input"] = p.to_json();
      row["image"] = img.to_json();
      row["fixed"] = fixed;
      if (check) {
        bool row_ok = f(img) == p && fixed == is_fixed(p, fixed_set);
        Monomial wp = path_weight(p);
        Monomial wi = path_weight(img);
        row_ok = row_ok && wp.exponent(Var::t) == wi.exponent(Var::t);
        if (!fixed) {
          int dy = wi.exponent(Var::y) - wp.exponent(Var::y);
          int dqe = wi.exponent(Var::q) - wp.exponent(Var::q);
          row_ok = row_ok && (dy == 2 || dy == -2) && dqe == (dy / 2) * dq;
        }
        row["ok"] = row_ok;
        ok = ok && row_ok;
      }
      trace.push_back(std::move(row));
    });
  };

  auto snake_rows = [&](SnakeFlavor flavor, int size, SchemeId image_scheme,
                        const std::function<BMPath(const Snake&)>& f,
                        const std::function<Snake(const BMPath&)>& f_inv) {
    std::set<std::string> images;
    for_each_snake(size, flavor, [&](const Snake& s) {
      ++elements;
      BMPath img = f(s);
      ordered_json row;
      row["input"] = s.body.str();
      row["image"] = img.to_json();
      if (check) {
        bool row_ok = f_inv(img) == s;
        try {
          validate_path(img, image_scheme);
        } catch (const std::exception&) {
          row_ok = false;
        }
        row_ok = row_ok && path_weight(img).exponent(Var::t) == cs(s);
        row["ok"] = row_ok;
        ok = ok && row_ok;
        images.insert(img.str());
      }
      trace.push_back(std::move(row));
    });
    if (check) ok = ok && images.size() == count_paths(image_scheme, n);
  };

  if (map == "phi") {
    for_each_path(SchemeId::M, n, [&](const BMPath& p) {
      ++elements;
      PhiResult r = phi(p);
      ordered_json row;
      row["input"] = p.to_json();
      row["first"] = Poly::monomial(r.first_weight).str();
      row["image"] = r.path.to_json();
      if (check) {
        bool row_ok = phi_inv(r) == p &&
                      path_weight(p) == r.first_weight * path_weight(r.path);
        row["ok"] = row_ok;
        ok = ok && row_ok;
      }
      trace.push_back(std::move(row));
    });
  } else if (map == "psi1") {
    involution_rows(SchemeId::H, SchemeId::F, [](const BMPath& p) { return psi1(p); }, 0);
  } else if (map == "psi2") {
    involution_rows(SchemeId::Mstar, SchemeId::G,
                    [](const BMPath& p) { return psi2(p); }, 1);
  } else if (map == "lambda1") {
    snake_rows(SnakeFlavor::S0, n, SchemeId::Tstar,
               [](const Snake& s) { return lambda1(s); },
               [](const BMPath& p) { return lambda1_inv(p); });
  } else if (map == "lambda2") {
    snake_rows(SnakeFlavor::S00, n + 1, SchemeId::T,
               [](const Snake& s) { return lambda2(s); },
               [](const BMPath& p) { return lambda2_inv(p); });
  } else {
    throw std::invalid_argument("unknown map " + map);
  }

  ordered_json j;
  j["map"] = map;
  j["n"] = n;
  j["elements"] = elements;
  if (check) j["ok"] = ok;
  j["trace"] = std::move(trace);
  std::cout << j.dump(format == "json" ? 2 : -1) << '\n';
  return check && !ok ? 2 : 0;
}

int run_tables(int nmax, const std::string& format) {
  DiscussionTables dt = discussion_tables(nmax);
  if (format == "json") {
    std::cout << dt.to_json().dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < dt.table_a.size(); ++k)
      std::cout << "n=" << k + 1 << "  A: " << dt.table_a[k].str()
                << "  |  B: " << dt.table_b[k].str() << '\n';
    std::cout << "note: " << dt.note << '\n';
  }
  return 0;
}

int run_conjecture(int n, const std::string& format) {
  IdentityCheck c = conjecture_pq(n);
  if (format == "json") {
    std::cout << c.to_json().dump(2) << '\n';
  } else {
    std::cout << c.id << "  n=" << c.n << "  " << verdict_name(c.verdict)
              << "  (" << c.millis << " ms)\n"
              << "lhs: " << c.lhs.str() << '\n'
              << "rhs: " << c.rhs.str() << '\n'
              << "note: " << c.note << '\n';
  }
  return c.verdict == Verdict::mismatch ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration and verification for signed countings"};
  app.require_subcommand(1);

  std::string id, spec = "B", cls = "Bn", stats, sign = "none", map;
  std::string format = "text";
  int nmax = 7, order = 6, n = 3;

  auto* v = app.add_subcommand("verify", "run registered identity checks");
  v->add_option("--id", id, "single identity id (default: all)");
  v->add_option("--nmax", nmax, "largest size to check")->check(CLI::PositiveNumber);
  v->add_option("--format", format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* e = app.add_subcommand("expand", "expand a built-in continued fraction");
  e->add_option("--spec", spec, "B|Q|R|Etan|Esec")->required()
      ->check(CLI::IsMember({"B", "Q", "R", "Etan", "Esec"}));
  e->add_option("--order", order, "series truncation order")
      ->required()->check(CLI::NonNegativeNumber);
  e->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* en = app.add_subcommand("enumerate", "sum a weight recipe over a class");
  en->add_option("--class", cls, "A|Bn|Dn|BnStar|DnStar|AltA|RAltA|AStar")
      ->required();
  en->add_option("--n", n, "window size")->required()->check(CLI::PositiveNumber);
  en->add_option("--stats", stats, "comma list of stat=var, e.g. fwex=y,neg=t,cro_B=q");
  en->add_option("--sign", sign,
                 "none|exc|wex|fwex-floor|fwex-ceil|overq-fwex-floor|"
                 "overq-fwex-ceil|overq-wex");
  en->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* b = app.add_subcommand("bijection", "trace a structural map");
  b->add_option("--map", map, "phi|psi1|psi2|lambda1|lambda2")->required()
      ->check(CLI::IsMember({"phi", "psi1", "psi2", "lambda1", "lambda2"}));
  b->add_option("--n", n, "domain size parameter")->required()
      ->check(CLI::NonNegativeNumber);
  bool check = false;
  b->add_flag("--check", check, "validate the defining properties per element");
  b->add_option("--format", format, "text|json (json pretty-prints)")
      ->check(CLI::IsMember({"text", "json"}));

  auto* t = app.add_subcommand("tables", "side-by-side exploratory tables");
  t->add_option("--nmax", nmax, "largest size")->required()
      ->check(CLI::PositiveNumber);
  t->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* c = app.add_subcommand("conjecture", "report the p,q refinement");
  c->add_option("--n", n, "window size")->required()->check(CLI::PositiveNumber);
  c->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (v->parsed()) return run_verify(id, nmax, format);
    if (e->parsed()) return run_expand(spec, order, format);
    if (en->parsed()) return run_enumerate(cls, n, stats, sign, format);
    if (b->parsed()) return run_bijection(map, n, check, format);
    if (t->parsed()) return run_tables(nmax, format);
    if (c->parsed()) return run_conjecture(n, format);
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 3;
  } catch (const UnknownIdentity& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 3;
  } catch (const BoundExceeded& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 3;
}
