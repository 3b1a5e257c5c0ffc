#include "snakepath/paths.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "snakepath/sgnperm.hpp"

namespace snakepath {

namespace {

Monomial mono(int ey, int et, int eq) {
  Monomial m;
  m.e = {ey, et, eq, 0};
  return m;
}

// Appends base * q^a for a = lo..hi (empty when hi < lo).
void append_q_range(std::vector<Monomial>& out, int ey, int et, int eq_base,
                    int lo, int hi) {
  for (int a = lo; a <= hi; ++a) out.push_back(mono(ey, et, eq_base + a));
}

}  // namespace

int step_delta(StepKind kind) {
  switch (kind) {
    case StepKind::U:
      return 1;
    case StepKind::D:
      return -1;
    default:
      return 0;
  }
}

char step_letter(StepKind kind) {
  switch (kind) {
    case StepKind::U:
      return 'U';
    case StepKind::L:
      return 'L';
    case StepKind::W:
      return 'W';
    case StepKind::D:
      return 'D';
  }
  throw InternalInconsistency("unreachable step kind");
}

std::optional<StepKind> step_from_letter(char c) {
  switch (c) {
    case 'U':
      return StepKind::U;
    case 'L':
      return StepKind::L;
    case 'W':
      return StepKind::W;
    case 'D':
      return StepKind::D;
    default:
      return std::nullopt;
  }
}

std::string BMPath::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ' ';
    const Step& s = steps[i];
    os << step_letter(s.kind) << '(' << s.weight.e[0] << ',' << s.weight.e[1]
       << ',' << s.weight.e[2] << ')';
  }
  return os.str();
}

nlohmann::ordered_json BMPath::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Step& s : steps) {
    arr.push_back({{"k", std::string(1, step_letter(s.kind))},
                   {"e", {s.weight.e[0], s.weight.e[1], s.weight.e[2]}}});
  }
  return nlohmann::ordered_json{{"steps", std::move(arr)}};
}

BMPath BMPath::from_json(const nlohmann::ordered_json& j) {
  BMPath p;
  for (const auto& js : j.at("steps")) {
    const std::string k = js.at("k").get<std::string>();
    if (k.size() != 1) throw MalformedPath("bad step kind: " + k);
    const auto kind = step_from_letter(k[0]);
    if (!kind) throw MalformedPath("bad step kind: " + k);
    const auto& e = js.at("e");
    if (e.size() != 3) throw MalformedPath("weight exponent triple expected");
    p.steps.push_back(
        Step{*kind, mono(e[0].get<int>(), e[1].get<int>(), e[2].get<int>())});
  }
  return p;
}

bool is_menu_scheme(SchemeId id) {
  return id != SchemeId::F && id != SchemeId::G;
}

SchemeId ambient_scheme(SchemeId id) {
  if (id == SchemeId::F) return SchemeId::H;
  if (id == SchemeId::G) return SchemeId::Mstar;
  return id;
}

std::string scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::M:
      return "M";
    case SchemeId::Mstar:
      return "Mstar";
    case SchemeId::H:
      return "H";
    case SchemeId::T:
      return "T";
    case SchemeId::Tstar:
      return "Tstar";
    case SchemeId::F:
      return "F";
    case SchemeId::G:
      return "G";
  }
  throw InternalInconsistency("unreachable scheme id");
}

std::optional<SchemeId> scheme_from_name(std::string_view name) {
  for (SchemeId id : {SchemeId::M, SchemeId::Mstar, SchemeId::H, SchemeId::T,
                      SchemeId::Tstar, SchemeId::F, SchemeId::G})
    if (name == scheme_name(id)) return id;
  return std::nullopt;
}

std::vector<int> start_heights(const BMPath& path) {
  std::vector<int> hs(path.steps.size());
  int h = 0;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    hs[i] = h;
    h += step_delta(path.steps[i].kind);
    if (h < 0) throw MalformedPath("path dips below the axis at step " +
                                   std::to_string(i + 1));
  }
  if (h != 0)
    throw MalformedPath("path ends at height " + std::to_string(h));
  return hs;
}

std::vector<Monomial> allowed_weights(SchemeId scheme, StepKind kind, int h) {
  if (h < 0) throw std::invalid_argument("negative height");
  std::vector<Monomial> out;
  switch (ambient_scheme(scheme)) {
    case SchemeId::M:
    case SchemeId::Mstar:
      switch (kind) {
        case StepKind::U:
          append_q_range(out, 2, 0, 0, 0, h);
          append_q_range(out, 1, 1, h, 0, h);
          break;
        case StepKind::L:
          // The starred scheme omits the bare y^2 straight step.
          append_q_range(out, 2, 0, 0,
                         ambient_scheme(scheme) == SchemeId::Mstar ? 1 : 0, h);
          append_q_range(out, 1, 1, h, 0, h);
          break;
        case StepKind::W:
        case StepKind::D:
          append_q_range(out, 0, 0, 0, 0, h - 1);
          append_q_range(out, 1, 1, h, 0, h - 1);
          break;
      }
      break;
    case SchemeId::H:
      switch (kind) {
        case StepKind::U:
          append_q_range(out, 2, 0, 0, 0, h + 1);
          append_q_range(out, 1, 1, h + 1, 0, h + 1);
          break;
        case StepKind::L:
          append_q_range(out, 0, 0, 0, 0, h);
          append_q_range(out, 1, 1, h + 1, 0, h);
          break;
        case StepKind::W:
          append_q_range(out, 2, 0, 0, 0, h);
          append_q_range(out, 1, 1, h, 0, h);
          break;
        case StepKind::D:
          append_q_range(out, 0, 0, 0, 0, h - 1);
          append_q_range(out, 1, 1, h, 0, h - 1);
          break;
      }
      break;
    case SchemeId::T:
      switch (kind) {
        case StepKind::U:
          append_q_range(out, 0, 0, 0, 0, h);
          append_q_range(out, 0, 2, 2 * h + 2, 0, h);
          break;
        case StepKind::L:
          append_q_range(out, 0, 1, h + 1, 0, h);
          break;
        case StepKind::W:
          append_q_range(out, 0, 1, h, 0, h);
          break;
        case StepKind::D:
          append_q_range(out, 0, 0, 0, 0, h);
          break;
      }
      break;
    case SchemeId::Tstar:
      switch (kind) {
        case StepKind::U:
          append_q_range(out, 0, 0, 0, 0, h);
          append_q_range(out, 0, 2, 2 * h + 1, 0, h);
          break;
        case StepKind::L:
          append_q_range(out, 0, 1, h, 0, h);
          break;
        case StepKind::W:
          append_q_range(out, 0, 1, h, 0, h - 1);
          break;
        case StepKind::D:
          append_q_range(out, 0, 0, 0, 0, h - 1);
          break;
      }
      break;
    default:
      throw InternalInconsistency("unreachable scheme in allowed_weights");
  }
  return out;
}

Poly menu_sum(SchemeId scheme, StepKind kind, int h) {
  Poly total;
  for (const Monomial& m : allowed_weights(scheme, kind, h))
    total.add_term(m, Int(1));
  return total;
}

void validate_path(const BMPath& path, SchemeId scheme) {
  const SchemeId ambient = ambient_scheme(scheme);
  const std::vector<int> hs = start_heights(path);
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    const Step& s = path.steps[i];
    const auto menu = allowed_weights(ambient, s.kind, hs[i]);
    if (std::find(menu.begin(), menu.end(), s.weight) == menu.end())
      throw SchemeMismatch("step " + std::to_string(i + 1) + " of " +
                           path.str() + " is not admissible in scheme " +
                           scheme_name(ambient));
  }
}

Monomial path_weight(const BMPath& path) {
  Monomial w = Monomial::unit();
  for (const Step& s : path.steps) w = w * s.weight;
  return w;
}

namespace {

struct PathWalker {
  SchemeId scheme;
  int n;
  const std::function<void(const BMPath&)>& visit;
  BMPath cur;
  std::uint64_t count = 0;

  void rec(int pos, int h) {
    if (pos == n) {
      if (h == 0) {
        ++count;
        visit(cur);
      }
      return;
    }
    const int remaining = n - pos;
    for (StepKind kind :
         {StepKind::U, StepKind::L, StepKind::W, StepKind::D}) {
      const int nh = h + step_delta(kind);
      if (nh < 0 || nh > remaining - 1) continue;
      for (const Monomial& w : allowed_weights(scheme, kind, h)) {
        cur.steps.push_back(Step{kind, w});
        rec(pos + 1, nh);
        cur.steps.pop_back();
      }
    }
  }
};

void check_path_bound(int n) {
  if (n < 0) throw std::invalid_argument("negative path length");
  const int cap = max_enumeration_n();
  if (n > cap)
    throw BoundExceeded("path length " + std::to_string(n) +
                        " exceeds the enumeration bound " +
                        std::to_string(cap) +
                        "; raise SNAKEPATH_MAX_N to override");
}

}  // namespace

std::uint64_t for_each_path(SchemeId scheme, int n,
                            const std::function<void(const BMPath&)>& visit) {
  check_path_bound(n);
  if (!is_menu_scheme(scheme))
    throw SchemeMismatch("enumeration needs a menu scheme, not " +
                         scheme_name(scheme));
  PathWalker walker{scheme, n, visit, {}, 0};
  walker.rec(0, 0);
  return walker.count;
}

std::vector<BMPath> enumerate_paths(SchemeId scheme, int n) {
  std::vector<BMPath> out;
  for_each_path(scheme, n, [&](const BMPath& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_paths(SchemeId scheme, int n) {
  return for_each_path(scheme, n, [](const BMPath&) {});
}

Poly weight_sum(SchemeId scheme, int n) {
  if (n < 0) throw std::invalid_argument("negative path length");
  if (!is_menu_scheme(scheme))
    throw SchemeMismatch("weight_sum needs a menu scheme, not " +
                         scheme_name(scheme));
  const int maxh = n / 2 + 1;
  std::vector<Poly> cur(maxh + 1), nxt(maxh + 1);
  cur[0] = Poly::one();
  for (int step = 0; step < n; ++step) {
    for (Poly& f : nxt) f = Poly::zero();
    for (int h = 0; h <= maxh; ++h) {
      if (cur[h].is_zero()) continue;
      nxt[h] += cur[h] * (menu_sum(scheme, StepKind::L, h) +
                          menu_sum(scheme, StepKind::W, h));
      if (h + 1 <= maxh)
        nxt[h + 1] += cur[h] * menu_sum(scheme, StepKind::U, h);
      if (h >= 1) nxt[h - 1] += cur[h] * menu_sum(scheme, StepKind::D, h);
    }
    cur.swap(nxt);
  }
  return cur[0];
}

std::vector<std::pair<int, int>> matching_pairs(const BMPath& path) {
  start_heights(path);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> stack;
  for (int i = 1; i <= path.size(); ++i) {
    const StepKind kind = path.steps[i - 1].kind;
    if (kind == StepKind::U) {
      stack.push_back(i);
    } else if (kind == StepKind::D) {
      if (stack.empty()) throw InternalInconsistency("unmatched down step");
      pairs.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw InternalInconsistency("unmatched up step");
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool is_fixed(const BMPath& path, SchemeId predicate) {
  if (predicate != SchemeId::F && predicate != SchemeId::G)
    throw std::invalid_argument("is_fixed expects predicate F or G");
  validate_path(path, ambient_scheme(predicate));
  for (const Step& s : path.steps) {
    if (s.kind != StepKind::L && s.kind != StepKind::W) continue;
    if (s.weight.exponent(Var::y) != 1) return false;
  }
  for (const auto& [ui, di] : matching_pairs(path)) {
    const int ey_u = path.steps[ui - 1].weight.exponent(Var::y);
    const int ey_d = path.steps[di - 1].weight.exponent(Var::y);
    const bool plain = ey_u == 2 && ey_d == 0;
    const bool wavy = ey_u == 1 && ey_d == 1;
    if (!plain && !wavy) return false;
  }
  return true;
}

}  // namespace snakepath
