#include "snakepath/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace snakepath {

namespace {

Monomial mono(int ey, int et, int eq) {
  Monomial m;
  m.e = {ey, et, eq, 0};
  return m;
}

// Half-step decomposition of a full step: U -> UU, L -> UD, W -> DU, D -> DD.
// true stands for a rising half-step.
std::pair<bool, bool> halves(StepKind kind) {
  switch (kind) {
    case StepKind::U:
      return {true, true};
    case StepKind::L:
      return {true, false};
    case StepKind::W:
      return {false, true};
    case StepKind::D:
      return {false, false};
  }
  throw InternalInconsistency("unreachable step kind");
}

StepKind combine(bool first_up, bool second_up) {
  if (first_up) return second_up ? StepKind::U : StepKind::L;
  return second_up ? StepKind::W : StepKind::D;
}

}  // namespace

PhiResult phi(const BMPath& mu) {
  validate_path(mu, SchemeId::M);
  const int n = mu.size();
  if (n < 1) throw std::invalid_argument("phi needs a path of positive length");
  BMPath out;
  for (int j = 1; j <= n - 1; ++j) {
    const bool a = halves(mu.steps[j - 1].kind).second;
    const bool b = halves(mu.steps[j].kind).first;
    out.steps.push_back(Step{combine(a, b), mu.steps[j].weight});
  }
  validate_path(out, SchemeId::H);
  return PhiResult{mu.steps[0].weight, out};
}

BMPath phi_inv(const PhiResult& r) {
  validate_path(r.path, SchemeId::H);
  if (r.first_weight != mono(2, 0, 0) && r.first_weight != mono(1, 1, 0))
    throw SchemeMismatch("the dropped initial weight must be y^2 or yt");
  const int n = r.path.size() + 1;
  // Half-step word z_1 .. z_2n: the ends are forced, the interior pairs come
  // from the image steps.
  std::vector<bool> z(2 * n);
  z.front() = true;
  z.back() = false;
  for (int j = 1; j <= n - 1; ++j) {
    const auto [a, b] = halves(r.path.steps[j - 1].kind);
    z[2 * j - 1] = a;
    z[2 * j] = b;
  }
  BMPath mu;
  for (int i = 1; i <= n; ++i) {
    const Monomial w =
        i == 1 ? r.first_weight : r.path.steps[i - 2].weight;
    mu.steps.push_back(Step{combine(z[2 * i - 2], z[2 * i - 1]), w});
  }
  validate_path(mu, SchemeId::M);
  return mu;
}

BMPath psi1(const BMPath& mu) {
  validate_path(mu, SchemeId::H);
  const std::vector<int> hs = start_heights(mu);
  // (A1): the first straight level step carrying q^a, or wavy level step
  // carrying y^2 q^a, changes color and gains/loses the factor y^2.
  for (int i = 0; i < mu.size(); ++i) {
    const Step& s = mu.steps[i];
    if (s.kind == StepKind::L && s.weight.exponent(Var::y) == 0) {
      BMPath out = mu;
      out.steps[i] =
          Step{StepKind::W, mono(2, 0, s.weight.exponent(Var::q))};
      return out;
    }
    if (s.kind == StepKind::W && s.weight.exponent(Var::y) == 2) {
      BMPath out = mu;
      out.steps[i] =
          Step{StepKind::L, mono(0, 0, s.weight.exponent(Var::q))};
      return out;
    }
  }
  // (A2): the first matched pair with mixed weights, ordered by the index of
  // the up step, trades (y^2 q^a, yt q^{h+1+b}) for (yt q^{h+1+a}, q^b).
  for (const auto& [ui, di] : matching_pairs(mu)) {
    const Monomial& wu = mu.steps[ui - 1].weight;
    const Monomial& wd = mu.steps[di - 1].weight;
    const int h = hs[ui - 1];
    if (wu.exponent(Var::y) == 2 && wd.exponent(Var::y) == 1) {
      const int a = wu.exponent(Var::q);
      const int b = wd.exponent(Var::q) - (h + 1);
      BMPath out = mu;
      out.steps[ui - 1].weight = mono(1, 1, h + 1 + a);
      out.steps[di - 1].weight = mono(0, 0, b);
      return out;
    }
    if (wu.exponent(Var::y) == 1 && wd.exponent(Var::y) == 0) {
      const int a = wu.exponent(Var::q) - (h + 1);
      const int b = wd.exponent(Var::q);
      BMPath out = mu;
      out.steps[ui - 1].weight = mono(2, 0, a);
      out.steps[di - 1].weight = mono(1, 1, h + 1 + b);
      return out;
    }
  }
  return mu;
}

BMPath psi2(const BMPath& mu) {
  validate_path(mu, SchemeId::Mstar);
  const std::vector<int> hs = start_heights(mu);
  // (B1): straight level steps carrying y^2 q^a trade with wavy level steps
  // carrying q^{a-1}; the factor is y^2 q.
  for (int i = 0; i < mu.size(); ++i) {
    const Step& s = mu.steps[i];
    if (s.kind == StepKind::L && s.weight.exponent(Var::y) == 2) {
      BMPath out = mu;
      out.steps[i] =
          Step{StepKind::W, mono(0, 0, s.weight.exponent(Var::q) - 1)};
      return out;
    }
    if (s.kind == StepKind::W && s.weight.exponent(Var::y) == 0) {
      BMPath out = mu;
      out.steps[i] =
          Step{StepKind::L, mono(2, 0, s.weight.exponent(Var::q) + 1)};
      return out;
    }
  }
  // (B2): mixed pairs trade (y^2 q^a, yt q^{h+1+b}) for (yt q^{h+a}, q^b).
  for (const auto& [ui, di] : matching_pairs(mu)) {
    const Monomial& wu = mu.steps[ui - 1].weight;
    const Monomial& wd = mu.steps[di - 1].weight;
    const int h = hs[ui - 1];
    if (wu.exponent(Var::y) == 2 && wd.exponent(Var::y) == 1) {
      const int a = wu.exponent(Var::q);
      const int b = wd.exponent(Var::q) - (h + 1);
      BMPath out = mu;
      out.steps[ui - 1].weight = mono(1, 1, h + a);
      out.steps[di - 1].weight = mono(0, 0, b);
      return out;
    }
    if (wu.exponent(Var::y) == 1 && wd.exponent(Var::y) == 0) {
      const int a = wu.exponent(Var::q) - h;
      const int b = wd.exponent(Var::q);
      BMPath out = mu;
      out.steps[ui - 1].weight = mono(2, 0, a);
      out.steps[di - 1].weight = mono(1, 1, h + 1 + b);
      return out;
    }
  }
  return mu;
}

namespace {

// Shared body of the two snake-to-path constructions. The starred variant
// reads a snake with positive first entry and walks every element; the other
// reads a snake of size n+1 and stops before the maximal element.
BMPath lambda_common(const Snake& s, bool starred) {
  const std::vector<int> csv = cs_vector(s);
  std::vector<int> word(s.size());
  for (int i = 1; i <= s.size(); ++i) word[i - 1] = std::abs(s.body(i));
  const WordBoundary wb =
      starred ? WordBoundary::zero_left : WordBoundary::zero_both;
  const int steps_n = starred ? s.size() : s.size() - 1;

  BMPath out;
  for (int j = 1; j <= steps_n; ++j) {
    const BlockCounts bc = blocks(word, j, wb);
    Step step;
    switch (element_shape(s, j)) {
      case ElementShape::valley:
        if (csv[j - 1] == 0) {
          step = Step{StepKind::U, mono(0, 0, starred ? bc.beta : bc.beta - 1)};
        } else {
          step = Step{StepKind::U,
                      mono(0, 2, bc.beta + 2 * bc.alpha - (starred ? 3 : 5))};
        }
        break;
      case ElementShape::double_ascent:
        step = Step{StepKind::L,
                    mono(0, 1, bc.beta + bc.alpha - (starred ? 1 : 2))};
        break;
      case ElementShape::double_descent:
        step = Step{StepKind::W,
                    mono(0, 1, bc.beta + bc.alpha - (starred ? 1 : 2))};
        break;
      case ElementShape::peak:
        step = Step{StepKind::D, mono(0, 0, bc.beta)};
        break;
    }
    out.steps.push_back(step);
  }
  try {
    validate_path(out, starred ? SchemeId::Tstar : SchemeId::T);
  } catch (const std::runtime_error& e) {
    throw SchemeMismatch("snake " + s.body.str() +
                         " produced an inadmissible path: " + e.what());
  }
  return out;
}

// Block-word reconstruction shared by the two inverses. Blocks are kept in
// positional order; indexing in the insertion rules counts from the right.
class BlockWord {
 public:
  explicit BlockWord(bool starred) {
    blocks_.push_back({0});
    if (!starred) blocks_.push_back({0});
  }

  void insert_new(int ell, int j) {
    const int nb = size();
    require(ell >= 0 && ell <= nb - 1, j);
    blocks_.insert(blocks_.begin() + (nb - ell), {j});
  }
  void append_right(int ell, int j) {
    target(ell, j).push_back(j);
  }
  void append_left(int ell, int j) {
    auto& blk = target(ell, j);
    blk.insert(blk.begin(), j);
  }
  void merge(int ell, int j) {
    const int nb = size();
    require(ell >= 0 && ell <= nb - 2, j);
    auto& left = blocks_[nb - ell - 2];
    auto& right = blocks_[nb - ell - 1];
    left.push_back(j);
    left.insert(left.end(), right.begin(), right.end());
    blocks_.erase(blocks_.begin() + (nb - ell - 1));
  }

  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

 private:
  std::vector<int>& target(int ell, int j) {
    const int nb = size();
    require(ell >= 0 && ell <= nb - 1, j);
    return blocks_[nb - ell - 1];
  }
  static void require(bool ok, int j) {
    if (!ok)
      throw MalformedPath("block insertion out of range at element " +
                          std::to_string(j));
  }

  std::vector<std::vector<int>> blocks_;
};

Snake lambda_inv_common(const BMPath& path, bool starred) {
  validate_path(path, starred ? SchemeId::Tstar : SchemeId::T);
  const std::vector<int> hs = start_heights(path);
  const int n = path.size();

  BlockWord word(starred);
  std::vector<int> csv;
  for (int j = 1; j <= n; ++j) {
    const Step& st = path.steps[j - 1];
    const int d = st.weight.exponent(Var::q);
    const int h = hs[j - 1];
    switch (st.kind) {
      case StepKind::U:
        if (st.weight.exponent(Var::t) == 0) {
          csv.push_back(0);
          word.insert_new(starred ? d : d + 1, j);
        } else {
          csv.push_back(2);
          word.insert_new(d - 2 * h - 1, j);
        }
        break;
      case StepKind::L:
        csv.push_back(1);
        word.append_right(d - h, j);
        break;
      case StepKind::W:
        csv.push_back(1);
        word.append_left(d - h, j);
        break;
      case StepKind::D:
        csv.push_back(0);
        word.merge(d, j);
        break;
    }
  }

  std::vector<int> abs_word;
  if (starred) {
    if (word.size() != 1 || word.blocks()[0].front() != 0)
      throw MalformedPath("reconstruction did not end in a single block");
    abs_word.assign(word.blocks()[0].begin() + 1, word.blocks()[0].end());
  } else {
    if (word.size() != 2 || word.blocks()[0].front() != 0 ||
        word.blocks()[1].back() != 0)
      throw MalformedPath("reconstruction did not end in two blocks");
    abs_word.assign(word.blocks()[0].begin() + 1, word.blocks()[0].end());
    abs_word.push_back(n + 1);
    abs_word.insert(abs_word.end(), word.blocks()[1].begin(),
                    word.blocks()[1].end() - 1);
    csv.push_back(0);  // the maximal element is always a plain peak
  }
  return recover_signs(abs_word, csv,
                       starred ? SnakeFlavor::S0 : SnakeFlavor::S00);
}

}  // namespace

BMPath lambda1(const Snake& s) {
  if (s.flavor != SnakeFlavor::S0)
    throw FlavorMismatch("lambda1 expects a snake with positive first entry");
  return lambda_common(s, true);
}

Snake lambda1_inv(const BMPath& path) { return lambda_inv_common(path, true); }

BMPath lambda2(const Snake& s) {
  if (s.flavor != SnakeFlavor::S00)
    throw FlavorMismatch("lambda2 expects a snake with both sign conditions");
  if (s.size() < 1)
    throw std::invalid_argument("lambda2 expects a snake of positive size");
  return lambda_common(s, false);
}

Snake lambda2_inv(const BMPath& path) { return lambda_inv_common(path, false); }

}  // namespace snakepath
