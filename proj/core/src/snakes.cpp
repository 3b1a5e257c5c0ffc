#include "snakepath/snakes.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace snakepath {

const char* snake_flavor_name(SnakeFlavor flavor) {
  switch (flavor) {
    case SnakeFlavor::S: return "S";
    case SnakeFlavor::S0: return "S0";
    case SnakeFlavor::S00: return "S00";
    case SnakeFlavor::SD: return "SD";
  }
  return "?";
}

std::optional<SnakeFlavor> snake_flavor_from_name(const std::string& name) {
  for (SnakeFlavor f : {SnakeFlavor::S, SnakeFlavor::S0, SnakeFlavor::S00,
                        SnakeFlavor::SD})
    if (name == snake_flavor_name(f)) return f;
  return std::nullopt;
}

SnakeBoundary snake_boundary(SnakeFlavor flavor, int n) {
  const int edge = (n % 2 == 0) ? n + 1 : -(n + 1);
  switch (flavor) {
    case SnakeFlavor::S: return {-(n + 1), edge};
    case SnakeFlavor::S0: return {0, edge};
    case SnakeFlavor::S00: return {0, 0};
    case SnakeFlavor::SD: return {n + 1, std::nullopt};
  }
  throw std::invalid_argument("snake_boundary: unknown flavor");
}

bool is_snake(const SignedPerm& s, SnakeFlavor flavor) {
  const int n = s.size();
  for (int i = 1; i + 1 <= n; ++i) {
    if (i % 2 == 1 ? s(i) <= s(i + 1) : s(i) >= s(i + 1)) return false;
  }
  switch (flavor) {
    case SnakeFlavor::S:
      return true;
    case SnakeFlavor::S0:
      return n == 0 || s(1) > 0;
    case SnakeFlavor::S00:
      if (n == 0) return true;
      if (s(1) <= 0) return false;
      return (n % 2 == 0 ? s(n) : -s(n)) < 0;
    case SnakeFlavor::SD:
      if (neg_entries(s) % 2 != 0) return false;
      return n < 2 || s(1) + s(2) < 0;
  }
  return false;
}

Snake Snake::checked(SignedPerm body, SnakeFlavor flavor) {
  if (!is_snake(body, flavor))
    throw NotASnake(std::string("not a snake of flavor ") +
                    snake_flavor_name(flavor) + ": " + body.str());
  return Snake{std::move(body), flavor};
}

namespace {

PermClass base_class(SnakeFlavor flavor) {
  return flavor == SnakeFlavor::SD ? PermClass::Dn : PermClass::Bn;
}

}  // namespace

std::uint64_t for_each_snake(int n, SnakeFlavor flavor,
                             const std::function<void(const Snake&)>& visit) {
  std::uint64_t count = 0;
  for_each_in_class(n, base_class(flavor), [&](const SignedPerm& s) {
    if (!is_snake(s, flavor)) return;
    ++count;
    visit(Snake{s, flavor});
  });
  return count;
}

std::vector<Snake> enumerate_snakes(int n, SnakeFlavor flavor) {
  std::vector<Snake> out;
  for_each_snake(n, flavor, [&](const Snake& s) { out.push_back(s); });
  return out;
}

std::uint64_t count_snakes(int n, SnakeFlavor flavor) {
  return for_each_snake(n, flavor, [](const Snake&) {});
}

namespace {

bool sign_change(int a, int b) { return a != 0 && b != 0 && (a < 0) != (b < 0); }

// Signed word extended by the flavor boundaries; index i in 0..n+1.  The SD
// flavor has no right boundary, so the slot holds 0 (never a sign change).
std::vector<int> extended_signed(const Snake& s) {
  const int n = s.size();
  const SnakeBoundary b = snake_boundary(s.flavor, n);
  std::vector<int> ext(n + 2, 0);
  ext[0] = b.left;
  for (int i = 1; i <= n; ++i) ext[i] = s.body(i);
  if (b.right) ext[n + 1] = *b.right;
  return ext;
}

void require_vector_flavor(SnakeFlavor flavor, const char* what) {
  if (flavor != SnakeFlavor::S0 && flavor != SnakeFlavor::S00)
    throw FlavorUnsupported(std::string(what) + ": flavor " +
                            snake_flavor_name(flavor) + " not supported");
}

}  // namespace

int cs(const Snake& s) {
  const int n = s.size();
  if (s.flavor == SnakeFlavor::SD) {
    int c = s.body.size() >= 1 && s.body(1) < 0 ? 1 : 0;
    for (int i = 1; i + 1 <= n; ++i) c += sign_change(s.body(i), s.body(i + 1));
    return c;
  }
  const std::vector<int> ext = extended_signed(s);
  int c = 0;
  for (int i = 0; i <= n; ++i) c += sign_change(ext[i], ext[i + 1]);
  return c;
}

ElementShape element_shape(const Snake& s, int j) {
  require_vector_flavor(s.flavor, "element_shape");
  const int n = s.size();
  if (j < 1 || j > n) throw std::invalid_argument("element_shape: bad value");
  const std::vector<int> ext = extended_signed(s);
  int pos = 0;
  for (int i = 1; i <= n; ++i)
    if (std::abs(ext[i]) == j) pos = i;
  const int prev = std::abs(ext[pos - 1]);
  const int next = std::abs(ext[pos + 1]);
  if (prev > j && j < next) return ElementShape::valley;
  if (prev < j && j < next) return ElementShape::double_ascent;
  if (prev > j && j > next) return ElementShape::double_descent;
  return ElementShape::peak;
}

bool element_sign_changing(const Snake& s, int j) {
  if (element_shape(s, j) != ElementShape::valley) return false;
  const int n = s.size();
  const std::vector<int> ext = extended_signed(s);
  int pos = 0;
  for (int i = 1; i <= n; ++i)
    if (std::abs(ext[i]) == j) pos = i;
  const bool left = sign_change(ext[pos - 1], ext[pos]);
  const bool right = sign_change(ext[pos], ext[pos + 1]);
  if (left != right)
    throw InternalInconsistency("valley with mixed adjacent sign products");
  return left;
}

std::vector<int> cs_vector(const Snake& s) {
  require_vector_flavor(s.flavor, "cs_vector");
  const int n = s.size();
  std::vector<int> out(n, 0);
  for (int j = 1; j <= n; ++j) {
    switch (element_shape(s, j)) {
      case ElementShape::valley:
        out[j - 1] = element_sign_changing(s, j) ? 2 : 0;
        break;
      case ElementShape::double_ascent:
      case ElementShape::double_descent:
        out[j - 1] = 1;
        break;
      case ElementShape::peak:
        out[j - 1] = 0;
        break;
    }
  }
  return out;
}

Snake recover_signs(const std::vector<int>& abs_word,
                    const std::vector<int>& csv, SnakeFlavor flavor) {
  require_vector_flavor(flavor, "recover_signs");
  const int n = static_cast<int>(abs_word.size());
  if (static_cast<int>(csv.size()) != n)
    throw InconsistentVector("recover_signs: vector length mismatch");
  for (int v : csv)
    if (v < 0 || v > 2) throw InconsistentVector("recover_signs: entry not in {0,1,2}");
  {
    std::vector<char> seen(n + 1, 0);
    for (int v : abs_word) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("recover_signs: word is not a permutation");
      seen[v] = 1;
    }
  }

  // Absolute word extended by the flavor's boundary absolute values.
  std::vector<int> ext(n + 2, 0);
  for (int i = 1; i <= n; ++i) ext[i] = abs_word[i - 1];
  ext[n + 1] = flavor == SnakeFlavor::S0 ? n + 1 : 0;

  std::vector<int> window(n);
  std::vector<int> sign(n + 1, 0);
  if (n >= 1) {
    sign[1] = 1;
    window[0] = abs_word[0];
  }
  for (int i = 2; i <= n; ++i) {
    bool opposite;
    if (ext[i - 1] > ext[i]) {
      if (ext[i] > ext[i + 1]) {
        opposite = true;  // double descent at i
      } else {
        const int v = csv[ext[i] - 1];  // valley at i
        if (v == 1) throw InconsistentVector("recover_signs: valley marked 1");
        opposite = v == 2;
      }
    } else {
      if (ext[i - 2] < ext[i - 1]) {
        opposite = true;  // double ascent at i-1
      } else {
        const int v = csv[ext[i - 1] - 1];  // valley at i-1
        if (v == 1) throw InconsistentVector("recover_signs: valley marked 1");
        opposite = v == 2;
      }
    }
    sign[i] = opposite ? -sign[i - 1] : sign[i - 1];
    window[i - 1] = sign[i] * abs_word[i - 1];
  }

  SignedPerm body;
  body.window = std::move(window);
  if (!is_snake(body, flavor))
    throw InconsistentVector("recover_signs: recovered word is not a snake");
  const Snake out{body, flavor};
  if (cs_vector(out) != csv)
    throw InconsistentVector("recover_signs: vector does not match recovery");
  return out;
}

BlockCounts blocks(const std::vector<int>& word, int k, WordBoundary boundary) {
  const int n = static_cast<int>(word.size());
  if (k < 0 || k > n) throw std::invalid_argument("blocks: k out of range");
  std::vector<int> ext(n + 2, 0);
  for (int i = 1; i <= n; ++i) ext[i] = word[i - 1];
  ext[n + 1] = boundary == WordBoundary::zero_left ? n + 1 : 0;

  // Position of the element k; for k = 0 the left boundary represents it.
  int kpos = 0;
  for (int i = 1; i <= n; ++i)
    if (ext[i] == k) kpos = i;

  int alpha = 0;
  int beta = 0;
  bool in_run = false;
  int run_start = -1;
  for (int i = 0; i <= n + 1; ++i) {
    if (ext[i] <= k) {
      if (!in_run) {
        in_run = true;
        run_start = i;
        ++alpha;
        if (run_start > kpos) ++beta;
      }
    } else {
      in_run = false;
    }
  }
  return {alpha, beta};
}

namespace {

std::vector<int> extend_word(const std::vector<int>& word,
                             WordBoundary boundary) {
  const int n = static_cast<int>(word.size());
  std::vector<int> ext(n + 2, 0);
  for (int i = 1; i <= n; ++i) ext[i] = word[i - 1];
  ext[n + 1] = boundary == WordBoundary::zero_left ? n + 1 : 0;
  return ext;
}

}  // namespace

PatternCounts pattern_stats(const std::vector<int>& word, int i,
                            WordBoundary boundary) {
  const int n = static_cast<int>(word.size());
  if (i < 1 || i > n) throw std::invalid_argument("pattern_stats: bad index");
  const std::vector<int> ext = extend_word(word, boundary);
  PatternCounts out{0, 0};
  for (int j = 0; j < i - 1; ++j)
    if (ext[j] < ext[i] && ext[i] < ext[j + 1]) ++out.p13_2;
  for (int j = i + 1; j <= n; ++j)
    if (ext[j] > ext[i] && ext[i] > ext[j + 1]) ++out.p2_31;
  return out;
}

PatternCounts pattern_stats_of_value(const std::vector<int>& word, int k,
                                     WordBoundary boundary) {
  const int n = static_cast<int>(word.size());
  for (int i = 1; i <= n; ++i)
    if (word[i - 1] == k) return pattern_stats(word, i, boundary);
  throw std::invalid_argument("pattern_stats_of_value: value not present");
}

int pat2_31_total(const std::vector<int>& word, WordBoundary boundary) {
  int total = 0;
  for (int i = 1; i <= static_cast<int>(word.size()); ++i)
    total += pattern_stats(word, i, boundary).p2_31;
  return total;
}

int pat_stat(const Snake& s, PatKind kind) {
  if ((kind == PatKind::patQ) != (s.flavor == SnakeFlavor::S0) ||
      (kind == PatKind::patR) != (s.flavor == SnakeFlavor::S00))
    throw FlavorMismatch(std::string("pat_stat: flavor ") +
                         snake_flavor_name(s.flavor) +
                         " does not carry this statistic");
  const int n = s.size();
  const WordBoundary wb = s.flavor == SnakeFlavor::S0 ? WordBoundary::zero_left
                                                      : WordBoundary::zero_both;
  std::vector<int> word(n);
  for (int i = 1; i <= n; ++i) word[i - 1] = std::abs(s.body(i));

  int acc = 0;
  for (int j = 1; j <= n; ++j) {
    const ElementShape shape = element_shape(s, j);
    const PatternCounts pc = pattern_stats_of_value(word, j, wb);
    const int pats = pc.p13_2 + pc.p2_31;
    switch (shape) {
      case ElementShape::valley:
        if (element_sign_changing(s, j))
          acc += 2 * pats - (kind == PatKind::patQ ? 1 : 2);
        break;
      case ElementShape::double_ascent:
      case ElementShape::double_descent:
        acc += pats;
        break;
      case ElementShape::peak:
        if (kind == PatKind::patR) acc += 1;
        break;
    }
  }
  return acc;
}

Poly snake_enumerator(int n, SnakeFlavor flavor,
                      const std::function<Poly(const Snake&)>& weight) {
  Poly total;
  for_each_snake(n, flavor, [&](const Snake& s) { total += weight(s); });
  return total;
}

Poly snake_enumerator_parallel(
    int n, SnakeFlavor flavor, const std::function<Poly(const Snake&)>& weight) {
  if (n == 0) return snake_enumerator(n, flavor, weight);
  const PermClass cls = base_class(flavor);
  std::vector<std::future<Poly>> parts;
  for (int k = 1; k <= n; ++k)
    for (const int v : {-k, k})
      parts.push_back(std::async(std::launch::async, [=, &weight] {
        Poly local;
        for_each_in_class_with_first(n, cls, v, [&](const SignedPerm& s) {
          if (is_snake(s, flavor)) local += weight(Snake{s, flavor});
        });
        return local;
      }));
  Poly total;
  for (auto& f : parts) total += f.get();
  return total;
}

}  // namespace snakepath
