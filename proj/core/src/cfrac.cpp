#include "snakepath/cfrac.hpp"

#include <stdexcept>
#include <vector>

namespace snakepath {

Series expand_with_depth(const CFSpec& spec, int order, int max_height) {
  if (order < 0) throw std::invalid_argument("expand: negative order");
  if (max_height < 0) throw std::invalid_argument("expand: negative height cap");

  // Ladder weights are queried once per height.
  std::vector<Poly> mu(max_height + 1), lam(max_height + 1);
  for (int h = 0; h <= max_height; ++h) {
    mu[h] = spec.mu(h);
    if (h >= 1) lam[h] = spec.lambda(h);
  }

  Series out;
  out.coeffs.assign(order + 1, Poly{});
  out.coeffs[0] = Poly::one();

  // cur[h] = total weight of length-`step` walk prefixes ending at height h.
  std::vector<Poly> cur(max_height + 1), nxt(max_height + 1);
  cur[0] = Poly::one();
  for (int step = 1; step <= order; ++step) {
    for (auto& p : nxt) p = Poly{};
    for (int h = 0; h <= max_height; ++h) {
      if (cur[h].is_zero()) continue;
      if (!mu[h].is_zero()) nxt[h] += cur[h] * mu[h];
      if (h + 1 <= max_height) nxt[h + 1] += cur[h];
      if (h >= 1) nxt[h - 1] += cur[h] * lam[h];
    }
    cur.swap(nxt);
    out.coeffs[step] = cur[0];
  }
  return out;
}

Series expand(const CFSpec& spec, int order) {
  return expand_with_depth(spec, order, order / 2 + 1);
}

namespace {

Poly q_pow(int k) { return Poly::variable(Var::q, k); }

}  // namespace

CFSpec builtin_spec(SpecName name) {
  const Poly y = Poly::variable(Var::y);
  const Poly t = Poly::variable(Var::t);
  const Poly zero = Poly::zero();
  auto qi = [](int h) { return q_integer(h, QFlavor{}); };

  switch (name) {
    case SpecName::B:
      return CFSpec{
          [=](int h) {
            return y * y * qi(h + 1) + qi(h) +
                   y * t * q_pow(h) * (qi(h) + qi(h + 1));
          },
          [=](int h) {
            return qi(h) * qi(h) * (y * y + y * t * q_pow(h - 1)) *
                   (Poly::one() + y * t * q_pow(h));
          },
          "B"};
    case SpecName::Q:
      return CFSpec{
          [=](int h) { return t * q_pow(h) * (qi(h) + qi(h + 1)); },
          [=](int h) {
            return (Poly::one() + t * t * q_pow(2 * h - 1)) * qi(h) * qi(h);
          },
          "Q"};
    case SpecName::R:
      return CFSpec{
          [=](int h) {
            return t * q_pow(h) * (Poly::one() + q_pow(1)) * qi(h + 1);
          },
          [=](int h) {
            return (Poly::one() + t * t * q_pow(2 * h)) * qi(h) * qi(h + 1);
          },
          "R"};
    case SpecName::Etan:
      return CFSpec{[=](int) { return zero; },
                    [=](int h) { return qi(h) * qi(h + 1); }, "Etan"};
    case SpecName::Esec:
      return CFSpec{[=](int) { return zero; },
                    [=](int h) { return qi(h) * qi(h); }, "Esec"};
  }
  throw std::invalid_argument("builtin_spec: unknown spec");
}

const char* spec_name(SpecName name) {
  switch (name) {
    case SpecName::B: return "B";
    case SpecName::Q: return "Q";
    case SpecName::R: return "R";
    case SpecName::Etan: return "Etan";
    case SpecName::Esec: return "Esec";
  }
  return "?";
}

Poly q_euler_number(int n) {
  if (n < 0) throw std::invalid_argument("q_euler_number: negative index");
  const int k = 2 * (n / 2);
  const CFSpec spec = builtin_spec(n % 2 == 0 ? SpecName::Esec : SpecName::Etan);
  return expand(spec, k).coeffs[k];
}

}  // namespace snakepath
