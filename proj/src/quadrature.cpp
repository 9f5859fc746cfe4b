#include "akzeta/quadrature.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "akzeta/word.hpp"

namespace akzeta {

namespace {

struct GaussRule {
  std::vector<double> x;  // nodes on [0,1]
  std::vector<double> w;  // weights summing to 1
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussRule gauss_legendre_01(int n) {
  const double pi = std::acos(-1.0);
  GaussRule g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double p0 = 1.0;
      double p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double step = p1 / dp;
      t -= step;
      if (std::fabs(step) < 1e-15) break;
    }
    g.x[i] = 0.5 * (t + 1.0);
    g.w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return g;
}

double form_factor(char letter, double t) {
  return letter == '1' ? 1.0 / (1.0 - t) : 1.0 / t;
}

// V_level(t) = integral over 0 < s_1 < ... < s_level < t of the product of
// the form factors named by the first `level` letters of w, by composite
// Gauss-Legendre with `panels` panels per level.
double nested_integral(const Word& w, int level, double t, const GaussRule& g,
                       int panels) {
  if (level == 0) return 1.0;
  const char letter = w[level - 1];
  const double h = t / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = h * p;
    for (std::size_t i = 0; i < g.x.size(); ++i) {
      const double s = a + h * g.x[i];
      total += h * g.w[i] * form_factor(letter, s) *
               nested_integral(w, level - 1, s, g, panels);
    }
  }
  return total;
}

}  // namespace

RealBall quadrature_oracle(const TwoPoset& x, const Rational& z,
                           double target_error) {
  if (x.size() > 4) {
    throw poset_error("quadrature_oracle handles at most 4 elements");
  }
  if (!is_semi_admissible(x)) {
    throw poset_error("quadrature_oracle requires a semi-admissible poset");
  }
  const double zd = z.get_d();
  if (!(zd > 0.0 && zd <= 0.9)) {
    throw eval_error("quadrature_oracle requires 0 < z <= 0.9");
  }
  if (target_error <= 0) {
    throw eval_error("quadrature_oracle requires a positive target");
  }

  const WordSum words = w_map_by_extensions(x);
  static const GaussRule rule = gauss_legendre_01(24);

  auto total_at = [&](int panels) {
    double total = 0.0;
    for (const auto& [word, coeff] : words.terms()) {
      total += coeff.get_d() *
               nested_integral(word, static_cast<int>(word.size()), zd, rule,
                               panels);
    }
    return total;
  };

  double prev = total_at(1);
  double cur = prev;
  double gap = target_error;
  for (int panels = 2; panels <= 8; panels *= 2) {
    cur = total_at(panels);
    gap = std::fabs(cur - prev);
    if (gap <= target_error / 4) break;
    prev = cur;
  }

  RealBall out = RealBall::of_double(cur, 64);
  out.add_error(RealBall::of_double(2 * gap + 1e-13, 64));
  return out;
}

}  // namespace akzeta
