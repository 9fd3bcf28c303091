#include "rmz/memory_engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rmz {

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 0; i < j; ++i) c = c * (n - i) / (i + 1);
  return std::round(c);
}

Ladder build_ladder(const SpectralField& uhat, int order, const BilinearKernel& kernel) {
  if (order < 0) throw std::invalid_argument("build_ladder: order must be >= 0");
  Ladder ladder;
  ladder.order = order;
  ladder.w.reserve(order + 1);
  ladder.w.push_back(project(uhat, Part::Resolved));
  for (int s = 0; s < order; ++s) {
    SpectralField next(kernel.truncation(), kernel.components());
    for (int j = 0; j <= s; ++j) {
      const SpectralField term =
          kernel.apply(ladder.w[j], ladder.w[s - j], Filter::Resolved, Filter::Resolved);
      next.data() += binomial(s, j) * term.data();
    }
    ladder.w.push_back(std::move(next));
  }
  return ladder;
}

namespace {

SpectralField memory_term_impl(const Ladder& ladder, int l, const BilinearKernel& kernel,
                               bool two_triangle) {
  if (l < 1 || l > ladder.order) {
    throw std::invalid_argument("memory_term: order " + std::to_string(l) +
                                " outside ladder range");
  }
  SpectralField sum(kernel.truncation(), kernel.components());
  for (int j = 0; j <= l - 1; ++j) {
    const double c = binomial(l - 1, j);
    const SpectralField fg =
        kernel.apply(ladder.w[j], ladder.w[l - j], Filter::Resolved, Filter::Unresolved);
    if (two_triangle) {
      const SpectralField gf =
          kernel.apply(ladder.w[l - j], ladder.w[j], Filter::Unresolved, Filter::Resolved);
      sum.data() += c * (fg.data() + gf.data());
    } else {
      sum.data() += (2.0 * c) * fg.data();
    }
  }
  return project(sum, Part::Resolved);
}

}  // namespace

SpectralField memory_term(const Ladder& ladder, int l, const BilinearKernel& kernel) {
  return memory_term_impl(ladder, l, kernel, !kernel.symmetric());
}

SpectralField memory_term_two_triangle(const Ladder& ladder, int l,
                                       const BilinearKernel& kernel) {
  return memory_term_impl(ladder, l, kernel, true);
}

SpectralField markovian_term(const Ladder& ladder) {
  if (ladder.order < 1) throw std::invalid_argument("markovian_term: ladder order must be >= 1");
  return project(ladder.w[1], Part::Resolved);
}

SpectralField reduced_rhs(double t, const SpectralField& uhat, const Eigen::VectorXd& coeffs,
                          int order, const BilinearKernel& kernel) {
  if (coeffs.size() != order + 1) {
    throw std::invalid_argument("reduced_rhs: expected " + std::to_string(order + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  }
  const Ladder ladder = build_ladder(uhat, order, kernel);
  SpectralField out(kernel.truncation(), kernel.components());
  out.data() = coeffs[0] * markovian_term(ladder).data();
  double t_pow = 1.0;   // t^l / l!
  double sign = 1.0;    // (-1)^{l+1}
  for (int l = 1; l <= order; ++l) {
    t_pow *= t / l;
    out.data() += (coeffs[l] * sign * t_pow) * memory_term(ladder, l, kernel).data();
    sign = -sign;
  }
  return out;
}

}  // namespace rmz
