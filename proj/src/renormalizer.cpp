#include "rmz/renormalizer.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace rmz {

std::vector<double> resolved_moments(const SpectralField& uhat, int count) {
  const auto& t = uhat.trunc();
  std::vector<double> moments(count, 0.0);
  for (long idx = 0; idx < t.volume(); ++idx) {
    if (!t.resolved(idx)) continue;
    double a2 = 0.0;
    for (int c = 0; c < uhat.components(); ++c) a2 += std::norm(uhat.at(c, idx));
    double p = a2;
    for (int i = 0; i < count; ++i) {
      moments[i] += p;
      p *= a2;
    }
  }
  return moments;
}

std::vector<double> quantity_rates(const SpectralField& uhat, const SpectralField& rhs,
                                   int count) {
  const auto& t = uhat.trunc();
  std::vector<double> rates(count, 0.0);
  for (long idx = 0; idx < t.volume(); ++idx) {
    if (!t.resolved(idx)) continue;
    double a2 = 0.0;
    double re = 0.0;
    for (int c = 0; c < uhat.components(); ++c) {
      a2 += std::norm(uhat.at(c, idx));
      re += std::real(std::conj(uhat.at(c, idx)) * rhs.at(c, idx));
    }
    double w = 2.0 * re;  // d|u_k|^2/dt
    for (int i = 1; i <= count; ++i) {
      rates[i - 1] += i * w;
      w *= a2;
    }
  }
  return rates;
}

MatchingSystem assemble_system(double t, const SpectralField& full_state, int order,
                               const BilinearKernel& kernel) {
  const int m = order + 1;
  MatchingSystem sys;
  sys.time = t;
  sys.B.setZero(m, m);
  sys.e.setZero(m);

  const SpectralField uhat = project(full_state, Part::Resolved);
  const Ladder ladder = build_ladder(uhat, order, kernel);

  const auto put_column = [&](int col, const SpectralField& term, double scale) {
    const auto rates = quantity_rates(uhat, term, m);
    for (int i = 0; i < m; ++i) sys.B(i, col) = scale * rates[i];
  };

  put_column(0, markovian_term(ladder), 1.0);
  double t_pow = 1.0;
  double sign = 1.0;
  for (int l = 1; l <= order; ++l) {
    t_pow *= t / l;
    put_column(l, memory_term(ladder, l, kernel), sign * t_pow);
    sign = -sign;
  }

  const SpectralField full_rates = project(kernel.full_rhs(full_state), Part::Resolved);
  const auto e = quantity_rates(uhat, full_rates, m);
  for (int i = 0; i < m; ++i) sys.e(i) = e[i];

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.B);
  sys.singular_values = svd.singularValues();
  return sys;
}

namespace {

/// Rank-truncated least-squares solve via SVD; returns the singular values.
Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double cutoff,
                           Eigen::VectorXd* sigma_out) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma_out) *sigma_out = sigma;
  const double threshold = cutoff * sigma(0);
  if (!(sigma(0) > 0.0) || sigma.maxCoeff() < threshold) {
    throw std::runtime_error("system entirely singular");
  }
  Eigen::VectorXd inv = sigma;
  for (int i = 0; i < inv.size(); ++i) inv(i) = sigma(i) >= threshold ? 1.0 / sigma(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose() * b;
}

double cond_of(const Eigen::VectorXd& sigma) {
  const double smin = sigma.minCoeff();
  return smin > 0.0 ? sigma.maxCoeff() / smin : std::numeric_limits<double>::infinity();
}

}  // namespace

CoefficientVector solve_coefficients(const MatchingSystem& sys, SolveVariant variant,
                                     double svd_cutoff, SolveDiagnostics* diag) {
  const int m = static_cast<int>(sys.B.rows());
  CoefficientVector out;
  out.switch_time = sys.time;
  out.variant = variant;

  if (diag) {
    diag->cond_full = cond_of(sys.singular_values);
    diag->cond_reduced = 0.0;
  }

  if (variant == SolveVariant::FullSolve) {
    out.a = pinv_solve(sys.B, sys.e, svd_cutoff, nullptr);
    return out;
  }

  // Pinned Markovian: a_1 = 1, drop the highest-moment row, solve the
  // memory columns against e - B(:,1).
  const int n = m - 1;
  const Eigen::MatrixXd reduced = sys.B.block(0, 1, n, n);
  const Eigen::VectorXd rhs = sys.e.head(n) - sys.B.col(0).head(n);
  Eigen::VectorXd sigma_red;
  const Eigen::VectorXd am = pinv_solve(reduced, rhs, svd_cutoff, &sigma_red);
  if (diag) diag->cond_reduced = cond_of(sigma_red);
  out.a.resize(m);
  out.a(0) = 1.0;
  out.a.tail(n) = am;
  return out;
}

}  // namespace rmz
