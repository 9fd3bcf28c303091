#pragma once

#include <Eigen/Core>
#include <vector>

#include "rmz/memory_engine.hpp"

namespace rmz {

/// Resolved-mode moments E_i = sum_{k in F} |u_k|^{2i}, i = 1..count, with
/// |u_k|^2 summed over velocity components.
std::vector<double> resolved_moments(const SpectralField& uhat, int count);

/// d E_i / dt given du/dt = rhs on F:
///   rate_i = sum_{k in F} 2 i |u_k|^{2(i-1)} Re <u_k, rhs_k>.
std::vector<double> quantity_rates(const SpectralField& uhat, const SpectralField& rhs,
                                   int count);

/// The moment-matching linear system B a = e at one instant. Column 1 of B
/// holds the Markovian contributions to the moment rates, column j+1 the
/// order-j memory term's (with its (-1)^{j+1} t^j/j! prefactor); e holds the
/// full-system rates. B_{1,1} vanishes because the Markovian term conserves
/// resolved energy.
struct MatchingSystem {
  double time = 0.0;
  Eigen::MatrixXd B;                 // (order+1) x (order+1)
  Eigen::VectorXd e;                 // order+1
  Eigen::VectorXd singular_values;   // descending
};

MatchingSystem assemble_system(double t, const SpectralField& full_state, int order,
                               const BilinearKernel& kernel);

enum class SolveVariant { FullSolve, PinnedMarkovian };

struct CoefficientVector {
  Eigen::VectorXd a;   // a_1 .. a_{order+1}
  double switch_time = 0.0;
  SolveVariant variant = SolveVariant::FullSolve;
};

struct SolveDiagnostics {
  double cond_full = 0.0;
  double cond_reduced = 0.0;  // pinned variant only; 0 otherwise
};

/// Full solve: SVD pseudo-inverse of B with singular values below
/// cutoff * sigma_1 discarded. Pinned variant: a_1 := 1, the Markovian
/// column moves to the right-hand side, and the highest-moment row is
/// dropped, leaving an order x order system for a_2..a_{order+1}.
/// Throws std::runtime_error("system entirely singular") when every
/// singular value of the solved matrix falls below the cutoff.
CoefficientVector solve_coefficients(const MatchingSystem& sys, SolveVariant variant,
                                     double svd_cutoff = 1e-13,
                                     SolveDiagnostics* diag = nullptr);

/// Latches true at the first assembly whose smallest singular value reaches
/// TOL from below; stays quiet afterwards.
class SwitchMonitor {
 public:
  explicit SwitchMonitor(double tol) : tol_(tol) {}
  bool check(const MatchingSystem& sys) {
    if (fired_) return false;
    if (sys.singular_values.size() > 0 && sys.singular_values.minCoeff() >= tol_) {
      fired_ = true;
      return true;
    }
    return false;
  }
  bool fired() const { return fired_; }

 private:
  double tol_;
  bool fired_ = false;
};

}  // namespace rmz
