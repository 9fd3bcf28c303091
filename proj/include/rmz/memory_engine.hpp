#pragma once

#include <Eigen/Core>
#include <vector>

#include "rmz/kernel.hpp"

namespace rmz {

/// The recursion stack w^s = (PL)^s u0, s = 0..order, over the full grid.
/// w^0 is the resolved state embedded with zeros on G; each step applies
/// the projected Liouvillian via the binomially weighted product rule
///   w^{s+1} = sum_{j=0}^{s} C(s,j) b(P w^j, P w^{s-j}).
/// Storage is exactly order+1 fields, linear in the expansion order.
struct Ladder {
  int order = 0;
  std::vector<SpectralField> w;
};

/// Binomial coefficient row entry C(n, j) as a double (n stays small).
double binomial(int n, int j);

Ladder build_ladder(const SpectralField& uhat, int order, const BilinearKernel& kernel);

/// Order-l memory term (PL)^l QL u0 restricted to F.
///
/// Symmetric kernels (Burgers) collapse the two argument orderings into a
/// factor 2:   m^l = 2 sum_j C(l-1,j) b(P w^j, Q w^{l-j}) |_F.
/// Non-symmetric kernels (Euler) keep both orderings -- the two Pascal
/// triangles:  m^l = sum_j C(l-1,j) [b(P w^j, Q w^{l-j}) + b(Q w^{l-j}, P w^j)] |_F.
SpectralField memory_term(const Ladder& ladder, int l, const BilinearKernel& kernel);

/// As memory_term, but forcing the two-triangle path regardless of kernel
/// symmetry; on a symmetric kernel it reproduces the factor-2 path exactly.
SpectralField memory_term_two_triangle(const Ladder& ladder, int l,
                                       const BilinearKernel& kernel);

/// Markovian term b(P u, P u) restricted to F (equals P w^1 of the ladder).
SpectralField markovian_term(const Ladder& ladder);

/// Reduced-model right-hand side at absolute time t:
///   a_1 * Markovian + sum_{l=1}^{order} a_{l+1} (-1)^{l+1} t^l / l! * m^l,
/// with the ladder rebuilt from the current resolved state. Output is
/// supported on F.
SpectralField reduced_rhs(double t, const SpectralField& uhat, const Eigen::VectorXd& coeffs,
                          int order, const BilinearKernel& kernel);

}  // namespace rmz
