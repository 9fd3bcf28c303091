#pragma once

#include <memory>

#include "rmz/convolution.hpp"
#include "rmz/field.hpp"

namespace rmz {

enum class Equation { Burgers, Euler3d };

/// The bilinear form b_k(x, y) underlying one equation's quadratic
/// nonlinearity, evaluated over filtered wavenumber ranges. The full
/// right-hand side is b(u, u) over the whole grid; the memory engine builds
/// everything else out of filtered applications of the same form.
class BilinearKernel {
 public:
  virtual ~BilinearKernel() = default;

  const Truncation& truncation() const { return trunc_; }
  int components() const { return components_; }
  /// Burgers is symmetric under argument swap; Euler is not.
  bool symmetric() const { return symmetric_; }

  SpectralField apply(const SpectralField& x, const SpectralField& y, Filter fx,
                      Filter fy) const;

  /// R(u) = b(u, u) with both arguments unfiltered.
  SpectralField full_rhs(const SpectralField& u) const {
    return apply(u, u, Filter::All, Filter::All);
  }

  long apply_count() const { return apply_count_; }
  void reset_apply_count() const { apply_count_ = 0; }

 protected:
  BilinearKernel(Truncation trunc, int components, bool symmetric)
      : trunc_(std::move(trunc)), components_(components), symmetric_(symmetric) {}

  virtual SpectralField apply_impl(const SpectralField& x, const SpectralField& y, Filter fx,
                                   Filter fy) const = 0;

  Truncation trunc_;
  int components_;
  bool symmetric_;
  mutable long apply_count_ = 0;
};

/// b_k(x, y) = -(ik/2) sum_{p+q=k} x_p y_q
class BurgersKernel final : public BilinearKernel {
 public:
  explicit BurgersKernel(Truncation trunc)
      : BilinearKernel(trunc, 1, true), engine_(trunc) {}

 private:
  SpectralField apply_impl(const SpectralField& x, const SpectralField& y, Filter fx,
                           Filter fy) const override;
  ConvolutionEngine engine_;
};

/// b_k(x, y) = -i sum_{p+q=k} (k . x_p) A_k y_q with the incompressibility
/// projector A_k = I - k k^T / |k|^2. The k = 0 output is forced to zero
/// (mean-free Galilean frame), as are Nyquist entries.
class Euler3dKernel final : public BilinearKernel {
 public:
  explicit Euler3dKernel(Truncation trunc)
      : BilinearKernel(trunc, 3, false), engine_(trunc) {}

 private:
  SpectralField apply_impl(const SpectralField& x, const SpectralField& y, Filter fx,
                           Filter fy) const override;
  ConvolutionEngine engine_;
};

std::unique_ptr<BilinearKernel> make_kernel(Equation eq, const Truncation& trunc);

/// u0(x) = sin x: modes +-1 carry -+i/2, everything else zero.
SpectralField ic_sine(const Truncation& trunc);

/// Taylor-Green vortex: u1 = sin x1 cos x2 cos x3, u2 = -cos x1 sin x2 cos x3,
/// u3 = 0; eight active modes per nonzero component, divergence-free.
SpectralField ic_taylor_green(const Truncation& trunc);

}  // namespace rmz
