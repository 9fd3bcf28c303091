#pragma once

#include <Eigen/Core>
#include <array>
#include <complex>

#include "rmz/truncation.hpp"

namespace rmz {

using Complex = std::complex<double>;

enum class Part { Resolved, Unresolved };

/// Complex Fourier amplitudes over the full mode set F u G, one block per
/// velocity component (1 for Burgers, 3 for Euler). Nyquist-flagged entries
/// are kept identically zero by every producing operation.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(Truncation trunc, int components)
      : trunc_(std::move(trunc)),
        components_(components),
        data_(Eigen::VectorXcd::Zero(components * trunc_.volume())) {}

  const Truncation& trunc() const { return trunc_; }
  int components() const { return components_; }
  long volume() const { return trunc_.volume(); }

  Eigen::VectorXcd& data() { return data_; }
  const Eigen::VectorXcd& data() const { return data_; }

  Complex& at(int c, long idx) { return data_[static_cast<long>(c) * volume() + idx]; }
  Complex at(int c, long idx) const { return data_[static_cast<long>(c) * volume() + idx]; }

  Complex value(int c, const std::array<int, 3>& k) const {
    const long idx = trunc_.index_of(k);
    return idx < 0 ? Complex(0.0, 0.0) : at(c, idx);
  }
  void set(int c, const std::array<int, 3>& k, Complex v) {
    const long idx = trunc_.index_of(k);
    if (idx >= 0) at(c, idx) = v;
  }

  // 1-component shorthands used by the Burgers paths and tests.
  Complex value(const std::array<int, 3>& k) const { return value(0, k); }
  void set(const std::array<int, 3>& k, Complex v) { set(0, k, v); }

 private:
  Truncation trunc_;
  int components_ = 0;
  Eigen::VectorXcd data_;
};

/// P keeps the resolved modes and zeroes G; Q keeps G and zeroes F.
SpectralField project(const SpectralField& x, Part which);

/// Symmetrizes to (x_k + conj(x_{-k}))/2 and zeroes the Nyquist entries.
SpectralField enforce_reality(const SpectralField& x);

/// Largest |x_k + conj(x_{-k})|/2 asymmetry; 0 for a real-valued field.
double reality_defect(const SpectralField& x);

double max_abs_diff(const SpectralField& a, const SpectralField& b);

}  // namespace rmz
