#pragma once

#include <complex>
#include <vector>

#include "rmz/truncation.hpp"

struct fftw_plan_s;

namespace rmz {

enum class Filter { All, Resolved, Unresolved };

/// Exact (alias-free) linear convolution on the truncated grid,
///   out_k = sum_{p+q=k} a_p b_q,  k in F u G,
/// with p and q restricted to the filtered wavenumber ranges of each input.
/// Inputs are zero-padded to 2M points per dimension before transforming, so
/// every product wavenumber |p+q| <= M-2 is representable and nothing wraps.
///
/// The engine owns FFTW plans and scratch buffers; one instance serves one
/// truncation and must not be shared across threads.
class ConvolutionEngine {
 public:
  explicit ConvolutionEngine(Truncation trunc);
  ~ConvolutionEngine();
  ConvolutionEngine(const ConvolutionEngine&) = delete;
  ConvolutionEngine& operator=(const ConvolutionEngine&) = delete;

  const Truncation& trunc() const { return trunc_; }

  /// a, b, out are single-component slices of length trunc().volume().
  void convolve(const std::complex<double>* a, Filter fa, const std::complex<double>* b,
                Filter fb, std::complex<double>* out) const;

 private:
  void scatter(const std::complex<double>* src, Filter f, std::complex<double>* dst) const;

  Truncation trunc_;
  int pad_ = 0;
  long pad_volume_ = 0;
  std::vector<long> pad_index_;  // grid flat index -> padded flat index
  mutable std::complex<double>* buf_a_ = nullptr;
  mutable std::complex<double>* buf_b_ = nullptr;
  fftw_plan_s* plan_bwd_a_ = nullptr;
  fftw_plan_s* plan_bwd_b_ = nullptr;
  fftw_plan_s* plan_fwd_a_ = nullptr;
};

}  // namespace rmz
