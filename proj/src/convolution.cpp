#include "rmz/convolution.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace rmz {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

ConvolutionEngine::ConvolutionEngine(Truncation trunc) : trunc_(std::move(trunc)) {
  const int m = trunc_.modes_per_dim();
  const int dim = trunc_.dim();
  pad_ = 2 * m;
  pad_volume_ = 1;
  for (int i = 0; i < dim; ++i) pad_volume_ *= pad_;

  pad_index_.resize(trunc_.volume());
  for (long idx = 0; idx < trunc_.volume(); ++idx) {
    const auto k = trunc_.wavevector(idx);
    long p = 0;
    for (int axis = 0; axis < dim; ++axis) p = p * pad_ + fft_index(k[axis], pad_);
    pad_index_[idx] = p;
  }

  std::lock_guard<std::mutex> lock(planner_mutex());
  buf_a_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(pad_volume_));
  buf_b_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(pad_volume_));
  int dims[3] = {pad_, pad_, pad_};
  auto* fa = reinterpret_cast<fftw_complex*>(buf_a_);
  auto* fb = reinterpret_cast<fftw_complex*>(buf_b_);
  // FFTW_ESTIMATE keeps plan selection deterministic across runs.
  plan_bwd_a_ = fftw_plan_dft(dim, dims, fa, fa, FFTW_BACKWARD, FFTW_ESTIMATE);
  plan_bwd_b_ = fftw_plan_dft(dim, dims, fb, fb, FFTW_BACKWARD, FFTW_ESTIMATE);
  plan_fwd_a_ = fftw_plan_dft(dim, dims, fa, fa, FFTW_FORWARD, FFTW_ESTIMATE);
}

ConvolutionEngine::~ConvolutionEngine() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(plan_fwd_a_);
  fftw_destroy_plan(plan_bwd_b_);
  fftw_destroy_plan(plan_bwd_a_);
  fftw_free(buf_b_);
  fftw_free(buf_a_);
}

void ConvolutionEngine::scatter(const std::complex<double>* src, Filter f,
                                std::complex<double>* dst) const {
  std::memset(dst, 0, sizeof(std::complex<double>) * pad_volume_);
  const auto& resolved = trunc_.resolved_mask();
  const auto& nyquist = trunc_.nyquist_mask();
  for (long idx = 0; idx < trunc_.volume(); ++idx) {
    if (nyquist[idx]) continue;
    if (f == Filter::Resolved && !resolved[idx]) continue;
    if (f == Filter::Unresolved && resolved[idx]) continue;
    dst[pad_index_[idx]] = src[idx];
  }
}

void ConvolutionEngine::convolve(const std::complex<double>* a, Filter fa,
                                 const std::complex<double>* b, Filter fb,
                                 std::complex<double>* out) const {
  scatter(a, fa, buf_a_);
  scatter(b, fb, buf_b_);
  fftw_execute(plan_bwd_a_);
  fftw_execute(plan_bwd_b_);
  for (long i = 0; i < pad_volume_; ++i) buf_a_[i] *= buf_b_[i];
  fftw_execute(plan_fwd_a_);
  const double scale = 1.0 / static_cast<double>(pad_volume_);
  const auto& nyquist = trunc_.nyquist_mask();
  for (long idx = 0; idx < trunc_.volume(); ++idx) {
    out[idx] = nyquist[idx] ? std::complex<double>(0.0, 0.0) : scale * buf_a_[pad_index_[idx]];
  }
}

}  // namespace rmz
