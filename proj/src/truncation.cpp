#include "rmz/truncation.hpp"

#include <stdexcept>
#include <string>

namespace rmz {

Truncation Truncation::make(int modes_per_dim, int dim) {
  if (modes_per_dim < 4 || modes_per_dim % 2 != 0) {
    throw std::invalid_argument("truncation: mode count must be even and >= 4, got " +
                                std::to_string(modes_per_dim));
  }
  if (dim != 1 && dim != 3) {
    throw std::invalid_argument("truncation: dim must be 1 or 3, got " + std::to_string(dim));
  }

  auto d = std::make_shared<Data>();
  d->M = modes_per_dim;
  d->N = modes_per_dim / 2;
  d->dim = dim;
  d->volume = 1;
  for (int i = 0; i < dim; ++i) d->volume *= modes_per_dim;

  d->resolved.assign(d->volume, 0);
  d->nyquist.assign(d->volume, 0);
  d->conj_index.assign(d->volume, -1);

  const int m = d->M;
  const int half_res = d->N / 2;
  for (long idx = 0; idx < d->volume; ++idx) {
    long rem = idx;
    bool in_f = true;
    bool is_nyq = false;
    std::array<int, 3> k{0, 0, 0};
    for (int axis = dim - 1; axis >= 0; --axis) {
      const int i = static_cast<int>(rem % m);
      rem /= m;
      const int kc = fft_wavenumber(i, m);
      k[axis] = kc;
      if (kc < -half_res || kc > half_res - 1) in_f = false;
      if (kc == -m / 2) is_nyq = true;
    }
    d->resolved[idx] = in_f ? 1 : 0;
    d->nyquist[idx] = is_nyq ? 1 : 0;
    if (in_f) ++d->resolved_count;
    if (!is_nyq) {
      long cidx = 0;
      for (int axis = 0; axis < dim; ++axis) cidx = cidx * m + fft_index(-k[axis], m);
      d->conj_index[idx] = cidx;
    }
  }

  Truncation t;
  t.d_ = std::move(d);
  return t;
}

std::array<int, 3> Truncation::wavevector(long idx) const {
  std::array<int, 3> k{0, 0, 0};
  const int m = d_->M;
  long rem = idx;
  for (int axis = d_->dim - 1; axis >= 0; --axis) {
    k[axis] = fft_wavenumber(static_cast<int>(rem % m), m);
    rem /= m;
  }
  return k;
}

long Truncation::index_of(const std::array<int, 3>& k) const {
  const int m = d_->M;
  long idx = 0;
  for (int axis = 0; axis < d_->dim; ++axis) {
    if (k[axis] < -m / 2 || k[axis] > m / 2 - 1) return -1;
    idx = idx * m + fft_index(k[axis], m);
  }
  return idx;
}

}  // namespace rmz
