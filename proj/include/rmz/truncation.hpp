#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace rmz {

/// Mode bookkeeping for a Fourier-Galerkin truncation.
///
/// The full grid keeps wavenumbers [-M/2, M/2-1] per dimension, stored in
/// standard FFT order (0, 1, ..., M/2-1, -M/2, ..., -1). The resolved set F
/// is [-N/2, N/2-1]^dim with N = M/2; the remainder is the unresolved set G.
/// Modes with any component equal to -M/2 have no conjugate partner on the
/// grid and are pinned to zero everywhere.
class Truncation {
 public:
  Truncation() = default;

  /// modes_per_dim must be even and >= 4; dim is 1 or 3.
  static Truncation make(int modes_per_dim, int dim);

  int modes_per_dim() const { return d_->M; }
  int resolved_per_dim() const { return d_->N; }
  int dim() const { return d_->dim; }
  long volume() const { return d_->volume; }

  bool resolved(long idx) const { return d_->resolved[idx] != 0; }
  bool nyquist(long idx) const { return d_->nyquist[idx] != 0; }

  const std::vector<std::uint8_t>& resolved_mask() const { return d_->resolved; }
  const std::vector<std::uint8_t>& nyquist_mask() const { return d_->nyquist; }

  /// Wavevector of a flat index; unused dimensions are zero.
  std::array<int, 3> wavevector(long idx) const;

  /// Flat index of a wavevector, or -1 if any component is off the grid.
  long index_of(const std::array<int, 3>& k) const;

  /// Index of -k, or -1 for Nyquist-flagged modes.
  long conjugate_index(long idx) const { return d_->conj_index[idx]; }

  long resolved_count() const { return d_->resolved_count; }

  bool operator==(const Truncation& o) const {
    return d_->M == o.d_->M && d_->dim == o.d_->dim;
  }
  bool operator!=(const Truncation& o) const { return !(*this == o); }

 private:
  struct Data {
    int M = 0;
    int N = 0;
    int dim = 0;
    long volume = 0;
    long resolved_count = 0;
    std::vector<std::uint8_t> resolved;
    std::vector<std::uint8_t> nyquist;
    std::vector<long> conj_index;
  };
  std::shared_ptr<const Data> d_;
};

/// FFT-order index -> signed wavenumber for a grid of size m.
inline int fft_wavenumber(int index, int m) {
  return index < m / 2 ? index : index - m;
}

/// Signed wavenumber -> FFT-order index for a grid of size m.
inline int fft_index(int k, int m) { return k >= 0 ? k : k + m; }

}  // namespace rmz
