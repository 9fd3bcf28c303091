#include "rmz/kernel.hpp"

#include <stdexcept>

namespace rmz {

SpectralField BilinearKernel::apply(const SpectralField& x, const SpectralField& y, Filter fx,
                                    Filter fy) const {
  if (x.trunc() != trunc_ || y.trunc() != trunc_) {
    throw std::invalid_argument("kernel: truncation mismatch between operands");
  }
  if (x.components() != components_ || y.components() != components_) {
    throw std::invalid_argument("kernel: component count mismatch");
  }
  ++apply_count_;
  return apply_impl(x, y, fx, fy);
}

SpectralField BurgersKernel::apply_impl(const SpectralField& x, const SpectralField& y,
                                        Filter fx, Filter fy) const {
  SpectralField out(trunc_, 1);
  std::vector<Complex> conv(trunc_.volume());
  engine_.convolve(x.data().data(), fx, y.data().data(), fy, conv.data());
  for (long idx = 0; idx < trunc_.volume(); ++idx) {
    const double k = trunc_.wavevector(idx)[0];
    out.at(0, idx) = Complex(0.0, -0.5 * k) * conv[idx];
  }
  return out;
}

SpectralField Euler3dKernel::apply_impl(const SpectralField& x, const SpectralField& y,
                                        Filter fx, Filter fy) const {
  const long vol = trunc_.volume();
  SpectralField out(trunc_, 3);

  // (k . x_p) has k fixed per output mode, so the convolution factorizes:
  // v^d_k = sum_j k_j (x^j * y^d)_k, then out_k = -i A_k v_k.
  std::vector<Complex> conv(vol);
  std::vector<Complex> v(3 * vol, Complex(0.0, 0.0));
  for (int d = 0; d < 3; ++d) {
    for (int j = 0; j < 3; ++j) {
      engine_.convolve(x.data().data() + static_cast<long>(j) * vol, fx,
                       y.data().data() + static_cast<long>(d) * vol, fy, conv.data());
      for (long idx = 0; idx < vol; ++idx) {
        const double kj = trunc_.wavevector(idx)[j];
        if (kj != 0.0) v[static_cast<long>(d) * vol + idx] += kj * conv[idx];
      }
    }
  }

  for (long idx = 0; idx < vol; ++idx) {
    if (trunc_.nyquist(idx)) continue;
    const auto k = trunc_.wavevector(idx);
    const double k2 = static_cast<double>(k[0]) * k[0] + static_cast<double>(k[1]) * k[1] +
                      static_cast<double>(k[2]) * k[2];
    if (k2 == 0.0) continue;
    const Complex kv = (static_cast<double>(k[0]) * v[idx] + static_cast<double>(k[1]) * v[vol + idx] +
                        static_cast<double>(k[2]) * v[2 * vol + idx]) /
                       k2;
    for (int c = 0; c < 3; ++c) {
      const Complex proj = v[static_cast<long>(c) * vol + idx] - static_cast<double>(k[c]) * kv;
      out.at(c, idx) = Complex(0.0, -1.0) * proj;
    }
  }
  return out;
}

std::unique_ptr<BilinearKernel> make_kernel(Equation eq, const Truncation& trunc) {
  switch (eq) {
    case Equation::Burgers:
      if (trunc.dim() != 1) throw std::invalid_argument("burgers kernel needs a 1D truncation");
      return std::make_unique<BurgersKernel>(trunc);
    case Equation::Euler3d:
      if (trunc.dim() != 3) throw std::invalid_argument("euler kernel needs a 3D truncation");
      return std::make_unique<Euler3dKernel>(trunc);
  }
  throw std::logic_error("unknown equation");
}

SpectralField ic_sine(const Truncation& trunc) {
  if (trunc.dim() != 1) throw std::invalid_argument("ic_sine needs a 1D truncation");
  SpectralField u(trunc, 1);
  u.set({1, 0, 0}, Complex(0.0, -0.5));
  u.set({-1, 0, 0}, Complex(0.0, 0.5));
  return u;
}

SpectralField ic_taylor_green(const Truncation& trunc) {
  if (trunc.dim() != 3) throw std::invalid_argument("ic_taylor_green needs a 3D truncation");
  SpectralField u(trunc, 3);
  for (int s1 : {-1, 1}) {
    for (int s2 : {-1, 1}) {
      for (int s3 : {-1, 1}) {
        // sin x1 cos x2 cos x3 -> -i s1 / 8; -cos x1 sin x2 cos x3 -> +i s2 / 8
        u.set(0, {s1, s2, s3}, Complex(0.0, -s1 / 8.0));
        u.set(1, {s1, s2, s3}, Complex(0.0, s2 / 8.0));
      }
    }
  }
  return u;
}

}  // namespace rmz
