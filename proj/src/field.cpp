#include "rmz/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmz {

SpectralField project(const SpectralField& x, Part which) {
  SpectralField out(x.trunc(), x.components());
  const auto& t = x.trunc();
  const bool keep_resolved = which == Part::Resolved;
  const long vol = t.volume();
  for (int c = 0; c < x.components(); ++c) {
    for (long idx = 0; idx < vol; ++idx) {
      if (t.resolved(idx) == keep_resolved) out.at(c, idx) = x.at(c, idx);
    }
  }
  return out;
}

SpectralField enforce_reality(const SpectralField& x) {
  SpectralField out(x.trunc(), x.components());
  const auto& t = x.trunc();
  const long vol = t.volume();
  for (int c = 0; c < x.components(); ++c) {
    for (long idx = 0; idx < vol; ++idx) {
      if (t.nyquist(idx)) continue;
      const long cj = t.conjugate_index(idx);
      out.at(c, idx) = 0.5 * (x.at(c, idx) + std::conj(x.at(c, cj)));
    }
  }
  return out;
}

double reality_defect(const SpectralField& x) {
  const auto& t = x.trunc();
  double worst = 0.0;
  for (int c = 0; c < x.components(); ++c) {
    for (long idx = 0; idx < t.volume(); ++idx) {
      if (t.nyquist(idx)) {
        worst = std::max(worst, std::abs(x.at(c, idx)));
        continue;
      }
      const long cj = t.conjugate_index(idx);
      worst = std::max(worst, 0.5 * std::abs(x.at(c, idx) - std::conj(x.at(c, cj))));
    }
  }
  return worst;
}

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
  if (a.trunc() != b.trunc() || a.components() != b.components()) {
    throw std::invalid_argument("max_abs_diff: field layout mismatch");
  }
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

}  // namespace rmz
