#pragma once
#include <array>
#include <cstdint>

namespace loopbv {

/// Canonical basis word of the ambient graded algebra.
///
/// Scalar slots hold, in order, the free group exponents (any sign), the
/// torsion residues (reduced mod each order) and the polynomial exponents
/// (non-negative); unused slots stay zero. The exterior part is a bitmask
/// over the ext slots; bit order is the canonical ascending generator order,
/// so every reordering sign has already been consumed when a Monomial
/// exists. `cls` indexes a class of the signature's table factor (0 = unit).
///
/// Storage is inline (no heap) so the sweep kernels copy monomials freely.
struct Monomial {
  static constexpr int kMaxScalarSlots = 16;

  std::array<int32_t, kMaxScalarSlots> e{};
  uint32_t ext = 0;
  uint16_t cls = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.ext == b.ext && a.cls == b.cls && a.e == b.e;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.e != b.e) return a.e < b.e;
    if (a.ext != b.ext) return a.ext < b.ext;
    return a.cls < b.cls;
  }
};

}  // namespace loopbv
