#pragma once

// Linear part of a minimal resolution, linearity defect, and the Koszul test.

#include "resolve.hpp"

namespace gradedreg {

template <class F>
ComplexTable<F> linear_part(const ResolutionWindow<F>& r) {
  return resolution_complex(r, true);
}

struct LinearityDefectVerdict {
  std::optional<int> value;  // empty for the zero module
  std::optional<std::pair<int, int>> witness;  // (i, j) with H_i(linp)_j != 0 at i = value
  bool boundary = false;     // the value sits at the last index whose homology is visible

  friend bool operator==(const LinearityDefectVerdict&, const LinearityDefectVerdict&) = default;
};

/// lind = max{i <= i_max - 1 : H_i(linp F) != 0 in the window}.
template <class F>
LinearityDefectVerdict lind(const ResolutionWindow<F>& r) {
  auto lin = linear_part(r);
  LinearityDefectVerdict v;
  int top = std::min(r.i_max - 1, lin.complete_above ? lin.imax() : lin.imax() - 1);
  for (int i = r.imin; i <= top; ++i)
    for (int j = r.j_min; j <= r.j_max; ++j)
      if (homology(lin, i, j).dim) {
        v.value = i;
        v.witness = std::pair{i, j};
        break;
      }
  v.boundary = v.value && *v.value == r.i_max - 1 && !lin.complete_above;
  return v;
}

struct KoszulVerdict {
  bool koszul_up_to_window = false;
  std::optional<std::pair<int, int>> witness;  // least (i, j) with j != i and beta_{i,j}(k) != 0
  int i_max = 0;
  int j_max = 0;
};

template <class F>
KoszulVerdict is_koszul(AlgebraPtr<F> a, int i_max, int j_max) {
  if (a->g != 1)
    throw error(errc::not_standard_graded, "algebra generated in degree " + std::to_string(a->g) + ", not 1");
  auto b = betti_table(minimal_free_resolution(residue_field(a, j_max), i_max, j_max));
  KoszulVerdict v;
  v.i_max = i_max;
  v.j_max = j_max;
  for (const auto& [ij, n] : b.entries)
    if (ij.first != ij.second) {
      v.witness = ij;
      break;
    }
  v.koszul_up_to_window = !v.witness;
  return v;
}

}  // namespace gradedreg
