#include <cstdlib>

#include "salg/qhs.hpp"

namespace salg {

QHSPresentation::QHSPresentation(int ell) : roots_(ell) {}

TwoVarPoly QHSPresentation::q_poly(int i, int j) const {
  if (i == j) return {};
  if (std::abs(i - j) > 1) return {{1, 0, 0}};
  if (i > j) {
    TwoVarPoly swapped = q_poly(j, i);
    for (auto& t : swapped) std::swap(t.u_exp, t.v_exp);
    return swapped;
  }
  int l = ell();
  if (l == 1) return {{1, 4, 0}, {-1, 0, 1}};
  if (i == 0 || j == l) return {{1, 2, 0}, {-1, 0, 1}};
  return {{1, 1, 0}, {-1, 0, 1}};
}

TwoVarPoly QHSPresentation::b_poly(int i, int j, int k) const {
  if (i != k) return {};
  int l = ell();
  if (i == j + 1) return {{-1, 0, 0}};
  if (i != j - 1) return {};
  if (i != 0 && i != l - 1) return {{1, 0, 0}};
  if (i == l - 1 && i > 0) return {{1, 1, 0}, {1, 0, 1}};
  if (l > 1) return {{1, 0, 1}, {-1, 1, 0}};
  // (u² + v²)(v − u) with v²u rewritten as u v²; u and v are odd and anticommute twice.
  return {{1, 2, 1}, {-1, 3, 0}, {1, 0, 3}, {-1, 1, 2}};
}

BiDegree QHSPresentation::y_bidegree(int i) const { return {roots_.gram(i, i), parity(i)}; }

BiDegree QHSPresentation::psi_bidegree(int i, int j) const { return {-roots_.gram(i, j), parity(i) * parity(j)}; }

}  // namespace salg
