#include "salg/brauer.hpp"

namespace salg {

BrauerIndex::BrauerIndex(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("Brauer tree algebra needs ell >= 1");
  for (int j = 0; j < ell; ++j) ends_.emplace_back(j, j);
  for (int j = 0; j < ell; ++j) ends_.emplace_back(j, j);
  for (int k = 0; k + 1 < ell; ++k) {
    ends_.emplace_back(k, k + 1);
    ends_.emplace_back(k + 1, k);
  }
  ends_.emplace_back(0, 0);
}

Index BrauerIndex::a(int from, int to) const {
  if (from < 0 || to < 0 || from >= ell_ || to >= ell_ || std::abs(from - to) != 1)
    throw std::invalid_argument("no arrow between these vertices");
  int k = std::min(from, to);
  return static_cast<Index>(2 * ell_ + 2 * k + (from < to ? 0 : 1));
}

std::string BrauerIndex::label(Index b) const {
  if (b == u()) return "u";
  if (b < static_cast<Index>(ell_)) return "e" + std::to_string(b);
  if (b < static_cast<Index>(2 * ell_)) return "c" + std::to_string(b - ell_);
  return "a" + std::to_string(source(b)) + std::to_string(target(b));
}

namespace {

// Path multiplication, left to right.
std::optional<Index> brauer_product(const BrauerIndex& ix, Index x, Index y) {
  if (ix.target(x) != ix.source(y)) return std::nullopt;
  if (ix.is_idempotent(x)) return y;
  if (ix.is_idempotent(y)) return x;
  int v = ix.source(x);
  if (x == ix.u() && y == ix.u()) return ix.c(0);
  bool x_arrow = x >= ix.c(ix.ell() - 1) + 1 && x != ix.u();
  bool y_arrow = y >= ix.c(ix.ell() - 1) + 1 && y != ix.u();
  if (x_arrow && y_arrow && ix.target(y) == v) return ix.c(v);
  return std::nullopt;
}

}  // namespace

BasedAlgebra brauer_algebra(const Ring& ring, int ell, BrauerVariant variant) {
  BrauerIndex ix(ell);
  std::size_t n = ix.rank();
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (Index b = 0; b < n; ++b) {
    labels.push_back(ix.label(b));
    if (ix.is_idempotent(b)) bideg.push_back({0, 0});
    else if (b < ix.c(ell - 1) + 1) bideg.push_back({4, 0});
    else bideg.push_back({2, 1});
  }
  std::vector<Element> table(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (auto p = brauer_product(ix, x, y)) table[x * n + y] = {{*p, ring.one()}};
  Element unit;
  for (int j = 0; j < ell; ++j) unit.emplace_back(ix.e(j), ring.one());
  BasedAlgebra a = BasedAlgebra::from_table(ring, std::move(labels), std::move(bideg), std::move(unit), std::move(table));
  std::vector<Scalar> form(n, ring.zero());
  for (int j = 0; j < ell; ++j) form[ix.c(j)] = ring.one();
  a.set_form(form);
  if (variant == BrauerVariant::Regraded) {
    a = regrade(a, brauer_idempotents(a, ell), brauer_regrading_shifts(ell));
    a.set_form(form);
  }
  return a;
}

std::vector<Element> brauer_idempotents(const BasedAlgebra& a, int ell) {
  std::vector<Element> es;
  for (int j = 0; j < ell; ++j) es.push_back(a.basis(static_cast<Index>(j)));
  return es;
}

std::vector<Shift> brauer_regrading_shifts(int ell) {
  std::vector<Shift> s;
  for (int j = 0; j < ell; ++j) s.push_back({-2 * j, j % 2});
  return s;
}

std::size_t brauer_right_ideal_rank(const BasedAlgebra& a, int ell, int j) {
  if (j < 0 || j >= ell) throw std::invalid_argument("vertex out of range");
  RowSpace space(rank_field(a.ring()));
  Element e = a.basis(static_cast<Index>(j));
  for (Index b = 0; b < a.rank(); ++b) {
    Element p = a.mul(e, a.basis(b));
    for (auto& [i, s] : p) s = to_field(s);
    space.insert(std::move(p));
  }
  return space.rank();
}

}  // namespace salg
