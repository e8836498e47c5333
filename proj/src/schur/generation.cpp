#include <deque>

#include "salg/schur.hpp"

namespace salg {

namespace {

std::vector<std::uint16_t> diagonal_idempotents(const SchurData& data) {
  std::vector<std::uint16_t> out;
  for (int j = 0; j < data.ell(); ++j)
    for (int t = 1; t <= data.n(); ++t) out.push_back(data.code(data.brauer().e(j), t, t));
  return out;
}

void add_xi_of(const SchurData& data, const CodeTuple& t, long coeff, AmbientElement& out) {
  auto loc = data.locate(t);
  if (!loc) return;
  for (const auto& [u, c] : data.orbit_sum(loc->first)) out[u] += coeff * loc->second * c;
}

Element to_eta(const SchurData& data, const AmbientElement& x, const Ring& ring) {
  Element out;
  for (auto [k, v] : data.to_xi(x)) {
    mpq_class q(v, static_cast<unsigned long>(data.c_factorial(k)));
    q.canonicalize();
    Scalar s = ring.from_rational(q);
    if (!s.is_zero()) out.emplace_back(k, s);
  }
  return out;
}

}  // namespace

AmbientElement i_rs(const SchurData& data, int r, int s, Index x) {
  auto ones = diagonal_idempotents(data);
  int d = data.d();
  AmbientElement out;
  std::uint16_t middle = data.code(x, r, s);
  for (int c = 0; c < d; ++c) {
    std::size_t combos = 1;
    for (int k = 0; k + 1 < d; ++k) combos *= ones.size();
    for (std::size_t m = 0; m < combos; ++m) {
      CodeTuple t(d);
      std::size_t rest = m;
      for (int k = 0; k < d; ++k) {
        if (k == c) {
          t[k] = middle;
          continue;
        }
        t[k] = ones[rest % ones.size()];
        rest /= ones.size();
      }
      out[t] += 1;
    }
  }
  return out;
}

AmbientElement i_la(const SchurData& data, const MultiComposition& lambda, Index x) {
  CodeTuple t{data.code(x, 1, 1)};
  for (int r = 1; r < data.n(); ++r)
    for (int j = 0; j < data.ell(); ++j) {
      int parts = r - 1 < static_cast<int>(lambda[j].size()) ? lambda[j][r - 1] : 0;
      for (int m = 0; m < parts; ++m) t.push_back(data.code(data.brauer().e(j), r + 1, r + 1));
    }
  if (static_cast<int>(t.size()) != data.d()) throw ShapeError("multicomposition has the wrong size");
  AmbientElement out;
  add_xi_of(data, t, 1, out);
  return out;
}

AmbientElement xi_x_one(const SchurData& data, const Composition& h, Index x) {
  std::vector<int> rows;
  for (std::size_t r = 0; r < h.size(); ++r)
    for (int m = 0; m < h[r]; ++m) rows.push_back(static_cast<int>(r) + 2);
  if (static_cast<int>(rows.size()) + 1 != data.d()) throw ShapeError("row content has the wrong size");
  AmbientElement out;
  std::size_t combos = 1;
  for (std::size_t k = 0; k < rows.size(); ++k) combos *= data.ell();
  for (std::size_t m = 0; m < combos; ++m) {
    CodeTuple t{data.code(x, 1, 1)};
    std::size_t rest = m;
    for (int row : rows) {
      t.push_back(data.code(data.brauer().e(static_cast<int>(rest % data.ell())), row, row));
      rest /= data.ell();
    }
    add_xi_of(data, t, 1, out);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

GenerationReport generated_subalgebra(const SchurData& data, const Ring& ring, SeedKind seeds) {
  if (!ring.is_field()) throw std::invalid_argument("generation is computed over a field");
  BasedAlgebra t = schur_T(data, ring);
  std::vector<Element> gens;
  for (Index i = 0; i < data.rank(); ++i)
    if (data.bidegree(i).degree == 0) gens.push_back(t.basis(i));
  std::size_t base_rank = data.brauer().rank();
  if (seeds == SeedKind::DegreeZeroAndI11) {
    for (Index x = 0; x < base_rank; ++x) gens.push_back(to_eta(data, i_rs(data, 1, 1, x), ring));
  } else if (seeds == SeedKind::DegreeZeroAndILa && data.n() >= 2) {
    for (const auto& lambda : multicompositions(data.ell(), data.n() - 1, data.d() - 1))
      for (Index x = 0; x < base_rank; ++x) gens.push_back(to_eta(data, i_la(data, lambda, x), ring));
  }
  std::erase_if(gens, [](const Element& g) { return g.empty(); });

  RowSpace space(ring);
  std::deque<Element> queue;
  for (const auto& g : gens)
    if (space.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    Element v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Element p = t.mul(g, v);
      if (!p.empty() && space.insert(p)) queue.push_back(std::move(p));
    }
  }
  GenerationReport report;
  for (const auto& row : space.rows()) ++report.closure_ranks[data.bidegree(row.front().first).degree];
  report.t_ranks = graded_ranks(data);
  report.equal = report.closure_ranks == report.t_ranks;
  return report;
}

}  // namespace salg
