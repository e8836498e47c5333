#include <memory>

#include "salg/schur.hpp"

namespace salg {

namespace {

// Mixed-radix index of a tuple of codes below `radix`.
std::size_t tuple_index(const std::vector<std::uint16_t>& t, std::size_t radix) {
  std::size_t out = 0;
  for (auto c : t) out = out * radix + c;
  return out;
}

std::vector<std::uint16_t> tuple_at(std::size_t index, std::size_t radix, int d) {
  std::vector<std::uint16_t> t(d);
  for (int k = d - 1; k >= 0; --k) {
    t[k] = static_cast<std::uint16_t>(index % radix);
    index /= radix;
  }
  return t;
}

std::size_t power(std::size_t base, int e) {
  std::size_t out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

// Tensor space V_n^{⊗d}: each slot carries v_{r,b} = b placed in row r, coded b*n + (r-1).
struct TensorSpace {
  const SchurData& data;
  std::size_t radix;
  std::size_t dim;

  explicit TensorSpace(const SchurData& d)
      : data(d), radix(d.brauer().rank() * d.n()), dim(power(radix, d.d())) {
    if (dim > 20000) throw GuardExceeded("tensor space rank exceeds 20000");
  }
  Index b_of(std::uint16_t v) const { return v / data.n(); }
  int row_of(std::uint16_t v) const { return v % data.n() + 1; }
  int parity(std::uint16_t v) const { return data.base().parity(b_of(v)); }
  std::uint16_t code(Index b, int r) const { return static_cast<std::uint16_t>(b * data.n() + r - 1); }

  // Left action of an ambient matrix-unit tuple.
  std::optional<std::pair<int, std::vector<std::uint16_t>>> left(const CodeTuple& x,
                                                                  const std::vector<std::uint16_t>& v) const {
    std::vector<std::uint16_t> out(v.size());
    int exponent = 0, odd_v_before = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (data.code_parity(x[k])) exponent += odd_v_before;
      if (data.code_s(x[k]) != row_of(v[k])) return std::nullopt;
      Element p = data.base().basis_product(data.code_b(x[k]), b_of(v[k]));
      if (p.empty()) return std::nullopt;
      out[k] = code(p[0].first, data.code_r(x[k]));
      odd_v_before += parity(v[k]);
    }
    return std::pair{sign_of(exponent), std::move(out)};
  }

  // Right action of a tensor word of A.
  std::optional<std::pair<int, std::vector<std::uint16_t>>> right(const std::vector<std::uint16_t>& v,
                                                                   const std::vector<Index>& a) const {
    std::vector<std::uint16_t> out(v.size());
    int exponent = 0, odd_a_before = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (parity(v[k])) exponent += odd_a_before;
      Element p = data.base().basis_product(b_of(v[k]), a[k]);
      if (p.empty()) return std::nullopt;
      out[k] = code(p[0].first, row_of(v[k]));
      odd_a_before += data.base().parity(a[k]);
    }
    return std::pair{sign_of(exponent), std::move(out)};
  }

  // v·g = g^{-1}·v under the signed place action.
  std::pair<int, std::vector<std::uint16_t>> right(const std::vector<std::uint16_t>& v, const Permutation& g) const {
    Permutation inv = g.inverse();
    std::vector<int> par(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) par[k] = parity(v[k]);
    return {place_permutation_sign(inv, par), place_permute(inv, v)};
  }
};

std::size_t rank_of_rows(std::vector<SparseVec> rows) {
  RowSpace space(Ring::rationals());
  for (auto& r : rows) space.insert(std::move(r));
  return space.rank();
}

}  // namespace

std::size_t invariant_rank(const SchurData& data) {
  std::size_t radix = data.code_count();
  std::size_t total = data.ambient_rank();
  Ring q = Ring::rationals();
  RowSpace space(q);
  for (int r = 1; r < data.d(); ++r)
    for (std::size_t y = 0; y < total; ++y) {
      CodeTuple t = tuple_at(y, radix, data.d());
      auto [sign, moved] = data.act_simple(r, t);
      std::size_t y2 = tuple_index(moved, radix);
      Accumulator<Index> acc;
      acc.add(static_cast<Index>(y2), q.one());
      acc.add(static_cast<Index>(y), q.from_int(-sign));
      auto row = acc.take();
      if (!row.empty()) space.insert(std::move(row));
    }
  return total - space.rank();
}

std::size_t endomorphism_rank(const SchurData& data) {
  TensorSpace v_space(data);
  std::size_t radix = data.code_count();
  std::size_t total = data.ambient_rank();
  int d = data.d();
  Ring q = Ring::rationals();
  // rows[(r, v, w)] collects the coefficient of output w in X(v s_r) - (X v) s_r.
  std::map<std::tuple<int, std::size_t, std::size_t>, Accumulator<Index>> rows;
  for (int r = 1; r < d; ++r) {
    Permutation s = Permutation::simple(d, r);
    for (std::size_t vi = 0; vi < v_space.dim; ++vi) {
      auto v = tuple_at(vi, v_space.radix, d);
      auto [sign_vs, vs] = v_space.right(v, s);
      for (std::size_t xi = 0; xi < total; ++xi) {
        CodeTuple x = tuple_at(xi, radix, d);
        if (auto a = v_space.left(x, vs)) {
          std::size_t w = tuple_index(a->second, v_space.radix);
          rows[{r, vi, w}].add(static_cast<Index>(xi), q.from_int(sign_vs * a->first));
        }
        if (auto b = v_space.left(x, v)) {
          auto [sign_s, ws] = v_space.right(b->second, s);
          std::size_t w = tuple_index(ws, v_space.radix);
          rows[{r, vi, w}].add(static_cast<Index>(xi), q.from_int(-b->first * sign_s));
        }
      }
    }
  }
  std::vector<SparseVec> list;
  for (auto& [key, acc] : rows) {
    auto row = acc.take();
    if (!row.empty()) list.push_back(std::move(row));
  }
  return total - rank_of_rows(std::move(list));
}

std::optional<std::size_t> hom_space_rank(const SchurData& data, std::size_t limit) {
  TensorSpace v_space(data);
  if (v_space.dim * v_space.dim > limit) return std::nullopt;
  int d = data.d();
  Ring q = Ring::rationals();
  BasedAlgebra w = wreath(data.base(), d);
  auto owner = std::make_shared<BasedAlgebra>(opposite(w));
  WreathIndexer idx(data.base().rank(), d);
  std::vector<BiDegree> bideg(v_space.dim);
  std::vector<int> vparity(v_space.dim);
  for (std::size_t vi = 0; vi < v_space.dim; ++vi) {
    BiDegree b;
    for (auto c : tuple_at(vi, v_space.radix, d)) b = b + data.base().bidegree(v_space.b_of(c));
    bideg[vi] = b;
    vparity[vi] = b.parity;
  }
  std::vector<std::vector<SparseVec>> action(owner->rank(), std::vector<SparseVec>(v_space.dim));
  for (Index a = 0; a < owner->rank(); ++a) {
    auto [word, g] = idx.decode(a);
    int a_parity = owner->parity(a);
    for (std::size_t vi = 0; vi < v_space.dim; ++vi) {
      auto v = tuple_at(vi, v_space.radix, d);
      auto vx = v_space.right(v, word);
      if (!vx) continue;
      auto [sign_g, vg] = v_space.right(vx->second, g);
      int sign = vx->first * sign_g * sign_of(a_parity * vparity[vi]);
      action[a][vi] = {{static_cast<Index>(tuple_index(vg, v_space.radix)), q.from_int(sign)}};
    }
  }
  BasedModule module(owner, bideg, std::move(action));
  return hom_rank(hom_space(module, module));
}

std::size_t tensor_space_rank(int n, int d, int ell) {
  return power(static_cast<std::size_t>(n) * (4 * ell - 1), d);
}

std::size_t xi_lambda_tensor_rank(const SchurData& data, const MultiComposition& lambda) {
  TensorSpace v_space(data);
  Element x = xi_lambda(data, lambda, Ring::rationals());
  AmbientElement xi = data.orbit_sum(x.at(0).first);
  Ring q = Ring::rationals();
  std::vector<SparseVec> images;
  for (std::size_t vi = 0; vi < v_space.dim; ++vi) {
    auto v = tuple_at(vi, v_space.radix, data.d());
    Accumulator<Index> acc;
    for (const auto& [t, c] : xi)
      if (auto a = v_space.left(t, v))
        acc.add(static_cast<Index>(tuple_index(a->second, v_space.radix)), q.from_int(c * a->first));
    auto img = acc.take();
    if (!img.empty()) images.push_back(std::move(img));
  }
  return rank_of_rows(std::move(images));
}

std::size_t perm_module_rank(const ColoredComposition& lambda, int ell) {
  BrauerIndex ix(ell);
  BasedAlgebra base = brauer_algebra(Ring::rationals(), ell);
  int d = weight(lambda.parts);
  std::vector<int> color_at;
  for (std::size_t k = 0; k < lambda.parts.size(); ++k)
    for (int m = 0; m < lambda.parts[k]; ++m) color_at.push_back(lambda.colors[k]);
  // Basis of e^{λ,i} A^{⊗d}: slot k runs over e^{[color]}A.
  std::vector<std::vector<Index>> slot_choices(d);
  for (int k = 0; k < d; ++k)
    for (Index b = 0; b < ix.rank(); ++b)
      if (ix.source(b) == color_at[k]) slot_choices[k].push_back(b);
  std::vector<std::vector<Index>> words{{}};
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<Index>> next;
    for (const auto& w : words)
      for (Index b : slot_choices[k]) {
        auto x = w;
        x.push_back(b);
        next.push_back(std::move(x));
      }
    words = std::move(next);
  }
  std::map<std::vector<Index>, std::size_t> word_index;
  for (std::size_t i = 0; i < words.size(); ++i) word_index.emplace(words[i], i);
  auto perms = all_permutations(d);
  std::map<Permutation, std::size_t> perm_index;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index.emplace(perms[i], i);
  std::size_t dim = words.size() * perms.size();
  if (dim > 200000) throw GuardExceeded("permutation module too large");

  std::vector<int> block = block_of_positions(lambda.parts);
  Ring q = Ring::rationals();
  RowSpace relations(q);
  for (int r = 1; r < d; ++r) {
    if (block[r - 1] != block[r]) continue;
    Permutation g = Permutation::simple(d, r);
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      std::vector<int> par(d);
      for (int k = 0; k < d; ++k) par[k] = base.parity(words[wi][k]);
      int sign = place_permutation_sign(g, par);
      std::size_t moved = word_index.at(place_permute(g, words[wi]));
      for (std::size_t pi = 0; pi < perms.size(); ++pi) {
        std::size_t src = wi * perms.size() + pi;
        std::size_t dst = moved * perms.size() + perm_index.at(g * perms[pi]);
        Accumulator<Index> acc;
        acc.add(static_cast<Index>(dst), q.from_int(sign));
        acc.add(static_cast<Index>(src), q.from_int(-1));
        auto row = acc.take();
        if (!row.empty()) relations.insert(std::move(row));
      }
    }
  }
  return dim - relations.rank();
}

std::uint64_t perm_module_formula(const ColoredComposition& lambda, int ell) {
  int d = weight(lambda.parts);
  int last = color_weight(lambda, ell - 1);
  std::uint64_t out = multinomial(lambda.parts);
  for (int k = 0; k < d - last; ++k) out *= 4;
  for (int k = 0; k < last; ++k) out *= 3;
  return out;
}

}  // namespace salg
