#include <algorithm>
#include <bit>

#include "salg/superkernel.hpp"

namespace salg {

namespace {

using Mask = std::uint32_t;

// c^a c^b = sign * c^{a xor b}: every c_j of b moves left past the c_i of a with i > j.
int clifford_sign(Mask a, Mask b) {
  int e = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    e += std::popcount(a >> (j + 1));
  }
  return sign_of(e);
}

std::string clifford_label(Mask m, int n) {
  if (!m) return "1";
  std::string s;
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) s += "c" + std::to_string(i + 1);
  return s;
}

// w c^m w^{-1} = sign * c^{w(m)}
std::pair<int, Mask> permute_clifford(const Permutation& w, Mask m) {
  std::vector<int> image;
  for (Mask rest = m; rest; rest &= rest - 1) image.push_back(w(std::countr_zero(rest) + 1) - 1);
  int e = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++e;
  Mask out = 0;
  for (int x : image) out |= Mask{1} << x;
  return {sign_of(e), out};
}

std::vector<Scalar> delta_form(const Ring& ring, std::size_t rank, Index at_unit) {
  std::vector<Scalar> f(rank, ring.zero());
  f[at_unit] = ring.one();
  return f;
}

// Integer elements of the crossed product 𝒞_n ⋊ 𝔖_n, used only to pin down signs in 𝒯_n.
using Crossed = std::map<std::pair<Mask, Permutation>, long>;

Crossed crossed_mul(const Crossed& x, const Crossed& y) {
  Crossed out;
  for (const auto& [k1, a] : x)
    for (const auto& [k2, b] : y) {
      auto [s1, moved] = permute_clifford(k1.second, k2.first);
      int s2 = clifford_sign(k1.first, moved);
      auto key = std::make_pair(k1.first ^ moved, k1.second * k2.second);
      long v = out[key] + s1 * s2 * a * b;
      if (v) out[key] = v;
      else out.erase(key);
    }
  return out;
}

// Image of t_r, up to the scalar 1/sqrt(-2): (c_r - c_{r+1}) s_r.
Crossed crossed_generator(int n, int r) {
  Permutation s = Permutation::simple(n, r);
  return {{{Mask{1} << (r - 1), s}, 1}, {{Mask{1} << r, s}, -1}};
}

// x = factor * y for some factor in {±1, ±2}, returned.
long crossed_ratio(const Crossed& x, const Crossed& y) {
  if (x.size() != y.size() || x.empty()) throw std::logic_error("twisted table: images are not proportional");
  const auto& [k, a] = *x.begin();
  auto it = y.find(k);
  if (it == y.end() || a % it->second) throw std::logic_error("twisted table: images are not proportional");
  long f = a / it->second;
  for (const auto& [key, v] : x) {
    auto jt = y.find(key);
    if (jt == y.end() || jt->second * f != v) throw std::logic_error("twisted table: images are not proportional");
  }
  return f;
}

}  // namespace

BasedAlgebra clifford(const Ring& ring, int n) {
  if (n < 0 || n > 16) throw std::invalid_argument("clifford: n out of range");
  Mask size = Mask{1} << n;
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (Mask m = 0; m < size; ++m) {
    labels.push_back(clifford_label(m, n));
    bideg.push_back({0, std::popcount(m) & 1});
  }
  Scalar one = ring.one();
  BasedAlgebra a(ring, std::move(labels), std::move(bideg), {{0, one}}, [ring](Index x, Index y) -> Element {
    return {{x ^ y, ring.from_int(clifford_sign(x, y))}};
  });
  a.set_form(delta_form(ring, size, 0));
  return a;
}

TwistedTable twisted_table(int n) {
  TwistedTable tab;
  tab.n = n;
  tab.perms = all_permutations(n);
  for (std::size_t i = 0; i < tab.perms.size(); ++i) tab.index.emplace(tab.perms[i], static_cast<Index>(i));
  std::vector<Crossed> image(tab.perms.size());
  std::vector<Crossed> gens;
  for (int r = 1; r < n; ++r) gens.push_back(crossed_generator(n, r));
  for (std::size_t i = 0; i < tab.perms.size(); ++i) {
    Crossed x{{{0, Permutation::identity(n)}, 1}};
    for (int r : tab.perms[i].reduced_word()) x = crossed_mul(x, gens[r - 1]);
    image[i] = std::move(x);
  }
  tab.right.assign(tab.perms.size(), {});
  for (std::size_t i = 0; i < tab.perms.size(); ++i)
    for (int r = 1; r < n; ++r) {
      const Permutation& w = tab.perms[i];
      Index j = tab.index.at(w.times_simple_right(r));
      long f = crossed_ratio(crossed_mul(image[i], gens[r - 1]), image[j]);
      // a length drop picks up t_r^2, whose image is -2
      if (w.has_right_descent(r)) f /= -2;
      tab.right[i].emplace_back(static_cast<int>(f), j);
    }
  return tab;
}

BasedAlgebra twisted_symmetric(const Ring& ring, int n) {
  auto tab = std::make_shared<TwistedTable>(twisted_table(n));
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (const auto& w : tab->perms) {
    labels.push_back("t" + w.str());
    bideg.push_back({0, w.length() & 1});
  }
  Index id = tab->index.at(Permutation::identity(n));
  BasedAlgebra a(ring, std::move(labels), std::move(bideg), {{id, ring.one()}}, [tab, ring](Index x, Index y) -> Element {
    int sign = 1;
    Index cur = x;
    for (int r : tab->perms[y].reduced_word()) {
      auto [s, next] = tab->right[cur][r - 1];
      sign *= s;
      cur = next;
    }
    return {{cur, ring.from_int(sign)}};
  });
  a.set_form(delta_form(ring, tab->perms.size(), id));
  return a;
}

BasedAlgebra group_algebra(const Ring& ring, int d) {
  auto perms = std::make_shared<std::vector<Permutation>>(all_permutations(d));
  auto index = std::make_shared<std::map<Permutation, Index>>();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms->size(); ++i) {
    index->emplace((*perms)[i], static_cast<Index>(i));
    labels.push_back((*perms)[i].str());
  }
  Index id = index->at(Permutation::identity(d));
  BasedAlgebra a(ring, std::move(labels), std::vector<BiDegree>(perms->size()), {{id, ring.one()}},
                 [perms, index, ring](Index x, Index y) -> Element {
                   return {{index->at((*perms)[x] * (*perms)[y]), ring.one()}};
                 });
  a.set_form(delta_form(ring, perms->size(), id));
  return a;
}

namespace {

struct HeckeData {
  Ring ring;
  Scalar xi;
  std::vector<Permutation> perms;
  std::map<Permutation, Index> index;

  HeckeData(const Ring& r, int n, const Scalar& q) : ring(r), xi(q - q.inverse()), perms(all_permutations(n)) {
    for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Index>(i));
  }

  // (Σ a_w T_w) T_r
  Element times_generator(const Element& x, int r) const {
    Accumulator<Index> acc;
    for (const auto& [i, s] : x) {
      const Permutation& w = perms[i];
      Index j = index.at(w.times_simple_right(r));
      if (w.has_right_descent(r)) {
        acc.add(i, s * xi);
        acc.add(j, s);
      } else {
        acc.add(j, s);
      }
    }
    return acc.take();
  }

  // T_r (Σ a_w T_w)
  Element generator_times(int r, const Element& x) const {
    Accumulator<Index> acc;
    for (const auto& [i, s] : x) {
      const Permutation& w = perms[i];
      Index j = index.at(w.times_simple_left(r));
      if (w.has_left_descent(r)) {
        acc.add(i, s * xi);
        acc.add(j, s);
      } else {
        acc.add(j, s);
      }
    }
    return acc.take();
  }
};

void check_generic(const Scalar& q) {
  Scalar q2 = q * q;
  if (q.is_zero() || q2.is_one()) throw std::invalid_argument("Hecke parameter must satisfy q^2 != 1");
  if (!q.is_unit()) throw std::invalid_argument("Hecke parameter must be a unit");
}

}  // namespace

BasedAlgebra hecke(const Ring& ring, int n, const Scalar& q) {
  check_generic(q);
  auto h = std::make_shared<HeckeData>(ring, n, q);
  std::vector<std::string> labels;
  for (const auto& w : h->perms) labels.push_back("T" + w.str());
  Index id = h->index.at(Permutation::identity(n));
  BasedAlgebra a(ring, std::move(labels), std::vector<BiDegree>(h->perms.size()), {{id, ring.one()}},
                 [h](Index x, Index y) {
                   Element cur{{x, h->ring.one()}};
                   for (int r : h->perms[y].reduced_word()) cur = h->times_generator(cur, r);
                   return cur;
                 });
  a.set_form(delta_form(ring, h->perms.size(), id));
  return a;
}

namespace {

// Basis T_g c^m, index = perm_index * 2^n + m.
struct OlshanskiData {
  HeckeData hecke;
  int n;
  Mask size;

  OlshanskiData(const Ring& r, int n_, const Scalar& q) : hecke(r, n_, q), n(n_), size(Mask{1} << n_) {}

  using Cliff = std::map<Mask, Scalar>;

  void add_to(Cliff& c, Mask m, const Scalar& s) const {
    auto [it, fresh] = c.try_emplace(m, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  // Ψ for T_r on a monomial c^m.
  Cliff psi(int r, Mask m) const {
    Cliff out;
    Mask bit_r = Mask{1} << (r - 1);
    if (!(m & bit_r)) return out;
    Mask prefix = m & (bit_r - 1);
    Mask suffix = m & ~((bit_r << 1) - 1);
    Permutation s = Permutation::simple(n, r);
    auto [ssign, phi_suffix] = permute_clifford(s, suffix);
    const Ring& ring = hecke.ring;
    for (int which = 0; which < 2; ++which) {
      Mask mid = which ? (bit_r << 1) : bit_r;
      Scalar coeff = which ? -hecke.xi : hecke.xi;
      int sg = clifford_sign(prefix, mid);
      Mask pm = prefix ^ mid;
      sg *= clifford_sign(pm, phi_suffix) * ssign;
      add_to(out, pm ^ phi_suffix, coeff * ring.from_int(sg));
    }
    return out;
  }

  // c-part times T_{word[pos..]}, as Σ T_g c^m.
  Element clifford_times_word(const Cliff& x, const std::vector<int>& word, std::size_t pos) const {
    const Ring& ring = hecke.ring;
    if (pos == word.size()) {
      Element out;
      Index id = hecke.index.at(Permutation::identity(n));
      for (const auto& [m, s] : x) out.emplace_back(static_cast<Index>(id * size + m), s);
      return sparse_from_unsorted(std::move(out));
    }
    int r = word[pos];
    Permutation s = Permutation::simple(n, r);
    Cliff phi, rest;
    for (const auto& [m, c] : x) {
      auto [sg, pm] = permute_clifford(s, m);
      add_to(phi, pm, c * ring.from_int(sg));
      for (const auto& [pm2, c2] : psi(r, m)) add_to(rest, pm2, c * c2);
    }
    Element out;
    // T_r · (Σ T_g c^m)
    Element tail = clifford_times_word(phi, word, pos + 1);
    std::map<Mask, Element> by_mask;
    for (const auto& [i, c] : tail) by_mask[i % size].emplace_back(i / size, c);
    Accumulator<Index> acc;
    for (const auto& [m, hel] : by_mask)
      for (const auto& [g, c] : hecke.generator_times(r, hel)) acc.add(static_cast<Index>(g * size + m), c);
    if (!rest.empty())
      for (const auto& [i, c] : clifford_times_word(rest, word, pos + 1)) acc.add(i, c);
    return acc.take();
  }

  Element product(Index x, Index y) const {
    const Ring& ring = hecke.ring;
    Index gx = x / size, gy = y / size;
    Mask mx = x % size, my = y % size;
    // (T_gx c^mx)(T_gy c^my) = T_gx (c^mx T_gy) c^my
    Cliff start{{mx, ring.one()}};
    Element middle = clifford_times_word(start, hecke.perms[gy].reduced_word(), 0);
    Accumulator<Index> acc;
    std::map<Mask, Element> by_mask;
    for (const auto& [i, c] : middle) {
      Mask m = i % size;
      int sg = clifford_sign(m, my);
      by_mask[m ^ my].emplace_back(i / size, c * ring.from_int(sg));
    }
    for (auto& [m, hel] : by_mask) {
      Element cur = sparse_from_unsorted(std::move(hel));
      // T_gx * cur: apply the generators of gx from the right end of its word
      auto word = hecke.perms[gx].reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it) cur = hecke.generator_times(*it, cur);
      for (const auto& [g, c] : cur) acc.add(static_cast<Index>(g * size + m), c);
    }
    return acc.take();
  }
};

}  // namespace

BasedAlgebra olshanski(const Ring& ring, int n, const Scalar& q) {
  check_generic(q);
  auto o = std::make_shared<OlshanskiData>(ring, n, q);
  std::vector<std::string> labels;
  std::vector<BiDegree> bideg;
  for (const auto& w : o->hecke.perms)
    for (Mask m = 0; m < o->size; ++m) {
      labels.push_back("T" + w.str() + (m ? clifford_label(m, n) : ""));
      bideg.push_back({0, std::popcount(m) & 1});
    }
  Index id = o->hecke.index.at(Permutation::identity(n)) * o->size;
  std::size_t rank = labels.size();
  BasedAlgebra a(ring, std::move(labels), std::move(bideg), {{id, ring.one()}},
                 [o](Index x, Index y) { return o->product(x, y); });
  a.set_form(delta_form(ring, rank, id));
  return a;
}

BasedAlgebra sergeev(const Ring& ring, int n) {
  BasedAlgebra a = wreath(clifford(ring, 1), n);
  WreathIndexer idx(2, n);
  Index id = idx.encode(std::vector<Index>(n, 0), Permutation::identity(n));
  a.set_form(delta_form(ring, a.rank(), id));
  return a;
}

}  // namespace salg
