#include <functional>

#include "salg/brauer.hpp"

namespace salg {

AffineBrauer::AffineBrauer(Ring ring, int ell, int d, int z_cap, LoopCorrection loop, bool allow_truncation)
    : ring_(std::move(ring)),
      index_(ell),
      base_(brauer_algebra(ring_, ell)),
      d_(d),
      z_cap_(z_cap),
      loop_(loop),
      allow_truncation_(allow_truncation) {
  if (d < 1) throw std::invalid_argument("affine algebra needs d >= 1");
  if (z_cap < 0) throw std::invalid_argument("z cap must be nonnegative");
}

void AffineBrauer::add_term(Element& out, AffineMonomial m, const Scalar& s) const {
  if (s.is_zero()) return;
  for (int e : m.z)
    if (e > z_cap_) {
      if (!allow_truncation_) throw GuardExceeded("z exponent above the cap of " + std::to_string(z_cap_));
      truncated_ = true;
      return;
    }
  auto [it, fresh] = out.try_emplace(std::move(m), s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) out.erase(it);
  }
}

AffineBrauer::Element AffineBrauer::monomial(const AffineMonomial& m) const {
  Element out;
  add_term(out, m, ring_.one());
  return out;
}

namespace {

void for_each_idempotent_word(int ell, int d, const std::function<void(const std::vector<Index>&)>& f) {
  std::vector<Index> w(d, 0);
  while (true) {
    f(w);
    int k = d - 1;
    while (k >= 0 && w[k] + 1 == static_cast<Index>(ell)) w[k--] = 0;
    if (k < 0) return;
    ++w[k];
  }
}

}  // namespace

AffineBrauer::Element AffineBrauer::one() const {
  Element out;
  for_each_idempotent_word(ell(), d_, [&](const std::vector<Index>& w) {
    add_term(out, {std::vector<int>(d_, 0), w, Permutation::identity(d_)}, ring_.one());
  });
  return out;
}

AffineBrauer::Element AffineBrauer::z(int t) const {
  Element out;
  for (const auto& [m, s] : one()) {
    AffineMonomial x = m;
    ++x.z[t - 1];
    add_term(out, x, s);
  }
  return out;
}

AffineBrauer::Element AffineBrauer::s(int r) const {
  Element out;
  for (const auto& [m, c] : one()) {
    AffineMonomial x = m;
    x.w = Permutation::simple(d_, r);
    add_term(out, x, c);
  }
  return out;
}

AffineBrauer::Element AffineBrauer::word(const std::vector<Index>& b) const {
  return monomial({std::vector<int>(d_, 0), b, Permutation::identity(d_)});
}

AffineBrauer::Element AffineBrauer::slot(int k, Index b) const {
  Element out;
  for_each_idempotent_word(ell(), d_, [&](const std::vector<Index>& w) {
    if (w[k - 1] != 0) return;
    std::vector<Index> x = w;
    x[k - 1] = b;
    add_term(out, {std::vector<int>(d_, 0), x, Permutation::identity(d_)}, ring_.one());
  });
  return out;
}

AffineBrauer::Element AffineBrauer::add(const Element& x, const Element& y) const {
  Element out = x;
  for (const auto& [m, s] : y) add_term(out, m, s);
  return out;
}

AffineBrauer::Element AffineBrauer::scale(const Element& x, const Scalar& s) const {
  Element out;
  for (const auto& [m, c] : x) add_term(out, m, c * s);
  return out;
}

BiDegree AffineBrauer::bidegree(const AffineMonomial& m) const {
  BiDegree b;
  for (int e : m.z) b.degree += 4 * e;
  for (Index x : m.b) b = b + base_.bidegree(x);
  return b;
}

std::string AffineBrauer::format(const Element& x) const {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [m, s] : x) {
    if (!out.empty()) out += " + ";
    if (!s.is_one()) out += "(" + s.str() + ")";
    for (int t = 0; t < d_; ++t)
      if (m.z[t]) out += "z" + std::to_string(t + 1) + (m.z[t] > 1 ? "^" + std::to_string(m.z[t]) : "");
    std::string word;
    for (int k = 0; k < d_; ++k) word += (k ? "⊗" : "") + index_.label(m.b[k]);
    out += "[" + word + "]";
    if (!m.w.is_identity()) out += m.w.str();
  }
  return out;
}

void AffineBrauer::left_word(Element& out, const std::vector<Index>& x, const Scalar& coeff,
                             const AffineMonomial& m) const {
  int e = 0;
  for (int k = 0; k < d_; ++k) e += base_.parity(x[k]) * m.z[k];
  for (int k = 0; k < d_; ++k)
    for (int j = 0; j < k; ++j) e += base_.parity(x[k]) * base_.parity(m.b[j]);
  std::vector<std::pair<std::vector<Index>, Scalar>> acc{{{}, coeff * ring_.from_int(sign_of(e))}};
  for (int k = 0; k < d_ && !acc.empty(); ++k) {
    auto p = base_.basis_product(x[k], m.b[k]);
    std::vector<std::pair<std::vector<Index>, Scalar>> next;
    for (const auto& [w, s] : acc)
      for (const auto& [i, t] : p) {
        auto y = w;
        y.push_back(i);
        next.emplace_back(std::move(y), s * t);
      }
    acc = std::move(next);
  }
  for (auto& [w, s] : acc) add_term(out, {m.z, std::move(w), m.w}, s);
}

std::vector<std::pair<std::vector<Index>, Scalar>> AffineBrauer::correction(int r, int t,
                                                                          const std::vector<int>& idem) const {
  std::vector<std::pair<std::vector<Index>, Scalar>> out;
  std::vector<Index> base(d_);
  for (int k = 0; k < d_; ++k) base[k] = index_.e(idem[k]);
  int ir = idem[r - 1], is = idem[r];
  int at_r = t == r ? 1 : 0, at_s = t == r + 1 ? 1 : 0;
  if (ir == is) {
    int kappa = at_r - at_s;
    if (kappa) {
      for (int slot : {r - 1, r}) {
        auto w = base;
        w[slot] = index_.c(ir);
        out.emplace_back(std::move(w), ring_.from_int(kappa));
      }
    }
    int loop = loop_ == LoopCorrection::Symmetric ? at_r + at_s : 1;
    if (ir == 0 && loop) {
      auto w = base;
      w[r - 1] = index_.u();
      w[r] = index_.u();
      out.emplace_back(std::move(w), ring_.from_int(loop));
    }
  } else if (std::abs(ir - is) == 1 && at_r + at_s) {
    auto w = base;
    w[r - 1] = index_.a(is, ir);
    w[r] = index_.a(ir, is);
    out.emplace_back(std::move(w), ring_.from_int(at_r + at_s));
  }
  return out;
}

void AffineBrauer::push_s(Element& out, int r, const Scalar& coeff, const std::vector<int>& zletters, std::size_t pos,
                          const AffineMonomial& tail) const {
  if (pos == zletters.size()) {
    Permutation sr = Permutation::simple(d_, r);
    std::vector<int> par(d_);
    for (int k = 0; k < d_; ++k) par[k] = base_.parity(tail.b[k]);
    Scalar s = coeff * ring_.from_int(place_permutation_sign(sr, par));
    add_term(out, {tail.z, place_permute(sr, tail.b), sr * tail.w}, s);
    return;
  }
  int t = zletters[pos];
  // s_r z_t X = z_{s_r(t)} s_r X + C_{r,t} X
  Element moved;
  push_s(moved, r, coeff, zletters, pos + 1, tail);
  int st = t == r ? r + 1 : (t == r + 1 ? r : t);
  for (const auto& [m, s] : moved) {
    AffineMonomial x = m;
    ++x.z[st - 1];
    add_term(out, std::move(x), s);
  }
  std::vector<int> idem(d_);
  for (int k = 0; k < d_; ++k) idem[k] = index_.source(tail.b[k]);
  auto corr = correction(r, t, idem);
  if (corr.empty()) return;
  AffineMonomial rest = tail;
  for (std::size_t q = pos + 1; q < zletters.size(); ++q) ++rest.z[zletters[q] - 1];
  for (const auto& [w, c] : corr) left_word(out, w, coeff * c, rest);
}

void AffineBrauer::left_s(Element& out, int r, const Scalar& coeff, const AffineMonomial& m) const {
  std::vector<int> letters;
  for (int t = 0; t < d_; ++t)
    for (int k = 0; k < m.z[t]; ++k) letters.push_back(t + 1);
  AffineMonomial tail = m;
  std::fill(tail.z.begin(), tail.z.end(), 0);
  push_s(out, r, coeff, letters, 0, tail);
}

void AffineBrauer::left_z(Element& out, int t, const Element& x) const {
  for (const auto& [m, s] : x) {
    AffineMonomial y = m;
    ++y.z[t - 1];
    add_term(out, std::move(y), s);
  }
}

AffineBrauer::Element AffineBrauer::mul(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [m1, s1] : x) {
    auto word = m1.w.reduced_word();
    Element cur;
    for (const auto& [m2, s2] : y) add_term(cur, m2, s1 * s2);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      Element next;
      for (const auto& [m, s] : cur) left_s(next, *it, s, m);
      cur = std::move(next);
    }
    for (const auto& [m, s] : cur) {
      Element step;
      left_word(step, m1.b, s, m);
      for (const auto& [m3, s3] : step) {
        AffineMonomial z = m3;
        for (int t = 0; t < d_; ++t) z.z[t] += m1.z[t];
        add_term(out, std::move(z), s3);
      }
    }
  }
  return out;
}

std::vector<AffineMonomial> AffineBrauer::basis_of_degree(int m) const {
  std::vector<AffineMonomial> out;
  if (m < 0) return out;
  auto perms = all_permutations(d_);
  std::size_t nb = index_.rank();
  std::vector<int> z(d_, 0);
  std::function<void(int, int)> zrec = [&](int k, int left) {
    if (k == d_) {
      std::vector<Index> b(d_, 0);
      std::function<void(int, int)> brec = [&](int j, int deg) {
        if (j == d_) {
          if (deg == 0)
            for (const auto& w : perms) out.push_back({z, b, w});
          return;
        }
        for (Index x = 0; x < nb; ++x) {
          int dx = base_.bidegree(x).degree;
          if (dx > deg) continue;
          b[j] = x;
          brec(j + 1, deg - dx);
        }
      };
      brec(0, left);
      return;
    }
    for (int e = 0; 4 * e <= left; ++e) {
      z[k] = e;
      zrec(k + 1, left - 4 * e);
    }
    z[k] = 0;
  };
  zrec(0, m);
  return out;
}

std::size_t affine_monomial_count(int ell, int d, int m) {
  // the cap only guards arithmetic; counting never exceeds m/4
  AffineBrauer h(Ring::rationals(), ell, d, std::max(0, m / 4));
  return h.basis_of_degree(m).size();
}

std::size_t affine_graded_rank(const Ring& ring, int ell, int d, int m, int z_cap, LoopCorrection loop) {
  if (4 * z_cap < m - 4 && m >= 4) throw GuardExceeded("z cap too small for degree " + std::to_string(m));
  AffineBrauer h(ring, ell, d, z_cap, loop);
  auto basis = h.basis_of_degree(m);
  std::map<AffineMonomial, Index> where;
  for (std::size_t i = 0; i < basis.size(); ++i) where.emplace(basis[i], static_cast<Index>(i));
  RowSpace space(rank_field(ring));
  for (const auto& mono : basis) {
    AffineMonomial right = mono;
    right.w = Permutation::identity(d);
    // w · (z^n b), the other ordering of the basis
    AffineBrauer::Element x = h.monomial(right);
    auto word = mono.w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = h.mul(h.s(*it), x);
    std::vector<std::pair<Index, Scalar>> row;
    for (const auto& [k, s] : x) {
      auto it = where.find(k);
      if (it == where.end()) throw std::logic_error("rewriting left the degree component");
      row.emplace_back(it->second, to_field(s));
    }
    space.insert(sparse_from_unsorted(std::move(row)));
  }
  return space.rank();
}

}  // namespace salg
