#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "salg/qhs.hpp"

namespace salg {

namespace {

int par(int i) { return QHSPresentation::parity(i); }

std::vector<int> swapped(std::vector<int> i, int r) {
  std::swap(i[r - 1], i[r]);
  return i;
}

}  // namespace

QuiverHecke::QuiverHecke(Ring ring, int ell, RootVec theta, int y_degree_cap)
    : ring_(std::move(ring)), pres_(ell), theta_(std::move(theta)), y_cap_(y_degree_cap) {
  n_ = pres_.roots().height(theta_);
  if (n_ > 6) throw GuardExceeded("quiver Hecke superalgebra height above 6");
  words_ = pres_.roots().words_of(theta_);
}

void QuiverHecke::add_into(Element& out, const Element& x, const Scalar& s) const {
  for (const auto& [m, c] : x) {
    auto [it, fresh] = out.try_emplace(m, c * s);
    if (!fresh) {
      it->second += c * s;
      if (it->second.is_zero()) out.erase(it);
    } else if (it->second.is_zero()) {
      out.erase(it);
    }
  }
}

QuiverHecke::Element QuiverHecke::add(const Element& x, const Element& y) const {
  Element out = x;
  add_into(out, y, ring_.one());
  return out;
}

QuiverHecke::Element QuiverHecke::sub(const Element& x, const Element& y) const {
  Element out = x;
  add_into(out, y, -ring_.one());
  return out;
}

QuiverHecke::Element QuiverHecke::scale(const Element& x, const Scalar& s) const {
  Element out;
  add_into(out, x, s);
  return out;
}

QuiverHecke::Element QuiverHecke::monomial(const QMonomial& m, long coef) const {
  Scalar s = ring_.from_int(coef);
  if (s.is_zero()) return {};
  return {{m, s}};
}

QuiverHecke::Element QuiverHecke::idempotent(const std::vector<int>& i) const {
  return monomial({Permutation::identity(n_), std::vector<int>(n_, 0), i});
}

QuiverHecke::Element QuiverHecke::y(int s, const std::vector<int>& i) const { return normalize({-s}, i); }

QuiverHecke::Element QuiverHecke::psi(int r, const std::vector<int>& i) const { return normalize({r}, i); }

QuiverHecke::Element QuiverHecke::one() const {
  Element out;
  for (const auto& i : words_) add_into(out, idempotent(i), ring_.one());
  return out;
}

QuiverHecke::Element QuiverHecke::left_y_monomial(const Permutation& w, const std::vector<int>& k,
                                                  const std::vector<int>& i) const {
  std::vector<int> letters;
  for (int s = 1; s <= n_; ++s)
    for (int m = 0; m < k[s - 1]; ++m) letters.push_back(-s);
  for (int r : w.reduced_word()) letters.push_back(r);
  return normalize(letters, i);
}

std::vector<int> QuiverHecke::poly_letters(int u_index, int u_exp, int v_index, int v_exp) const {
  std::vector<int> out(u_exp, -u_index);
  out.insert(out.end(), v_exp, -v_index);
  return out;
}

QuiverHecke::Element QuiverHecke::poly(const TwoVarPoly& p, int r, int offset, const std::vector<int>& i) const {
  Element out;
  for (const auto& t : p) add_into(out, normalize(poly_letters(r, t.u_exp, r + offset, t.v_exp), i), ring_.from_int(t.coef));
  return out;
}

QuiverHecke::Element QuiverHecke::mul(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y) {
      if (mx.idem != left_idempotent(my)) continue;
      std::vector<int> letters = mx.w.reduced_word();
      for (int s = 1; s <= n_; ++s) letters.insert(letters.end(), mx.k[s - 1], -s);
      for (int r : my.w.reduced_word()) letters.push_back(r);
      for (int s = 1; s <= n_; ++s) letters.insert(letters.end(), my.k[s - 1], -s);
      add_into(out, normalize(letters, my.idem), cx * cy);
    }
  return out;
}

std::vector<int> QuiverHecke::left_idempotent(const QMonomial& m) const {
  std::vector<int> i = m.idem;
  auto word = m.w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) i = swapped(std::move(i), *it);
  return i;
}

int QuiverHecke::psi_degree(const Permutation& w, const std::vector<int>& i) const {
  int deg = 0;
  std::vector<int> j = i;
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    deg += pres_.psi_bidegree(j[*it - 1], j[*it]).degree;
    j = swapped(std::move(j), *it);
  }
  return deg;
}

BiDegree QuiverHecke::bidegree(const QMonomial& m) const {
  BiDegree out;
  for (int s = 0; s < n_; ++s)
    for (int e = 0; e < m.k[s]; ++e) out = out + pres_.y_bidegree(m.idem[s]);
  std::vector<int> j = m.idem;
  auto word = m.w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = out + pres_.psi_bidegree(j[*it - 1], j[*it]);
    j = swapped(std::move(j), *it);
  }
  return out;
}

int QuiverHecke::min_degree() const {
  int best = 0;
  for (const auto& w : all_permutations(n_))
    for (const auto& i : words_) best = std::min(best, psi_degree(w, i));
  return best;
}

const std::vector<QMonomial>& QuiverHecke::basis_of_degree(int m) const {
  if (auto it = by_degree_.find(m); it != by_degree_.end()) return it->second;
  std::vector<QMonomial> out;
  for (const auto& w : all_permutations(n_))
    for (const auto& i : words_) {
      int rest = m - psi_degree(w, i);
      if (rest < 0) continue;
      std::vector<int> k(n_, 0);
      auto rec = [&](auto& self, int s, int left) -> void {
        if (s == n_) {
          if (left == 0) out.push_back({w, k, i});
          return;
        }
        int step = pres_.y_bidegree(i[s]).degree;
        for (int e = 0; e * step <= left; ++e) {
          k[s] = e;
          self(self, s + 1, left - e * step);
        }
        k[s] = 0;
      };
      rec(rec, 0, rest);
    }
  std::sort(out.begin(), out.end());
  return by_degree_.emplace(m, std::move(out)).first->second;
}

QuiverHecke::Move QuiverHecke::next_move(const std::vector<int>& word, bool reduced,
                                         const std::vector<int>& target) const {
  if (auto it = moves_.find(word); it != moves_.end()) return it->second;
  if (!reduced)
    for (std::size_t p = 0; p + 1 < word.size(); ++p)
      if (word[p] == word[p + 1]) return moves_.emplace(word, Move{Move::Square, static_cast<int>(p)}).first->second;
  auto goal = [&](const std::vector<int>& a) {
    if (reduced) return a == target;
    for (std::size_t p = 0; p + 1 < a.size(); ++p)
      if (a[p] == a[p + 1]) return true;
    return false;
  };
  auto neighbours = [](const std::vector<int>& a) {
    std::vector<std::pair<Move, std::vector<int>>> out;
    for (std::size_t p = 0; p + 1 < a.size(); ++p) {
      if (std::abs(a[p] - a[p + 1]) > 1) {
        auto b = a;
        std::swap(b[p], b[p + 1]);
        out.push_back({{Move::Commute, static_cast<int>(p)}, std::move(b)});
      }
      if (p + 2 < a.size() && a[p] == a[p + 2] && std::abs(a[p] - a[p + 1]) == 1) {
        auto b = a;
        std::swap(b[p], b[p + 1]);
        b[p + 2] = b[p];
        out.push_back({{Move::Braid, static_cast<int>(p)}, std::move(b)});
      }
    }
    return out;
  };
  // Breadth-first search; remember the first move taken from the start word.
  std::map<std::vector<int>, std::optional<Move>> first;
  std::deque<std::vector<int>> queue{word};
  first.emplace(word, std::nullopt);
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    if (goal(a) && a != word) {
      Move m = *first.at(a);
      moves_.emplace(word, m);
      return m;
    }
    for (auto& [mv, b] : neighbours(a)) {
      if (first.count(b)) continue;
      first.emplace(b, a == word ? std::optional<Move>(mv) : first.at(a));
      queue.push_back(std::move(b));
    }
  }
  throw std::logic_error("no rewriting path for ψ word");
}

QuiverHecke::Element QuiverHecke::normalize(const std::vector<int>& letters, const std::vector<int>& idem) const {
  auto key = std::pair{letters, idem};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::size_t len = letters.size();
  // after[t]: idempotent immediately to the right of letter t
  std::vector<std::vector<int>> after(len + 1);
  after[len] = idem;
  for (std::size_t t = len; t-- > 0;) {
    after[t] = after[t + 1];
    if (t + 1 < len && letters[t + 1] > 0) after[t] = swapped(after[t + 1], letters[t + 1]);
  }
  auto splice = [&](std::size_t from, std::size_t to, const std::vector<int>& middle) {
    std::vector<int> out(letters.begin(), letters.begin() + from);
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), letters.begin() + to, letters.end());
    return out;
  };
  Element result;
  auto emit = [&](const std::vector<int>& w, long coef) {
    if (coef) add_into(result, normalize(w, idem), ring_.from_int(coef));
  };

  for (std::size_t t = len - (len ? 1 : 0); t-- > 0;) {
    if (letters[t] >= 0 || letters[t + 1] <= 0) continue;
    int s = -letters[t], r = letters[t + 1];
    const auto& j = after[t + 1];
    int eps = sign_of(par(j[r - 1]) * par(j[r]));
    bool equal = j[r - 1] == j[r];
    if (s != r && s != r + 1) {
      emit(splice(t, t + 2, {r, -s}), sign_of(par(j[r - 1]) * par(j[r]) * par(j[s - 1])));
    } else if (s == r + 1) {
      emit(splice(t, t + 2, {r, -r}), eps);
      if (equal) emit(splice(t, t + 2, {}), 1);
    } else {
      emit(splice(t, t + 2, {r, -(r + 1)}), eps);
      if (equal) emit(splice(t, t + 2, {}), -eps);
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  std::size_t split = 0;
  while (split < len && letters[split] > 0) ++split;
  std::vector<int> word(letters.begin(), letters.begin() + split);
  std::vector<int> ys(letters.begin() + split, letters.end());
  Permutation w = Permutation::from_word(n_, word);
  bool reduced = w.length() == static_cast<int>(word.size());
  auto target = w.reduced_word();
  if (reduced && word == target) {
    int exponent = 0, total = 0;
    std::vector<int> k(n_, 0);
    // bubble the y letters into increasing order
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        int sa = -ys[a], sb = -ys[b];
        if (sa > sb) exponent += par(idem[sa - 1]) * par(idem[sb - 1]);
      }
    for (int l : ys) {
      ++k[-l - 1];
      total += pres_.y_bidegree(idem[-l - 1]).degree;
    }
    if (total > y_cap_) throw GuardExceeded("y-degree cap exceeded");
    result = monomial({w, k, idem}, sign_of(exponent));
    return memo_.emplace(key, std::move(result)).first->second;
  }

  Move mv = next_move(word, reduced, target);
  std::size_t p = static_cast<std::size_t>(mv.pos);
  if (mv.kind == Move::Commute) {
    int r = word[p], s = word[p + 1];
    const auto& j = after[p + 1];
    emit(splice(p, p + 2, {s, r}), sign_of(par(j[r - 1]) * par(j[r]) * par(j[s - 1]) * par(j[s])));
  } else if (mv.kind == Move::Braid) {
    int lo = std::min(word[p], word[p + 1]);
    const auto& j = after[p + 2];
    bool high_outer = word[p] == lo + 1;
    std::vector<int> flipped = high_outer ? std::vector<int>{lo, lo + 1, lo} : std::vector<int>{lo + 1, lo, lo + 1};
    emit(splice(p, p + 3, flipped), 1);
    for (const auto& term : pres_.b_poly(j[lo - 1], j[lo], j[lo + 1]))
      emit(splice(p, p + 3, poly_letters(lo, term.u_exp, lo + 2, term.v_exp)), high_outer ? term.coef : -term.coef);
  } else {
    int r = word[p];
    const auto& j = after[p + 1];
    for (const auto& term : pres_.q_poly(j[r - 1], j[r]))
      emit(splice(p, p + 2, poly_letters(r, term.u_exp, r + 1, term.v_exp)), term.coef);
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

std::string QuiverHecke::format(const Element& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    for (int r : m.w.reduced_word()) os << "psi" << r;
    for (int s = 0; s < n_; ++s)
      if (m.k[s]) os << "y" << s + 1 << (m.k[s] > 1 ? "^" + std::to_string(m.k[s]) : "");
    os << "1_";
    for (int i : m.idem) os << i;
  }
  return os.str();
}

namespace {

struct Sampler {
  const QuiverHecke& h;
  std::mt19937_64 rng;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  std::vector<int> word() { return h.words()[uniform(0, static_cast<int>(h.words().size()) - 1)]; }

  // Random normal-form monomial whose right idempotent is `right`.
  QMonomial ending_at(const std::vector<int>& right) {
    auto perms = all_permutations(h.n());
    QMonomial m{perms[uniform(0, static_cast<int>(perms.size()) - 1)], std::vector<int>(h.n(), 0), right};
    for (int s = 0; s < h.n(); ++s) m.k[s] = uniform(0, 1);
    return m;
  }
  // Random monomial whose left idempotent is `left`.
  QMonomial starting_at(const std::vector<int>& left) {
    auto perms = all_permutations(h.n());
    Permutation w = perms[uniform(0, static_cast<int>(perms.size()) - 1)];
    // right idempotent i with w·i = left
    std::vector<int> right = left;
    for (int r : w.reduced_word()) std::swap(right[r - 1], right[r]);
    QMonomial m{w, std::vector<int>(h.n(), 0), right};
    for (int s = 0; s < h.n(); ++s) m.k[s] = uniform(0, 1);
    return m;
  }
};

}  // namespace

std::vector<RelationTally> relation_suite(const Ring& ring, int ell, const RootVec& theta, std::size_t samples,
                                          std::uint64_t seed) {
  QuiverHecke h(ring, ell, theta);
  const auto& pres = h.presentation();
  int n = h.n();
  Sampler smp{h, std::mt19937_64(seed)};
  std::vector<RelationTally> out;
  using E = QuiverHecke::Element;
  auto y1 = [&](int s, const std::vector<int>& i) { return h.y(s, i); };

  // Each check returns (lhs, rhs, right idempotent of the relation, left idempotent of the relation).
  using Check = std::function<std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>>()>;
  auto run = [&](const std::string& name, const Check& check) {
    RelationTally t;
    t.name = name;
    for (std::size_t k = 0; k < samples; ++k) {
      auto rel = check();
      if (!rel) continue;
      auto& [lhs, rhs, right, left] = *rel;
      E l = h.monomial(smp.ending_at(left));
      E r = h.monomial(smp.starting_at(right));
      E a = h.mul(h.mul(l, lhs), r);
      E b = h.mul(l, h.mul(rhs, r));
      ++t.trials;
      if (a != b) {
        ++t.failures;
        if (t.first_failure.empty()) t.first_failure = h.format(a) + " != " + h.format(b);
      }
    }
    out.push_back(std::move(t));
  };
  auto r_index = [&]() { return smp.uniform(1, n - 1); };

  run("orthogonal idempotents", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
    auto i = smp.word(), j = smp.word();
    E rhs = i == j ? h.idempotent(i) : E{};
    return std::tuple{h.mul(h.idempotent(i), h.idempotent(j)), rhs, j, i};
  });
  run("unit", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
    auto i = smp.word();
    return std::tuple{h.mul(h.one(), h.idempotent(i)), h.idempotent(i), i, i};
  });
  run("dots keep idempotents", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
    auto i = smp.word();
    int s = smp.uniform(1, n);
    E ys;
    for (const auto& j : h.words()) ys = h.add(ys, y1(s, j));
    return std::tuple{h.mul(ys, h.idempotent(i)), h.mul(h.idempotent(i), ys), i, i};
  });
  if (n >= 2) {
    run("crossings permute idempotents", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
      auto i = smp.word();
      int r = r_index();
      E ps;
      for (const auto& j : h.words()) ps = h.add(ps, h.psi(r, j));
      auto si = swapped(i, r);
      return std::tuple{h.mul(ps, h.idempotent(i)), h.mul(h.idempotent(si), ps), i, si};
    });
  }
  run("dots supercommute", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
    auto i = smp.word();
    int r = smp.uniform(1, n), s = smp.uniform(1, n);
    long sign = (r != s && par(i[r - 1]) && par(i[s - 1])) ? -1 : 1;
    return std::tuple{h.mul(y1(r, i), y1(s, i)), h.scale(h.mul(y1(s, i), y1(r, i)), ring.from_int(sign)), i, i};
  });
  if (n >= 2) {
    if (n >= 3) {
      run("distant dot and crossing", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
        auto i = smp.word();
        int r = r_index(), s = smp.uniform(1, n);
        if (s == r || s == r + 1) return std::nullopt;
        auto si = swapped(i, r);
        long sign = sign_of(par(i[r - 1]) * par(i[r]) * par(i[s - 1]));
        return std::tuple{h.mul(h.psi(r, i), y1(s, i)), h.scale(h.mul(y1(s, si), h.psi(r, i)), ring.from_int(sign)), i,
                          si};
      });
    }
    auto dot_crossing = [&](bool second) {
      return [&, second]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
        auto i = smp.word();
        int r = r_index();
        auto si = swapped(i, r);
        Scalar eps = ring.from_int(sign_of(par(i[r - 1]) * par(i[r])));
        E lhs = second ? h.sub(h.mul(y1(r + 1, si), h.psi(r, i)), h.scale(h.mul(h.psi(r, i), y1(r, i)), eps))
                       : h.sub(h.mul(h.psi(r, i), y1(r + 1, i)), h.scale(h.mul(y1(r, si), h.psi(r, i)), eps));
        E rhs = i[r - 1] == i[r] ? h.idempotent(i) : E{};
        return std::tuple{lhs, rhs, i, si};
      };
    };
    run("dot below crossing", dot_crossing(false));
    run("dot above crossing", dot_crossing(true));
    run("quadratic", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
      auto i = smp.word();
      int r = r_index();
      auto si = swapped(i, r);
      return std::tuple{h.mul(h.psi(r, si), h.psi(r, i)), h.poly(pres.q_poly(i[r - 1], i[r]), r, 1, i), i, i};
    });
  }
  if (n >= 4) {
    run("distant crossings", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
      auto i = smp.word();
      int r = r_index(), s = r_index();
      if (std::abs(r - s) <= 1) return std::nullopt;
      auto si = swapped(i, s), ri = swapped(i, r), both = swapped(si, r);
      long sign = sign_of(par(i[r - 1]) * par(i[r]) * par(i[s - 1]) * par(i[s]));
      return std::tuple{h.mul(h.psi(r, si), h.psi(s, i)), h.scale(h.mul(h.psi(s, ri), h.psi(r, i)), ring.from_int(sign)),
                        i, both};
    });
  }
  if (n >= 3) {
    run("braid", [&]() -> std::optional<std::tuple<E, E, std::vector<int>, std::vector<int>>> {
      auto i = smp.word();
      int r = smp.uniform(1, n - 2);
      auto a1 = swapped(i, r + 1), a2 = swapped(a1, r);
      E lhs = h.mul(h.psi(r + 1, a2), h.mul(h.psi(r, a1), h.psi(r + 1, i)));
      auto b1 = swapped(i, r), b2 = swapped(b1, r + 1);
      lhs = h.sub(lhs, h.mul(h.psi(r, b2), h.mul(h.psi(r + 1, b1), h.psi(r, i))));
      E rhs = h.poly(pres.b_poly(i[r - 1], i[r], i[r + 1]), r, 2, i);
      return std::tuple{lhs, rhs, i, swapped(a2, r + 1)};
    });
  }
  // Associativity on random monomial triples.
  {
    RelationTally t;
    t.name = "associativity";
    for (std::size_t k = 0; k < samples; ++k) {
      QMonomial c = smp.ending_at(smp.word());
      QMonomial b = smp.ending_at(h.left_idempotent(c));
      QMonomial a = smp.ending_at(h.left_idempotent(b));
      E x = h.monomial(a), y = h.monomial(b), z = h.monomial(c);
      E lhs = h.mul(h.mul(x, y), z), rhs = h.mul(x, h.mul(y, z));
      ++t.trials;
      if (lhs != rhs) {
        ++t.failures;
        if (t.first_failure.empty()) t.first_failure = h.format(lhs) + " != " + h.format(rhs);
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<GradedDimCheck> graded_dim_check(const Ring& ring, int ell, const RootVec& theta, int min_degree,
                                             int max_degree) {
  QuiverHecke h(ring, ell, theta);
  std::vector<GradedDimCheck> out;
  for (int m = min_degree; m <= max_degree; ++m) {
    const auto& basis = h.basis_of_degree(m);
    std::map<QMonomial, Index> column;
    for (const auto& b : basis) column.emplace(b, static_cast<Index>(column.size()));
    RowSpace space(rank_field(ring));
    for (const auto& b : basis) {
      // k: the dots of b carried to the top of their strands
      auto word = b.w.reduced_word();
      std::vector<int> k(b.k.size(), 0);
      for (int s = 1; s <= static_cast<int>(b.k.size()); ++s) {
        int pos = s;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          if (pos == *it) pos = *it + 1;
          else if (pos == *it + 1) pos = *it;
        }
        k[pos - 1] = b.k[s - 1];
      }
      auto x = h.left_y_monomial(b.w, k, b.idem);
      std::vector<std::pair<Index, Scalar>> row;
      for (const auto& [mono, c] : x) row.emplace_back(column.at(mono), to_field(c));
      space.insert(sparse_from_unsorted(std::move(row)));
    }
    out.push_back({m, basis.size(), space.rank()});
  }
  return out;
}

}  // namespace salg
