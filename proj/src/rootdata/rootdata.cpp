#include "salg/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "salg/coeffs.hpp"

namespace salg {

std::vector<int> flatten(const DivWord& w) {
  std::vector<int> out;
  for (const auto& [letter, mult] : w) out.insert(out.end(), mult, letter);
  return out;
}

std::uint64_t div_factorial(const DivWord& w) {
  std::uint64_t f = 1;
  for (const auto& x : w) f *= factorial(x.mult);
  return f;
}

std::string to_string(const DivWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k].letter);
    if (w[k].mult != 1) s += "^(" + std::to_string(w[k].mult) + ")";
  }
  return s;
}

std::string to_string(const RootVec& theta, bool as_list) {
  std::string s = as_list ? "[" : "";
  for (std::size_t i = 0; i < theta.size(); ++i) s += (i ? "," : "") + std::to_string(theta[i]);
  return as_list ? s + "]" : s;
}

RootSystem::RootSystem(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("RootSystem needs ell >= 1");
  int n = ell + 1;
  gram_.assign(n, std::vector<int>(n, 0));
  if (ell == 1) {
    gram_ = {{2, -4}, {-4, 8}};
    return;
  }
  for (int i = 0; i < n; ++i) gram_[i][i] = 4;
  gram_[0][0] = 2;
  gram_[ell][ell] = 8;
  for (int i = 0; i + 1 < ell; ++i) gram_[i][i + 1] = gram_[i + 1][i] = -2;
  gram_[ell - 1][ell] = gram_[ell][ell - 1] = -4;
}

void RootSystem::check(const RootVec& theta) const {
  if (static_cast<int>(theta.size()) != rank()) throw ShapeError("root vector has wrong length");
}

RootVec RootSystem::simple(int i) const {
  RootVec v = zero();
  v.at(i) = 1;
  return v;
}

RootVec RootSystem::delta() const {
  RootVec v(rank(), 2);
  v[ell_] = 1;
  return v;
}

int RootSystem::height(const RootVec& theta) const {
  check(theta);
  int h = 0;
  for (int m : theta) h += m;
  return h;
}

int RootSystem::pairing(const RootVec& a, const RootVec& b) const {
  check(a);
  check(b);
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

int RootSystem::copairing(const RootVec& theta, int i) const {
  check(theta);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += theta[j] * gram_[j][i];
  return 2 * s / gram_[i][i];
}

RootVec RootSystem::wt(const std::vector<int>& word) const {
  RootVec v = zero();
  for (int i : word) ++v.at(i);
  return v;
}

std::vector<std::vector<int>> RootSystem::words_of(const RootVec& theta) const {
  if (height(theta) > 12) throw GuardExceeded("words_of: height above 12");
  std::vector<int> w;
  for (int i = 0; i < rank(); ++i) w.insert(w.end(), theta[i], i);
  std::vector<std::vector<int>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Nucleus> RootSystem::nuclei(int max_height) const {
  std::vector<Nucleus> out;
  std::set<RootVec> seen;
  std::deque<Nucleus> queue;
  queue.push_back({zero(), {}});
  seen.insert(zero());
  while (!queue.empty()) {
    Nucleus cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      int a = lambda0_copairing(i) - copairing(cur.rho, i);
      if (a <= 0) continue;
      RootVec next = cur.rho;
      next[i] += a;
      if (height(next) > max_height || seen.count(next)) continue;
      seen.insert(next);
      Nucleus n{next, cur.applied_word};
      n.applied_word.push_back(i);
      queue.push_back(std::move(n));
    }
    out.push_back(std::move(cur));
  }
  return out;
}

std::optional<BlockLabel> RootSystem::nucleus_mass(const RootVec& theta) const {
  check(theta);
  RootVec d = delta();
  for (const auto& n : nuclei(height(theta))) {
    RootVec diff(rank());
    for (int i = 0; i < rank(); ++i) diff[i] = theta[i] - n.rho[i];
    if (diff[ell_] < 0) continue;
    int mass = diff[ell_];
    bool ok = true;
    for (int i = 0; i < rank(); ++i) ok = ok && diff[i] == mass * d[i];
    if (ok) return BlockLabel{n.rho, mass};
  }
  return std::nullopt;
}

bool RootSystem::is_rock(const RootVec& theta) const {
  auto label = nucleus_mass(theta);
  if (!label) return false;
  int d = label->mass;
  if (copairing(theta, 0) < 2 * d) return false;
  for (int i = 1; i <= ell_; ++i)
    if (copairing(theta, i) < d - 1) return false;
  return true;
}

DivWord RootSystem::i_rho(const RootVec& rho, const std::vector<int>& applied_word) const {
  check(rho);
  RootVec cur = zero();
  DivWord out;
  for (int i : applied_word) {
    if (i < 0 || i > ell_) throw std::invalid_argument("i_rho: letter out of range");
    int a = lambda0_copairing(i) - copairing(cur, i);
    if (a < 0) throw std::invalid_argument("i_rho: negative exponent, word is not reduced");
    out.push_back({i, a});
    cur[i] += a;
  }
  if (cur != rho) throw std::invalid_argument("i_rho: word does not reach the given nucleus");
  for (const auto& n : nuclei(height(rho)))
    if (n.rho == rho) {
      if (n.applied_word.size() != applied_word.size()) throw std::invalid_argument("i_rho: word is not reduced");
      return out;
    }
  throw std::invalid_argument("i_rho: not a nucleus");
}

DivWord RootSystem::gg_word(int m, int color) const {
  if (color < 0 || color >= ell_) throw std::invalid_argument("gg_word: color outside J");
  if (m < 1) return {};
  DivWord w;
  w.push_back({ell_, m});
  for (int k = ell_ - 1; k > color; --k) w.push_back({k, 2 * m});
  for (int k = color; k >= 1; --k) w.push_back({k, m});
  w.push_back({0, 2 * m});
  for (int k = 1; k <= color; ++k) w.push_back({k, m});
  return w;
}

DivWord RootSystem::gg_word(const ColoredComposition& mu) const {
  DivWord w;
  for (std::size_t r = 0; r < mu.parts.size(); ++r) {
    DivWord piece = gg_word(mu.parts[r], mu.colors[r]);
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return w;
}

std::uint64_t RootSystem::gg_factorial(int m, int color) const {
  std::uint64_t f = 1;
  for (int k = 0; k < ell_ - color; ++k) f *= factorial(2 * m);
  for (int k = 0; k < 2 * color + 1; ++k) f *= factorial(m);
  return f;
}

int RootSystem::residue(int column) const {
  int x = (column - 1) % p();
  return std::min(x, 2 * ell_ - x);
}

RootVec RootSystem::content(const Partition& lambda) const {
  if (!is_p_strict(trimmed(lambda), p())) throw std::invalid_argument("content: partition is not p-strict");
  RootVec v = zero();
  for (int part : lambda)
    for (int c = 1; c <= part; ++c) ++v[residue(c)];
  return v;
}

}  // namespace salg
