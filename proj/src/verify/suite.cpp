#include "salg/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "salg/brauer.hpp"
#include "salg/qhs.hpp"
#include "salg/schur.hpp"
#include "salg/spinblocks.hpp"

namespace salg {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream note;
  void fail(const std::string& what) {
    if (passed) note << "FAILED: " << what << "; ";
    passed = false;
  }
};

std::vector<RootVec> roots_of_height(int ell, int height) {
  std::vector<RootVec> out;
  RootVec theta(ell + 1, 0);
  std::function<void(int, int)> fill = [&](int i, int left) {
    if (i == ell) {
      theta[i] = left;
      out.push_back(theta);
      return;
    }
    for (int m = left; m >= 0; --m) {
      theta[i] = m;
      fill(i + 1, left - m);
    }
  };
  fill(0, height);
  return out;
}

void brauer_ranks(Outcome& out, SuiteSize size) {
  int top = size == SuiteSize::Full ? 4 : 2;
  for (const Ring& ring : {Ring::rationals(), Ring::prime_field(3), Ring::prime_field(5)})
    for (int ell = 1; ell <= top; ++ell) {
      BasedAlgebra a = brauer_algebra(ring, ell);
      if (a.rank() != static_cast<std::size_t>(4 * ell - 1)) out.fail("rank at ell=" + std::to_string(ell));
      for (int j = 0; j < ell; ++j) {
        std::size_t want = j == ell - 1 ? 3 : 4;
        if (brauer_right_ideal_rank(a, ell, j) != want)
          out.fail("e^[" + std::to_string(j) + "]A at ell=" + std::to_string(ell) + " over " + ring.name());
      }
    }
  out.note << "ell<=" << top << " over Q, F3, F5";
}

void permutation_modules(Outcome& out, SuiteSize size) {
  int top_d = size == SuiteSize::Full ? 4 : 2;
  std::size_t checked = 0;
  for (int ell = 1; ell <= 2; ++ell)
    for (int n = 1; n <= 3; ++n)
      for (int d = 1; d <= top_d; ++d)
        for (const auto& lambda : colored_compositions(ell, n, d)) {
          ++checked;
          if (perm_module_rank(lambda, ell) != perm_module_formula(lambda, ell))
            out.fail("rank formula at ell=" + std::to_string(ell) + " n=" + std::to_string(n) + " d=" +
                     std::to_string(d));
        }
  out.note << checked << " colored compositions";
}

std::vector<std::array<int, 3>> schur_sizes(SuiteSize size) {
  if (size == SuiteSize::Quick) return {{1, 2, 1}, {1, 3, 1}};
  return {{1, 2, 1}, {2, 2, 1}, {2, 2, 2}, {1, 3, 1}};
}

void triple_ranks(Outcome& out, SuiteSize size) {
  for (auto [n, d, ell] : schur_sizes(size)) {
    SchurData data(n, d, ell);
    std::size_t orbits = data.rank();
    std::size_t inv = invariant_rank(data);
    std::size_t endo = endomorphism_rank(data);
    out.note << "(" << n << "," << d << "," << ell << "): " << orbits << "/" << inv << "/" << endo;
    if (orbits != inv || inv != endo) out.fail("triple mismatch");
    if (auto hom = hom_space_rank(data)) {
      out.note << " hom " << *hom;
      if (*hom != orbits) out.fail("hom-space rank mismatch");
    }
    out.note << "; ";
  }
}

void integrality(Outcome& out, SuiteSize size) {
  for (auto [n, d, ell] : schur_sizes(size)) {
    SchurData data(n, d, ell);
    for (std::uint32_t p : {3u, 5u}) {
      IntegralityReport r = t_integrality(data, p);
      if (!r.integral) out.fail("eta constant not p-local at p=" + std::to_string(p) + ": " + r.first_failure);
    }
    if (!t_equals_s_up_to(data, 3)) out.fail("T^m != S^m for m<=3");
  }
  out.note << "p in {3,5}, degrees <= 3";
}

void generation(Outcome& out, SuiteSize size) {
  std::vector<Ring> rings{Ring::prime_field(3)};
  if (size == SuiteSize::Full) rings.push_back(Ring::rationals());
  int top = size == SuiteSize::Full ? 2 : 1;
  for (const Ring& ring : rings)
    for (int ell = 1; ell <= top; ++ell) {
      SchurData data(2, 2, ell);
      for (SeedKind seeds : {SeedKind::DegreeZeroAndI11, SeedKind::DegreeZeroAndILa})
        if (!generated_subalgebra(data, ring, seeds).equal)
          out.fail("closure differs from T at ell=" + std::to_string(ell) + " over " + ring.name());
    }
  out.note << "(n,d)=(2,2), ell<=" << top;
}

void affine_basis(Outcome& out, SuiteSize size) {
  int top = size == SuiteSize::Full ? 8 : 4;
  for (int m = 0; m <= top; ++m) {
    std::size_t count = affine_monomial_count(1, 2, m);
    std::size_t rank = affine_graded_rank(Ring::rationals(), 1, 2, m, 3);
    out.note << rank << (m < top ? "," : "");
    if (count != rank) out.fail("degree " + std::to_string(m));
  }
  out.note << " for m=0.." << top;
}

void symmetrizing(Outcome& out, SuiteSize size) {
  Ring q = Ring::rationals();
  int top = size == SuiteSize::Full ? 4 : 3;
  auto check = [&](const BasedAlgebra& a, const std::string& name) {
    if (!a.form() || !validate_symmetrizing(a, *a.form()).ok()) out.fail(name);
  };
  for (int ell = 1; ell <= top; ++ell) {
    BasedAlgebra a = brauer_algebra(q, ell);
    if (!a.form()) {
      auto form = find_symmetrizing_form(a);
      if (form) a.set_form(*form);
    }
    check(a, "A_" + std::to_string(ell));
  }
  for (int n = 1; n <= top; ++n) {
    check(clifford(q, n), "C_" + std::to_string(n));
    check(twisted_symmetric(q, n), "T_" + std::to_string(n));
    check(hecke(q, n, q.from_int(2)), "H_" + std::to_string(n) + "(2)");
  }
  std::size_t stated_failures = 0;
  for (int n = 1; n <= 3; ++n) {
    BasedAlgebra y = olshanski(q, n, q.from_int(2));
    if (!validate_symmetrizing(y, *y.form()).ok()) ++stated_failures;
    auto solved = find_symmetrizing_form(y);
    if (!solved || !validate_symmetrizing(y, *solved).ok()) out.fail("Y_" + std::to_string(n) + "(2)");
  }
  out.note << "Y_n(2) uses the solved trace form; the delta form fails symmetry for " << stated_failures
           << " of n=1..3";
}

void nucleus_oracle(Outcome& out, SuiteSize size) {
  int top = size == SuiteSize::Full ? 9 : 6;
  std::size_t checked = 0;
  for (int p : {3, 5}) {
    RootSystem roots((p - 1) / 2);
    for (int k = 0; k <= top; ++k)
      for (const auto& lambda : p_strict_partitions(k, p)) {
        ++checked;
        auto label = roots.nucleus_mass(roots.content(lambda));
        BlockLabel want{roots.content(bar_core(lambda, p)), bar_weight(lambda, p)};
        if (!label || !(*label == want)) out.fail("p=" + std::to_string(p) + " lambda=" + to_string(lambda));
      }
  }
  out.note << checked << " p-strict partitions, |lambda|<=" << top;
}

void qhs_relations(Outcome& out, SuiteSize size) {
  Ring q = Ring::rationals();
  std::size_t samples = size == SuiteSize::Full ? 200 : 20;
  int top = size == SuiteSize::Full ? 4 : 2;
  std::size_t trials = 0;
  for (int ell = 1; ell <= 2; ++ell)
    for (int h = 1; h <= top; ++h)
      for (const auto& theta : roots_of_height(ell, h))
        for (const auto& tally : relation_suite(q, ell, theta, samples, 20261018)) {
          trials += tally.trials;
          if (tally.failures)
            out.fail(tally.name + " at theta=" + to_string(theta, true) + ": " + tally.first_failure);
        }
  int dim_height = size == SuiteSize::Full ? 3 : 2;
  std::size_t degrees = 0;
  for (int ell = 1; ell <= 2; ++ell)
    for (int h = 1; h <= dim_height; ++h)
      for (const auto& theta : roots_of_height(ell, h))
        for (const auto& row : graded_dim_check(q, ell, theta, -8, 8)) {
          ++degrees;
          if (row.count != row.rank)
            out.fail("graded dim at theta=" + to_string(theta, true) + " degree " + std::to_string(row.degree));
        }
  out.note << trials << " relation trials (ht<=" << top << "), " << degrees << " graded degrees (ht<=" << dim_height
           << ")";
}

void cyclotomic(Outcome& out, SuiteSize size) {
  int top = size == SuiteSize::Full ? 4 : 3;
  std::vector<Ring> rings{Ring::prime_field(3)};
  if (size == SuiteSize::Full) rings.push_back(Ring::rationals());
  RootSystem roots(1);
  std::size_t nonzero = 0;
  for (const Ring& ring : rings)
    for (int h = 0; h <= top; ++h)
      for (const auto& theta : roots_of_height(1, h)) {
        CyclotomicResult res = cyclotomic_close(ring, 1, theta, 20, default_window(1));
        bool in_w = roots.nucleus_mass(theta).has_value();
        if (!res.stabilized) out.fail("no stabilization at " + to_string(theta, true));
        if ((res.total_rank() != 0) != in_w) out.fail("nonvanishing mismatch at " + to_string(theta, true));
        if (res.total_rank()) ++nonzero;
      }
  out.note << nonzero << " nonzero quotients, ht<=" << top;
}

void spin_blocks(Outcome& out, SuiteSize size) {
  int top = size == SuiteSize::Full ? 5 : 4;
  for (int n = 1; n <= top; ++n) {
    SpinBlockReport r = block_decomposition(n, 3);
    out.note << "n=" << n << ":" << r.blocks.size() << " blocks ";
    if (!r.ok()) out.fail("n=" + std::to_string(n));
  }
}

void matrix_square_law(Outcome& out, SuiteSize size) {
  int top_ell = size == SuiteSize::Full ? 2 : 1;
  std::size_t checked = 0, skipped = 0;
  for (int ell = 1; ell <= top_ell; ++ell) {
    RootSystem roots(ell);
    for (const auto& nucleus : roots.nuclei(3)) {
      auto r = matrix_block_check(Ring::prime_field(3), ell, nucleus, 20, default_window(ell));
      if (!r) {
        ++skipped;
        continue;
      }
      ++checked;
      if (!r->ok())
        out.fail("rho=" + to_string(nucleus.rho, true) + " corner " + std::to_string(r->corner_rank) + " column " +
                 std::to_string(r->column_rank) + " total " + std::to_string(r->total_rank));
    }
  }
  out.note << checked << " nuclei checked, " << skipped << " with repeated letters; RoCK truncation rank not run";
}

struct Criterion {
  const char* name;
  void (*body)(Outcome&, SuiteSize);
};

const Criterion kCriteria[kCriterionCount] = {
    {"brauer ranks", brauer_ranks},
    {"permutation module ranks", permutation_modules},
    {"schur triple rank agreement", triple_ranks},
    {"T integrality and small-degree equality", integrality},
    {"generation of T", generation},
    {"affine basis ranks", affine_basis},
    {"symmetrizing forms", symmetrizing},
    {"nucleus/mass against bar-core/bar-weight", nucleus_oracle},
    {"quiver Hecke relations and graded dimensions", qhs_relations},
    {"cyclotomic nonvanishing", cyclotomic},
    {"spin blocks", spin_blocks},
    {"matrix square law (stretch)", matrix_square_law},
};

}  // namespace

CheckResult run_criterion(int id, SuiteSize size) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id");
  const Criterion& c = kCriteria[id - 1];
  CheckResult result;
  result.id = id;
  result.name = c.name;
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    c.body(out, size);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.passed = out.passed;
  result.detail = out.note.str();
  return result;
}

std::vector<CheckResult> run_suite(SuiteSize size) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, size));
  return out;
}

}  // namespace salg
