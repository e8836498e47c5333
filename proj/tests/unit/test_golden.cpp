#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "salg/brauer.hpp"
#include "salg/qhs.hpp"
#include "salg/schur.hpp"
#include "salg/spinblocks.hpp"

using namespace salg;
using json = nlohmann::ordered_json;

namespace {

// SALG_UPDATE_GOLDEN=1 rewrites the files instead of comparing.
void compare_golden(const std::string& name, const std::string& produced) {
  std::string path = std::string(SALG_GOLDEN_DIR) + "/" + name;
  const char* update = std::getenv("SALG_UPDATE_GOLDEN");
  if (update && std::string(update) == "1") {
    std::ofstream(path) << produced;
    return;
  }
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK_MESSAGE(buf.str() == produced, "golden mismatch for " << name);
}

json spin_json(int n, int p) {
  SpinBlockReport r = block_decomposition(n, p);
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"theta", b.theta}, {"rank", b.rank}, {"words", b.residue_words}});
  return {{"n", n}, {"p", p}, {"blocks", blocks}, {"eigenspace_dims", r.eigenspace_dims}};
}

}  // namespace

TEST_CASE("golden: Brauer tree algebra tables") {
  compare_golden("brauer_ell2_Q.json", algebra_to_json(brauer_algebra(Ring::rationals(), 2)) + "\n");
  compare_golden("brauer_ell2_regraded_F3.json",
                 algebra_to_json(brauer_algebra(Ring::prime_field(3), 2, BrauerVariant::Regraded)) + "\n");
}

TEST_CASE("golden: twisted group algebra of S_3") {
  compare_golden("twisted_n3_F3.json", algebra_to_json(twisted_symmetric(Ring::prime_field(3), 3)) + "\n");
}

TEST_CASE("golden: Schur basis at (1,2,1)") {
  SchurData data(1, 2, 1);
  json basis = json::array();
  for (Index i = 0; i < data.rank(); ++i)
    basis.push_back({{"label", data.label(i)}, {"degree", data.bidegree(i).degree}, {"parity", data.bidegree(i).parity}});
  compare_golden("schur_1_2_1.json", json{{"rank", data.rank()}, {"basis", basis}}.dump(1) + "\n");
}

TEST_CASE("golden: spin blocks") {
  compare_golden("spin_blocks_n5_p3.json", spin_json(5, 3).dump(1) + "\n");
  compare_golden("spin_blocks_n4_p5.json", spin_json(4, 5).dump(1) + "\n");
}

TEST_CASE("golden: smallest RoCK theta with d = 1, l = 1") {
  RootSystem roots(1);
  const int search_height = 16;
  std::optional<RootVec> best;
  for (const auto& nu : roots.nuclei(search_height)) {
    RootVec theta = nu.rho;
    for (int i = 0; i <= 1; ++i) theta[i] += roots.delta()[i];
    if (!roots.is_rock(theta)) continue;
    if (!best || roots.height(theta) < roots.height(*best)) best = theta;
  }
  json out{{"nucleus_height_searched", search_height}, {"smallest_rock", best ? json(*best) : json(nullptr)}};
  compare_golden("smallest_rock_ell1_d1.json", out.dump(1) + "\n");
}

TEST_CASE("golden: cyclotomic quotient of the null root") {
  CyclotomicResult r = cyclotomic_close(Ring::prime_field(3), 1, {2, 1}, 20, default_window(1));
  json graded = json::object();
  for (const auto& [m, rank] : r.ranks) graded[std::to_string(m)] = rank;
  compare_golden("cyclotomic_ell1_2_1.json", json{{"theta", r.theta}, {"graded", graded}}.dump(1) + "\n");
}
