#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "salg/brauer.hpp"
#include "salg/kernels.hpp"
#include "salg/qhs.hpp"
#include "salg/schur.hpp"
#include "salg/spinblocks.hpp"
#include "salg/verify.hpp"

using json = nlohmann::ordered_json;
using namespace salg;

namespace {

constexpr int kSchemaVersion = 1;

struct RingFlags {
  std::string name = "Q";
  std::uint32_t p = 3;
  Ring ring() const { return Ring::parse(name, p); }
};

void add_ring_flags(CLI::App* cmd, RingFlags& flags) {
  cmd->add_option("--ring", flags.name, "coefficient ring")->check(CLI::IsMember({"Q", "Fp", "Zp"}));
  cmd->add_option("--p", flags.p, "odd prime for Fp and Zp");
}

RootVec parse_theta(const std::string& text, int ell) {
  RootVec theta;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) theta.push_back(std::stoi(part));
  if (static_cast<int>(theta.size()) != ell + 1)
    throw std::invalid_argument("theta needs " + std::to_string(ell + 1) + " comma-separated coefficients");
  for (int m : theta)
    if (m < 0) throw std::invalid_argument("theta coefficients must be nonnegative");
  return theta;
}

json div_word_json(const DivWord& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back({l.letter, l.mult});
  return out;
}

json ranks_json(const std::map<int, std::size_t>& ranks) {
  json out = json::object();
  for (const auto& [m, r] : ranks) out[std::to_string(m)] = r;
  return out;
}

void emit(json body) {
  json out = {{"schema", kSchemaVersion}};
  out.update(body);
  std::cout << out.dump(1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with graded superalgebras, Schur superalgebras and quiver Hecke superalgebras"};
  app.require_subcommand(1);

  RingFlags ring_flags;
  int ell = 1, n = 1, d = 1, m = 0, p = 3, max_degree = 20, window = 0, min_degree = -8, z_cap = 3, color = 0;
  std::string theta_text, variant = "standard", suite = "quick";

  auto* brauer = app.add_subcommand("brauer", "Brauer tree superalgebra");
  brauer->require_subcommand(1);
  auto* brauer_table = brauer->add_subcommand("table", "structure constants as JSON");
  brauer_table->add_option("--ell", ell)->required()->check(CLI::Range(1, 12));
  brauer_table->add_option("--variant", variant)->check(CLI::IsMember({"standard", "regraded"}));
  add_ring_flags(brauer_table, ring_flags);
  auto* brauer_affine = brauer->add_subcommand("affine-rank", "graded rank of the affine algebra");
  brauer_affine->add_option("--ell", ell)->required();
  brauer_affine->add_option("--d", d)->required();
  brauer_affine->add_option("--m", m)->required();
  brauer_affine->add_option("--zcap", z_cap);
  add_ring_flags(brauer_affine, ring_flags);

  auto* schur = app.add_subcommand("schur", "generalized Schur superalgebras");
  schur->require_subcommand(1);
  auto* schur_dims = schur->add_subcommand("dims", "ranks of S, T and T in degree zero");
  auto* schur_basis = schur->add_subcommand("basis", "orbit basis with bidegrees");
  auto* schur_gen = schur->add_subcommand("check-gen", "generation of T by degree zero and special elements");
  for (auto* cmd : {schur_dims, schur_basis, schur_gen}) {
    cmd->add_option("--n", n)->required();
    cmd->add_option("--d", d)->required();
    cmd->add_option("--ell", ell)->required();
  }
  add_ring_flags(schur_gen, ring_flags);

  auto* qhs = app.add_subcommand("qhs", "quiver Hecke superalgebras");
  qhs->require_subcommand(1);
  auto* qhs_dims = qhs->add_subcommand("dims", "graded ranks of R_theta");
  qhs_dims->add_option("--min", min_degree);
  auto* qhs_close = qhs->add_subcommand("close", "cyclotomic quotient");
  qhs_close->add_option("--window", window);
  for (auto* cmd : {qhs_dims, qhs_close}) {
    cmd->add_option("--ell", ell)->required();
    cmd->add_option("--theta", theta_text)->required();
    cmd->add_option("--maxdeg", max_degree);
    add_ring_flags(cmd, ring_flags);
  }

  auto* rootdata = app.add_subcommand("rootdata", "root lattice of type A_{2l}^(2)");
  rootdata->require_subcommand(1);
  auto* nucleus = rootdata->add_subcommand("nucleus", "nucleus and mass of theta");
  auto* rock = rootdata->add_subcommand("rock", "RoCK predicate");
  for (auto* cmd : {nucleus, rock}) {
    cmd->add_option("--ell", ell)->required();
    cmd->add_option("--theta", theta_text)->required();
  }
  auto* ggword = rootdata->add_subcommand("ggword", "Gelfand-Graev divided-power word");
  ggword->add_option("--ell", ell)->required();
  ggword->add_option("--m", m)->required();
  ggword->add_option("--color", color);

  auto* blocks = app.add_subcommand("blocks", "spin blocks of the twisted symmetric group");
  blocks->require_subcommand(1);
  auto* decompose = blocks->add_subcommand("decompose", "superblock decomposition over F_p");
  decompose->add_option("--n", n)->required();
  decompose->add_option("--p", p)->required();

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*brauer_table) {
      auto v = variant == "regraded" ? BrauerVariant::Regraded : BrauerVariant::Standard;
      std::cout << algebra_to_json(brauer_algebra(ring_flags.ring(), ell, v)) << "\n";
    } else if (*brauer_affine) {
      Ring ring = ring_flags.ring();
      emit({{"ell", ell},
            {"d", d},
            {"m", m},
            {"count", affine_monomial_count(ell, d, m)},
            {"rank", affine_graded_rank(ring, ell, d, m, z_cap)}});
    } else if (*schur_dims) {
      SchurData data(n, d, ell);
      auto graded = graded_ranks(data);
      emit({{"rank_S", data.rank()}, {"rank_T", data.rank()}, {"rank_T0", graded[0]}, {"graded", ranks_json(graded)}});
    } else if (*schur_basis) {
      SchurData data(n, d, ell);
      json basis = json::array();
      for (Index i = 0; i < data.rank(); ++i) {
        BiDegree b = data.bidegree(i);
        basis.push_back({{"label", data.label(i)}, {"degree", b.degree}, {"parity", b.parity}});
      }
      emit({{"rank", data.rank()}, {"basis", basis}});
    } else if (*schur_gen) {
      SchurData data(n, d, ell);
      Ring ring = ring_flags.ring();
      json out = json::object();
      for (auto [name, kind] : {std::pair{"degree_zero", SeedKind::DegreeZero},
                                std::pair{"with_i11", SeedKind::DegreeZeroAndI11},
                                std::pair{"with_ila", SeedKind::DegreeZeroAndILa}}) {
        GenerationReport r = generated_subalgebra(data, ring, kind);
        out[name] = {{"closure", ranks_json(r.closure_ranks)}, {"equals_T", r.equal}};
      }
      emit({{"ring", ring.name()}, {"generation", out}});
    } else if (*qhs_dims) {
      QuiverHecke h(ring_flags.ring(), ell, parse_theta(theta_text, ell));
      std::map<int, std::size_t> ranks;
      for (int deg = min_degree; deg <= max_degree; ++deg)
        if (auto c = h.basis_of_degree(deg).size()) ranks[deg] = c;
      emit({{"theta", h.theta()}, {"graded", ranks_json(ranks)}});
    } else if (*qhs_close) {
      RootVec theta = parse_theta(theta_text, ell);
      int w = window > 0 ? window : default_window(ell);
      CyclotomicResult r = cyclotomic_close(ring_flags.ring(), ell, theta, max_degree, w);
      json blocks_json = json::array();
      for (const auto& [key, rank] : r.block_ranks) blocks_json.push_back({{"left", key.first}, {"right", key.second}, {"rank", rank}});
      emit({{"theta", theta},
            {"maxdeg", max_degree},
            {"window", w},
            {"stabilized", r.stabilized},
            {"rank", r.total_rank()},
            {"graded", ranks_json(r.ranks)},
            {"blocks", blocks_json}});
      if (!r.stabilized) {
        std::cerr << "guard exceeded: no stabilization below degree " << max_degree << "\n";
        return 3;
      }
    } else if (*nucleus) {
      RootSystem roots(ell);
      RootVec theta = parse_theta(theta_text, ell);
      auto label = roots.nucleus_mass(theta);
      if (label)
        emit({{"in_W", true}, {"rho", label->nucleus}, {"d", label->mass}});
      else
        emit({{"in_W", false}});
    } else if (*rock) {
      RootSystem roots(ell);
      RootVec theta = parse_theta(theta_text, ell);
      emit({{"theta", theta}, {"rock", roots.is_rock(theta)}});
    } else if (*ggword) {
      RootSystem roots(ell);
      DivWord w = roots.gg_word(m, color);
      emit({{"m", m}, {"color", color}, {"word", div_word_json(w)}, {"factorial", roots.gg_factorial(m, color)}});
    } else if (*decompose) {
      SpinBlockReport r = block_decomposition(n, p);
      json blocks_json = json::array();
      for (const auto& b : r.blocks)
        blocks_json.push_back({{"theta", b.theta}, {"rank", b.rank}, {"central", b.central}, {"words", b.residue_words}});
      emit({{"n", n},
            {"p", p},
            {"blocks", blocks_json},
            {"total_rank", r.total_rank},
            {"expected_labels", r.expected_labels},
            {"labels_match", r.labels_match},
            {"eigenspace_dims", r.eigenspace_dims},
            {"ok", r.ok()}});
    } else if (*verify) {
      auto results = run_suite(suite == "full" ? SuiteSize::Full : SuiteSize::Quick);
      json checks = json::array();
      bool all = true;
      for (const auto& r : results) {
        all = all && (r.passed || r.skipped);
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"status", r.skipped ? "skip" : r.passed ? "pass" : "fail"},
                          {"detail", r.detail}});
      }
      emit({{"suite", suite}, {"isa", kernels::isa_name(kernels::active_isa())}, {"all_passed", all}, {"checks", checks}});
      return all ? 0 : 1;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
