#include "json.hpp"
#include "salg/superkernel.hpp"

namespace salg {

std::string algebra_to_json(const BasedAlgebra& a, int indent) {
  using nlohmann::json;
  json basis = json::array();
  for (Index i = 0; i < a.rank(); ++i)
    basis.push_back({{"label", a.label(i)}, {"degree", a.bidegree(i).degree}, {"parity", a.bidegree(i).parity}});
  json products = json::array();
  for (Index i = 0; i < a.rank(); ++i)
    for (Index j = 0; j < a.rank(); ++j) {
      Element p = a.basis_product(i, j);
      if (p.empty()) continue;
      json terms = json::array();
      for (const auto& [k, s] : p) terms.push_back({k, s.str()});
      products.push_back({{"left", i}, {"right", j}, {"terms", terms}});
    }
  json unit = json::array();
  for (const auto& [k, s] : a.unit()) unit.push_back({k, s.str()});
  json out{{"schema", "salg.algebra/1"},
           {"ring", a.ring().name()},
           {"rank", a.rank()},
           {"basis", basis},
           {"unit", unit},
           {"products", products}};
  if (a.form()) {
    json form = json::array();
    for (const auto& s : *a.form()) form.push_back(s.str());
    out["form"] = form;
  }
  return out.dump(indent);
}

}  // namespace salg
