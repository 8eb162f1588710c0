#include "qramsey/jacobi.hpp"

#include <stdexcept>

namespace qramsey {

OperatorPoly jacobi_residual(const OperatorPoly& A, const OperatorPoly& B, const OperatorPoly& C) {
  return commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) +
         commutator(C, commutator(A, B));
}

const char* jacobi_status_name(JacobiStatus s) {
  switch (s) {
    case JacobiStatus::holds: return "holds";
    case JacobiStatus::fails: return "fails";
    default: return "unverifiable";
  }
}

JacobiHypergraph build_jacobi_hypergraph(const std::vector<std::string>& names,
                                         const Catalog& catalog) {
  if (names.size() < 3)
    throw std::invalid_argument("a Jacobi hypergraph needs at least 3 vertices");
  JacobiHypergraph h;
  std::vector<const ObservableSpec*> specs;
  for (const auto& n : names) {
    const ObservableSpec& s = catalog.resolve(n);
    h.vertices.push_back(s.name);
    specs.push_back(&s);
  }
  const int n = static_cast<int>(specs.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        JacobiStatus st;
        if (specs[i]->declared || specs[j]->declared || specs[k]->declared) {
          st = JacobiStatus::unverifiable;
        } else {
          st = jacobi_residual(specs[i]->poly, specs[j]->poly, specs[k]->poly).is_zero()
                   ? JacobiStatus::holds
                   : JacobiStatus::fails;
        }
        h.hyperedges.push_back({{i, j, k}, st});
        if (st == JacobiStatus::holds)
          ++h.holds;
        else if (st == JacobiStatus::fails)
          ++h.fails;
        else
          ++h.unverifiable;
      }
  return h;
}

}  // namespace qramsey
