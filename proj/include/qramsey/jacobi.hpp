#pragma once

#include "qramsey/catalog.hpp"

#include <array>
#include <string>
#include <vector>

namespace qramsey {

// [A,[B,C]] + [B,[C,A]] + [C,[A,B]]; identically zero in the Weyl algebra.
OperatorPoly jacobi_residual(const OperatorPoly& A, const OperatorPoly& B, const OperatorPoly& C);

enum class JacobiStatus { holds, fails, unverifiable };

const char* jacobi_status_name(JacobiStatus s);

struct JacobiHyperedge {
  std::array<int, 3> triple;
  JacobiStatus status;
};

struct JacobiHypergraph {
  std::vector<std::string> vertices;
  std::vector<JacobiHyperedge> hyperedges;  // one per unordered triple
  int holds = 0;
  int fails = 0;
  int unverifiable = 0;
};

// Exhaustive over all C(n,3) triples; any Declared participant makes the
// hyperedge unverifiable (no symbolic form to evaluate).
JacobiHypergraph build_jacobi_hypergraph(const std::vector<std::string>& names,
                                         const Catalog& catalog);

}  // namespace qramsey
