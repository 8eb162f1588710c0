#pragma once

#include "qramsey/catalog.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace qramsey {

using CMatrix = Eigen::MatrixXcd;

// Finite matrix of an operator in the truncated 3D harmonic-oscillator ladder
// basis (hbar = m = omega = 1), tensor order x (x) y (x) z, so basis index
// n = nx*N^2 + ny*N + nz.
struct MatrixRep {
  int dim_per_axis = 0;  // N
  unsigned degree = 0;   // total polynomial degree of the source
  CMatrix matrix;        // N^3 x N^3
};

// Throws std::invalid_argument when N < degree(A) + 2 or N < 4.
MatrixRep matrix_rep(const OperatorPoly& A, int N);

// Tensor-basis indices whose per-axis levels all lie in 0..N-D-2. Operators
// of combined degree D act exactly on these columns despite the truncation.
std::vector<int> interior_indices(int N, unsigned D);

struct DefectResult {
  double defect = 0;           // max |P([M_A,M_B] - M_[A,B])P|
  double commutator_norm = 0;  // max |P [M_A,M_B] P|
  EdgeColor color = EdgeColor::red;
};

// Numeric re-derivation of the edge color (Red iff the projected commutator
// vanishes within tol), plus the agreement defect against the symbolic
// commutator's own matrix.
DefectResult numeric_commutator_defect(const OperatorPoly& A, const OperatorPoly& B, int N,
                                       double tol);

struct PairAgreement {
  std::string a, b;
  EdgeColor symbolic;
  EdgeColor numeric;
  double defect;
};

struct AgreementReport {
  int N = 0;
  double tol = 0;
  std::vector<PairAgreement> pairs;
  int mismatches = 0;
};

// Pairwise symbolic-vs-numeric comparison over all C(n,2) pairs of symbolic
// observables; mismatches are report content, not errors.
AgreementReport agreement_check(const std::vector<std::string>& names, const Catalog& catalog,
                                int N, double tol);

}  // namespace qramsey
