#include "qramsey/matrix_oracle.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qramsey {

namespace {

using std::complex;

CMatrix ladder_x(int N) {
  CMatrix m = CMatrix::Zero(N, N);
  for (int n = 1; n < N; ++n) {
    double v = std::sqrt(n / 2.0);
    m(n - 1, n) = v;  // a
    m(n, n - 1) = v;  // a dagger
  }
  return m;
}

CMatrix ladder_p(int N) {
  CMatrix m = CMatrix::Zero(N, N);
  for (int n = 1; n < N; ++n) {
    double v = std::sqrt(n / 2.0);
    m(n - 1, n) = complex<double>(0, -v);  // i(a† - a)/sqrt(2)
    m(n, n - 1) = complex<double>(0, v);
  }
  return m;
}

CMatrix matrix_power(const CMatrix& m, unsigned e, int N) {
  CMatrix r = CMatrix::Identity(N, N);
  for (unsigned j = 0; j < e; ++j) r = r * m;
  return r;
}

CMatrix gather_cols(const CMatrix& m, const std::vector<int>& idx) {
  CMatrix r(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) r.col(j) = m.col(idx[j]);
  return r;
}

CMatrix gather_rows(const CMatrix& m, const std::vector<int>& idx) {
  CMatrix r(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (size_t i = 0; i < idx.size(); ++i) r.row(i) = m.row(idx[i]);
  return r;
}

}  // namespace

MatrixRep matrix_rep(const OperatorPoly& A, int N) {
  const unsigned deg = A.degree();
  if (N < 4 || static_cast<unsigned>(N) < deg + 2)
    throw std::invalid_argument("truncation N=" + std::to_string(N) +
                                " too small for an operator of degree " + std::to_string(deg));
  const CMatrix x1 = ladder_x(N), p1 = ladder_p(N);
  const Eigen::Index dim = static_cast<Eigen::Index>(N) * N * N;
  MatrixRep rep;
  rep.dim_per_axis = N;
  rep.degree = deg;
  rep.matrix = CMatrix::Zero(dim, dim);
  for (const auto& [m, c] : A.terms()) {
    CMatrix ax = matrix_power(x1, m.exps[0], N) * matrix_power(p1, m.exps[3], N);
    CMatrix ay = matrix_power(x1, m.exps[1], N) * matrix_power(p1, m.exps[4], N);
    CMatrix az = matrix_power(x1, m.exps[2], N) * matrix_power(p1, m.exps[5], N);
    CMatrix yz = Eigen::kroneckerProduct(ay, az);
    rep.matrix += c.eval_hbar_one() * Eigen::kroneckerProduct(ax, yz).eval();
  }
  return rep;
}

std::vector<int> interior_indices(int N, unsigned D) {
  const int top = N - static_cast<int>(D) - 2;  // highest safe per-axis level
  std::vector<int> idx;
  if (top < 0) return idx;
  for (int nx = 0; nx <= top; ++nx)
    for (int ny = 0; ny <= top; ++ny)
      for (int nz = 0; nz <= top; ++nz) idx.push_back((nx * N + ny) * N + nz);
  return idx;
}

DefectResult numeric_commutator_defect(const OperatorPoly& A, const OperatorPoly& B, int N,
                                       double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const unsigned D = A.degree() + B.degree();
  if (static_cast<unsigned>(N) < D + 2)
    throw std::invalid_argument("truncation N=" + std::to_string(N) +
                                " too small for combined degree " + std::to_string(D));
  const std::vector<int> interior = interior_indices(N, D);
  const MatrixRep ra = matrix_rep(A, N), rb = matrix_rep(B, N);

  // [M_A, M_B] restricted to interior columns: two tall-skinny products
  // instead of two full N^3 x N^3 multiplies.
  CMatrix acols = gather_cols(ra.matrix, interior);
  CMatrix bcols = gather_cols(rb.matrix, interior);
  CMatrix comm_cols = ra.matrix * bcols - rb.matrix * acols;
  CMatrix comm_int = gather_rows(comm_cols, interior);

  const OperatorPoly sym = commutator(A, B);
  CMatrix sym_int;
  if (sym.is_zero()) {
    sym_int = CMatrix::Zero(comm_int.rows(), comm_int.cols());
  } else {
    CMatrix full = matrix_rep(sym, N).matrix;
    sym_int = gather_rows(gather_cols(full, interior), interior);
  }

  DefectResult r;
  r.commutator_norm = comm_int.cwiseAbs().maxCoeff();
  r.defect = (comm_int - sym_int).cwiseAbs().maxCoeff();
  r.color = r.commutator_norm < tol ? EdgeColor::red : EdgeColor::green;
  return r;
}

AgreementReport agreement_check(const std::vector<std::string>& names, const Catalog& catalog,
                                int N, double tol) {
  AgreementReport report;
  report.N = N;
  report.tol = tol;
  std::vector<const ObservableSpec*> specs;
  for (const auto& n : names) {
    const ObservableSpec& s = catalog.resolve(n);
    if (s.declared)
      throw std::invalid_argument("the matrix oracle handles only symbolic operators; '" +
                                  s.name + "' is declared");
    specs.push_back(&s);
  }
  for (size_t i = 0; i < specs.size(); ++i)
    for (size_t j = i + 1; j < specs.size(); ++j) {
      DefectResult d = numeric_commutator_defect(specs[i]->poly, specs[j]->poly, N, tol);
      EdgeColor symbolic = commutator(specs[i]->poly, specs[j]->poly).is_zero()
                               ? EdgeColor::red
                               : EdgeColor::green;
      report.pairs.push_back({specs[i]->name, specs[j]->name, symbolic, d.color, d.defect});
      if (symbolic != d.color) ++report.mismatches;
    }
  return report;
}

}  // namespace qramsey
