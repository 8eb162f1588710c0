#pragma once

#include <complex>
#include <vector>

namespace qramsey {

// Fraunhofer multi-slit setup. Defaults reproduce the golden fixtures:
// unit wavelength, five-unit slit spacing, unit slit width, screen at 100.
struct InterferenceConfig {
  int n_slits = 2;
  std::vector<double> slit_centers;  // filled by make_centered() when empty
  double slit_width = 1.0;
  double wavenumber = 2.0 * 3.14159265358979323846;
  double screen_distance = 100.0;
  double screen_min = -30.0;
  double screen_max = 30.0;
  int sample_count = 1201;

  // n slits spaced d apart, centered on the axis.
  static InterferenceConfig make_centered(int n, double spacing = 5.0);
  void validate() const;  // throws std::invalid_argument
};

struct Pattern {
  std::vector<double> positions;    // strictly increasing
  std::vector<double> intensities;  // non-negative
};

// n x n complex correlations, zero diagonal, C_ij = conj(C_ji).
struct CorrelationMatrix {
  std::vector<std::vector<std::complex<double>>> C;

  static CorrelationMatrix zero(int n);
  int size() const { return static_cast<int>(C.size()); }
  void validate() const;  // Hermitian symmetry, zero diagonal
};

// psi_i(s) = sinc(k w s / 2L) * exp(i k c_i s / L), sinc(0) = 1.
std::complex<double> slit_amplitude(const InterferenceConfig& cfg, int i, double s);

// P(s) = |sum_i psi_i(s)|^2
Pattern pattern(const InterferenceConfig& cfg);

// P_gamma(s) = sum_i |psi_i|^2 + e^{-gamma} * sum_{i != j} psi_i conj(psi_j);
// gamma = 0 reproduces pattern() bit for bit.
Pattern decohered_pattern(const InterferenceConfig& cfg, double gamma);

// P(s) = |sum_i psi_i + sum_{i,j} C_ij psi_i psi_j|^2, evaluated literally.
Pattern entangled_pattern(const InterferenceConfig& cfg, const CorrelationMatrix& corr);

// (P_max - P_min)/(P_max + P_min) over samples with lo <= s <= hi.
double fringe_visibility(const Pattern& p, double lo, double hi);

// Local maxima count (strictly above both neighbors) over the same window.
int count_local_maxima(const Pattern& p, double lo, double hi);

}  // namespace qramsey
