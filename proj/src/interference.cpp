#include "qramsey/interference.hpp"

#include <cmath>
#include <stdexcept>

namespace qramsey {

InterferenceConfig InterferenceConfig::make_centered(int n, double spacing) {
  InterferenceConfig cfg;
  cfg.n_slits = n;
  for (int i = 0; i < n; ++i) cfg.slit_centers.push_back((i - (n - 1) / 2.0) * spacing);
  return cfg;
}

void InterferenceConfig::validate() const {
  if (n_slits < 1 || n_slits > 8)
    throw std::invalid_argument("n_slits must be between 1 and 8");
  if (static_cast<int>(slit_centers.size()) != n_slits)
    throw std::invalid_argument("slit_centers size must equal n_slits");
  if (slit_width <= 0 || wavenumber <= 0 || screen_distance <= 0)
    throw std::invalid_argument("slit width, wavenumber, and screen distance must be positive");
  if (screen_min >= screen_max) throw std::invalid_argument("empty screen range");
  if (sample_count < 2) throw std::invalid_argument("sample_count must be at least 2");
  for (int i = 0; i + 1 < n_slits; ++i) {
    double gap = std::abs(slit_centers[i + 1] - slit_centers[i]);
    if (slit_width >= gap)
      throw std::invalid_argument("slit width must be smaller than the slit spacing");
  }
}

namespace {

double sinc(double u) { return u == 0.0 ? 1.0 : std::sin(u) / u; }

std::vector<double> sample_positions(const InterferenceConfig& cfg) {
  std::vector<double> s(cfg.sample_count);
  const double step = (cfg.screen_max - cfg.screen_min) / (cfg.sample_count - 1);
  for (int j = 0; j < cfg.sample_count; ++j) s[j] = cfg.screen_min + j * step;
  return s;
}

std::vector<std::complex<double>> amplitudes(const InterferenceConfig& cfg, double s) {
  std::vector<std::complex<double>> psi(cfg.n_slits);
  for (int i = 0; i < cfg.n_slits; ++i) psi[i] = slit_amplitude(cfg, i, s);
  return psi;
}

}  // namespace

std::complex<double> slit_amplitude(const InterferenceConfig& cfg, int i, double s) {
  if (i < 0 || i >= cfg.n_slits) throw std::out_of_range("slit index out of range");
  const double envelope = sinc(cfg.wavenumber * cfg.slit_width * s / (2.0 * cfg.screen_distance));
  const double phase = cfg.wavenumber * cfg.slit_centers[i] * s / cfg.screen_distance;
  return envelope * std::complex<double>(std::cos(phase), std::sin(phase));
}

Pattern pattern(const InterferenceConfig& cfg) {
  cfg.validate();
  Pattern p;
  p.positions = sample_positions(cfg);
  p.intensities.reserve(p.positions.size());
  for (double s : p.positions) {
    std::complex<double> total = 0;
    for (int i = 0; i < cfg.n_slits; ++i) total += slit_amplitude(cfg, i, s);
    p.intensities.push_back(std::norm(total));
  }
  return p;
}

Pattern decohered_pattern(const InterferenceConfig& cfg, double gamma) {
  if (gamma < 0) throw std::invalid_argument("gamma must be non-negative");
  if (gamma == 0) return pattern(cfg);  // exact coherent limit
  cfg.validate();
  const double g = std::exp(-gamma);
  Pattern p;
  p.positions = sample_positions(cfg);
  p.intensities.reserve(p.positions.size());
  for (double s : p.positions) {
    auto psi = amplitudes(cfg, s);
    std::complex<double> total = 0;
    double incoherent = 0;
    for (const auto& a : psi) {
      total += a;
      incoherent += std::norm(a);
    }
    // (1-g)*incoherent + g*coherent: a convex mix of non-negatives, so the
    // result cannot round below zero.
    p.intensities.push_back((1.0 - g) * incoherent + g * std::norm(total));
  }
  return p;
}

CorrelationMatrix CorrelationMatrix::zero(int n) {
  CorrelationMatrix m;
  m.C.assign(n, std::vector<std::complex<double>>(n, 0.0));
  return m;
}

void CorrelationMatrix::validate() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(C[i].size()) != n)
      throw std::invalid_argument("correlation matrix must be square");
    if (C[i][i] != std::complex<double>(0.0))
      throw std::invalid_argument("correlation matrix diagonal must be zero");
    for (int j = 0; j < n; ++j)
      if (C[i][j] != std::conj(C[j][i]))
        throw std::invalid_argument("correlation matrix must be Hermitian");
  }
}

Pattern entangled_pattern(const InterferenceConfig& cfg, const CorrelationMatrix& corr) {
  cfg.validate();
  corr.validate();
  if (corr.size() != cfg.n_slits)
    throw std::invalid_argument("correlation matrix dimension must equal n_slits");
  Pattern p;
  p.positions = sample_positions(cfg);
  p.intensities.reserve(p.positions.size());
  for (double s : p.positions) {
    auto psi = amplitudes(cfg, s);
    std::complex<double> total = 0;
    for (const auto& a : psi) total += a;
    for (int i = 0; i < cfg.n_slits; ++i)
      for (int j = 0; j < cfg.n_slits; ++j) total += corr.C[i][j] * psi[i] * psi[j];
    p.intensities.push_back(std::norm(total));
  }
  return p;
}

namespace {

std::pair<int, int> window_bounds(const Pattern& p, double lo, double hi) {
  int first = -1, last = -1;
  for (size_t j = 0; j < p.positions.size(); ++j) {
    if (p.positions[j] < lo || p.positions[j] > hi) continue;
    if (first < 0) first = static_cast<int>(j);
    last = static_cast<int>(j);
  }
  if (first < 0) throw std::invalid_argument("window contains no samples");
  return {first, last};
}

}  // namespace

double fringe_visibility(const Pattern& p, double lo, double hi) {
  auto [first, last] = window_bounds(p, lo, hi);
  if (last - first + 1 < 3) throw std::invalid_argument("window must contain at least 3 samples");
  double pmax = p.intensities[first], pmin = p.intensities[first];
  for (int j = first; j <= last; ++j) {
    pmax = std::max(pmax, p.intensities[j]);
    pmin = std::min(pmin, p.intensities[j]);
  }
  if (pmax == 0) return 0;
  return (pmax - pmin) / (pmax + pmin);
}

int count_local_maxima(const Pattern& p, double lo, double hi) {
  auto [first, last] = window_bounds(p, lo, hi);
  int count = 0;
  for (int j = first + 1; j < last; ++j)
    if (p.intensities[j] > p.intensities[j - 1] && p.intensities[j] > p.intensities[j + 1])
      ++count;
  return count;
}

}  // namespace qramsey
