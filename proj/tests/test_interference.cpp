#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qramsey/interference.hpp"

using namespace qramsey;
using cplx = std::complex<double>;

namespace {

const double kPi = 3.14159265358979323846;

InterferenceConfig narrow_two_slit() {
  InterferenceConfig cfg = InterferenceConfig::make_centered(2);
  cfg.slit_width = 1e-3;
  return cfg;
}

}  // namespace

TEST_CASE("slit amplitudes: unit value on axis, conjugate symmetry, envelope") {
  InterferenceConfig cfg = InterferenceConfig::make_centered(3);
  for (int i = 0; i < 3; ++i) CHECK(slit_amplitude(cfg, i, 0.0) == cplx(1.0, 0.0));
  for (double s : {0.7, 3.0, 12.5, 29.9}) {
    for (int i = 0; i < 3; ++i) {
      cplx plus = slit_amplitude(cfg, i, s);
      cplx minus = slit_amplitude(cfg, i, -s);
      CHECK(std::abs(plus - std::conj(minus)) < 1e-15);
      // modulus is the slit envelope, independent of the slit position
      double env = std::abs(std::sin(kPi * s / 100.0) / (kPi * s / 100.0));
      CHECK(std::abs(std::abs(plus) - env) < 1e-12);
    }
  }
  // first envelope zero at s = L/w
  CHECK(std::abs(slit_amplitude(cfg, 0, 100.0)) < 1e-15);
  CHECK_THROWS_AS(slit_amplitude(cfg, 3, 0.0), std::out_of_range);
  CHECK_THROWS_AS(slit_amplitude(cfg, -1, 0.0), std::out_of_range);
}

TEST_CASE("make_centered places slits symmetrically") {
  CHECK(InterferenceConfig::make_centered(1).slit_centers == std::vector<double>{0.0});
  CHECK(InterferenceConfig::make_centered(2).slit_centers == std::vector<double>{-2.5, 2.5});
  CHECK(InterferenceConfig::make_centered(3).slit_centers ==
        std::vector<double>{-5.0, 0.0, 5.0});
  CHECK(InterferenceConfig::make_centered(4, 2.0).slit_centers ==
        std::vector<double>{-3.0, -1.0, 1.0, 3.0});
}

TEST_CASE("two-slit pattern matches the closed form everywhere") {
  InterferenceConfig cfg = InterferenceConfig::make_centered(2);
  Pattern p = pattern(cfg);
  REQUIRE(p.positions.size() == 1201);
  REQUIRE(p.intensities.size() == 1201);
  double worst = 0;
  for (size_t j = 0; j < p.positions.size(); ++j) {
    double s = p.positions[j];
    double u = kPi * s / 100.0;  // k w s / 2L
    double env = u == 0.0 ? 1.0 : std::sin(u) / u;
    double expected = 4.0 * env * env * std::pow(std::cos(kPi * s / 20.0), 2);
    worst = std::max(worst, std::abs(p.intensities[j] - expected));
  }
  CHECK(worst < 1e-12);
  // central intensity is 4x the single-slit value
  Pattern single = pattern(InterferenceConfig::make_centered(1));
  CHECK(p.intensities[600] == doctest::Approx(4.0 * single.intensities[600]).epsilon(1e-12));
  CHECK(p.intensities[600] == doctest::Approx(4.0).epsilon(1e-9));
  // positions are strictly increasing and span the screen
  CHECK(p.positions.front() == -30.0);
  CHECK(p.positions.back() == doctest::Approx(30.0).epsilon(1e-12));
  for (size_t j = 1; j < p.positions.size(); ++j) CHECK(p.positions[j] > p.positions[j - 1]);
  for (double v : p.intensities) CHECK(v >= 0.0);
}

TEST_CASE("principal maxima counts for one to five slits") {
  // For spacing 5 and k = 2*pi the principal maxima sit at multiples of 20,
  // but the sinc envelope pulls the +-20 pair about 0.28 units inward, so
  // they land strictly inside the window and the count is 2n - 1.
  const int expected[] = {1, 3, 5, 7, 9};
  for (int n = 1; n <= 5; ++n) {
    Pattern p = pattern(InterferenceConfig::make_centered(n));
    CAPTURE(n);
    CHECK(count_local_maxima(p, -20.0, 20.0) == expected[n - 1]);
  }
}

TEST_CASE("zero decoherence reproduces the coherent pattern bit for bit") {
  for (int n : {1, 2, 3, 5}) {
    InterferenceConfig cfg = InterferenceConfig::make_centered(n);
    Pattern coherent = pattern(cfg);
    Pattern decohered = decohered_pattern(cfg, 0.0);
    CHECK(std::equal(coherent.intensities.begin(), coherent.intensities.end(),
                     decohered.intensities.begin()));
    CHECK(std::equal(coherent.positions.begin(), coherent.positions.end(),
                     decohered.positions.begin()));
  }
}

TEST_CASE("visibility decays exactly exponentially for narrow slits") {
  InterferenceConfig cfg = narrow_two_slit();
  for (double gamma : {0.0, std::log(2.0), 2.0}) {
    Pattern p = decohered_pattern(cfg, gamma);
    double v = fringe_visibility(p, -30.0, 30.0);
    CAPTURE(gamma);
    CHECK(std::abs(v - std::exp(-gamma)) < 1e-6);
  }
  // half-life: gamma = ln 2 halves the visibility
  double v0 = fringe_visibility(decohered_pattern(cfg, 0.0), -30.0, 30.0);
  double vh = fringe_visibility(decohered_pattern(cfg, std::log(2.0)), -30.0, 30.0);
  CHECK(vh == doctest::Approx(0.5 * v0).epsilon(1e-6));
}

TEST_CASE("strong decoherence washes the fringes out") {
  Pattern p = decohered_pattern(narrow_two_slit(), 1e9);
  CHECK(fringe_visibility(p, -30.0, 30.0) <= 1e-6);
  // all the intensity is still there, just incoherent
  CHECK(p.intensities[600] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("visibility is strictly monotone in the decoherence rate") {
  InterferenceConfig cfg = narrow_two_slit();
  double previous = 2.0;
  for (double gamma : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    double v = fringe_visibility(decohered_pattern(cfg, gamma), -30.0, 30.0);
    CHECK(v < previous);
    CHECK(v >= 0.0);
    previous = v;
  }
  CHECK_THROWS_AS(decohered_pattern(cfg, -0.1), std::invalid_argument);
}

TEST_CASE("intensities stay non-negative under decoherence") {
  for (double gamma : {0.0, 0.3, 1.0, 7.5}) {
    Pattern p = decohered_pattern(InterferenceConfig::make_centered(4), gamma);
    for (double v : p.intensities) CHECK(v >= 0.0);
  }
}

TEST_CASE("zero correlations reproduce the independent pattern") {
  for (int n : {2, 3}) {
    InterferenceConfig cfg = InterferenceConfig::make_centered(n);
    Pattern plain = pattern(cfg);
    Pattern ent = entangled_pattern(cfg, CorrelationMatrix::zero(n));
    CHECK(std::equal(plain.intensities.begin(), plain.intensities.end(),
                     ent.intensities.begin()));
  }
}

TEST_CASE("entangled two-slit pattern matches a direct evaluation") {
  InterferenceConfig cfg = InterferenceConfig::make_centered(2);
  cfg.sample_count = 101;
  CorrelationMatrix corr = CorrelationMatrix::zero(2);
  corr.C[0][1] = cplx(0.3, 0.2);
  corr.C[1][0] = std::conj(corr.C[0][1]);
  Pattern p = entangled_pattern(cfg, corr);
  REQUIRE(p.positions.size() == 101);
  for (size_t j = 0; j < p.positions.size(); ++j) {
    double s = p.positions[j];
    cplx a = slit_amplitude(cfg, 0, s), b = slit_amplitude(cfg, 1, s);
    cplx total = a + b + corr.C[0][1] * a * b + corr.C[1][0] * b * a;
    CHECK(std::abs(p.intensities[j] - std::norm(total)) < 1e-13);
  }
  // a real correlation genuinely changes the pattern
  double shift = 0;
  Pattern plain = pattern(cfg);
  for (size_t j = 0; j < p.positions.size(); ++j)
    shift = std::max(shift, std::abs(p.intensities[j] - plain.intensities[j]));
  CHECK(shift > 0.01);
}

TEST_CASE("correlation matrix validation") {
  CorrelationMatrix c = CorrelationMatrix::zero(2);
  CHECK_NOTHROW(c.validate());
  c.C[0][0] = cplx(0.1, 0.0);
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = CorrelationMatrix::zero(2);
  c.C[0][1] = cplx(0.1, 0.2);
  c.C[1][0] = cplx(0.1, 0.2);  // not the conjugate
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.C[1][0] = std::conj(c.C[0][1]);
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(
      entangled_pattern(InterferenceConfig::make_centered(3), CorrelationMatrix::zero(2)),
      std::invalid_argument);
}

TEST_CASE("configuration validation") {
  InterferenceConfig cfg = InterferenceConfig::make_centered(2);
  CHECK_NOTHROW(cfg.validate());
  cfg.n_slits = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = InterferenceConfig::make_centered(9);
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = InterferenceConfig::make_centered(2);
  cfg.slit_width = 5.0;  // as wide as the spacing
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = InterferenceConfig::make_centered(2);
  cfg.sample_count = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = InterferenceConfig::make_centered(2);
  cfg.screen_min = 10.0;
  cfg.screen_max = -10.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = InterferenceConfig::make_centered(2);
  cfg.slit_centers.push_back(30.0);  // size mismatch
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_NOTHROW(pattern(InterferenceConfig::make_centered(1)));  // width check needs 2+ slits
}

TEST_CASE("visibility edge cases and window handling") {
  Pattern flat;
  for (int j = 0; j <= 10; ++j) {
    flat.positions.push_back(j);
    flat.intensities.push_back(2.0);
  }
  CHECK(fringe_visibility(flat, 0.0, 10.0) == 0.0);
  CHECK(count_local_maxima(flat, 0.0, 10.0) == 0);

  Pattern dark = flat;
  for (auto& v : dark.intensities) v = 0.0;
  CHECK(fringe_visibility(dark, 0.0, 10.0) == 0.0);  // guarded 0/0

  CHECK_THROWS_AS(fringe_visibility(flat, 20.0, 30.0), std::invalid_argument);
  CHECK_THROWS_AS(fringe_visibility(flat, 3.2, 4.8), std::invalid_argument);  // one sample
  CHECK_THROWS_AS(count_local_maxima(flat, 20.0, 30.0), std::invalid_argument);

  // windowing restricts which maxima are counted
  Pattern two_peaks;
  double vals[] = {0, 1, 0, 0, 5, 0};
  for (int j = 0; j < 6; ++j) {
    two_peaks.positions.push_back(j);
    two_peaks.intensities.push_back(vals[j]);
  }
  CHECK(count_local_maxima(two_peaks, 0.0, 5.0) == 2);
  CHECK(count_local_maxima(two_peaks, 0.0, 2.0) == 1);
  CHECK(count_local_maxima(two_peaks, 2.0, 5.0) == 1);
}
