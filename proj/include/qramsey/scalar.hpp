#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <string>

namespace qramsey {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}

  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
  GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  bool operator==(const GaussianRational& o) const = default;

  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }
};

// Coefficient ring of the operator algebra: exact Laurent polynomials in the
// reduced Planck constant with Gaussian-rational coefficients. Exponents may
// be negative (angular momenta carry 1/hbar). The empty term map is the
// unique zero; stored coefficients are never zero.
class Scalar {
 public:
  using Terms = std::map<int, GaussianRational>;

  Scalar() = default;
  explicit Scalar(GaussianRational c) {
    if (!c.is_zero()) terms_[0] = std::move(c);
  }
  Scalar(int n) : Scalar(GaussianRational(n)) {}

  static Scalar one() { return Scalar(GaussianRational(1)); }
  static Scalar unit_i() { return Scalar(GaussianRational::unit_i()); }
  // c * hbar^exponent
  static Scalar hbar(int exponent, GaussianRational c = GaussianRational(1)) {
    Scalar s;
    if (!c.is_zero()) s.terms_[exponent] = std::move(c);
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar operator-() const {
    Scalar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    for (const auto& [e, c] : o.terms_) {
      auto it = terms_.find(e);
      if (it == terms_.end()) {
        terms_.emplace(e, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }

  Scalar operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }

  Scalar operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        GaussianRational prod = ca * cb;
        if (prod.is_zero()) continue;
        auto it = r.terms_.find(ea + eb);
        if (it == r.terms_.end()) {
          r.terms_.emplace(ea + eb, prod);
        } else {
          it->second = it->second + prod;
          if (it->second.is_zero()) r.terms_.erase(it);
        }
      }
    }
    return r;
  }

  // Complex conjugate; hbar is real so exponents are untouched.
  Scalar conj() const {
    Scalar r;
    for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
    return r;
  }

  bool operator==(const Scalar& o) const = default;

  // Numeric value at hbar = 1 (used by the matrix oracle).
  std::complex<double> eval_hbar_one() const {
    std::complex<double> v{0.0, 0.0};
    for (const auto& [e, c] : terms_) v += c.to_complex();
    return v;
  }

 private:
  Terms terms_;
};

}  // namespace qramsey
