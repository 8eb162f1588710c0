#include "qramsey/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

namespace {

const std::array<std::string, kNumGenerators> kGenNames = {"x", "y", "z", "px", "py", "pz"};

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return Rational(num) / Rational(den);
}

Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned j = 2; j <= n; ++j) f *= j;
  return Rational(f);
}

// (-i)^k
GaussianRational minus_i_pow(unsigned k) {
  switch (k % 4) {
    case 0: return GaussianRational(1);
    case 1: return {Rational(0), Rational(-1)};
    case 2: return GaussianRational(-1);
    default: return {Rational(0), Rational(1)};
  }
}

// Normal-orders the product of two words. Axes commute with each other, so
// the rewrite x^a p^b * x^c p^d = sum_k k! C(b,k) C(c,k) (-i hbar)^k
// x^{a+c-k} p^{b+d-k} applies independently per axis; the cross terms are the
// triple sum below.
void accumulate_word_product(OperatorPoly& out, const Monomial& m1, const Monomial& m2,
                             const Scalar& weight) {
  const unsigned bx = m1.exps[3], by = m1.exps[4], bz = m1.exps[5];
  const unsigned cx = m2.exps[0], cy = m2.exps[1], cz = m2.exps[2];
  const unsigned kx_max = std::min(bx, cx), ky_max = std::min(by, cy), kz_max = std::min(bz, cz);
  for (unsigned kx = 0; kx <= kx_max; ++kx)
    for (unsigned ky = 0; ky <= ky_max; ++ky)
      for (unsigned kz = 0; kz <= kz_max; ++kz) {
        Rational f = factorial(kx) * binomial(bx, kx) * binomial(cx, kx);
        f *= factorial(ky) * binomial(by, ky) * binomial(cy, ky);
        f *= factorial(kz) * binomial(bz, kz) * binomial(cz, kz);
        const unsigned k = kx + ky + kz;
        GaussianRational coeff = minus_i_pow(k) * GaussianRational(f);
        Monomial m;
        m.exps[0] = m1.exps[0] + cx - kx;
        m.exps[1] = m1.exps[1] + cy - ky;
        m.exps[2] = m1.exps[2] + cz - kz;
        m.exps[3] = bx + m2.exps[3] - kx;
        m.exps[4] = by + m2.exps[4] - ky;
        m.exps[5] = bz + m2.exps[5] - kz;
        out.add_term(m, weight * Scalar::hbar(static_cast<int>(k), coeff));
      }
}

}  // namespace

const std::string& generator_name(Generator g) { return kGenNames[static_cast<int>(g)]; }

bool lookup_generator(const std::string& name, Generator& out) {
  for (int i = 0; i < kNumGenerators; ++i)
    if (kGenNames[i] == name) {
      out = static_cast<Generator>(i);
      return true;
    }
  return false;
}

void OperatorPoly::add_term(const Monomial& m, Scalar c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned OperatorPoly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

OperatorPoly linear_combine(const Scalar& a, const OperatorPoly& A, const Scalar& b,
                            const OperatorPoly& B) {
  OperatorPoly r;
  for (const auto& [m, c] : A.terms()) r.add_term(m, a * c);
  for (const auto& [m, c] : B.terms()) r.add_term(m, b * c);
  return r;
}

OperatorPoly operator*(const Scalar& c, const OperatorPoly& A) {
  OperatorPoly r;
  for (const auto& [m, cm] : A.terms()) r.add_term(m, c * cm);
  return r;
}

OperatorPoly mul(const OperatorPoly& A, const OperatorPoly& B) {
  OperatorPoly r;
  for (const auto& [ma, ca] : A.terms())
    for (const auto& [mb, cb] : B.terms()) accumulate_word_product(r, ma, mb, ca * cb);
  return r;
}

OperatorPoly pow(const OperatorPoly& A, unsigned n) {
  OperatorPoly r = OperatorPoly::constant(Scalar::one());
  for (unsigned j = 0; j < n; ++j) r = mul(r, A);
  return r;
}

OperatorPoly adjoint(const OperatorPoly& A) {
  OperatorPoly r;
  for (const auto& [m, c] : A.terms()) {
    // (x^a p^b)^dagger = p^b x^a: re-order the reversed word.
    Monomial mom, pos;
    pos.exps = {m.exps[0], m.exps[1], m.exps[2], 0, 0, 0};
    mom.exps = {0, 0, 0, m.exps[3], m.exps[4], m.exps[5]};
    accumulate_word_product(r, mom, pos, c.conj());
  }
  return r;
}

namespace {

std::map<std::string, OperatorPoly> make_builtins() {
  std::map<std::string, OperatorPoly> t;
  for (int i = 0; i < kNumGenerators; ++i)
    t[kGenNames[i]] = OperatorPoly::generator(static_cast<Generator>(i));

  const Scalar inv_h = Scalar::hbar(-1);
  auto ang = [&](Generator q1, Generator p1, Generator q2, Generator p2) {
    // (q1*p1 - q2*p2)/hbar with all four factors on distinct axes
    OperatorPoly a = mul(t[generator_name(q1)], t[generator_name(p1)]);
    OperatorPoly b = mul(t[generator_name(q2)], t[generator_name(p2)]);
    return inv_h * (a - b);
  };
  t["lx"] = ang(Generator::y, Generator::pz, Generator::z, Generator::py);
  t["ly"] = ang(Generator::z, Generator::px, Generator::x, Generator::pz);
  t["lz"] = ang(Generator::x, Generator::py, Generator::y, Generator::px);
  t["L2"] = mul(t["lx"], t["lx"]) + mul(t["ly"], t["ly"]) + mul(t["lz"], t["lz"]);
  return t;
}

const std::map<std::string, OperatorPoly>& builtins() {
  static const std::map<std::string, OperatorPoly> t = make_builtins();
  return t;
}

}  // namespace

const OperatorPoly& builtin_poly(const std::string& name) {
  auto it = builtins().find(name);
  if (it == builtins().end()) throw std::out_of_range("unknown built-in operator: " + name);
  return it->second;
}

bool is_builtin_poly(const std::string& name) { return builtins().count(name) != 0; }

const std::vector<std::string>& builtin_poly_names() {
  static const std::vector<std::string> names = {"x",  "y",  "z",  "px", "py",
                                                 "pz", "lx", "ly", "lz", "L2"};
  return names;
}

}  // namespace qramsey
