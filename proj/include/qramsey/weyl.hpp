#pragma once

#include "qramsey/scalar.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qramsey {

// Canonical generators of the one-particle Weyl algebra, in the fixed
// normal-ordering: all positions precede all momenta.
enum class Generator : int { x = 0, y = 1, z = 2, px = 3, py = 4, pz = 5 };

inline constexpr int kNumGenerators = 6;
const std::string& generator_name(Generator g);
// Returns false if the name is not a generator.
bool lookup_generator(const std::string& name, Generator& out);

// Normal-ordered word x^a y^b z^c px^d py^e pz^f.
struct Monomial {
  std::array<unsigned, kNumGenerators> exps{};

  static Monomial identity() { return Monomial{}; }
  static Monomial gen(Generator g, unsigned power = 1) {
    Monomial m;
    m.exps[static_cast<int>(g)] = power;
    return m;
  }

  bool is_identity() const {
    for (unsigned e : exps)
      if (e) return false;
    return true;
  }
  unsigned total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps) d += e;
    return d;
  }

  auto operator<=>(const Monomial&) const = default;
};

// Finite sum of scalar-weighted normal-ordered monomials. The representation
// is canonical: equal operators have equal term maps, so zero testing and
// equality are exact structural checks.
class OperatorPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  OperatorPoly() = default;

  static OperatorPoly zero() { return {}; }
  static OperatorPoly constant(Scalar c) {
    OperatorPoly p;
    p.add_term(Monomial::identity(), std::move(c));
    return p;
  }
  static OperatorPoly generator(Generator g) {
    OperatorPoly p;
    p.add_term(Monomial::gen(g), Scalar::one());
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const OperatorPoly& o) const = default;

  // Adds c * m, erasing the slot if the sum cancels.
  void add_term(const Monomial& m, Scalar c);

  unsigned degree() const;  // max total degree over terms; 0 for the zero operator

 private:
  Terms terms_;
};

// a*A + b*B
OperatorPoly linear_combine(const Scalar& a, const OperatorPoly& A, const Scalar& b,
                            const OperatorPoly& B);
inline OperatorPoly operator+(const OperatorPoly& A, const OperatorPoly& B) {
  return linear_combine(Scalar::one(), A, Scalar::one(), B);
}
inline OperatorPoly operator-(const OperatorPoly& A, const OperatorPoly& B) {
  return linear_combine(Scalar::one(), A, -Scalar::one(), B);
}
OperatorPoly operator*(const Scalar& c, const OperatorPoly& A);

// Noncommutative product, normal-ordered via [p_j, x_k] = -i hbar delta_jk.
OperatorPoly mul(const OperatorPoly& A, const OperatorPoly& B);
OperatorPoly pow(const OperatorPoly& A, unsigned n);

inline OperatorPoly commutator(const OperatorPoly& A, const OperatorPoly& B) {
  return mul(A, B) - mul(B, A);
}

// Hermitian adjoint: coefficients conjugate, words reverse and re-order.
OperatorPoly adjoint(const OperatorPoly& A);
inline bool is_hermitian(const OperatorPoly& A) { return adjoint(A) == A; }

// Built-in polynomial observables: the six generators plus the dimensionless
// angular momenta lx = (y*pz - z*py)/hbar (cyclically) and L2 = lx^2+ly^2+lz^2.
const OperatorPoly& builtin_poly(const std::string& name);
bool is_builtin_poly(const std::string& name);
const std::vector<std::string>& builtin_poly_names();

}  // namespace qramsey
