#pragma once

// Exact scalars F_{q^M}(θ): rational functions in θ (or in the ramified
// variable s with s^r = θ for the Kummer constructions) over F_{q^M}.
// Canonical form: monic denominator, gcd(num, den) = 1. The q-power
// Frobenius acts by z -> z^q, i.e. coefficients to the q-th power and
// variable exponents scaled by q.

#include "tmotive/field.hpp"
#include "tmotive/poly.hpp"

namespace tmotive {

using FqPoly = Poly<Fq>;

inline bool try_div(const Fq& a, const Fq& b, Fq& out) {
  if (b.is_zero()) return false;
  out = a / b;
  return true;
}

inline bool try_div(const FqPoly& a, const FqPoly& b, FqPoly& out) {
  auto q = try_div_poly(a, b);
  if (!q) return false;
  out = *q;
  return true;
}

FqPoly frobenius_poly(const FqPoly& f, int64_t i);  // coeffs^{q^i}, exponents * q^i
FqPoly frobenius_coeffs(const FqPoly& f, int64_t i);  // coeffs^{q^i} only

class ThetaRat {
 public:
  ThetaRat() = default;  // zero
  ThetaRat(FqPoly num, FqPoly den);
  static ThetaRat from_poly(FqPoly f) {
    ThetaRat r;
    r.num_ = std::move(f);
    return r;
  }
  static ThetaRat constant(const Fq& c) { return from_poly(FqPoly::constant(c)); }
  static ThetaRat theta(const std::shared_ptr<const FqContext>& F) {
    FqPoly t;
    t.c = {F->zero(), F->one()};
    return from_poly(t);
  }
  static ThetaRat one(const std::shared_ptr<const FqContext>& F) {
    return from_poly(FqPoly::constant(F->one()));
  }

  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }  // empty means 1
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_zero() || den_.deg() == 0; }
  bool is_constant() const { return is_polynomial() && num_.deg() <= 0; }
  Fq constant_value() const;  // requires is_constant
  int degree() const { return num_.deg() - (den_.is_zero() ? 0 : den_.deg()); }  // deg num - deg den

  ThetaRat operator+(const ThetaRat& o) const;
  ThetaRat operator-(const ThetaRat& o) const;
  ThetaRat operator-() const;
  ThetaRat operator*(const ThetaRat& o) const;
  ThetaRat operator/(const ThetaRat& o) const;
  ThetaRat inv() const;
  ThetaRat scale(const Fq& c) const { return *this * constant(c); }
  ThetaRat frobenius(int64_t i = 1) const;
  // substitute the variable by its r-th power (θ = s^r embeddings)
  ThetaRat substitute_power(int r) const;

  bool operator==(const ThetaRat& o) const { return num_ == o.num_ && den_norm() == o.den_norm(); }
  bool operator!=(const ThetaRat& o) const { return !(*this == o); }

  // every coefficient lies in the subfield F_q (membership in F_q(θ))
  bool coefficients_in_Fq() const;

  std::string str(const std::string& var = "theta") const;

 private:
  FqPoly den_norm() const;
  FqPoly num_;  // zero scalar <=> empty num
  FqPoly den_;  // empty means 1; otherwise monic, coprime to num
};

}  // namespace tmotive
