#include "tmotive/scalar.hpp"

namespace tmotive {

FqPoly frobenius_poly(const FqPoly& f, int64_t i) {
  if (f.is_zero() || i == 0) return f;
  if (i < 0) throw std::domain_error("inverse Frobenius undefined on polynomials in theta");
  int64_t qi = 1;
  const auto& ctx = f.lead().ctx();
  for (int64_t k = 0; k < i; ++k) qi *= ctx->q;
  FqPoly r;
  r.c.assign((size_t)(f.deg() * qi + 1), Fq(ctx, 0));
  for (int j = 0; j <= f.deg(); ++j)
    if (!f.c[j].is_zero()) r.c[(size_t)j * qi] = f.c[j].frobenius(i);
  r.normalize();
  return r;
}

FqPoly frobenius_coeffs(const FqPoly& f, int64_t i) {
  FqPoly r = f;
  for (auto& x : r.c) x = x.frobenius(i);
  return r;
}

ThetaRat::ThetaRat(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = {};
    return;
  }
  if (den_.deg() == 0) {
    num_ = num_.scale(den_.lead().inv());
    den_ = {};
    return;
  }
  FqPoly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = *try_div_poly(num_, g);
    den_ = *try_div_poly(den_, g);
  }
  Fq linv = den_.lead().inv();
  num_ = num_.scale(linv);
  den_ = den_.scale(linv);
  if (den_.deg() == 0) den_ = {};
}

FqPoly ThetaRat::den_norm() const { return den_; }

bool ThetaRat::is_one() const {
  return den_.is_zero() && num_.deg() == 0 && num_.c[0].is_one();
}

Fq ThetaRat::constant_value() const {
  if (!is_constant()) throw std::domain_error("not a constant scalar");
  return num_.is_zero() ? Fq() : num_.c[0];
}

ThetaRat ThetaRat::operator+(const ThetaRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_zero() && o.den_.is_zero()) return from_poly(num_ + o.num_);
  FqPoly d1 = den_.is_zero() ? FqPoly::constant(num_.lead() * num_.lead().inv()) : den_;
  FqPoly d2 = o.den_.is_zero() ? FqPoly::constant(o.num_.lead() * o.num_.lead().inv()) : o.den_;
  return ThetaRat(num_ * d2 + o.num_ * d1, d1 * d2);
}

ThetaRat ThetaRat::operator-() const {
  ThetaRat r = *this;
  r.num_ = -r.num_;
  return r;
}

ThetaRat ThetaRat::operator-(const ThetaRat& o) const { return *this + (-o); }

ThetaRat ThetaRat::operator*(const ThetaRat& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_zero() && o.den_.is_zero()) return from_poly(num_ * o.num_);
  FqPoly d = den_.is_zero() ? o.den_ : (o.den_.is_zero() ? den_ : den_ * o.den_);
  return ThetaRat(num_ * o.num_, d);
}

ThetaRat ThetaRat::inv() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  FqPoly d = den_.is_zero() ? FqPoly::constant(num_.lead() * num_.lead().inv()) : den_;
  return ThetaRat(d, num_);
}

ThetaRat ThetaRat::operator/(const ThetaRat& o) const { return *this * o.inv(); }

ThetaRat ThetaRat::frobenius(int64_t i) const {
  if (i < 0) throw std::domain_error("inverse Frobenius undefined on rational scalars");
  if (is_zero() || i == 0) return *this;
  ThetaRat r;
  r.num_ = frobenius_poly(num_, i);
  r.den_ = den_.is_zero() ? FqPoly{} : frobenius_poly(den_, i);
  return r;  // canonical form preserved: (monic)^{(i)} is monic, gcd stays 1
}

ThetaRat ThetaRat::substitute_power(int r) const {
  auto blow = [r](const FqPoly& f) {
    if (f.is_zero()) return FqPoly{};
    FqPoly out;
    out.c.assign((size_t)f.deg() * r + 1, Fq(f.lead().ctx(), 0));
    for (int j = 0; j <= f.deg(); ++j) out.c[(size_t)j * r] = f.c[j];
    out.normalize();
    return out;
  };
  ThetaRat out;
  out.num_ = blow(num_);
  out.den_ = den_.is_zero() ? FqPoly{} : blow(den_);
  return out;
}

bool ThetaRat::coefficients_in_Fq() const {
  for (const auto& x : num_.c)
    if (!x.in_subfield_q()) return false;
  for (const auto& x : den_.c)
    if (!x.in_subfield_q()) return false;
  return true;
}

std::string ThetaRat::str(const std::string& var) const {
  auto poly_str = [&](const FqPoly& f) {
    if (f.is_zero()) return std::string("0");
    std::string s;
    for (int i = f.deg(); i >= 0; --i) {
      if (f.c[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      std::string cs = f.c[i].str();
      if (i == 0) {
        s += cs;
      } else {
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  };
  if (den_.is_zero()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

}  // namespace tmotive
