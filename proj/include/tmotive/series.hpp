#pragma once

// Truncated, valuation-tracked Puiseux series over F_{q^M}: the desk-scale
// model of C∞. A value is c_lo u^lo + ... + c_{prec-1} u^{prec-1} + O(u^prec)
// with u = θ^{-1/e} at the infinite place (val θ = -1) or u = θ^{1/e} at the
// θ-adic place (val θ = +1). val(u) = 1/e in both normalizations.
//
// Precision discipline: a value reported nonzero has exact valuation lo/e;
// binary operations propagate the unknown-from bound pessimistically;
// comparisons that a truncated window cannot decide raise
// insufficient_precision instead of answering.

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "tmotive/scalar.hpp"

namespace tmotive {

struct insufficient_precision : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct extension_required : std::runtime_error {
  int degree;
  explicit extension_required(int d)
      : std::runtime_error("extension required: degree " + std::to_string(d)), degree(d) {}
};
struct wild_exponent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct unsupported_family : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// small exact rational for valuations
struct Frac {
  int64_t n = 0, d = 1;
  Frac() = default;
  Frac(int64_t nn, int64_t dd) : n(nn), d(dd) { norm(); }
  void norm() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  Frac scaled(int64_t k) const { return Frac(n * k, d); }
  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  bool operator<=(const Frac& o) const { return n * o.d <= o.n * d; }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

struct PuiseuxCtx {
  std::shared_ptr<const FqContext> F;
  int place = -1;  // -1: infinite place (val θ = -1); +1: θ-adic place (val θ = +1)
  bool operator==(const PuiseuxCtx& o) const { return F->same(*o.F) && place == o.place; }
};

class Puiseux {
 public:
  static constexpr int64_t kExact = std::numeric_limits<int64_t>::max() / 4;

  Puiseux() = default;  // exact zero with no context
  Puiseux(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t lo, int64_t prec,
          std::vector<Fq> coeffs);

  static Puiseux zero(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t prec = kExact);
  static Puiseux monomial(std::shared_ptr<const PuiseuxCtx> ctx, const Fq& c, int64_t e,
                          int64_t exponent, int64_t prec = kExact);
  static Puiseux theta(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t prec = kExact);
  static Puiseux from_field(std::shared_ptr<const PuiseuxCtx> ctx, const Fq& c, int64_t e,
                            int64_t prec = kExact);

  const std::shared_ptr<const PuiseuxCtx>& ctx() const { return ctx_; }
  int64_t e() const { return e_; }
  int64_t lo() const { return lo_; }
  int64_t prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  bool has_window() const { return lo_ < prec_; }
  // nonzero within the known window
  bool known_nonzero() const { return !c_.empty(); }
  // identically zero on the known window (possibly zero only to precision)
  bool zero_to_prec() const { return c_.empty(); }
  bool exact_zero() const { return c_.empty() && exact(); }
  Frac val() const;                 // requires known_nonzero
  Frac prec_val() const { return Frac(prec_, e_); }
  const Fq& lead() const;
  Fq coeff_at(int64_t exponent) const;  // exponent in u-units (same e)

  Puiseux with_prec(int64_t new_prec) const;  // clamp precision (u-units of this e)
  Puiseux coerce(int64_t e_new) const;        // e must divide e_new

  Puiseux operator+(const Puiseux& o) const;
  Puiseux operator-(const Puiseux& o) const;
  Puiseux operator-() const;
  Puiseux operator*(const Puiseux& o) const;
  Puiseux operator/(const Puiseux& o) const { return *this * o.inv(); }
  Puiseux scale(const Fq& a) const;
  Puiseux mul_theta_pow(int64_t k) const;  // multiply by θ^k (exact shift)
  Puiseux inv() const;
  Puiseux pow(int64_t k) const;
  Puiseux frobenius(int64_t i = 1) const;
  // k-th root (gcd(k, p) = 1): exact leading term, Newton for the unit part
  Puiseux kth_root(int64_t k) const;

  std::string str() const;

 private:
  void normalize();
  static void align(Puiseux& a, Puiseux& b);
  std::shared_ptr<const PuiseuxCtx> ctx_;
  int64_t e_ = 1;
  int64_t lo_ = kExact;    // first stored exponent; lo_ == prec_ means zero-to-prec
  int64_t prec_ = kExact;  // exponents >= prec_ are unknown
  std::vector<Fq> c_;      // c_[i] is the coefficient of u^{lo_+i}; c_[0] != 0 when nonempty
};

// Laurent expansion of an exact scalar at the context's place, to precision N
// (u-units for ramification e). At the infinite place the valuation is
// deg(den) - deg(num); at the θ-adic place it is ord_θ(num) - ord_θ(den).
Puiseux iota_embed(const ThetaRat& x, std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t N);

// x must vanish on all retained coefficients AND its zero-window must reach
// the demanded valuation; a window that stops short raises
// insufficient_precision instead of answering. Returns false when a nonzero
// coefficient is retained.
bool verified_zero(const Puiseux& x, const Frac& window);

// i-fold q-power Frobenius on any of the three scalar types (spec op)
inline Fq frobenius_power(const Fq& x, int64_t i) { return x.frobenius(i); }
inline ThetaRat frobenius_power(const ThetaRat& x, int64_t i) { return x.frobenius(i); }
inline Puiseux frobenius_power(const Puiseux& x, int64_t i) { return x.frobenius(i); }

}  // namespace tmotive
