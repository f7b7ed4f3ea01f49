#include "tmotive/series.hpp"

#include <algorithm>

namespace tmotive {

namespace {
int64_t sat_add(int64_t a, int64_t b) {
  if (a >= Puiseux::kExact || b >= Puiseux::kExact) return Puiseux::kExact;
  return a + b;
}
int64_t sat_mul(int64_t a, int64_t k) {
  if (a >= Puiseux::kExact || a <= -Puiseux::kExact) return a >= Puiseux::kExact ? Puiseux::kExact : a;
  return a * k;
}
constexpr size_t kMaxLen = size_t(1) << 22;
}  // namespace

Puiseux::Puiseux(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t lo, int64_t prec,
                 std::vector<Fq> coeffs)
    : ctx_(std::move(ctx)), e_(e), lo_(lo), prec_(prec), c_(std::move(coeffs)) {
  normalize();
}

void Puiseux::normalize() {
  if ((int64_t)c_.size() > prec_ - lo_ && prec_ < kExact) c_.resize(std::max<int64_t>(0, prec_ - lo_));
  size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + k);
    lo_ += (int64_t)k;
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) lo_ = prec_;
}

Puiseux Puiseux::zero(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t prec) {
  return Puiseux(std::move(ctx), e, prec, prec, {});
}

Puiseux Puiseux::monomial(std::shared_ptr<const PuiseuxCtx> ctx, const Fq& c, int64_t e,
                          int64_t exponent, int64_t prec) {
  if (c.is_zero()) return zero(std::move(ctx), e, prec);
  return Puiseux(std::move(ctx), e, exponent, prec, {c});
}

Puiseux Puiseux::theta(std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t prec) {
  const Fq one = ctx->F->one();
  int64_t ex = ctx->place < 0 ? -e : e;
  return monomial(std::move(ctx), one, e, ex, prec);
}

Puiseux Puiseux::from_field(std::shared_ptr<const PuiseuxCtx> ctx, const Fq& c, int64_t e,
                            int64_t prec) {
  return monomial(std::move(ctx), c, e, 0, prec);
}

Frac Puiseux::val() const {
  if (c_.empty()) throw insufficient_precision("valuation of a value that is zero to precision");
  return Frac(lo_, e_);
}

const Fq& Puiseux::lead() const {
  if (c_.empty()) throw insufficient_precision("leading coefficient of zero-to-precision value");
  return c_[0];
}

Fq Puiseux::coeff_at(int64_t exponent) const {
  if (exponent >= prec_) throw insufficient_precision("coefficient beyond precision window");
  if (exponent < lo_ || exponent >= lo_ + (int64_t)c_.size()) return Fq(ctx_->F->zero());
  return c_[exponent - lo_];
}

Puiseux Puiseux::with_prec(int64_t new_prec) const {
  if (new_prec >= prec_) return *this;
  Puiseux r = *this;
  r.prec_ = new_prec;
  r.normalize();
  return r;
}

Puiseux Puiseux::coerce(int64_t e_new) const {
  if (e_new == e_) return *this;
  if (e_new % e_ != 0) throw std::invalid_argument("ramification indices incompatible");
  int64_t k = e_new / e_;
  Puiseux r;
  r.ctx_ = ctx_;
  r.e_ = e_new;
  r.lo_ = sat_mul(lo_, k);
  r.prec_ = sat_mul(prec_, k);
  if (!c_.empty()) {
    if (c_.size() * k > kMaxLen) throw std::runtime_error("series too long");
    r.c_.assign((c_.size() - 1) * k + 1, Fq(ctx_->F->zero()));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  }
  r.normalize();
  return r;
}

void Puiseux::align(Puiseux& a, Puiseux& b) {
  if (!a.ctx_) a.ctx_ = b.ctx_;
  if (!b.ctx_) b.ctx_ = a.ctx_;
  if (a.ctx_ && b.ctx_ && !(*a.ctx_ == *b.ctx_))
    throw std::invalid_argument("mixing distinct valuation contexts");
  int64_t e = std::lcm(a.e_, b.e_);
  a = a.coerce(e);
  b = b.coerce(e);
}

Puiseux Puiseux::operator+(const Puiseux& o) const {
  Puiseux a = *this, b = o;
  if (!a.ctx_ && a.c_.empty() && a.exact()) return b;  // context-free exact zero
  if (!b.ctx_ && b.c_.empty() && b.exact()) return a;
  align(a, b);
  int64_t prec = std::min(a.prec_, b.prec_);
  int64_t lo = std::min(std::min(a.lo_, b.lo_), prec);
  Puiseux r;
  r.ctx_ = a.ctx_;
  r.e_ = a.e_;
  r.lo_ = lo;
  r.prec_ = prec;
  if (lo < prec) {
    int64_t hi = lo;
    if (!a.c_.empty()) hi = std::max(hi, std::min(a.lo_ + (int64_t)a.c_.size(), prec));
    if (!b.c_.empty()) hi = std::max(hi, std::min(b.lo_ + (int64_t)b.c_.size(), prec));
    r.c_.assign(hi - lo, Fq(a.ctx_->F->zero()));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      int64_t ex = a.lo_ + (int64_t)i;
      if (ex < prec) r.c_[ex - lo] = r.c_[ex - lo] + a.c_[i];
    }
    for (size_t i = 0; i < b.c_.size(); ++i) {
      int64_t ex = b.lo_ + (int64_t)i;
      if (ex < prec) r.c_[ex - lo] = r.c_[ex - lo] + b.c_[i];
    }
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::operator-() const {
  Puiseux r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Puiseux Puiseux::operator-(const Puiseux& o) const { return *this + (-o); }

Puiseux Puiseux::operator*(const Puiseux& o) const {
  Puiseux a = *this, b = o;
  if (!a.ctx_ && a.c_.empty() && a.exact()) return a;  // exact zero annihilates
  if (!b.ctx_ && b.c_.empty() && b.exact()) return b;
  align(a, b);
  // unknown-from bound: lo_a + prec_b and lo_b + prec_a
  int64_t prec = std::min(sat_add(a.lo_, b.prec_), sat_add(b.lo_, a.prec_));
  Puiseux r;
  r.ctx_ = a.ctx_;
  r.e_ = a.e_;
  r.prec_ = prec;
  r.lo_ = std::min(sat_add(a.lo_, b.lo_), prec);
  if (!a.c_.empty() && !b.c_.empty() && r.lo_ < prec) {
    int64_t len = std::min<int64_t>((int64_t)(a.c_.size() + b.c_.size()) - 1, prec - r.lo_);
    if (len > (int64_t)kMaxLen) throw std::runtime_error("series too long");
    r.c_.assign(len, Fq(a.ctx_->F->zero()));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      size_t jmax = std::min(b.c_.size(), (size_t)std::max<int64_t>(0, len - (int64_t)i));
      for (size_t j = 0; j < jmax; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
  }
  r.normalize();
  return r;
}

Puiseux Puiseux::scale(const Fq& x) const {
  if (x.is_zero()) return zero(ctx_, e_, prec_);
  Puiseux r = *this;
  for (auto& y : r.c_) y = y * x;
  return r;
}

Puiseux Puiseux::mul_theta_pow(int64_t k) const {
  Puiseux r = *this;
  int64_t shift = (ctx_->place < 0 ? -e_ : e_) * k;
  if (r.lo_ < kExact) r.lo_ += shift;
  if (r.prec_ < kExact) r.prec_ += shift;
  return r;
}

Puiseux Puiseux::inv() const {
  if (c_.empty()) {
    if (exact()) throw std::domain_error("inverse of zero");
    throw insufficient_precision("inverse of a value that is zero to precision");
  }
  if (exact() && c_.size() > 1)
    throw std::domain_error("inverse of an exact multi-term series needs a precision bound");
  // x = c0 u^lo (1 + w); 1/x = c0^{-1} u^{-lo} (1 - w + w^2 - ...)
  int64_t n = exact() ? (int64_t)c_.size() : prec_ - lo_;  // relative precision
  Fq c0inv = c_[0].inv();
  std::vector<Fq> unit(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) unit[i] = c_[i] * c0inv;  // unit[0] = 1
  std::vector<Fq> b((size_t)std::min<int64_t>(n, (int64_t)kMaxLen), Fq(ctx_->F->zero()));
  b[0] = ctx_->F->one();
  for (size_t k = 1; k < b.size(); ++k) {
    Fq acc = ctx_->F->zero();
    size_t jmax = std::min(k, unit.size() - 1);
    for (size_t j = 1; j <= jmax; ++j)
      if (!unit[j].is_zero()) acc = acc + unit[j] * b[k - j];
    b[k] = -acc;
  }
  for (auto& x : b) x = x * c0inv;
  int64_t prec = exact() ? kExact : prec_ - 2 * lo_;
  return Puiseux(ctx_, e_, -lo_, prec, std::move(b));
}

Puiseux Puiseux::pow(int64_t k) const {
  if (k == 0) return from_field(ctx_, ctx_->F->one(), e_, prec_== kExact ? kExact : prec_ - lo_);
  if (k < 0) return inv().pow(-k);
  Puiseux base = *this;
  Puiseux r;
  bool have = false;
  int64_t kk = k;
  while (kk > 0) {
    if (kk & 1) {
      r = have ? r * base : base;
      have = true;
    }
    kk >>= 1;
    if (kk) base = base * base;
  }
  return r;
}

Puiseux Puiseux::frobenius(int64_t i) const {
  if (i == 0) return *this;
  const int64_t q = ctx_->F->q;
  if (i > 0) {
    int64_t qi = 1;
    for (int64_t k = 0; k < i; ++k) {
      qi *= q;
      if (qi > (int64_t)kMaxLen) throw std::runtime_error("frobenius power too large");
    }
    Puiseux r;
    r.ctx_ = ctx_;
    r.e_ = e_;
    r.lo_ = sat_mul(lo_, qi);
    r.prec_ = sat_mul(prec_, qi);
    if (!c_.empty()) {
      if ((c_.size() - 1) * qi + 1 > kMaxLen) throw std::runtime_error("series too long");
      r.c_.assign((c_.size() - 1) * qi + 1, Fq(ctx_->F->zero()));
      for (size_t k = 0; k < c_.size(); ++k)
        if (!c_[k].is_zero()) r.c_[k * qi] = c_[k].frobenius(i);
    }
    r.normalize();
    return r;
  }
  // inverse Frobenius: every exponent must be divisible by q^{|i|}
  int64_t qi = 1;
  for (int64_t k = 0; k < -i; ++k) qi *= q;
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero() && (lo_ + (int64_t)k) % qi != 0)
      throw std::domain_error("inverse Frobenius undefined");
  Puiseux r;
  r.ctx_ = ctx_;
  r.e_ = e_;
  if (c_.empty()) {
    r.lo_ = r.prec_ = exact() ? kExact : prec_ / qi;
    return r;
  }
  r.lo_ = lo_ / qi;
  // exponents < prec known; divisible ones survive: new prec = ceil(prec/qi)
  r.prec_ = exact() ? kExact : (prec_ + qi - 1) / qi;
  r.c_.assign(c_.size() / qi + 1, Fq(ctx_->F->zero()));
  for (size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) r.c_[(lo_ + (int64_t)k) / qi - r.lo_] = c_[k].frobenius(i);
  r.normalize();
  return r;
}

Puiseux Puiseux::kth_root(int64_t k) const {
  const auto& F = ctx_->F;
  if (k <= 0) throw std::invalid_argument("root index must be positive");
  if (k == 1) return *this;
  if (k % F->p == 0) throw wild_exponent("wild exponent: p divides the root index");
  if (c_.empty()) {
    if (exact_zero()) return *this;
    throw insufficient_precision("root of a value that is zero to precision");
  }
  int64_t t_ram = k / std::gcd(std::abs(lo_), k);  // gcd(0, k) = k
  int64_t e_new = e_ * t_ram;
  Puiseux x = coerce(e_new);
  // now the valuation exponent is divisible by k
  int64_t m = x.lo_;
  if (m % k != 0) throw std::runtime_error("internal: root valuation not divisible");
  // k-th root of the leading coefficient: solve k*y = log(c) mod Q-1
  const Fq& c = x.c_[0];
  int64_t n = F->Q - 1;
  int64_t a = c.code() - 1;
  int64_t gk = std::gcd(k % n, n);
  if (a % gk != 0) {
    // minimal extension degree d: in F_{q^{M d}} the log of c scales by
    // (Q^d-1)/(Q-1); the root exists iff gcd(k, Q^d-1) divides that log
    int found = 0;
    for (int d = 2; d <= 64 && !found; ++d) {
      __int128 nd = 0;  // Q^d - 1
      __int128 Qd = 1;
      bool overflow = false;
      for (int t = 0; t < d; ++t) {
        Qd *= F->Q;
        if (Qd > (__int128)1 << 100) {
          overflow = true;
          break;
        }
      }
      if (overflow) break;
      nd = Qd - 1;
      int64_t gd = std::gcd((int64_t)(k % nd), (int64_t)std::min<__int128>(nd, INT64_MAX));
      if (nd <= INT64_MAX) gd = std::gcd(k % (int64_t)nd, (int64_t)nd);
      __int128 scale = nd / (F->Q - 1);
      int64_t ad_mod = (int64_t)(((__int128)(a % gd) * (int64_t)(scale % gd)) % gd);
      if (ad_mod == 0) found = d;
    }
    throw extension_required(found ? found : -1);
  }
  // least solution y of k y = a (mod n)
  int64_t k_red = ((k % n) + n) % n;
  int64_t g2 = std::gcd(k_red, n);
  int64_t n2 = n / g2;
  // inverse of k/g2 mod n2
  auto inv_mod = [](int64_t x, int64_t m) {
    int64_t a0 = m, b0 = ((x % m) + m) % m, u0 = 0, u1 = 1;
    while (b0) {
      int64_t t = a0 / b0;
      a0 -= t * b0;
      std::swap(a0, b0);
      u0 -= t * u1;
      std::swap(u0, u1);
    }
    return ((u0 % m) + m) % m;
  };
  int64_t y = (a / g2) % n2 * inv_mod(k_red / g2, n2) % n2;
  Fq root_lead = F->from_code(1 + y);
  // normalize x to its unit part 1 + w
  Puiseux unit = x.scale(x.c_[0].inv());
  unit.lo_ -= m;
  unit.prec_ = unit.exact() ? kExact : unit.prec_ - m;
  // Newton iteration for z^k = unit, z0 = 1
  Puiseux z = from_field(ctx_, F->one(), e_new, unit.prec_);
  Fq kinv = F->from_int(k % F->p).inv();
  for (int it = 0; it < 64; ++it) {
    Puiseux fz = z.pow(k) - unit;
    if (fz.zero_to_prec()) break;
    Puiseux corr = (fz / z.pow(k - 1)).scale(kinv);
    z = z - corr;
    if (it == 63) throw std::runtime_error("kth_root: no convergence");
  }
  Puiseux r = z.scale(root_lead);
  r.lo_ += m / k;
  if (!r.exact()) r.prec_ += m / k;
  // final check on retained coefficients
  Puiseux check = r.pow(k) - x;
  if (!check.zero_to_prec()) throw std::runtime_error("kth_root: verification failed");
  return r;
}

bool verified_zero(const Puiseux& x, const Frac& window) {
  if (x.known_nonzero()) return false;
  if (x.exact()) return true;
  if (x.prec_val() < window)
    throw insufficient_precision("zero only verified to u-valuation " + x.prec_val().str() +
                                 ", demanded " + window.str());
  return true;
}

std::string Puiseux::str() const {
  if (c_.empty()) return exact() ? "0" : "O(u^" + std::to_string(prec_) + ")";
  std::string s;
  int shown = 0;
  for (size_t i = 0; i < c_.size() && shown < 8; ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[i].str() + "*u^" + std::to_string(lo_ + (int64_t)i);
    ++shown;
  }
  if (!exact()) s += " + O(u^" + std::to_string(prec_) + ")";
  return s + " [e=" + std::to_string(e_) + "]";
}

Puiseux iota_embed(const ThetaRat& x, std::shared_ptr<const PuiseuxCtx> ctx, int64_t e, int64_t N) {
  const auto& F = ctx->F;
  if (x.is_zero()) return Puiseux::zero(std::move(ctx), e, N);
  // write x = t^{v} * (n(t)/d(t)) with d(0) != 0, where t is the local
  // uniformizer: t = 1/θ at the infinite place, t = θ at the θ-adic place.
  const FqPoly& num = x.num();
  FqPoly den = x.den().is_zero() ? FqPoly::constant(F->one()) : x.den();
  std::vector<Fq> nc, dc;
  int64_t v = 0;
  if (ctx->place < 0) {
    // reverse coefficients: f(θ) = θ^{deg} f~(1/θ)
    nc.assign(num.c.rbegin(), num.c.rend());
    dc.assign(den.c.rbegin(), den.c.rend());
    v = den.deg() - num.deg();  // valuation in θ^{-1} units
  } else {
    nc = num.c;
    dc = den.c;
    size_t i = 0, j = 0;
    while (nc[i].is_zero()) ++i;
    while (dc[j].is_zero()) ++j;
    nc.erase(nc.begin(), nc.begin() + i);
    dc.erase(dc.begin(), dc.begin() + j);
    v = (int64_t)i - (int64_t)j;
  }
  // series division nc/dc to enough terms: exponents v + k (t-units), keep
  // e*(v+k) < N
  int64_t terms = N - v * e;
  int64_t nterms = (terms + e - 1) / e;
  if (nterms < 0) nterms = 0;
  std::vector<Fq> out((size_t)nterms, Fq(F->zero()));
  Fq d0inv = dc[0].inv();
  std::vector<Fq> rem(nc);
  rem.resize(std::max(nc.size(), (size_t)nterms), Fq(F->zero()));
  for (int64_t k = 0; k < nterms; ++k) {
    Fq ck = rem[k] * d0inv;
    out[k] = ck;
    if (!ck.is_zero())
      for (size_t j = 1; j < dc.size() && k + (int64_t)j < (int64_t)rem.size(); ++j)
        rem[k + j] = rem[k + j] - ck * dc[j];
  }
  // place into u-exponents: exponent of t^{v+k} is e*(v+k)
  std::vector<Fq> cc((size_t)std::max<int64_t>(0, nterms > 0 ? (nterms - 1) * e + 1 : 0),
                     Fq(F->zero()));
  for (int64_t k = 0; k < nterms; ++k) cc[(size_t)(k * e)] = out[k];
  return Puiseux(std::move(ctx), e, v * e, N, std::move(cc));
}

}  // namespace tmotive
