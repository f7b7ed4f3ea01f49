#include "tmotive/field.hpp"

#include <numeric>

namespace tmotive {

namespace {

int64_t pow_i64(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

using Vec = std::vector<int64_t>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec mulmod(const Vec& a, const Vec& b, const Vec& mod, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  size_t d = mod.size() - 1;
  for (size_t i = r.size(); i-- > d;) {
    int64_t c = r[i] % p;
    if (c == 0) continue;
    for (size_t j = 0; j < d; ++j) r[i - d + j] = ((r[i - d + j] - c * mod[j]) % p + p) % p;
    r[i] = 0;
  }
  if (r.size() > d) r.resize(d);
  trim(r);
  return r;
}

Vec powmod(Vec a, int64_t e, const Vec& mod, int64_t p) {
  Vec r{1};
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, mod, p);
    a = mulmod(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

Vec gcd_fp(Vec a, Vec b, int64_t p) {
  auto inv_mod_p = [p](int64_t x) {
    int64_t r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    int64_t lead_inv = inv_mod_p(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      int64_t c = a.back() * lead_inv % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - c * b[j]) % p + p) % p;
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

std::vector<int64_t> factor_small(int64_t n) {
  std::vector<int64_t> fs;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

int64_t pack(const Vec& v, int64_t p, int D) {
  int64_t x = 0;
  for (int i = D - 1; i >= 0; --i) x = x * p + (i < (int)v.size() ? v[i] : 0);
  return x;
}

}  // namespace

bool is_irreducible_fp(int64_t p, const std::vector<int64_t>& poly) {
  Vec f = poly;
  trim(f);
  int d = (int)f.size() - 1;
  if (d < 1) return false;
  std::vector<Vec> powers(d + 1);  // x^{p^k} mod f
  powers[0] = mulmod(Vec{1}, Vec{0, 1}, f, p);  // x reduced mod f
  for (int k = 1; k <= d; ++k) powers[k] = powmod(powers[k - 1], p, f, p);
  auto sub_x = [&](Vec g) {
    // g - x, reduced mod f
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    trim(g);
    Vec r = mulmod(g, Vec{1}, f, p);
    return r;
  };
  if (!sub_x(powers[d]).empty()) return false;
  for (int64_t l : factor_small(d)) {
    Vec g = sub_x(powers[d / l]);
    if (g.empty()) return false;  // x^{p^{d/l}} = x has small-degree factors
    if (gcd_fp(g, f, p).size() != 1) return false;
  }
  return true;
}

std::vector<int64_t> least_irreducible(int64_t p, int d) {
  int64_t total = pow_i64(p, d);
  for (int64_t v = 0; v < total; ++v) {
    Vec f(d + 1, 0);
    int64_t x = v;
    for (int i = 0; i < d; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[d] = 1;
    if (is_irreducible_fp(p, f)) return f;
  }
  throw std::runtime_error("no irreducible polynomial found");
}

std::shared_ptr<const FqContext> FqContext::make(int64_t p, int s, int M,
                                                 const std::vector<int64_t>* mod) {
  if (p < 2 || s < 1 || M < 1) throw std::invalid_argument("bad field parameters");
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("characteristic must be prime");
  auto ctx = std::make_shared<FqContext>();
  ctx->p = p;
  ctx->s = s;
  ctx->M = M;
  ctx->D = s * M;
  ctx->q = pow_i64(p, s);
  ctx->Q = pow_i64(p, ctx->D);
  if (ctx->Q > (1 << 20)) throw std::runtime_error("field too large (q^M > 2^20)");
  if (mod) {
    Vec m = *mod;
    for (auto& c : m) c = ((c % p) + p) % p;
    trim(m);
    if ((int)m.size() != ctx->D + 1 || m.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree s*M");
    if (!is_irreducible_fp(p, m)) throw std::invalid_argument("modulus is reducible over F_p");
    ctx->modulus = m;
  } else {
    ctx->modulus = least_irreducible(p, ctx->D);
  }

  int64_t n = ctx->Q - 1;
  auto fs = factor_small(n);
  Vec gen;
  for (int64_t v = 1; v < ctx->Q; ++v) {
    Vec cand(ctx->D, 0);
    int64_t x = v;
    for (int i = 0; i < ctx->D; ++i) {
      cand[i] = x % p;
      x /= p;
    }
    trim(cand);
    bool ok = true;
    for (int64_t l : fs) {
      Vec t = powmod(cand, n / l, ctx->modulus, p);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen.empty()) throw std::runtime_error("no generator found");

  ctx->exp_tab.assign(n, 0);
  ctx->log_tab.assign(ctx->Q, -1);
  Vec cur{1};
  for (int64_t k = 0; k < n; ++k) {
    int64_t packed = pack(cur, p, ctx->D);
    ctx->exp_tab[k] = packed;
    ctx->log_tab[packed] = k;
    cur = mulmod(cur, gen, ctx->modulus, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1)) throw std::runtime_error("generator order wrong");

  ctx->zech.assign(n, -1);
  for (int64_t k = 0; k < n; ++k) {
    int64_t packed = ctx->exp_tab[k];
    int64_t c0 = packed % p;
    int64_t plus = packed - c0 + (c0 + 1) % p;
    ctx->zech[k] = plus == 0 ? -1 : (int32_t)ctx->log_tab[plus];
  }
  ctx->neg_log = (p == 2) ? 0 : n / 2;
  return ctx;
}

Fq FqContext::zero() const { return Fq(shared_from_this(), 0); }
Fq FqContext::one() const { return Fq(shared_from_this(), 1); }
Fq FqContext::generator() const { return Fq(shared_from_this(), Q > 2 ? 2 : 1); }

Fq FqContext::from_int(int64_t v) const {
  int64_t c = ((v % p) + p) % p;
  if (c == 0) return zero();
  return Fq(shared_from_this(), 1 + log_tab[c]);
}

Fq FqContext::from_code(int64_t code) const {
  if (code < 0 || code > Q - 1) throw std::out_of_range("field code");
  return Fq(shared_from_this(), code);
}

Fq FqContext::from_coords(const std::vector<int64_t>& v) const {
  Vec w(v);
  for (auto& c : w) c = ((c % p) + p) % p;
  int64_t packed = pack(w, p, D);
  if (packed == 0) return zero();
  return Fq(shared_from_this(), 1 + log_tab[packed]);
}

Fq FqContext::element(int64_t index) const {
  if (index < 0 || index >= Q) throw std::out_of_range("element index");
  if (index == 0) return zero();
  return Fq(shared_from_this(), 1 + log_tab[index]);
}

Fq FqContext::subfield_element(int64_t index) const {
  if (index < 0 || index >= q) throw std::out_of_range("subfield index");
  if (index == 0) return zero();
  int64_t step = (Q - 1) / (q - 1);
  return Fq(shared_from_this(), 1 + step * (index - 1) % (Q - 1));
}

std::vector<int64_t> FqContext::coords(const Fq& x) const {
  std::vector<int64_t> v(D, 0);
  if (x.is_zero()) return v;
  int64_t packed = exp_tab[x.code() - 1];
  for (int i = 0; i < D; ++i) {
    v[i] = packed % p;
    packed /= p;
  }
  return v;
}

Fq Fq::operator+(const Fq& o) const {
  if (code_ == 0) return o;
  if (o.code_ == 0) return *this;
  const FqContext& C = *ctx_;
  int64_t n = C.Q - 1;
  int64_t a = code_ - 1, b = o.code_ - 1;
  int64_t d = ((b - a) % n + n) % n;
  int32_t z = C.zech[d];
  if (z < 0) return Fq(ctx_, 0);
  return Fq(ctx_, 1 + (a + z) % n);
}

Fq Fq::operator-() const {
  if (code_ == 0) return *this;
  const FqContext& C = *ctx_;
  return Fq(ctx_, 1 + (code_ - 1 + C.neg_log) % (C.Q - 1));
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
  if (code_ == 0) return *this;
  if (o.code_ == 0) return o;
  int64_t n = ctx_->Q - 1;
  return Fq(ctx_, 1 + (code_ - 1 + o.code_ - 1) % n);
}

Fq Fq::inv() const {
  if (code_ == 0) throw std::domain_error("division by zero in F_{q^M}");
  int64_t n = ctx_->Q - 1;
  return Fq(ctx_, 1 + (n - (code_ - 1)) % n);
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inv(); }

Fq Fq::pow(int64_t e) const {
  if (code_ == 0) {
    if (e < 0) throw std::domain_error("0^negative");
    return e == 0 ? ctx_->one() : *this;
  }
  int64_t n = ctx_->Q - 1;
  int64_t k = ((code_ - 1) % n * (((e % n) + n) % n)) % n;
  return Fq(ctx_, 1 + k);
}

Fq Fq::frobenius(int64_t i) const {
  if (code_ == 0 || code_ == 1) return *this;
  const FqContext& C = *ctx_;
  int64_t n = C.Q - 1;
  int64_t ii = ((i % C.M) + C.M) % C.M;
  int64_t f = 1;
  for (int64_t k = 0; k < ii; ++k) f = f * (C.q % n) % n;
  return Fq(ctx_, 1 + (code_ - 1) * f % n);
}

bool Fq::in_subfield_q() const {
  if (code_ == 0) return true;
  const FqContext& C = *ctx_;
  return (code_ - 1) % ((C.Q - 1) / (C.q - 1)) == 0;
}

int64_t Fq::multiplicative_order() const {
  if (code_ == 0) throw std::domain_error("order of 0");
  int64_t n = ctx_->Q - 1;
  return n / std::gcd(n, code_ - 1);
}

std::string Fq::str() const {
  if (code_ == 0) return "0";
  const FqContext& C = *ctx_;
  int64_t packed = C.exp_tab[code_ - 1];
  if (packed < C.p) return std::to_string(packed);
  if (code_ == 2) return "g";
  return "g^" + std::to_string(code_ - 1);
}

}  // namespace tmotive
