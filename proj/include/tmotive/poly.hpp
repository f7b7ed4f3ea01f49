#pragma once

// Dense univariate polynomials over any exact coefficient ring that provides
// value-semantic +,-,*, is_zero() and (for field coefficients) inv().
// A default-constructed coefficient acts as a context-free zero.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tmotive {

template <class R>
struct Poly {
  std::vector<R> c;  // low-to-high, no trailing zeros

  Poly() = default;
  explicit Poly(std::vector<R> v) : c(std::move(v)) { normalize(); }
  static Poly constant(R x) {
    Poly r;
    if (!x.is_zero()) r.c.push_back(std::move(x));
    return r;
  }

  int deg() const { return (int)c.size() - 1; }
  bool is_zero() const { return c.empty(); }
  const R& lead() const { return c.back(); }
  R coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : R(); }
  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool operator==(const Poly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator+(const Poly& o) const {
    Poly r;
    size_t n = std::max(c.size(), o.c.size());
    r.c.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (i < c.size() && i < o.c.size())
        r.c.push_back(c[i] + o.c[i]);
      else if (i < c.size())
        r.c.push_back(c[i]);
      else
        r.c.push_back(o.c[i]);
    }
    r.normalize();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, R());
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (size_t j = 0; j < o.c.size(); ++j) {
        if (o.c[j].is_zero()) continue;
        R t = c[i] * o.c[j];
        r.c[i + j] = r.c[i + j].is_zero() ? t : r.c[i + j] + t;
      }
    }
    r.normalize();
    return r;
  }
  Poly scale(const R& a) const {
    if (a.is_zero()) return {};
    Poly r = *this;
    for (auto& x : r.c) x = x * a;
    r.normalize();
    return r;
  }
  Poly shift(int k) const {  // multiply by x^k
    if (is_zero()) return {};
    Poly r;
    r.c.assign(c.size() + k, R());
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }
  template <class V>
  V eval(const V& x) const {
    if (is_zero()) return V();
    V acc = V(c.back());
    for (int i = (int)c.size() - 2; i >= 0; --i) {
      acc = acc * x;
      if (!c[i].is_zero()) acc = acc + V(c[i]);
    }
    return acc;
  }
  Poly pow(int64_t e) const {
    Poly r = constant_one(*this);
    Poly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  static Poly constant_one(const Poly& exemplar);
};

// field-coefficient division with remainder
template <class R>
std::pair<Poly<R>, Poly<R>> divrem(Poly<R> a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<R> q;
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, R());
  R linv = b.lead().inv();
  while (!a.is_zero() && a.deg() >= b.deg()) {
    R f = a.lead() * linv;
    int off = a.deg() - b.deg();
    q.c[off] = f;
    for (int i = 0; i <= b.deg(); ++i) {
      R t = b.c[i] * f;
      a.c[off + i] = a.c[off + i] - t;
    }
    a.normalize();
  }
  q.normalize();
  return {q, a};
}

template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  a.normalize();
  b.normalize();
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scale(a.lead().inv());  // monic
  return a;
}

// exact division in R[x] for an integral domain R supporting try_div on
// coefficients; returns nullopt when the division is not exact
template <class R>
bool try_div(const R& a, const R& b, R& out);  // base cases defined per ring

template <class R>
std::optional<Poly<R>> try_div_poly(Poly<R> a, const Poly<R>& b) {
  if (b.is_zero()) return std::nullopt;
  Poly<R> q;
  if (a.is_zero()) return q;
  if (a.deg() < b.deg()) return std::nullopt;
  q.c.assign(a.deg() - b.deg() + 1, R());
  while (!a.is_zero() && a.deg() >= b.deg()) {
    R f;
    if (!try_div(a.lead(), b.lead(), f)) return std::nullopt;
    int off = a.deg() - b.deg();
    q.c[off] = f;
    for (int i = 0; i <= b.deg(); ++i) a.c[off + i] = a.c[off + i] - b.c[i] * f;
    if (!a.c[off + b.deg()].is_zero()) return std::nullopt;
    a.normalize();
  }
  if (!a.is_zero()) return std::nullopt;
  q.normalize();
  return q;
}

template <class R>
Poly<R> Poly<R>::constant_one(const Poly<R>& exemplar) {
  // a one element is recovered from any nonzero coefficient
  for (const auto& x : exemplar.c)
    if (!x.is_zero()) return Poly<R>::constant(x * x.inv());
  throw std::domain_error("pow of zero polynomial needs a unit exemplar");
}

}  // namespace tmotive
