#pragma once

// Arithmetic for the coefficient field F_{q^M}, q = p^s, realized as
// F_p[x]/(modulus) with log/antilog (Zech) tables. Fields of this size
// (q^M up to 2^20) cover every construction in this library.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmotive {

using std::int64_t;

class Fq;

struct FqContext : std::enable_shared_from_this<FqContext> {
  int64_t p = 0;   // characteristic
  int s = 1;       // q = p^s
  int M = 1;       // extension degree over F_q
  int D = 1;       // = s*M, degree over F_p
  int64_t q = 0;   // p^s
  int64_t Q = 0;   // p^D = q^M, field size
  std::vector<int64_t> modulus;  // monic, degree D, coeffs in [0,p), low-to-high

  // tables: element codes are 0 (zero) or 1+k for g^k, g the fixed generator
  std::vector<int64_t> exp_tab;  // packed F_p coordinate vectors of g^k
  std::vector<int64_t> log_tab;  // packed value -> k, or -1
  std::vector<int32_t> zech;     // zech[k] = log_g(1+g^k), -1 if 1+g^k == 0
  int64_t neg_log = 0;           // log_g(-1)

  static std::shared_ptr<const FqContext> make(int64_t p, int s, int M,
                                               const std::vector<int64_t>* mod = nullptr);

  bool same(const FqContext& o) const { return p == o.p && s == o.s && M == o.M && modulus == o.modulus; }

  Fq zero() const;
  Fq one() const;
  Fq generator() const;            // fixed multiplicative generator g of F_{q^M}
  Fq from_int(int64_t n) const;    // image of the integer n (prime subfield)
  Fq from_code(int64_t code) const;
  Fq from_coords(const std::vector<int64_t>& v) const;  // F_p coordinates, low-to-high
  Fq element(int64_t index) const; // enumeration by packed coordinate value, 0 <= index < Q
  Fq subfield_element(int64_t index) const;  // enumeration of F_q inside F_{q^M}, 0 <= index < q

  std::vector<int64_t> coords(const Fq& x) const;  // F_p coordinate vector (size D)
};

// deterministic default modulus: lexicographically least monic irreducible of
// degree d over F_p (coefficient vector read as a base-p integer, low digit =
// constant term)
std::vector<int64_t> least_irreducible(int64_t p, int d);
bool is_irreducible_fp(int64_t p, const std::vector<int64_t>& poly);

class Fq {
 public:
  Fq() = default;
  Fq(std::shared_ptr<const FqContext> ctx, int64_t code) : ctx_(std::move(ctx)), code_(code) {}

  const std::shared_ptr<const FqContext>& ctx() const { return ctx_; }
  int64_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator-() const;
  Fq operator*(const Fq& o) const;
  Fq operator/(const Fq& o) const;
  Fq inv() const;
  Fq pow(int64_t n) const;
  // i-fold q-power Frobenius; negative i is the exact inverse
  Fq frobenius(int64_t i = 1) const;
  bool in_subfield_q() const;  // lies in F_q = {x : x^q = x}
  int64_t multiplicative_order() const;

  bool operator==(const Fq& o) const { return code_ == o.code_; }
  bool operator!=(const Fq& o) const { return code_ != o.code_; }

  std::string str() const;

 private:
  std::shared_ptr<const FqContext> ctx_;
  int64_t code_ = 0;
};

}  // namespace tmotive
