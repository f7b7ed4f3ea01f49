#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmotive/field.hpp"

using namespace tmotive;

namespace {
// independent oracle: F_p[x] arithmetic mod the context's modulus, no tables
std::vector<int64_t> oracle_mul(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                const FqContext& C) {
  std::vector<int64_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % C.p;
  for (size_t i = r.size(); i-- > (size_t)C.D;) {
    int64_t c = r[i];
    if (!c) continue;
    for (int j = 0; j < C.D; ++j)
      r[i - C.D + j] = ((r[i - C.D + j] - c * C.modulus[j]) % C.p + C.p) % C.p;
    r[i] = 0;
  }
  r.resize(C.D);
  return r;
}
}  // namespace

TEST_CASE("default modulus is irreducible and deterministic") {
  auto F = FqContext::make(2, 1, 2);  // F_4
  CHECK(is_irreducible_fp(2, F->modulus));
  CHECK(F->modulus == std::vector<int64_t>{1, 1, 1});  // x^2 + x + 1
  auto F2 = FqContext::make(2, 1, 2);
  CHECK(F->modulus == F2->modulus);
  auto F9 = FqContext::make(3, 1, 2);
  CHECK(is_irreducible_fp(3, F9->modulus));
  CHECK_THROWS(FqContext::make(4, 1, 2));  // characteristic must be prime
  std::vector<int64_t> bad{0, 0, 1};       // x^2, reducible
  CHECK_THROWS(FqContext::make(2, 1, 2, &bad));
}

TEST_CASE("table arithmetic agrees with polynomial oracle") {
  for (auto [p, s, M] : {std::tuple<int64_t, int, int>{2, 1, 4}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
    auto F = FqContext::make(p, s, M);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      Fq a = F->element(rng() % F->Q), b = F->element(rng() % F->Q);
      auto prod = F->coords(a * b);
      auto want = oracle_mul(F->coords(a), F->coords(b), *F);
      CHECK(prod == want);
      // additive group
      auto sum = F->coords(a + b);
      auto av = F->coords(a), bv = F->coords(b);
      for (int i = 0; i < F->D; ++i) av[i] = (av[i] + bv[i]) % F->p;
      CHECK(sum == av);
    }
  }
}

TEST_CASE("field axioms, randomized") {
  auto F = FqContext::make(3, 1, 4);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    Fq a = F->element(rng() % F->Q), b = F->element(rng() % F->Q), c = F->element(rng() % F->Q);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == F->one());
    CHECK(a + (-a) == F->zero());
  }
}

TEST_CASE("frobenius is a field automorphism of the right order") {
  auto F = FqContext::make(2, 1, 2);  // F_4 over F_2
  Fq g = F->generator();
  // derived oracle: orbit of g under squaring
  Fq g2 = g * g;
  Fq g4 = g2 * g2;
  CHECK(g.frobenius(1) == g2);
  CHECK(g.frobenius(2) == g4);
  CHECK(g.frobenius(2) == g);  // q = 2, M = 2: x^{q^2} = x
  CHECK(g4 == g);

  auto F2 = FqContext::make(3, 1, 4);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Fq a = F2->element(rng() % F2->Q), b = F2->element(rng() % F2->Q);
    CHECK(a.frobenius(1) == a.pow(3));
    CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
    CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
    CHECK(a.frobenius(4) == a);       // identity after M applications
    CHECK(a.frobenius(-1).frobenius(1) == a);
  }
}

TEST_CASE("prime-field elements are fixed by frobenius and detected") {
  auto F = FqContext::make(2, 2, 3);  // q = 4, F_{64}
  for (int64_t i = 0; i < F->q; ++i) {
    Fq x = F->subfield_element(i);
    CHECK(x.frobenius(1) == x);
    CHECK(x.in_subfield_q());
  }
  Fq g = F->generator();
  CHECK(!g.in_subfield_q());
}
