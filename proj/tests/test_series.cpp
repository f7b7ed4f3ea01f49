#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tmotive/series.hpp"

using namespace tmotive;

namespace {
std::shared_ptr<const PuiseuxCtx> infty_ctx(int64_t p, int s, int M) {
  auto pc = std::make_shared<PuiseuxCtx>();
  pc->F = FqContext::make(p, s, M);
  pc->place = -1;
  return pc;
}

Puiseux rand_series(const std::shared_ptr<const PuiseuxCtx>& ctx, int64_t e, std::mt19937_64& rng,
                    int64_t prec = 60) {
  int64_t lo = (int64_t)(rng() % 11) - 5;
  std::vector<Fq> c;
  for (int i = 0; i < 20; ++i) c.push_back(ctx->F->element(rng() % ctx->F->Q));
  return Puiseux(ctx, e, lo, prec, std::move(c));
}
}  // namespace

TEST_CASE("iota embedding: monomials, long division, zero") {
  auto ctx = infty_ctx(2, 1, 2);
  ThetaRat th = ThetaRat::theta(ctx->F);
  Puiseux t = iota_embed(th, ctx, 1, 5);
  CHECK(t.val() == Frac(-1, 1));
  CHECK(t.lead().is_one());
  CHECK(t.coeff_at(0).is_zero());

  // 1/(θ-1) over q=2: θ^{-1} + θ^{-2} + θ^{-3} + O(θ^{-4})
  ThetaRat x = ThetaRat::one(ctx->F) / (th - ThetaRat::one(ctx->F));
  Puiseux s = iota_embed(x, ctx, 1, 4);
  CHECK(s.val() == Frac(1, 1));
  CHECK(s.coeff_at(1).is_one());
  CHECK(s.coeff_at(2).is_one());
  CHECK(s.coeff_at(3).is_one());
  CHECK(s.prec() == 4);

  Puiseux z = iota_embed(ThetaRat(), ctx, 1, 7);
  CHECK(z.zero_to_prec());
  CHECK(z.prec() == 7);
}

TEST_CASE("iota is a ring homomorphism to tracked precision") {
  auto ctx = infty_ctx(3, 1, 2);
  std::mt19937_64 rng(31);
  auto rand_rat = [&]() {
    FqPoly n, d;
    for (int i = 0; i <= (int)(rng() % 3); ++i) n.c.push_back(ctx->F->element(rng() % ctx->F->Q));
    for (int i = 0; i <= (int)(rng() % 3); ++i) d.c.push_back(ctx->F->element(rng() % ctx->F->Q));
    n.normalize();
    d.normalize();
    if (d.is_zero()) d = FqPoly::constant(ctx->F->one());
    return ThetaRat(n, d);
  };
  for (int t = 0; t < 60; ++t) {
    ThetaRat a = rand_rat(), b = rand_rat();
    Puiseux ea = iota_embed(a, ctx, 1, 40), eb = iota_embed(b, ctx, 1, 40);
    Puiseux lhs = iota_embed(a * b, ctx, 1, 40);
    CHECK((lhs - ea * eb).zero_to_prec());
    Puiseux lhs2 = iota_embed(a + b, ctx, 1, 40);
    CHECK((lhs2 - (ea + eb)).zero_to_prec());
  }
}

TEST_CASE("ultrametric valuation on every arithmetic call") {
  auto ctx = infty_ctx(2, 1, 3);
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    Puiseux a = rand_series(ctx, 2, rng), b = rand_series(ctx, 2, rng);
    if (a.zero_to_prec() || b.zero_to_prec()) continue;
    Puiseux s = a + b;
    if (!s.zero_to_prec()) {
      CHECK(!(s.val() < std::min(a.val(), b.val())));
      if (!(a.val() == b.val())) CHECK(s.val() == std::min(a.val(), b.val()));
    }
    Puiseux m = a * b;
    CHECK(m.val() == a.val() + b.val());
    CHECK(m.prec_val() <= a.prec_val() + b.val());
  }
}

TEST_CASE("frobenius on series: monomial case and ring homomorphism") {
  auto ctx = infty_ctx(2, 1, 2);
  // θ^{-1} -> θ^{-q}
  Puiseux tinv = Puiseux::theta(ctx, 1, 50).inv();
  Puiseux f = tinv.frobenius(1);
  CHECK(f.val() == Frac(2, 1));  // val θ^{-2} = 2
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    Puiseux a = rand_series(ctx, 1, rng), b = rand_series(ctx, 1, rng);
    CHECK(((a + b).frobenius(1) - (a.frobenius(1) + b.frobenius(1))).zero_to_prec());
    CHECK(((a * b).frobenius(1) - (a.frobenius(1) * b.frobenius(1))).zero_to_prec());
    CHECK((a.frobenius(1).frobenius(-1) - a).zero_to_prec());
  }
  // x in F_q is fixed
  Puiseux one = Puiseux::from_field(ctx, ctx->F->one(), 1, 30);
  CHECK((one.frobenius(1) - one).zero_to_prec());
  // inverse frobenius undefined when exponents are not divisible by q
  Puiseux odd = Puiseux::monomial(ctx, ctx->F->one(), 1, 3, 30);
  CHECK_THROWS_AS(odd.frobenius(-1), std::domain_error);
}

TEST_CASE("kth_root: square of theta, a0 of the rank-1 period, z0 torsion") {
  // θ^2, k = 2, q odd -> ±θ
  auto ctx3 = infty_ctx(3, 1, 4);
  Puiseux th2 = Puiseux::theta(ctx3, 1, 60).pow(2);
  Puiseux r = th2.kth_root(2);
  Puiseux diff1 = r - Puiseux::theta(ctx3, r.e(), 60);
  Puiseux diff2 = r + Puiseux::theta(ctx3, r.e(), 60);
  CHECK((diff1.zero_to_prec() || diff2.zero_to_prec()));

  // a0^{q-1} = -1/θ, and the check a0^{q-1}·θ = -1 holds on retained coefficients
  auto a0 = (-Puiseux::theta(ctx3, 1, 120).inv()).kth_root(3 - 1);
  CHECK(a0.val() == Frac(1, 2));
  Puiseux chk = a0.pow(2) * Puiseux::theta(ctx3, a0.e(), 120) +
                Puiseux::from_field(ctx3, ctx3->F->one(), a0.e(), 120);
  CHECK(chk.zero_to_prec());

  // z0^{q^2-1} = -θ at q = 3 (needs F_{3^4})
  auto z0 = (-Puiseux::theta(ctx3, 1, 90)).kth_root(9 - 1);
  CHECK(z0.val() == Frac(-1, 8));
  CHECK((z0.pow(8) + Puiseux::theta(ctx3, z0.e(), 90)).zero_to_prec());

  // wild exponent rejected
  CHECK_THROWS_AS(th2.kth_root(3), wild_exponent);
  // extension required: square root of the F_9 generator inside F_9 (M = 1 over q = 9... use q=3,M=1)
  auto ctx_small = infty_ctx(3, 1, 1);
  Puiseux g = Puiseux::from_field(ctx_small, ctx_small->F->from_int(2), 1, 40);
  CHECK_THROWS_AS(g.kth_root(2), extension_required);
}

TEST_CASE("root of random unit series verifies by powering") {
  auto ctx = infty_ctx(2, 1, 2);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    Puiseux a = rand_series(ctx, 1, rng, 50);
    if (a.zero_to_prec()) continue;
    Puiseux sq = a.pow(3);
    Puiseux rt = sq.kth_root(3);
    CHECK((rt.pow(3) - sq).zero_to_prec());
  }
}

TEST_CASE("insufficient precision is an error, not a false") {
  auto ctx = infty_ctx(2, 1, 2);
  Puiseux z = Puiseux::zero(ctx, 1, 10);
  CHECK(verified_zero(z, Frac(8, 1)));
  // demanding a deeper window than the value carries is an error, not false
  CHECK_THROWS_AS(verified_zero(z, Frac(11, 1)), insufficient_precision);
  Puiseux tiny = Puiseux::monomial(ctx, ctx->F->one(), 1, 12, 15);
  Puiseux s = z + tiny;  // content of `tiny` lies beyond z's window
  CHECK(s.zero_to_prec());
  CHECK(s.prec() == 10);
  CHECK_FALSE(verified_zero(tiny, Frac(5, 1)));
}

TEST_CASE("theta-adic place: val θ = +1") {
  auto pc = std::make_shared<PuiseuxCtx>();
  pc->F = FqContext::make(2, 1, 2);
  pc->place = +1;
  std::shared_ptr<const PuiseuxCtx> ctx = pc;
  Puiseux th = Puiseux::theta(ctx, 1, 30);
  CHECK(th.val() == Frac(1, 1));
  ThetaRat x = ThetaRat::one(ctx->F) / ThetaRat::theta(ctx->F);
  Puiseux s = iota_embed(x, ctx, 1, 30);
  CHECK(s.val() == Frac(-1, 1));
}
