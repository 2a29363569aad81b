#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "workbench/json_io.hpp"

using namespace workbench;

namespace {
ProPElement random_prop(const TorusCover& cov, std::mt19937_64& rng,
                        int max_letters) {
  const auto& w = cov.weyl();
  std::uniform_int_distribution<int> ns(0, w.num_saff() - 1);
  std::uniform_int_distribution<int> len(0, max_letters);
  std::uniform_int_distribution<int> te(0, static_cast<int>(cov.qm1()) - 1);
  ProPElement acc = cov.identity();
  int n = len(rng);
  for (int i = 0; i < n; ++i)
    acc = cov.multiply(acc, cov.lift_simple(ns(rng)));
  TorusElement t = cov.torus_identity();
  for (auto& e : t.e) e = te(rng);
  return cov.multiply(cov.from_torus(t), acc);
}
}  // namespace

TEST_CASE("Fq tables") {
  for (auto [p, f] : std::vector<std::pair<long long, long long>>{
           {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 4}}) {
    Fq k(p, f);
    long long q = k.q();
    // generator has full order
    std::set<int> seen;
    for (long long e = 0; e < q - 1; ++e) seen.insert(k.gen_pow(e));
    CHECK(static_cast<long long>(seen.size()) == q - 1);
    // field laws on small samples
    for (int a = 0; a < q; ++a) {
      CHECK(k.add(a, k.neg(a)) == 0);
      if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
      CHECK(k.mul(a, 1) == a);
      CHECK(k.add(a, 0) == a);
    }
    for (int a = 0; a < std::min<long long>(q, 8); ++a)
      for (int b = 0; b < std::min<long long>(q, 8); ++b)
        for (int c = 0; c < std::min<long long>(q, 8); ++c)
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
    // -1 squares to 1
    int m1 = k.from_int(-1);
    CHECK(k.mul(m1, m1) == 1);
  }
}

TEST_CASE("simple lift squares to the coroot of -1") {
  for (long long q : {2, 3, 4, 5}) {
    long long p = q == 4 ? 2 : q, f = q == 4 ? 2 : 1;
    auto gl2 = preset_datum("GL2", p, f);
    AffineWeyl w(gl2);
    TorusCover cov(gl2, w);
    ProPElement s = cov.lift_simple(0);
    ProPElement sq = cov.multiply(s, s);
    CHECK(vec_is_zero(sq.nu));
    CHECK(sq.w0 == gl2.w0().identity());
    CHECK(sq.t == cov.minus_one_of_coroot(gl2.simple_coroot(0)));
    CHECK(sq == cov.monomial_oracle_mul(s, s));
  }
}

TEST_CASE("every simple-affine lift squares into the torus") {
  for (const char* name : {"A1sc", "A1ad", "GL2", "A2sc", "GL3", "B2", "G2"}) {
    auto rd = preset_datum(name, 3, 1);
    AffineWeyl w(rd);
    TorusCover cov(rd, w);
    for (int s = 0; s < w.num_saff(); ++s) {
      ProPElement sq = cov.multiply(cov.lift_simple(s), cov.lift_simple(s));
      CHECK(vec_is_zero(sq.nu));
      CHECK(sq.w0 == rd.w0().identity());
    }
  }
}

TEST_CASE("cover multiplication: associativity and projection") {
  std::mt19937_64 rng(23);
  for (const char* name : {"GL2", "A2sc", "B2"}) {
    for (long long q : {3, 4}) {
      long long p = q == 4 ? 2 : q, f = q == 4 ? 2 : 1;
      auto rd = preset_datum(name, p, f);
      AffineWeyl w(rd);
      TorusCover cov(rd, w);
      for (int trial = 0; trial < 200; ++trial) {
        auto a = random_prop(cov, rng, 4);
        auto b = random_prop(cov, rng, 4);
        auto c = random_prop(cov, rng, 4);
        CHECK(cov.multiply(cov.multiply(a, b), c) ==
              cov.multiply(a, cov.multiply(b, c)));
        CHECK(cov.multiply(a, cov.inverse(a)) == cov.identity());
        CHECK(w.multiply(cov.project(a), cov.project(b)) ==
              cov.project(cov.multiply(a, b)));
      }
    }
  }
}

TEST_CASE("torus conjugation factors through the finite Weyl action") {
  std::mt19937_64 rng(29);
  auto rd = preset_datum("A2sc", 5, 1);
  AffineWeyl w(rd);
  TorusCover cov(rd, w);
  auto torus = cov.all_torus_elements();
  for (int s = 0; s < w.num_saff(); ++s) {
    ProPElement lift = cov.lift_simple(s);
    for (const auto& t : torus) {
      ProPElement conj = cov.multiply(
          cov.multiply(lift, cov.from_torus(t)), cov.inverse(lift));
      CHECK(conj == cov.from_torus(cov.act(cov.project(lift).w0, t)));
    }
  }
  // Translations act trivially.
  for (const auto& t : torus) {
    ProPElement tr = cov.lift(w.translation(Coweight{{1, -2}}));
    CHECK(cov.multiply(cov.multiply(tr, cov.from_torus(t)), cov.inverse(tr)) ==
          cov.from_torus(t));
  }
  (void)rng;
}

TEST_CASE("braid relation in the cover, checked against the monomial oracle") {
  for (long long q : {2, 3, 4}) {
    long long p = q == 4 ? 2 : q, f = q == 4 ? 2 : 1;
    auto gl3 = preset_datum("GL3", p, f);
    AffineWeyl w(gl3);
    TorusCover cov(gl3, w);
    ProPElement n1 = cov.lift_simple(0), n2 = cov.lift_simple(1);
    ProPElement lhs = cov.multiply(cov.multiply(n1, n2), n1);
    ProPElement rhs = cov.multiply(cov.multiply(n2, n1), n2);
    CHECK(lhs == rhs);
    CHECK(lhs == cov.monomial_oracle_mul(cov.multiply(n1, n2), n1));
  }
}

TEST_CASE("monomial oracle agreement sweep") {
  std::mt19937_64 rng(31);
  for (const char* name : {"GL2", "GL3"}) {
    for (long long q : {2, 3, 4}) {
      long long p = q == 4 ? 2 : q, f = q == 4 ? 2 : 1;
      auto rd = preset_datum(name, p, f);
      AffineWeyl w(rd);
      TorusCover cov(rd, w);
      for (int trial = 0; trial < 150; ++trial) {
        auto a = random_prop(cov, rng, 5);
        auto b = random_prop(cov, rng, 5);
        CHECK(cov.multiply(a, b) == cov.monomial_oracle_mul(a, b));
      }
    }
  }
}

TEST_CASE("quadratic constant: support and coefficient sum") {
  for (const char* name : {"A1sc", "A1ad", "GL2", "A2sc", "B2"}) {
    for (long long q : {2, 3, 5}) {
      auto rd = preset_datum(name, q, 1);
      AffineWeyl w(rd);
      TorusCover cov(rd, w);
      for (int s = 0; s < w.num_saff(); ++s) {
        TorusRing c = cov.c_of_lift(cov.lift_simple(s));
        CHECK(tr_coeff_sum(c) == q - 1);
        // s . c = c under the finite Weyl action
        int w0 = cov.project(cov.lift_simple(s)).w0;
        CHECK(cov.act(w0, c) == c);
      }
    }
  }
}

TEST_CASE("SL2 q=3: c is the sum over the 2-element coroot image") {
  auto rd = preset_datum("A1sc", 3, 1);
  AffineWeyl w(rd);
  TorusCover cov(rd, w);
  TorusRing c = cov.c_of_lift(cov.lift_simple(0));
  REQUIRE(c.size() == 2);
  for (const auto& [t, coeff] : c) CHECK(coeff == 1);
}

TEST_CASE("c transforms by torus translation and conjugation") {
  std::mt19937_64 rng(37);
  for (const char* name : {"GL2", "A2sc", "B2"}) {
    auto rd = preset_datum(name, 5, 1);
    AffineWeyl w(rd);
    TorusCover cov(rd, w);
    auto torus = cov.all_torus_elements();
    std::uniform_int_distribution<size_t> pick(0, torus.size() - 1);
    for (int s = 0; s < w.num_saff(); ++s) {
      ProPElement lift = cov.lift_simple(s);
      TorusRing base = cov.c_of_lift(lift);
      // c(t s~) = t c(s~)
      for (int k = 0; k < 3; ++k) {
        TorusElement t = torus[pick(rng)];
        TorusRing shifted = cov.c_of_lift(cov.multiply(cov.from_torus(t), lift));
        TorusRing expect;
        for (const auto& [z, v] : base) expect[cov.torus_mul(t, z)] = v;
        CHECK(shifted == expect);
      }
      // c(w~ s~ w~^{-1}) = w . c(s~) for random w~
      for (int k = 0; k < 5; ++k) {
        auto wt = random_prop(cov, rng, 4);
        ProPElement conj = cov.multiply(cov.multiply(wt, lift), cov.inverse(wt));
        if (!w.is_reflection(cov.project(conj))) continue;
        CHECK(cov.c_of_lift(conj) == cov.act(cov.project(wt).w0, base));
      }
    }
  }
}

TEST_CASE("character evaluation against c") {
  // psi trivial on Z_{k,s} gives -1; nontrivial gives 0.
  for (const char* name : {"A1sc", "GL2", "A2sc"}) {
    for (long long q : {3, 5}) {
      auto rd = preset_datum(name, q, 1);
      AffineWeyl w(rd);
      TorusCover cov(rd, w);
      for (int s = 0; s < w.num_saff(); ++s) {
        int ridx = w.saff()[s].root_index;
        const Vec& covee = rd.positive_roots()[ridx].coroot;
        TorusRing c = cov.c_of_lift(cov.lift_simple(s));
        for (const auto& psi : cov.all_characters()) {
          int val = cov.character_eval(psi, c);
          if (cov.character_trivial_on(psi, covee))
            CHECK(val == cov.fq().from_int(-1));
          else
            CHECK(val == cov.fq().zero());
        }
      }
    }
  }
  // psi(identity element) = 1.
  auto rd = preset_datum("GL2", 3, 1);
  AffineWeyl w(rd);
  TorusCover cov(rd, w);
  TorusRing one{{cov.torus_identity(), 1}};
  for (const auto& psi : cov.all_characters())
    CHECK(cov.character_eval(psi, one) == cov.fq().one());
}

TEST_CASE("delta_prime_psi examples") {
  {
    auto rd = preset_datum("A1sc", 5, 1);
    AffineWeyl w(rd);
    TorusCover cov(rd, w);
    CHECK(cov.delta_prime_psi(TorusCharacter{{0}}) == std::vector<int>{0});
    CHECK(cov.delta_prime_psi(TorusCharacter{{1}}).empty());
    CHECK(cov.delta_prime_psi(TorusCharacter{{2}}) == std::vector<int>{0});
  }
  {
    auto rd = preset_datum("GL2", 3, 1);
    AffineWeyl w(rd);
    TorusCover cov(rd, w);
    CHECK(cov.delta_prime_psi(TorusCharacter{{1, 1}}) == std::vector<int>{0});
    CHECK(cov.delta_prime_psi(TorusCharacter{{1, 0}}).empty());
  }
}

TEST_CASE("pro-p element json round trip") {
  auto rd = preset_datum("A2sc", 5, 1);
  AffineWeyl w(rd);
  TorusCover cov(rd, w);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    auto a = random_prop(cov, rng, 4);
    CHECK(prop_from_json(prop_to_json(a, rd), rd) == a);
  }
}
