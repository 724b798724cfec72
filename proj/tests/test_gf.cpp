#include <doctest.h>

#include <set>

#include "curve3/gf.hpp"
#include "curve3/poly.hpp"

using namespace curve3;

TEST_SUITE_BEGIN("gf");

TEST_CASE("prime field basics") {
    const Field& F3 = Field::get(3, 1);
    CHECK(F3.q() == 3);
    CHECK(F3.add(F3.from_int(2), F3.from_int(2)) == F3.from_int(1));
    CHECK(F3.mul(F3.from_int(2), F3.from_int(2)) == F3.from_int(1));
    CHECK(F3.inv(F3.from_int(2)) == F3.from_int(2));
    CHECK(F3.neg(F3.from_int(1)) == F3.from_int(2));
}

TEST_CASE("canonical modulus for GF(9) is t^2+1") {
    const Field& F9 = Field::get(3, 2);
    CHECK(F9.modulus() == std::vector<uint8_t>({1, 0, 1}));
    // g^2 = -1
    Fq g = F9.gen();
    CHECK(F9.mul(g, g) == F9.neg(F9.one()));
}

TEST_CASE("trace examples") {
    const Field& F3 = Field::get(3, 1);
    CHECK(F3.trace(F3.one()) == 1);

    const Field& F9 = Field::get(3, 2);
    CHECK(F9.trace(F9.one()) == 2); // k*1 = 2
    // t + t^3 = t - t = 0 with t^2 = -1
    CHECK(F9.trace(F9.gen()) == 0);
}

TEST_CASE("trace is GF(p)-linear and surjective, k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        const Field& F = Field::get(3, k);
        std::set<int> values;
        for (uint64_t c = 0; c < F.q(); ++c) values.insert(F.trace(F.from_code(c)));
        CHECK(values == std::set<int>({0, 1, 2}));
        // linearity on a sample
        for (uint64_t c = 0; c < std::min<uint64_t>(F.q(), 50); ++c) {
            Fq a = F.from_code(c), b = F.from_code((c * 7 + 3) % F.q());
            CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3);
        }
    }
}

TEST_CASE("as_solve examples") {
    const Field& F3 = Field::get(3, 1);
    auto s0 = F3.as_solve(F3.zero());
    CHECK(s0.size() == 3);
    CHECK(s0 == std::vector<Fq>({F3.from_int(0), F3.from_int(1), F3.from_int(2)}));
    CHECK(F3.as_solve(F3.one()).empty());

    const Field& F9 = Field::get(3, 2);
    auto st = F9.as_solve(F9.gen());
    CHECK(st.size() == 3);
    for (Fq z : st) CHECK(F9.sub(F9.frob(z), z) == F9.gen());
}

TEST_CASE("as_solve law: |solutions| in {0,p} iff trace vanishes, exhaustive for q <= 3^6") {
    for (int k = 1; k <= 6; ++k) {
        const Field& F = Field::get(3, k);
        for (uint64_t c = 0; c < F.q(); ++c) {
            Fq a = F.from_code(c);
            auto sols = F.as_solve(a);
            if (F.trace(a) == 0) {
                REQUIRE(sols.size() == 3);
                // solutions differ by prime-field constants
                CHECK(F.sub(sols[1], sols[0]) != F.zero());
                for (Fq z : sols) CHECK(F.sub(F.frob(z), z) == a);
            } else {
                CHECK(sols.empty());
            }
        }
    }
}

TEST_CASE("Frobenius is a field automorphism (samples)") {
    const Field& F = Field::get(3, 5);
    for (uint64_t c = 1; c < 200; ++c) {
        Fq a = F.from_code(c * 17 % F.q()), b = F.from_code((c * 101 + 5) % F.q());
        CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
        CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
        CHECK(F.pth_root(F.frob(a)) == a);
    }
}

TEST_CASE("poly_roots examples") {
    const Field& F3 = Field::get(3, 1);
    Poly f = Poly::from_ints(F3, {0, -1, 0, 1}); // x^3 - x
    auto r = poly_roots(f, F3);
    CHECK(r.size() == 3);

    Poly g = Poly::from_ints(F3, {-1, -1, 0, 1}); // x^3 - x - 1
    CHECK(poly_roots(g, F3).empty());

    const Field& F27 = Field::get(3, 3);
    auto r27 = poly_roots(g, F27);
    CHECK(r27.size() == 3);
}

TEST_CASE("poly_roots matches exhaustive evaluation for q <= 3^6") {
    const Field& F = Field::get(3, 4);
    Poly f = Poly::from_ints(F, {1, 2, 0, 1, 1}); // arbitrary quartic
    auto roots = poly_roots(f, F);
    std::set<Fq> rs(roots.begin(), roots.end());
    for (uint64_t c = 0; c < F.q(); ++c) {
        Fq x = F.from_code(c);
        CHECK((rs.count(x) > 0) == F.is_zero(f.eval(x)));
    }
    CHECK_THROWS_AS(poly_roots(Poly(F), F), error);
}

TEST_CASE("field arithmetic identities across k") {
    for (int k : {1, 2, 3, 7, 10}) {
        const Field& F = Field::get(3, k);
        Fq a = F.from_code(F.q() - 1), b = F.from_code(F.q() / 2 + 1);
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.add(a, F.neg(a)) == F.zero());
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.pow(a, static_cast<int64_t>(F.q()) - 1) == F.one());
    }
}

TEST_CASE("embeddings respect arithmetic and are deterministic") {
    const Field& F9 = Field::get(3, 2);
    const Field& F81 = Field::get(3, 4);
    const FieldEmbedding& e = F81.embedding_from(F9);
    for (uint64_t c = 0; c < F9.q(); ++c)
        for (uint64_t d = 0; d < F9.q(); ++d) {
            Fq a = F9.from_code(c), b = F9.from_code(d);
            CHECK(e.map(F9.mul(a, b)) == F81.mul(e.map(a), e.map(b)));
            CHECK(e.map(F9.add(a, b)) == F81.add(e.map(a), e.map(b)));
        }
    const FieldEmbedding& e2 = F81.embedding_from(F9);
    CHECK(e.map(F9.gen()) == e2.map(F9.gen()));
}

TEST_CASE("min_poly of a generator is the modulus") {
    const Field& F27 = Field::get(3, 3);
    Poly m = min_poly(F27, F27.gen());
    CHECK(m.degree() == 3);
    std::vector<uint8_t> mod = F27.modulus();
    for (int i = 0; i <= 3; ++i) CHECK(m.coeff(i) == Field::get(3, 1).from_int(mod[i]));
}

TEST_CASE("modulus irreducibility is verified at construction") {
    CHECK_THROWS_AS(Field::get(3, 2, {0, 0, 1}), error);   // x^2
    CHECK_THROWS_AS(Field::get(3, 3, {1, 0, 0, 1}), error); // x^3+1 = (x+1)^3
    const Field& F = Field::get(3, 2, {2, 2, 1}); // x^2+2x+2 irreducible
    CHECK(F.q() == 9);
}

TEST_SUITE_END();
