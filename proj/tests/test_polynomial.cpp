#include <doctest.h>

#include <random>

#include "dpd/polynomial.hpp"

using namespace dpd;

extern unsigned long dpd_test_seed;

namespace {
Polynomial Z() { return Polynomial::z(); }
Polynomial linear(const GaussianRational& c) { return Z() - Polynomial(c); } // z - c
} // namespace

TEST_CASE("polynomial basics") {
    Polynomial p({GaussianRational(1), GaussianRational(0), GaussianRational(-1)}); // 1 - z^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == GaussianRational(1));
    CHECK(p.coeff(2) == GaussianRational(-1));
    CHECK(p.coeff(5) == GaussianRational(0));
    CHECK(p.evaluate(GaussianRational(2)) == GaussianRational(-3));
    CHECK(p.evaluate(GaussianRational::i()) == GaussianRational(2));
    CHECK(p.is_real());
    CHECK(Polynomial({GaussianRational(0)}).is_zero());
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("polynomial printing (canonical ascending form)") {
    CHECK((Polynomial(1) - Z() * Z()).str() == "1 - z^2");
    CHECK((Z() * Z() + Polynomial(1)).str() == "1 + z^2");
    CHECK((-Z()).str() == "-z");
    CHECK(Z().str() == "z");
    CHECK(Polynomial(GaussianRational(Rational(-3, 2))).str() == "-3/2");
    CHECK(Polynomial().str() == "0");
    CHECK((GaussianRational(2) * (Z() * Z() * Z())).str() == "2*z^3");
    CHECK((GaussianRational(Rational(0), Rational(1)) * Z()).str() == "(i)*z");
    CHECK((Polynomial(1) + GaussianRational(Rational(0), Rational(1)) * Z()).str() ==
          "1 + (i)*z");
    CHECK((Polynomial(GaussianRational(Rational(1), Rational(2)))).str() == "(1+2*i)");
}

TEST_CASE("mul/divmod/divexact") {
    Polynomial a = linear(GaussianRational(1)) * linear(GaussianRational(-2)); // (z-1)(z+2)
    CHECK(a.str() == "-2 + z + z^2");
    auto [q, r] = a.divmod(linear(GaussianRational(1)));
    CHECK(q == linear(GaussianRational(-2)));
    CHECK(r.is_zero());
    auto [q2, r2] = a.divmod(Z());
    CHECK(q2.str() == "1 + z");
    CHECK(r2 == Polynomial(-2));
    CHECK(a.divexact(linear(GaussianRational(-2))) == linear(GaussianRational(1)));
    CHECK_THROWS_AS(a.divexact(Z()), Error);
    CHECK_THROWS_AS(a.divmod(Polynomial()), Error);
}

TEST_CASE("deflate and root multiplicity") {
    Polynomial p = pow(linear(GaussianRational(3)), 2) * linear(GaussianRational::i());
    CHECK(p.root_multiplicity(GaussianRational(3)) == 2);
    CHECK(p.root_multiplicity(GaussianRational::i()) == 1);
    CHECK(p.root_multiplicity(GaussianRational(7)) == 0);
    CHECK(p.deflate(GaussianRational(3)) ==
          linear(GaussianRational(3)) * linear(GaussianRational::i()));
    CHECK_THROWS_AS(p.deflate(GaussianRational(7)), Error);
}

TEST_CASE("conjugation and realness") {
    Polynomial f = linear(GaussianRational::i()); // z - i
    CHECK(!f.is_real());
    CHECK(f.conj() == linear(-GaussianRational::i()));
    CHECK((f * f.conj()).is_real());
    CHECK((f * f.conj()).str() == "1 + z^2");
}

TEST_CASE("gcd") {
    Polynomial a = pow(linear(GaussianRational(1)), 2) * linear(GaussianRational(2));
    Polynomial b = linear(GaussianRational(1)) * linear(GaussianRational(5));
    CHECK(poly_gcd(a, b) == linear(GaussianRational(1)));
    CHECK(poly_gcd(a, Polynomial()) == a.monic());
    CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
    CHECK(poly_gcd(Polynomial(7), a) == Polynomial(1));
}

TEST_CASE("squarefree decomposition") {
    // f = (z-1)^1 * (z+1)^3 * z^2, scaled by 5
    Polynomial f = GaussianRational(5) * linear(GaussianRational(1)) *
                   pow(linear(GaussianRational(-1)), 3) * pow(Z(), 2);
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].first == linear(GaussianRational(1)));
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first == Z());
    CHECK(parts[1].second == 2);
    CHECK(parts[2].first == linear(GaussianRational(-1)));
    CHECK(parts[2].second == 3);

    // reassembly up to the leading scalar
    Polynomial prod(1);
    for (auto& [part, mult] : parts) prod = prod * pow(part, mult);
    CHECK(prod == f.monic());
}

TEST_CASE("squarefree decomposition (randomized reassembly)") {
    std::mt19937 rng(static_cast<unsigned>(dpd_test_seed) ^ 0x5eedu);
    std::uniform_int_distribution<int> small(-3, 3), mult(1, 3);
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial f(GaussianRational(1));
        for (int j = 0; j < 3; ++j) {
            GaussianRational c(Rational(small(rng)), Rational(small(rng)));
            f = f * pow(linear(c), mult(rng));
        }
        auto parts = squarefree_decomposition(f);
        Polynomial prod(1);
        for (auto& [part, m] : parts) {
            prod = prod * pow(part, m);
            CHECK(poly_gcd(part, part.derivative()).degree() == 0); // square-free
        }
        CHECK(prod == f.monic());
    }
}
