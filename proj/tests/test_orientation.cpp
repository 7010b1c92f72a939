#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "strat/orientation.hpp"

using namespace strat;

TEST_CASE("dyadic arithmetic is canonical") {
    Dyadic a(6);  // 3 * 2
    CHECK(a.mantissa() == 3);
    CHECK(a.exponent() == 1);
    Dyadic b = Dyadic::power_of_two(-3);
    CHECK((a * b).str() == "3/4");
    CHECK((a + (-a)).is_zero());
    CHECK((Dyadic(5) + Dyadic(3)).mantissa() == 1);  // 8 = 1 * 2^3
    CHECK((Dyadic(5) + Dyadic(3)).exponent() == 3);
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
        Dyadic x(static_cast<long long>(rng() % 2001) - 1000, static_cast<int>(rng() % 9) - 4);
        Dyadic y(static_cast<long long>(rng() % 2001) - 1000, static_cast<int>(rng() % 9) - 4);
        for (const Dyadic& z : {x + y, x * y, x - y}) {
            if (!z.is_zero()) CHECK(z.mantissa() % 2 != 0);
        }
    }
}

TEST_CASE("sign_norm") {
    CHECK(sign_norm(0) == Dyadic(1));
    CHECK(sign_norm(4) == Dyadic::power_of_two(-2));  // the 1/4 normalization in dim 4
    CHECK(sign_norm(7) == Dyadic::power_of_two(-3));
}

TEST_CASE("compose_factor") {
    CHECK(compose_factor(3, 5) == 2);
    CHECK(compose_factor(2, 3) == 1);
    CHECK(compose_factor(0, 0) == 1);
}

TEST_CASE("normalization identity for the composition factor") {
    for (int i = 0; i <= 64; ++i)
        for (int j = 0; j <= 64; ++j) {
            Dyadic lhs = Dyadic(compose_factor(i, j)) * Dyadic::power_of_two(-((i + j) / 2));
            Dyadic rhs = Dyadic::power_of_two(-(i / 2)) * Dyadic::power_of_two(-(j / 2));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("compose_transfer") {
    TransferSymbol a = TransferSymbol::fresh(3);
    TransferSymbol b = TransferSymbol::fresh(5);
    TransferSymbol c = compose_transfer(a, b);
    CHECK(c.fiber_dim == 8);
    CHECK(c.degree == 0);
    CHECK(c.coeff == Dyadic::power_of_two(-4));
    // identity transfer
    TransferSymbol u = TransferSymbol::fresh(0);
    TransferSymbol d = compose_transfer(u, b);
    CHECK(d.fiber_dim == 5);
    CHECK(d.coeff == b.coeff);
    // exhaustive invariant
    for (int i = 0; i <= 20; ++i)
        for (int j = 0; j <= 20; ++j) {
            TransferSymbol s = compose_transfer(TransferSymbol::fresh(i),
                                                TransferSymbol::fresh(j));
            CHECK(s.satisfies_normalization());
        }
}

TEST_CASE("compose_transfer is associative with unit") {
    TransferSymbol u = TransferSymbol::fresh(0);
    for (int i = 0; i <= 8; ++i) {
        TransferSymbol s = TransferSymbol::fresh(i);
        CHECK(compose_transfer(u, s).coeff == s.coeff);
        CHECK(compose_transfer(s, u).coeff == s.coeff);
        for (int j = 0; j <= 8; ++j)
            for (int k = 0; k <= 8; ++k) {
                TransferSymbol x = TransferSymbol::fresh(i);
                TransferSymbol y = TransferSymbol::fresh(j);
                TransferSymbol z = TransferSymbol::fresh(k);
                TransferSymbol left = compose_transfer(compose_transfer(x, y), z);
                TransferSymbol right = compose_transfer(x, compose_transfer(y, z));
                CHECK(left.fiber_dim == right.fiber_dim);
                CHECK(left.degree == right.degree);
                CHECK(left.coeff == right.coeff);
            }
    }
}

TEST_CASE("boundary factor absorbs into the normalization") {
    CHECK(boundary_factor(4) == 2);
    CHECK(boundary_factor(5) == 1);
    for (int n = 1; n <= 64; ++n)
        CHECK(sign_norm(n) * Dyadic(boundary_factor(n)) == sign_norm(n - 1));
}

TEST_CASE("psi2 acts by powers of four") {
    LaurentKO a = LaurentKO::monomial(1, Dyadic(1));
    CHECK(psi2(a) == LaurentKO::monomial(1, Dyadic(4)));
    CHECK(psi2(LaurentKO::unit()) == LaurentKO::unit());
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        LaurentKO x;
        for (int e = 0; e < 3; ++e)
            x.set(static_cast<int>(rng() % 9) - 4,
                  Dyadic(static_cast<long long>(rng() % 11) - 5, static_cast<int>(rng() % 5) - 2));
        CHECK(psi2(psi2(x, true), false) == x);
        CHECK(psi2(psi2(x, false), true) == x);
    }
}

TEST_CASE("psi2 and complexify are ring homomorphisms") {
    std::mt19937 rng(23);
    auto random_ko = [&] {
        LaurentKO x;
        for (int e = 0; e < 3; ++e)
            x.set(static_cast<int>(rng() % 7) - 3,
                  Dyadic(static_cast<long long>(rng() % 9) - 4, static_cast<int>(rng() % 5) - 2));
        return x;
    };
    for (int t = 0; t < 40; ++t) {
        LaurentKO x = random_ko(), y = random_ko();
        CHECK(psi2(x + y) == psi2(x) + psi2(y));
        CHECK(psi2(x * y) == psi2(x) * psi2(y));
        CHECK(complexify(x + y) == complexify(x) + complexify(y));
        CHECK(complexify(x * y) == complexify(x) * complexify(y));
    }
}

TEST_CASE("complexification sends a to the square of the Bott element") {
    CHECK(complexify(LaurentKO::monomial(1, Dyadic(1))) ==
          LaurentKU::monomial(2, Dyadic(1)));
    CHECK(complexify(LaurentKO::monomial(-1, Dyadic(3))) ==
          LaurentKU::monomial(-2, Dyadic(3)));
    CHECK(complexify(LaurentKO::unit()) == LaurentKU::monomial(0, Dyadic(1)));
}

TEST_CASE("orientation compatibility") {
    CHECK(orientation_compat_check(1, 0));  // the 4-sphere case
    CHECK(orientation_compat_check(1, 1));  // 1/4 normalization in dimension 4
    for (int k = 0; k <= 10; ++k)
        for (int sigma = -5; sigma <= 5; ++sigma) CHECK(orientation_compat_check(k, sigma));
}

TEST_CASE("nns transfer inverse witness") {
    NnsTransfer unit = nns_transfer(0);
    CHECK(unit.sigma_j.degree == 0);
    CHECK(unit.sigma_j.coeff == Dyadic(1));
    CHECK(unit.unit_law_ok);

    NnsTransfer c3 = nns_transfer(3);
    CHECK(c3.sigma_j.degree == 1);
    CHECK(c3.unit_law_ok);
    for (int c = 0; c <= 8; ++c) CHECK(nns_transfer(c).unit_law_ok);

    // degrees add mod 2 under composition of inclusions
    NnsTransfer c2 = nns_transfer(2);
    CHECK((c2.sigma_j.degree + c3.sigma_j.degree) % 2 == 1);
}
