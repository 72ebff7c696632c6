#include <doctest.h>

#include <sskdv/grassmann.hpp>

#include "test_util.hpp"

using namespace sskdv;
using sskdv_test::random_grassmann;
using G = grassmann<qcomplex>;

TEST_CASE("grassmann: nilpotency and anticommutation")
{
    const auto z1 = G::generator(odd_generator(1));
    const auto z2 = G::generator(odd_generator(2));
    CHECK((z1 * z1).is_zero());
    CHECK(z1 * z2 == -(z2 * z1));
    CHECK(!(z1 * z2).is_zero());
}

TEST_CASE("grassmann: product by distributivity")
{
    const auto z1 = G::generator(odd_generator(1));
    const auto z2 = G::generator(odd_generator(2));
    const G one(qcomplex(1));
    // (1 + z1)(1 + z2) = 1 + z1 + z2 + z1 z2, with z1 z2 stored under key {1,2} and coefficient +1.
    const G prod = (one + z1) * (one + z2);
    CHECK(prod.terms().size() == 4);
    CHECK(prod.coeff(0) == qcomplex(1));
    CHECK(prod.coeff(0b010) == qcomplex(1));
    CHECK(prod.coeff(0b100) == qcomplex(1));
    CHECK(prod.coeff(0b110) == qcomplex(1));
    // The reversed order picks up the sign on the top term only.
    const G rev = (one + z2) * (one + z1);
    CHECK(rev.coeff(0b110) == qcomplex(-1));
}

TEST_CASE("grassmann: body, soul, parity")
{
    const auto z1 = G::generator(odd_generator(1));
    const auto z2 = G::generator(odd_generator(2));
    const G x = G(qcomplex(3)) + qcomplex(2) * (z1 * z2);
    CHECK(x.body() == qcomplex(3));
    CHECK(x.soul() == qcomplex(2) * (z1 * z2));
    CHECK(x.parity() == parity::even);
    CHECK(z1.parity() == parity::odd);
    CHECK((G(qcomplex(1)) + z1).parity() == parity::mixed);
    CHECK(G(qcomplex(5)).soul().is_zero());
    CHECK(G().parity() == parity::even);
}

TEST_CASE("grassmann: generator table is capped")
{
    CHECK_NOTHROW(odd_generator(7));
    CHECK_THROWS_AS(odd_generator(8), config_error);
}

TEST_CASE("grassmann: merge sign counts inversions")
{
    CHECK(merge_sign(0b001, 0b010) == 1);
    CHECK(merge_sign(0b010, 0b001) == -1);
    CHECK(merge_sign(0b110, 0b001) == 1);  // (z1 z2) z0 -> z0 z1 z2: two transpositions
    CHECK(merge_sign(0b100, 0b011) == 1);
    CHECK(merge_sign(0b010, 0b101) == -1); // z1 (z0 z2) -> z0 z1 z2: one transposition
    CHECK(merge_sign(0b011, 0b010) == 0);
}

TEST_CASE("grassmann: graded commutativity on random homogeneous elements")
{
    for (int trial = 0; trial < 200; ++trial) {
        const auto pg = trial % 2 ? parity::odd : parity::even;
        const auto ph = trial % 3 ? parity::odd : parity::even;
        const G g = random_grassmann(4, pg), h = random_grassmann(4, ph);
        const bool both_odd = pg == parity::odd && ph == parity::odd;
        CHECK(g * h == (both_odd ? -(h * g) : h * g));
    }
}

TEST_CASE("grassmann: associativity and distributivity")
{
    for (int trial = 0; trial < 100; ++trial) {
        const G a = random_grassmann(4, parity::mixed, 6), b = random_grassmann(4, parity::mixed, 6),
                c = random_grassmann(4, parity::mixed, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("grassmann: products of more odd factors than generators vanish")
{
    for (int trial = 0; trial < 50; ++trial) {
        G prod(qcomplex(1));
        for (int k = 0; k < 4; ++k) {
            prod = prod * random_grassmann(3, parity::odd, 5);
        }
        CHECK(prod.is_zero());
    }
    // Squares of homogeneous odd elements vanish.
    for (int trial = 0; trial < 50; ++trial) {
        const G o = random_grassmann(5, parity::odd, 6);
        CHECK((o * o).is_zero());
    }
}

TEST_CASE("grassmann: inverse")
{
    for (int trial = 0; trial < 50; ++trial) {
        G x = random_grassmann(4, parity::even, 5) + G(qcomplex(sskdv_test::random_rational() + 7));
        if (x.body().is_zero()) {
            continue;
        }
        CHECK(x * x.inverse() == G(qcomplex(1)));
        CHECK(x.inverse() * x == G(qcomplex(1)));
    }
    CHECK_THROWS_AS(G::generator(odd_generator(0)).inverse(), domain_error);
}
