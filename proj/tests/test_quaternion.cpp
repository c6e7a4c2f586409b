#include "quatlin/errors.hpp"
#include "quatlin/quaternion.hpp"
#include "support.hpp"

#include <doctest.h>

using quatlin::Quaternion;
using quatlin::Rational;

namespace {
const Quaternion one = Quaternion::unit(0);
const Quaternion i = Quaternion::unit(1);
const Quaternion j = Quaternion::unit(2);
const Quaternion k = Quaternion::unit(3);
Rational q(long p, long d) { return Rational(mpz_class(p), mpz_class(d)); }
} // namespace

TEST_CASE("multiplication table") {
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(j * i == -k);
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(quatlin::quat_mul(Quaternion{1, 2, 3, 4}, one) == Quaternion{1, 2, 3, 4});
    CHECK(quatlin::quat_mul(Quaternion{1, 1, 1, 1}, Quaternion{1, -1, -1, -1}) == Quaternion{4, 0, 0, 0});
}

TEST_CASE("conjugation") {
    const Quaternion a{1, 2, 3, 4};
    CHECK(quatlin::quat_conj(a) == Quaternion{1, -2, -3, -4});
    CHECK(quatlin::quat_conj(quatlin::quat_conj(a)) == a);
    CHECK(quatlin::quat_conj(i * j) == -k);
    CHECK(quatlin::quat_conj(i * j) == quatlin::quat_conj(j) * quatlin::quat_conj(i));
}

TEST_CASE("norm") {
    CHECK(quatlin::quat_norm_sq(Quaternion{1, 2, 3, 4}) == Rational(30));
    CHECK(quatlin::quat_norm_sq(Quaternion{}) == Rational(0));
    CHECK(quatlin::quat_norm_sq(Quaternion{q(1, 2), q(1, 2), q(1, 2), q(1, 2)}) == Rational(1));
}

TEST_CASE("inverse") {
    CHECK(quatlin::quat_inverse(i) == -i);
    CHECK(quatlin::quat_inverse(Quaternion{2, 0, 0, 0}) == Quaternion{q(1, 2), 0, 0, 0});
    const Quaternion inv = quatlin::quat_inverse(Quaternion{1, 1, 1, 1});
    CHECK(inv == Quaternion{q(1, 4), q(-1, 4), q(-1, 4), q(-1, 4)});
    CHECK(Quaternion{1, 1, 1, 1} * inv == one);
    CHECK_THROWS_AS(quatlin::quat_inverse(Quaternion{}), quatlin::ZeroQuaternion);
}

TEST_CASE("algebraic text") {
    CHECK(quatlin::to_algebraic(Quaternion{}) == "0");
    CHECK(quatlin::to_algebraic(Quaternion{2, 0, 0, 0}) == "2");
    CHECK(quatlin::to_algebraic(-j) == "-j");
    CHECK(quatlin::to_algebraic(Quaternion{1, -2, 0, q(1, 2)}) == "1 - 2i + 1/2k");
}

TEST_CASE("algebra laws on random quaternions") {
    quatlin::testing::Gen gen(7);
    for (int n = 0; n < 200; ++n) {
        const Quaternion a = gen.quaternion(), b = gen.quaternion(), c = gen.quaternion();
        const Rational r = gen.rational();
        CHECK(a * b == quatlin::testing::table_product(a, b));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((r * a) * b == r * (a * b));
        CHECK(a * (r * b) == r * (a * b));
        CHECK(quatlin::quat_conj(a * b) == quatlin::quat_conj(b) * quatlin::quat_conj(a));
        CHECK(quatlin::quat_norm_sq(a * b) == quatlin::quat_norm_sq(a) * quatlin::quat_norm_sq(b));
        CHECK((a * quatlin::quat_conj(a)) == Quaternion::scalar(quatlin::quat_norm_sq(a)));
        if (!a.is_zero()) {
            CHECK(a * quatlin::quat_inverse(a) == one);
            CHECK(quatlin::quat_inverse(a) * a == one);
        }
    }
}
