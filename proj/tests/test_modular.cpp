#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lucasian/modular.hpp"
#include "test_support.hpp"

using namespace lucasian;
using namespace lucasian::testing;

TEST_CASE("jacobi: documented values") {
    CHECK(jacobi(5, Natural(23)) == JacobiValue::Minus);
    CHECK(jacobi(1, Natural(9999)) == JacobiValue::Plus);
    CHECK(jacobi(10, Natural(21)) == JacobiValue::Minus);
    CHECK(jacobi(0, Natural(1)) == JacobiValue::Plus);
    CHECK(jacobi(0, Natural(3)) == JacobiValue::Zero);
    CHECK(jacobi(6, Natural(9)) == JacobiValue::Zero);
}

TEST_CASE("jacobi: rejects even or nonpositive n") {
    CHECK_THROWS_AS(jacobi(3, Natural(8)), InvalidArgument);
    CHECK_THROWS_AS(jacobi(3, Natural(0)), InvalidArgument);
    CHECK_THROWS_AS(jacobi(3, Natural(-7)), InvalidArgument);
}

TEST_CASE("jacobi: matches factor-and-enumerate oracle for small arguments") {
    for (std::uint64_t n = 1; n < 400; n += 2) {
        for (std::int64_t a = -60; a <= 450; ++a) {
            REQUIRE_MESSAGE(to_int(jacobi(a, from_u64(n))) == jacobi_by_factoring(a, n), "a=" << a << " n=" << n);
        }
    }
}

TEST_CASE("jacobi: agrees with GMP on large random arguments") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(17);
    for (int i = 0; i < 2000; ++i) {
        Natural n = rng.get_z_bits(64 + i % 900);
        n = 2 * n + 1;
        Integer a = rng.get_z_bits(1 + i % 1200);
        if (i % 3 == 0) a = -a;
        REQUIRE(to_int(jacobi(a, n)) == mpz_jacobi(a.get_mpz_t(), n.get_mpz_t()));
    }
}

TEST_CASE("jacobi: multiplicative in the top argument and periodic") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> small(-100000, 100000);
    for (int i = 0; i < 5000; ++i) {
        const Natural n = from_u64(random_odd(rng, 1, 1'000'000'000));
        const std::int64_t a = small(rng), b = small(rng);
        CHECK(jacobi(Integer(a) * Integer(b), n) == jacobi(a, n) * jacobi(b, n));
        CHECK(jacobi(a, n) == jacobi(mod_floor(a, n), n));
        CHECK(jacobi(Integer(a) + 7 * n, n) == jacobi(a, n));
    }
}

TEST_CASE("jacobi: +1 exactly on nonzero squares modulo odd primes below 200") {
    for (std::uint64_t p = 3; p < 200; p += 2) {
        if (!is_prime_naive(p)) continue;
        std::vector<bool> square(p, false);
        for (std::uint64_t x = 1; x < p; ++x) square[x * x % p] = true;
        for (std::uint64_t a = 0; a < p; ++a) {
            const JacobiValue v = jacobi(long(a), from_u64(p));
            if (a == 0) {
                CHECK(v == JacobiValue::Zero);
            } else {
                CHECK((v == JacobiValue::Plus) == square[a]);
            }
        }
    }
}

TEST_CASE("jacobi: zero iff arguments share a factor") {
    for (std::uint64_t n = 1; n < 300; n += 2) {
        for (std::int64_t a = -150; a < 300; ++a) {
            const bool shared = gcd_u64(static_cast<std::uint64_t>(a < 0 ? -a : a), n) > 1;
            CHECK((jacobi(a, from_u64(n)) == JacobiValue::Zero) == shared);
        }
    }
}

TEST_CASE("jacobi_value_from_int") {
    CHECK(jacobi_value_from_int(-1) == JacobiValue::Minus);
    CHECK(jacobi_value_from_int(0) == JacobiValue::Zero);
    CHECK_THROWS_AS(jacobi_value_from_int(2), InvalidArgument);
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_pow(12345, 0, 97) == 1);
    CHECK(mod_pow(3, 22, 23) == pow_by_repetition(3, 22, 23));
    CHECK(mod_pow(3, 22, 23) == 1);
    CHECK(mod_pow(-2, 3, 7) == 6);
    CHECK_THROWS_AS(mod_pow(2, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), InvalidArgument);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t m = 2 + rng() % 100000, b = rng() % 1000000, e = rng() % 400;
        CHECK(mod_pow(from_u64(b), from_u64(e), from_u64(m)) == from_u64(pow_by_repetition(b % m, e, m)));
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(1, Natural(1000003)) == 1);
    CHECK_THROWS_AS(mod_inverse(2, 4), NotInvertible);
    CHECK_THROWS_AS(mod_inverse(0, 9), NotInvertible);
    CHECK_THROWS_AS(mod_inverse(1, 1), InvalidArgument);
    CHECK(mod_inverse(-3, 7) == 2);
}

TEST_CASE("mod_inverse: exhaustive below 1000") {
    for (unsigned long n = 2; n < 1000; ++n) {
        for (unsigned long a = 1; a < n; ++a) {
            if (gcd_u64(a, n) != 1) continue;
            const Natural u = mod_inverse(Natural(a), Natural(n));
            REQUIRE(u < n);
            REQUIRE((u * a) % n == 1 % n);
        }
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(0, 5) == 5);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(shifted_form(3, 100, false), 2) == 1);
}

TEST_CASE("shifted_form builds k*2^m +- 1") {
    CHECK(shifted_form(3, 3, false) == 23);
    CHECK(shifted_form(7, 4, true) == 113);
    Natural expected = 1;
    for (int i = 0; i < 200; ++i) expected *= 2;
    CHECK(shifted_form(1, 200, false) == expected - 1);
}

TEST_CASE("ShiftFormModulus::reduce agrees with division") {
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(3);
    std::mt19937_64 small(3);
    for (int i = 0; i < 3000; ++i) {
        const bool plus = i % 2 == 0;
        const std::uint64_t m = 2 + small() % 400;
        Natural k = rng.get_z_bits(1 + small() % std::min<std::uint64_t>(m, 90));
        k = 2 * (k / 2) + 1;
        if (mpz_sizeinbase(k.get_mpz_t(), 2) > m) k = 1;
        const ShiftFormModulus mod(k, m, plus);
        const Natural& n = mod.value();
        Natural t = rng.get_z_range(n * n);
        if (i % 7 == 0) t = n * n - 1;
        if (i % 11 == 0) t = n;
        Natural reduced = t;
        mod.reduce(reduced);
        REQUIRE_MESSAGE(reduced == mod_floor(t, n), "k=" << k.get_str() << " m=" << m << " plus=" << plus);
    }
}

TEST_CASE("ShiftFormModulus::reduce handles small negatives") {
    const ShiftFormModulus mod(3, 5, true);
    Natural t = -2;
    mod.reduce(t);
    CHECK(t == 95);
}

TEST_CASE("decimal_digits") {
    CHECK(decimal_digits(Natural(9)) == 1);
    CHECK(decimal_digits(Natural(10)) == 2);
    CHECK(decimal_digits(Natural(999)) == 3);
    CHECK(decimal_digits(Natural(1000)) == 4);
    // floor(log10(3 * 2^10000)) + 1
    CHECK(decimal_digits(shifted_form(3, 10000, false)) == 3011);
    for (int e = 1; e < 60; ++e) {
        Natural p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
        CHECK(decimal_digits(p - 1) == std::size_t(e));
        CHECK(decimal_digits(p) == std::size_t(e + 1));
    }
}

TEST_CASE("parse_integer") {
    CHECK(parse_integer("42") == 42);
    CHECK(parse_integer("-7") == -7);
    CHECK(parse_integer("+7") == 7);
    CHECK_THROWS_AS(parse_integer(""), InvalidArgument);
    CHECK_THROWS_AS(parse_integer("1 2"), InvalidArgument);
    CHECK_THROWS_AS(parse_integer("0x10"), InvalidArgument);
    CHECK_THROWS_AS(parse_integer("-"), InvalidArgument);
}
