#include <doctest.h>

#include "morava/base.hpp"

using namespace morava;

namespace {

// division-loop oracle for the 2-adic valuation
int nu2_oracle(long long k)
{
    int a = 0;
    while (k % 2 == 0) {
        k /= 2;
        ++a;
    }
    return a;
}

} // namespace

TEST_CASE("nu2 basics and oracle")
{
    CHECK(nu2(1) == 0);
    CHECK(nu2(4) == 2);
    CHECK(nu2(12) == 2);
    CHECK_THROWS_AS(nu2(0), InputError);
    for (long long k = 1; k <= 4096; ++k)
        CHECK(nu2(k) == nu2_oracle(k));
}

TEST_CASE("angle evaluation and involution")
{
    CHECK(angle(0, 3) == 7);
    CHECK(angle(4, 3) == 3);
    CHECK(angle(2, 2) == 1);
    for (int n = 1; n <= 4; ++n)
        for (long long t = -100; t <= 100; ++t)
            CHECK(angle(angle(t, n), n) == t);
}

TEST_CASE("binom_mod2 against the Pascal recurrence")
{
    CHECK(binom_mod2(5, 1) == 1);
    CHECK(binom_mod2(2, 1) == 0);
    CHECK(binom_mod2(0, 0) == 1);
    CHECK(binom_mod2(3, 7) == 0); // b > a

    const int N = 64;
    static int pascal[N + 1][N + 1];
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b <= N; ++b)
            pascal[a][b] = b == 0 ? 1 : (a == 0 ? 0 : (pascal[a - 1][b - 1] ^ pascal[a - 1][b]));
    for (int a = 0; a <= N; ++a)
        for (int b = 0; b <= N; ++b)
            CHECK(binom_mod2(a, b) == pascal[a][b]);
}

TEST_CASE("truncation_exponent examples and uniqueness")
{
    CHECK(truncation_exponent(1, 7) == 2);
    CHECK(truncation_exponent(2, 7) == 1);
    CHECK(truncation_exponent(1, 17) == 4);
    CHECK_THROWS_AS(truncation_exponent(5, 7), InputError);

    for (int m = 3; m <= 64; ++m)
        for (int i = 1; 2 * i - 1 <= m - 1; ++i) {
            int k = truncation_exponent(i, m);
            long long q = 2LL * i - 1;
            CHECK((q << k) <= m - 1);
            CHECK((q << (k + 1)) > m - 1);
        }
}
