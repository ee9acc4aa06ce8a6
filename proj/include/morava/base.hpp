#pragma once

#include <stdexcept>
#include <string>

namespace morava {

// Flavor of the oriented cohomology theory. The Morava variants carry a
// height n >= 1; the Chow theory has no v_n.
enum class TheoryFlavor { Chow, ConnectiveMorava, PeriodicMorava };

inline const char* flavor_name(TheoryFlavor f)
{
    switch (f) {
        case TheoryFlavor::Chow: return "chow";
        case TheoryFlavor::ConnectiveMorava: return "ck";
        case TheoryFlavor::PeriodicMorava: return "k";
    }
    return "?";
}

// Input errors (bad flavor/n/m, inadmissible J, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Refusals when an exhaustive search would exceed its configured bound.
class SizingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 2-adic valuation: largest a with 2^a dividing k. Rejects k = 0.
inline int nu2(long long k)
{
    if (k == 0)
        throw InputError("nu2: zero has no finite 2-adic valuation");
    int a = 0;
    while ((k & 1) == 0) {
        k >>= 1;
        ++a;
    }
    return a;
}

// <t> = 2^n - 1 - t.
inline long long angle(long long t, int n)
{
    return (1LL << n) - 1 - t;
}

// C(a, b) mod 2. Lucas: odd iff the base-2 digits of b are a subset of a's.
inline int binom_mod2(unsigned long long a, unsigned long long b)
{
    return (b & ~a) == 0 ? 1 : 0;
}

// Largest k with (2i-1) * 2^k <= m - 1, i.e. floor(log2((m-1)/(2i-1))),
// computed in integer arithmetic. Requires 2i-1 <= m-1.
inline int truncation_exponent(int i, int m)
{
    if (i < 1 || m < 3)
        throw InputError("truncation_exponent: need i >= 1 and m >= 3");
    long long q = 2LL * i - 1;
    if (q > m - 1)
        throw InputError("truncation_exponent: generator " + std::to_string(q) +
                         " absent for m = " + std::to_string(m));
    int k = 0;
    while (q * 2 <= m - 1) {
        q *= 2;
        ++k;
    }
    return k;
}

} // namespace morava
