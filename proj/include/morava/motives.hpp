#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "morava/algebra.hpp"

namespace morava {

// Chow-theoretic J-invariant input: the set of generator indices killed in
// the restriction quotient.
struct ChowJInput {
    int n = 1;
    int m = 3;
    std::set<int> J;
};

struct Admissibility {
    bool ok = false;
    std::vector<int> tuple;     // exponents a_i, 1 <= i <= r
    std::vector<int> missing;   // indices forced by the expansion but absent
    std::vector<int> spurious;  // indices present but not of expansion form
    std::vector<int> out_of_range;
};

// Checks that J is the expansion of an exponent tuple:
// a_i = min({a <= k_i : (2i-1)2^a in J} u {k_i}) and
// J = { (2i-1)2^b : a_i <= b < k_i }. For even m the extra component index
// m/2 is accepted and ignored.
Admissibility validate_chow_J(const ChowJInput& in);

struct JInvariantResult {
    Presentation quotient;
    long long rank = 0;
};

// Quotient presentation of the requested flavor determined by J, with its
// monomial-count rank.
JInvariantResult j_invariant(TheoryFlavor f, const ChowJInput& in);

// Decomposition summary of the Grassmannian component: the motive splits
// into layer_count shifted copies of a layer of rank layer_rank; the layer
// is indecomposable iff m <= 2^{n+1}-2 or 2^n-1 in J, and splits into two
// summands of half rank otherwise.
struct MotiveSummary {
    long long layer_rank = 0;
    long long layer_count = 0;
    bool indecomposable = false;
    long long summand_count = 0;
    long long summand_rank = 0;
};

MotiveSummary motive_summary(const ChowJInput& in);

struct VishikViolation {
    int i = 0;
    int t = 0; // i in J, C(i,t) odd, i+t in range but not in J
};

struct MoravaViolation {
    int n = 0;
    int k = 0; // 2^n-1-2k in J but 2^n-1-k not in J
};

struct RestrictionReport {
    std::vector<VishikViolation> vishik;
    std::vector<MoravaViolation> morava;
};

// Steenrod-type closure checks on J: (a) the binomial closure, and (b) the
// Morava restriction for each supplied height.
RestrictionReport steenrod_restrictions(int m, const std::set<int>& J,
                                        const std::vector<int>& heights);

struct ChainCheck {
    bool ok = false;
    // one row per composition step: (argument, power, parity)
    std::vector<std::array<long long, 3>> steps;
};

// The composition identity behind the Morava restriction: with
// k = 2^{a_1} + ... + 2^{a_t} (increasing binary digits), every intermediate
// binomial C(2^n-1-2k + 2^{a_1}+...+2^{a_i}, 2^{a_{i+1}}) must be odd.
ChainCheck steenrod_chain_check(int n, int k);

// Quotient by the e_1 chain; the Hopf verification suite runs on the result.
Presentation spin_presentation(const Presentation& p);

} // namespace morava
