#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "morava/algebra.hpp"
#include "morava/gf2.hpp"

namespace morava {

// Homogeneous ideal given by generator elements.
struct Ideal {
    Presentation pres;
    std::vector<Element> gens;
};

// The ideal (e_1^{2^{a_1}}, e_3^{2^{a_2}}, ..., e_{2r-1}^{2^{a_r}});
// generators vanishing by truncation are dropped.
Ideal ideal_from_tuple(const Presentation& p, const std::vector<int>& tuple);

Ideal ideal_from_elements(const Presentation& p, std::vector<Element> gens);

// F_2-basis of the ideal's homogeneous component, as coordinates over the
// mask list of the presentation (the v-power per mask is forced by the
// degree).
Gf2Span ideal_component(const Ideal& I, int degree);

bool membership(const Ideal& I, const Element& x);

// Saturation {x : v^i x in I for some i}, computed per degree component and
// iterated to a fixpoint. Connective flavor only.
Ideal saturate(const Ideal& I);

// Component-wise comparison over the generating degree range.
bool ideal_equal(const Ideal& I, const Ideal& J);

// Delta(g) in I (x) H + H (x) I for every generator g.
bool is_bi_ideal(const Ideal& I);

// e_{2^n-1-2k} in I implies e_{2^n-1-k} in I, over the k with both indices
// in range.
bool restriction_holds(const Ideal& I, int n);

struct TupleRow {
    std::vector<int> tuple;
    bool bi_ideal = false;
    bool saturated = false;
    bool restriction = false;
};

// Tuple-candidate walk over all products of exponent choices, in
// tuple-lexicographic order. The `saturated` flag compares the ideal's image
// in the stable-range quotient with its saturation there; it is trivially
// true for the Chow and periodic flavors.
std::vector<TupleRow> enumerate_tuple_bi_ideals(const Presentation& p);

struct BiIdealEnumeration {
    std::vector<TupleRow> rows;   // the full TUPLE report
    std::vector<Ideal> ideals;    // saturated bi-ideals found, deduplicated
    bool lattice_ran = false;     // exhaustive walk ran and agreed
    bool lattice_agrees = true;
};

// Both strategies: the TUPLE walk always, and the exhaustive LATTICE walk
// for the periodic flavor when it fits under the candidate bound.
BiIdealEnumeration enumerate_saturated_bi_ideals(const Presentation& p,
                                                 long long max_candidates);

// Exhaustive graded-submodule walk for the periodic flavor: one F_2-subspace
// per degree class mod 2^n-1, filtered by ideal closure, properness and the
// bi-ideal property. Refuses when the candidate count exceeds the bound.
// Returns the canonical per-class profiles of the surviving ideals.
std::vector<std::string> enumerate_lattice_bi_ideals(const Presentation& p,
                                                     long long max_candidates);

// Canonical per-class profile of an ideal (periodic flavor), comparable with
// the lattice output.
std::string ideal_class_profile(const Ideal& I);

struct ImpossibleEquationReport {
    bool empty = true;
    long long tried = 0;
    // (x, j, y, k, z) solutions, if any
    std::vector<std::array<long long, 5>> solutions;
};

// Brute-force search for (1-2^n)x + (2j-1)2^y = (2k-1)2^z over the stated
// ranges, with x and z capped by the degree range of the algebra.
ImpossibleEquationReport check_impossible_equation(int n, int m);

} // namespace morava
