#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morava/base.hpp"

namespace morava {

// Square-free product of generators e_i; bit (i-1) set iff e_i divides.
// The empty mask is the unit.
using Mask = std::uint32_t;

constexpr int kMaxGeneratorIndex = 30;

// Finite description of one of the algebras under study, or of a quotient
// of it by a tuple ideal. The basis monomials are the square-free masks
// over the valid index set; the exponent of the odd generator e_{2i-1}
// ranges over [0, 2^exps[i-1]).
struct Presentation {
    TheoryFlavor flavor = TheoryFlavor::Chow;
    int n = 0; // Morava height; 0 for Chow
    int m = 3;
    int s = 1;              // index cap of the standard basis
    std::vector<int> exps;  // per-odd-generator exponent bounds
    Mask index_mask = 0;    // valid generator indices
    std::optional<int> torsion_threshold; // 2^n when v_n e_i = 0 for i >= 2^n applies

    int r() const { return static_cast<int>(exps.size()); }
    bool is_morava() const { return flavor != TheoryFlavor::Chow; }
    bool index_valid(int i) const
    {
        return i >= 1 && i <= kMaxGeneratorIndex && (index_mask >> (i - 1)) & 1;
    }
    // degree shift of multiplication by v_n
    int vdeg() const { return 1 - (1 << n); }
    // degree of the product of all valid generators
    int top_degree() const;
    long long rank() const;
    // masks of valid indices >= torsion_threshold
    Mask torsion_mask() const;

    bool operator==(const Presentation&) const = default;
};

Presentation make_presentation(TheoryFlavor f, std::optional<int> n, int m);

// Quotient by the tuple ideal (e_1^{2^{a_1}}, e_3^{2^{a_2}}, ...): keeps the
// generator chains below the new bounds. Requires 0 <= a_i <= exps[i].
Presentation quotient_presentation(const Presentation& p, const std::vector<int>& bounds);

// The Chow presentation with the same generators and bounds.
Presentation chow_counterpart(const Presentation& p);

long long rank(const Presentation& p);

// --- monomials ----------------------------------------------------------

int mono_degree(Mask m);

// odd-generator exponent vector of a mask
std::vector<int> mask_to_exponents(const Presentation& p, Mask m);

// inverse of mask_to_exponents; nullopt when an exponent exceeds its bound
std::optional<Mask> exponents_to_mask(const Presentation& p, const std::vector<int>& t);

// canonical-form product: exponents add per odd chain with binary carries
// through e_i^2 = e_{2i}; overflow past a truncation kills the monomial
std::optional<Mask> mono_mul(const Presentation& p, Mask a, Mask b);

// all valid masks, increasing numeric order
std::vector<Mask> all_masks(const Presentation& p);

// lexicographic order on masks viewed as ascending index lists
bool mask_lex_less(Mask a, Mask b);

// --- elements ------------------------------------------------------------

struct Term {
    Mask mask = 0;
    int v = 0; // exponent of v_n (coefficient over F_2 is implicitly 1)
    auto operator<=>(const Term&) const = default;
};

// Homogeneous element: finite term set over F_2. Empty terms = zero; the
// degree of zero is nominal and compatible with any degree.
struct Element {
    int degree = 0;
    std::vector<Term> terms; // sorted, duplicate-free
    bool zero() const { return terms.empty(); }
    bool operator==(const Element&) const = default;
};

// Sorts, cancels duplicate pairs (char 2) and erases torsion-dead terms.
Element normalize(const Presentation& p, int degree, std::vector<Term> terms);

Element elem_zero();
Element elem_one(const Presentation& p);
Element elem_mono(const Presentation& p, Mask m, int v = 0);
// e_i as an element; zero when the index is out of range
Element elem_gen(const Presentation& p, int i);
Element elem_add(const Presentation& p, const Element& x, const Element& y);
Element elem_mul(const Presentation& p, const Element& x, const Element& y);
// multiply by v_n^dv
Element elem_vshift(const Presentation& p, const Element& x, int dv);

// keeps the v^0 part, reinterpreted in chow_counterpart(p); p must be connective
Element specialize_vn_to_zero(const Presentation& p, const Element& x);

// --- tensor square / cube -------------------------------------------------

struct TTerm {
    std::array<Mask, 3> mask{0, 0, 0};
    int v = 0;
    auto operator<=>(const TTerm&) const = default;
};

struct TensorElement {
    int arity = 2;
    int degree = 0;
    std::vector<TTerm> terms;
    bool zero() const { return terms.empty(); }
    bool operator==(const TensorElement&) const = default;
};

TensorElement tensor_normalize(const Presentation& p, int arity, int degree,
                               std::vector<TTerm> terms);
TensorElement tensor_zero(int arity = 2);
TensorElement tensor_one(const Presentation& p, int arity = 2);
TensorElement tensor_add(const Presentation& p, const TensorElement& x, const TensorElement& y);
TensorElement tensor_mul(const Presentation& p, const TensorElement& x, const TensorElement& y);
TensorElement tensor_vshift(const Presentation& p, const TensorElement& x, int dv);
// x placed in tensor slot `pos` (others the unit)
TensorElement tensor_embed(const Presentation& p, const Element& x, int arity, int pos);
TensorElement tensor_swap(const TensorElement& x); // arity 2

// --- homogeneous components ------------------------------------------------

// all valid terms v^a * mask of the given total degree, mask-sorted
std::vector<Term> component_basis(const Presentation& p, int degree);

// forced v-exponent of `mask` in the degree-d component; nullopt if invalid
std::optional<int> forced_vpow(const Presentation& p, Mask mask, int degree);

// --- canonical text forms ---------------------------------------------------

std::string mono_str(Mask m);
std::string term_str(const Term& t);
std::string elem_str(const Element& x);
std::string tterm_str(const TTerm& t, int arity);
std::string tensor_str(const TensorElement& x);

} // namespace morava
