#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "morava/algebra.hpp"

namespace morava {

// Full co-multiplication of the odd generator e_idx. Rejects even indices
// (even generators are squares; use comul). Returns zero for an absent
// generator.
TensorElement comul_gen(const Presentation& p, int idx);
// Reduced part Dt(e_idx) = D(e_idx) - e_idx(x)1 - 1(x)e_idx.
TensorElement comul_gen_reduced(const Presentation& p, int idx);

// Co-multiplication extended to the whole algebra as an algebra map.
TensorElement comul(const Presentation& p, const Element& x);
TensorElement comul_reduced(const Presentation& p, const Element& x);

// Coefficient of the empty monomial (a pure v-power), if any.
std::optional<int> counit(const Presentation& p, const Element& x);

// Antipode of the graded connected bi-algebra, computed from the
// convolution identity.
Element antipode(const Presentation& p, const Element& x);

// Memoized per-monomial co-multiplication table.
class HopfCache {
public:
    explicit HopfCache(const Presentation& p) : p_(p) {}

    const Presentation& pres() const { return p_; }
    const TensorElement& delta(Mask m);
    TensorElement delta_elem(const Element& x);
    TensorElement delta_reduced(const Element& x);
    // antipode values on monomials, resolved lazily
    const Element& antipode_mask(Mask m);

private:
    const TensorElement& delta_index(int i); // coproduct of a single e_i
    void resolve_antipodes(Mask m);

    const Presentation& p_;
    std::unordered_map<Mask, TensorElement> masks_;
    std::unordered_map<int, TensorElement> indices_;
    std::unordered_map<Mask, Element> antipodes_;
};

struct AxiomResult {
    std::string axiom;
    bool pass = true;
    std::string witness;
};

struct HopfReport {
    std::vector<AxiomResult> axioms;
    bool all_pass() const
    {
        for (const auto& a : axioms)
            if (!a.pass)
                return false;
        return true;
    }
};

// Exhaustive check of the bi-algebra axioms on generators: coassociativity,
// the counit identity, well-definedness on the relations (including the
// v_n-torsion relation where present), cocommutativity and the antipode
// convolution identity.
HopfReport verify_hopf(const Presentation& p);

// F_2-basis of the kernel of the reduced co-multiplication on the
// degree-d homogeneous component.
std::vector<Element> primitive_space(const Presentation& p, int degree);

} // namespace morava
