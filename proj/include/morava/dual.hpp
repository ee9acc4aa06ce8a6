#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morava/algebra.hpp"

namespace morava {

// Divided-power dual of a Morava-flavored presentation. The slot i holds
// gamma_t(alpha_{2i-1}) for 0 <= t < 2^{exps[i-1]}; a gamma-monomial is
// stored as the mask of its dual e-monomial partner.
struct DualPresentation {
    Presentation base;
    std::vector<int> exps; // = base.exps
    // top-square data per slot: gamma_{2^(d_i-1)}(alpha_{2i-1})^2 equals
    // v_n * alpha_{2j-1} when it fires, and 0 otherwise
    struct TopSquare {
        bool fires = false;
        int slot = 0; // slot of alpha_{2j-1}, 1-based
    };
    std::vector<TopSquare> top;

    int r() const { return static_cast<int>(exps.size()); }
    long long rank() const { return base.rank(); }
};

// Requires a Morava flavor; the connective dual exists for m <= 2^{n+1},
// the periodic one for all m (stabilized).
DualPresentation dual_presentation(const Presentation& p);

struct DTerm {
    Mask mono = 0; // e-monomial partner of the gamma-monomial
    int v = 0;
    auto operator<=>(const DTerm&) const = default;
};

// Homogeneous element of the dual in the gamma-monomial basis. The dual is
// graded so that the pairing is degree-neutral: a gamma-monomial sits in
// minus the degree of its e-partner, and v_n has degree 1-2^n on both sides.
struct DualElement {
    int degree = 0;
    std::vector<DTerm> terms;
    bool zero() const { return terms.empty(); }
    bool operator==(const DualElement&) const = default;
};

int dual_mono_degree(const DualPresentation& dp, Mask mono);

DualElement dual_normalize(const DualPresentation& dp, int degree, std::vector<DTerm> terms);
DualElement dual_zero();
DualElement dual_one(const DualPresentation& dp);
DualElement dual_mono(const DualPresentation& dp, Mask mono, int v = 0);
// gamma_t(alpha_{2i-1}) for slot i (1-based)
DualElement dual_gamma(const DualPresentation& dp, int slot, int t, int v = 0);
DualElement dual_add(const DualPresentation& dp, const DualElement& g, const DualElement& h);

// Product in canonical gamma-monomial form, by the divided-power identity
// with Lucas coefficients plus the top-square rewriting.
DualElement gamma_mul(const DualPresentation& dp, const DualElement& g, const DualElement& h);

struct DTTerm {
    Mask a = 0;
    Mask b = 0;
    int v = 0;
    auto operator<=>(const DTTerm&) const = default;
};

struct DualTensor {
    int degree = 0;
    std::vector<DTTerm> terms;
    bool zero() const { return terms.empty(); }
    bool operator==(const DualTensor&) const = default;
};

// Co-multiplication: gamma_t splits as sum gamma_s (x) gamma_{t-s},
// extended multiplicatively across slots.
DualTensor gamma_comul(const DualPresentation& dp, const DualElement& g);

// Dual-basis pairing <v^a m, v^b gamma> = v^{a+b} when the exponent tuples
// match. Returns the v-power of the scalar, or nullopt for zero.
std::optional<int> pairing(const Presentation& p, const Element& x,
                           const DualPresentation& dp, const DualElement& g);

// <X, g (x) h> for X in the tensor square
std::optional<int> tensor_pairing(const Presentation& p, const TensorElement& X,
                                  const DualPresentation& dp, const DualElement& g,
                                  const DualElement& h);

// <x (x) y, G> for G in the dual tensor square
std::optional<int> dual_tensor_pairing(const Presentation& p, const Element& x,
                                       const Element& y, const DualPresentation& dp,
                                       const DualTensor& G);

struct DualityCheck {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct DualityReport {
    std::vector<DualityCheck> checks;
    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

// Exhaustive verification on all basis tuples: both pairing adjunctions,
// and associativity/commutativity of gamma_mul.
DualityReport verify_duality(const Presentation& p);

// Complete list of homogeneous degree-0 idempotents, by exhaustive subset
// search over the degree-class-0 monomials. Periodic flavor only. When
// restrict_to is given the candidates are drawn from the sub-bialgebra with
// gamma exponents capped at 2^{a_i} (arithmetic stays ambient).
std::vector<DualElement> idempotents(const DualPresentation& dp,
                                     const std::optional<std::vector<int>>& restrict_to,
                                     long long max_candidates);

std::string dual_mono_str(const DualPresentation& dp, Mask mono);
std::string dterm_str(const DualPresentation& dp, const DTerm& t);
std::string dual_str(const DualPresentation& dp, const DualElement& g);

} // namespace morava
