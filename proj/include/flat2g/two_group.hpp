#pragma once

// The finite 2-group G = (G, A, alpha): a Cayley-table group, the ambient
// mu_N standing in for A = U(1) with discrete topology, and a validated
// normalized 3-cocycle as associator. Unitors are identities, unit/counit
// fixed as i_g = id, e_g = alpha(g^-1, g, g^-1). Also the checkers for 1-
// and 2-homomorphisms between such 2-groups.

#include <memory>

#include "flat2g/cochain.hpp"

namespace flat2g {

class TwoGroup {
  public:
    TwoGroup(FiniteGroup g, int64_t modulus, ThreeCocycle alpha);

    const FiniteGroup& group() const { return *g_; }
    int64_t modulus() const { return n_; }
    const ThreeCocycle& alpha() const { return alpha_; }

    int order() const { return g_->order(); }
    Elt mul(Elt a, Elt b) const { return g_->mul(a, b); }
    Elt inv(Elt a) const { return g_->inv(a); }
    Elt conj_by(Elt c, Elt g) const { return g_->conj(c, g); }  // c g c^-1

    // associator exponent / value
    int64_t aexp(Elt g, Elt h, Elt k) const { return alpha_.exp(g, h, k); }
    CircleElement aval(Elt g, Elt h, Elt k) const { return alpha_.value(g, h, k); }

    CircleElement identity_value() const { return CircleElement::identity(n_); }

  private:
    std::shared_ptr<const FiniteGroup> g_;
    int64_t n_;
    ThreeCocycle alpha_;
};

TwoGroup make_two_group(FiniteGroup g, int64_t modulus, ThreeCocycle alpha);

// phi: h^-1 g^-1 -> (gh)^-1, value alpha(g,h,h^-1 g^-1) / alpha(h,h^-1,g^-1)
CircleElement coherence_phi(const TwoGroup& gg, Elt g, Elt h);
// phi~: g -> (g^-1)^-1, value alpha(g^-1,g,g^-1)
CircleElement coherence_phi_tilde(const TwoGroup& gg, Elt g);

// A 1-homomorphism (rho, f, gamma) between 2-groups. f: mu_N -> mu_N' is
// determined by the image of the generator 1/N, stored as f_gen = f(1/N).
struct TwoGroupHom {
    std::vector<Elt> rho;         // G -> G', image per element
    CircleElement f_gen;          // in mu_N'
    std::vector<int64_t> gamma;   // G x G -> exponent mod N', row-major
};

// Verifies rho and f are homomorphisms and the associativity
// compatibility
//   f(alpha(g,h,k)) gamma(gh,k) gamma(g,h)
//     = gamma(g,hk) gamma(h,k) alpha'(rho g, rho h, rho k).
bool check_one_hom(const TwoGroup& src, const TwoGroup& dst, const TwoGroupHom& hom);

struct TwoGroupTwoHom {
    std::vector<int64_t> eta;  // G -> exponent mod N'
};

// Requires rho = rho', f = f' and the intertwining identity
//   eta(gh) gamma(g,h) = gamma'(g,h) eta(g) eta(h).
bool check_two_hom(const TwoGroup& src, const TwoGroup& dst, const TwoGroupHom& hom1,
                   const TwoGroupHom& hom2, const TwoGroupTwoHom& eta);

}  // namespace flat2g
