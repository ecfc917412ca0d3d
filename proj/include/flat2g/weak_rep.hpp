#pragma once

// The bicategory of weak representations of a finite source group Q in a
// finite 2-group: objects are pairs (rho, gamma) with rho: Q -> G a
// homomorphism and d gamma = (rho^* alpha)^{-1}; 1-morphisms are pairs
// (t, eta); 2-morphisms are single A-values between equal (t, eta) pairs.
// Includes explicit composition, associator, inverses, the cartesian lift,
// and the cleavage data presenting the forgetful functor to G-bundles as a
// 2-fibration.
//
// gamma and eta are kept normalized (identity arguments map to 1); the lift
// is renormalized accordingly by the constant alpha(t, t^-1, t).

#include <vector>

#include "flat2g/two_group.hpp"

namespace flat2g {

struct WeakRepObject {
    std::vector<Elt> rho;        // Q -> G
    std::vector<int64_t> gamma;  // Q x Q -> exponent mod N, row-major

    bool operator==(const WeakRepObject& o) const = default;
};

struct OneMorphism {
    Elt t = 0;
    std::vector<int64_t> eta;  // Q -> exponent mod N

    bool operator==(const OneMorphism& o) const = default;
};

// 2-morphisms exist only between equal 1-morphisms; the datum is an A-value.
// Vertical and horizontal composition are both multiplication in A.
struct TwoMorphism {
    CircleElement omega;
};

inline TwoMorphism vertical_compose(const TwoMorphism& b, const TwoMorphism& a) {
    return TwoMorphism{b.omega * a.omega};
}
inline TwoMorphism horizontal_compose(const TwoMorphism& b, const TwoMorphism& a) {
    return TwoMorphism{b.omega * a.omega};
}

bool check_object(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x);

// All (rho, gamma) passing check_object. Guarded.
std::vector<WeakRepObject> enumerate_objects(const FiniteGroup& q, const TwoGroup& gg,
                                             int64_t budget = int64_t(1) << 22);

// Validity of (t, eta): src -> dst, i.e. t rho_src t^-1 = rho_dst and the
// eta ratio identity.
bool check_one_morphism(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& src,
                        const WeakRepObject& dst, const OneMorphism& f);

// All 1-morphisms src -> dst (brute force over t and eta tables).
std::vector<OneMorphism> one_morphisms_between(const FiniteGroup& q, const TwoGroup& gg,
                                               const WeakRepObject& src, const WeakRepObject& dst);

OneMorphism identity_morphism(const FiniteGroup& q, const TwoGroup& gg);

// f2 after f1, where f1: x1 -> x2 and f2: x2 -> x3. Result re-verified.
OneMorphism compose(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x1,
                    const WeakRepObject& x2, const WeakRepObject& x3, const OneMorphism& f2,
                    const OneMorphism& f1);

// The 2-cell connecting ((r,.) o (s,.)) o (t,.) to (r,.) o ((s,.) o (t,.)).
TwoMorphism associator_cell(const TwoGroup& gg, Elt r, Elt s, Elt t);

// Inverse 1-morphism: compose(f, invert(f)) is the identity on dst.
OneMorphism invert(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& src,
                   const WeakRepObject& dst, const OneMorphism& f);

struct Lift {
    WeakRepObject source;  // (t^-1 rho t, gamma')
    OneMorphism morphism;  // (t, eta): source -> target
};

// Cartesian lift of conjugation by t through the given target object.
Lift lift(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& target, Elt t);

// Cleavage on objects: (rho^g, gamma^g) with rho^g = g^-1 rho g.
WeakRepObject cleavage_object(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x,
                              Elt g);
// The canonical morphism m(g, rho): (rho^g, gamma^g) -> (rho, gamma).
OneMorphism cleavage_m(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x, Elt g);

struct CleavageMorphism {
    WeakRepObject src_g, dst_g;  // images of src/dst under the cleavage functor
    OneMorphism f_g;             // (t^g, eta^g), with t^g = g^-1 t g
};

// Cleavage on 1-morphisms: m(g, rho_2)^-1 o ((t, eta) o m(g, rho_1)).
CleavageMorphism cleavage_morphism(const FiniteGroup& q, const TwoGroup& gg,
                                   const WeakRepObject& src, const WeakRepObject& dst,
                                   const OneMorphism& f, Elt g);

struct CompositorObject {
    WeakRepObject src;  // (rho^h)^g object
    WeakRepObject dst;  // rho^{hg} object
    OneMorphism mor;    // F(g,h)_x = m(hg,rho)^-1 o (m(h,rho) o m(g,rho^h))
};

// The compositor 1-morphism F(g,h)_x.
CompositorObject compositor_object(const FiniteGroup& q, const TwoGroup& gg,
                                   const WeakRepObject& x, Elt g, Elt h);

// F(g)(s,t) = a(g^-1,sg,g^-1 t g) a(s,g,g^-1 t g) / (a(g,g^-1,tg) a(s,t,g))
int64_t cleavage_compositor_2cell_exp(const TwoGroup& gg, Elt g, Elt s, Elt t);
// F(g,h)_(t,.) = a(g^-1,h^-1,thg) a(hg,g^-1,h^-1)
//                / (a(h^-1,th,g) a(h,g,g^-1) a(t,h,g))
int64_t compositor_naturality_2cell_exp(const TwoGroup& gg, Elt g, Elt h, Elt t);
// u = a(g,g^-1,g) a(kh,(kh)^-1,kh) / (a(k,h,g) a((hg)^-1,hg,(hg)^-1))
int64_t associativity_modification_exp(const TwoGroup& gg, Elt g, Elt h, Elt k);

}  // namespace flat2g
