#include "flat2g/two_group.hpp"

namespace flat2g {

TwoGroup::TwoGroup(FiniteGroup g, int64_t modulus, ThreeCocycle alpha)
    : g_(std::make_shared<FiniteGroup>(std::move(g))), n_(modulus), alpha_(std::move(alpha)) {
    if (alpha_.modulus() != n_)
        throw spec_error("two-group: cocycle modulus " + std::to_string(alpha_.modulus()) +
                         " does not match ambient " + std::to_string(n_));
    // ThreeCocycle construction already validated normalization and the
    // pentagon (= cocycle identity); re-assert against this group to catch
    // a cocycle built over a different table.
    if (auto w = cocycle_witness(*g_, alpha_.cochain()))
        throw spec_error("two-group: pentagon fails");
}

TwoGroup make_two_group(FiniteGroup g, int64_t modulus, ThreeCocycle alpha) {
    return TwoGroup(std::move(g), modulus, std::move(alpha));
}

CircleElement coherence_phi(const TwoGroup& gg, Elt g, Elt h) {
    Elt hg = gg.mul(h, g);
    int64_t e = gg.aexp(g, h, gg.inv(hg)) - gg.aexp(h, gg.inv(h), gg.inv(g));
    return CircleElement::make(e, gg.modulus());
}

CircleElement coherence_phi_tilde(const TwoGroup& gg, Elt g) {
    return gg.aval(gg.inv(g), g, gg.inv(g));
}

namespace {

bool rho_is_hom(const TwoGroup& src, const TwoGroup& dst, const std::vector<Elt>& rho) {
    if (static_cast<int>(rho.size()) != src.order()) return false;
    for (Elt a = 0; a < src.order(); ++a)
        for (Elt b = 0; b < src.order(); ++b)
            if (dst.mul(rho[a], rho[b]) != rho[src.mul(a, b)]) return false;
    return true;
}

}  // namespace

bool check_one_hom(const TwoGroup& src, const TwoGroup& dst, const TwoGroupHom& hom) {
    int n = src.order();
    int64_t np = dst.modulus();
    if (!rho_is_hom(src, dst, hom.rho)) return false;
    // f is a homomorphism mu_N -> mu_N' iff f(1/N)^N = 1
    if (hom.f_gen.modulus() != np) return false;
    if (!hom.f_gen.pow(src.modulus()).is_identity()) return false;
    if (static_cast<int>(hom.gamma.size()) != n * n) return false;
    auto gam = [&](Elt a, Elt b) { return hom.gamma[a * n + b]; };
    auto f_of = [&](int64_t exp_in_src) {  // f(e^{2 pi i exp/N})
        return mod_floor(exp_in_src * hom.f_gen.numerator(), np);
    };
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h)
            for (Elt k = 0; k < n; ++k) {
                int64_t lhs = f_of(src.aexp(g, h, k)) + gam(src.mul(g, h), k) + gam(g, h);
                int64_t rhs = gam(g, src.mul(h, k)) + gam(h, k) +
                              dst.aexp(hom.rho[g], hom.rho[h], hom.rho[k]);
                if (mod_floor(lhs - rhs, np) != 0) return false;
            }
    return true;
}

bool check_two_hom(const TwoGroup& src, const TwoGroup& dst, const TwoGroupHom& hom1,
                   const TwoGroupHom& hom2, const TwoGroupTwoHom& two) {
    int n = src.order();
    int64_t np = dst.modulus();
    if (hom1.rho != hom2.rho) return false;
    if (hom1.f_gen != hom2.f_gen) return false;
    if (static_cast<int>(two.eta.size()) != n) return false;
    auto g1 = [&](Elt a, Elt b) { return hom1.gamma[a * n + b]; };
    auto g2 = [&](Elt a, Elt b) { return hom2.gamma[a * n + b]; };
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h) {
            int64_t lhs = two.eta[src.mul(g, h)] + g1(g, h);
            int64_t rhs = g2(g, h) + two.eta[g] + two.eta[h];
            if (mod_floor(lhs - rhs, np) != 0) return false;
        }
    return true;
}

}  // namespace flat2g
