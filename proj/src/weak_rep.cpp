#include "flat2g/weak_rep.hpp"

#include <string>

namespace flat2g {

namespace {

int64_t gam(const WeakRepObject& x, int q, Elt a, Elt b) { return x.gamma[a * q + b]; }

std::string mism(const char* what) { return std::string("weak_rep: ") + what; }

}  // namespace

bool check_object(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x) {
    int nq = q.order();
    int64_t n = gg.modulus();
    if (static_cast<int>(x.rho.size()) != nq) return false;
    if (static_cast<int>(x.gamma.size()) != nq * nq) return false;
    for (Elt a = 0; a < nq; ++a)
        if (x.rho[a] < 0 || x.rho[a] >= gg.order()) return false;
    if (x.rho[0] != 0) return false;
    for (Elt a = 0; a < nq; ++a)
        for (Elt b = 0; b < nq; ++b)
            if (gg.mul(x.rho[a], x.rho[b]) != x.rho[q.mul(a, b)]) return false;
    // normalized
    for (Elt a = 0; a < nq; ++a)
        if (gam(x, nq, 0, a) != 0 || gam(x, nq, a, 0) != 0) return false;
    // d gamma = (rho^* alpha)^{-1}
    for (Elt a = 0; a < nq; ++a)
        for (Elt b = 0; b < nq; ++b)
            for (Elt c = 0; c < nq; ++c) {
                int64_t d = gam(x, nq, b, c) + gam(x, nq, a, q.mul(b, c)) -
                            gam(x, nq, q.mul(a, b), c) - gam(x, nq, a, b);
                if (mod_floor(d + gg.aexp(x.rho[a], x.rho[b], x.rho[c]), n) != 0) return false;
            }
    return true;
}

std::vector<WeakRepObject> enumerate_objects(const FiniteGroup& q, const TwoGroup& gg,
                                             int64_t budget) {
    int nq = q.order();
    int64_t n = gg.modulus();
    // free gamma entries: (a,b) with a,b != identity
    int free_count = (nq - 1) * (nq - 1);
    double space = 1;
    for (int i = 0; i < free_count; ++i) space *= static_cast<double>(n);
    auto homs = q.homs_to(gg.group());
    if (space * static_cast<double>(homs.size()) > static_cast<double>(budget))
        throw budget_error("enumerate_objects: search space exceeds budget");

    std::vector<WeakRepObject> out;
    std::vector<std::pair<Elt, Elt>> free_pos;
    for (Elt a = 1; a < nq; ++a)
        for (Elt b = 1; b < nq; ++b) free_pos.emplace_back(a, b);
    for (const auto& rho : homs) {
        WeakRepObject x;
        x.rho = rho;
        x.gamma.assign(nq * nq, 0);
        size_t total = static_cast<size_t>(space);
        for (size_t code = 0; code < total; ++code) {
            size_t v = code;
            for (const auto& [a, b] : free_pos) {
                x.gamma[a * nq + b] = static_cast<int64_t>(v % n);
                v /= n;
            }
            if (check_object(q, gg, x)) out.push_back(x);
        }
    }
    return out;
}

bool check_one_morphism(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& src,
                        const WeakRepObject& dst, const OneMorphism& f) {
    int nq = q.order();
    int64_t n = gg.modulus();
    if (static_cast<int>(f.eta.size()) != nq) return false;
    for (Elt a = 0; a < nq; ++a)
        if (gg.conj_by(f.t, src.rho[a]) != dst.rho[a]) return false;
    if (f.eta[0] != 0) return false;
    for (Elt a = 0; a < nq; ++a)
        for (Elt b = 0; b < nq; ++b) {
            int64_t lhs = f.eta[a] + f.eta[b] - f.eta[q.mul(a, b)];
            int64_t rhs = gam(src, nq, a, b) - gam(dst, nq, a, b) +
                          gg.aexp(f.t, src.rho[a], src.rho[b]) +
                          gg.aexp(dst.rho[a], dst.rho[b], f.t) -
                          gg.aexp(dst.rho[a], f.t, src.rho[b]);
            if (mod_floor(lhs - rhs, n) != 0) return false;
        }
    return true;
}

std::vector<OneMorphism> one_morphisms_between(const FiniteGroup& q, const TwoGroup& gg,
                                               const WeakRepObject& src,
                                               const WeakRepObject& dst) {
    int nq = q.order();
    int64_t n = gg.modulus();
    std::vector<OneMorphism> out;
    for (Elt t = 0; t < gg.order(); ++t) {
        bool conj_ok = true;
        for (Elt a = 0; a < nq && conj_ok; ++a)
            conj_ok = gg.conj_by(t, src.rho[a]) == dst.rho[a];
        if (!conj_ok) continue;
        // brute force over normalized eta tables
        size_t total = 1;
        for (int i = 1; i < nq; ++i) total *= static_cast<size_t>(n);
        for (size_t code = 0; code < total; ++code) {
            OneMorphism f;
            f.t = t;
            f.eta.assign(nq, 0);
            size_t v = code;
            for (int a = 1; a < nq; ++a) {
                f.eta[a] = static_cast<int64_t>(v % n);
                v /= n;
            }
            if (check_one_morphism(q, gg, src, dst, f)) out.push_back(std::move(f));
        }
    }
    return out;
}

OneMorphism identity_morphism(const FiniteGroup& q, const TwoGroup&) {
    OneMorphism f;
    f.t = 0;
    f.eta.assign(q.order(), 0);
    return f;
}

OneMorphism compose(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x1,
                    const WeakRepObject& x2, const WeakRepObject& x3, const OneMorphism& f2,
                    const OneMorphism& f1) {
    int nq = q.order();
    int64_t n = gg.modulus();
    if (!check_one_morphism(q, gg, x1, x2, f1) || !check_one_morphism(q, gg, x2, x3, f2))
        throw spec_error(mism("compose: endpoint mismatch"));
    Elt s = f2.t, t = f1.t;
    OneMorphism out;
    out.t = gg.mul(s, t);
    out.eta.assign(nq, 0);
    for (Elt a = 0; a < nq; ++a) {
        out.eta[a] = mod_floor(f2.eta[a] + f1.eta[a] + gg.aexp(s, t, x1.rho[a]) +
                                   gg.aexp(x3.rho[a], s, t) - gg.aexp(s, x2.rho[a], t),
                               n);
    }
    if (!check_one_morphism(q, gg, x1, x3, out)) throw invariant_error(mism("compose: invalid result"));
    return out;
}

TwoMorphism associator_cell(const TwoGroup& gg, Elt r, Elt s, Elt t) {
    return TwoMorphism{gg.aval(r, s, t)};
}

OneMorphism invert(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& src,
                   const WeakRepObject& dst, const OneMorphism& f) {
    int nq = q.order();
    int64_t n = gg.modulus();
    Elt t = f.t, ti = gg.inv(t);
    OneMorphism out;
    out.t = ti;
    out.eta.assign(nq, 0);
    for (Elt a = 0; a < nq; ++a) {
        out.eta[a] = mod_floor(-f.eta[a] + gg.aexp(t, src.rho[a], ti) -
                                   gg.aexp(dst.rho[a], t, ti) - gg.aexp(t, ti, dst.rho[a]),
                               n);
    }
    if (!check_one_morphism(q, gg, dst, src, out)) throw invariant_error(mism("invert: invalid result"));
    return out;
}

Lift lift(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& target, Elt t) {
    int nq = q.order();
    int64_t n = gg.modulus();
    Elt ti = gg.inv(t);
    Lift out;
    out.source.rho.resize(nq);
    for (Elt a = 0; a < nq; ++a) out.source.rho[a] = gg.conj_by(ti, target.rho[a]);
    // the raw formulas carry a constant offset alpha(t,t^-1,t); shift it out
    // so gamma' and eta stay normalized
    int64_t k = gg.aexp(t, ti, t);
    out.source.gamma.assign(nq * nq, 0);
    for (Elt a = 0; a < nq; ++a)
        for (Elt b = 0; b < nq; ++b) {
            Elt ra = target.rho[a], rb = target.rho[b];
            Elt rpb = out.source.rho[b];
            int64_t v = gam(target, nq, a, b) + gg.aexp(ti, gg.mul(ra, t), rpb) +
                        gg.aexp(ra, t, rpb) - gg.aexp(t, ti, gg.mul(rb, t)) - gg.aexp(ra, rb, t) +
                        k;
            out.source.gamma[a * nq + b] = mod_floor(v, n);
        }
    out.morphism.t = t;
    out.morphism.eta.assign(nq, 0);
    for (Elt a = 0; a < nq; ++a)
        out.morphism.eta[a] = mod_floor(-gg.aexp(t, ti, gg.mul(target.rho[a], t)) + k, n);
    if (!check_object(q, gg, out.source)) throw invariant_error(mism("lift: invalid source object"));
    if (!check_one_morphism(q, gg, out.source, target, out.morphism))
        throw invariant_error(mism("lift: invalid lifted morphism"));
    return out;
}

WeakRepObject cleavage_object(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x,
                              Elt g) {
    return lift(q, gg, x, g).source;
}

OneMorphism cleavage_m(const FiniteGroup& q, const TwoGroup& gg, const WeakRepObject& x, Elt g) {
    return lift(q, gg, x, g).morphism;
}

CleavageMorphism cleavage_morphism(const FiniteGroup& q, const TwoGroup& gg,
                                   const WeakRepObject& src, const WeakRepObject& dst,
                                   const OneMorphism& f, Elt g) {
    Lift l1 = lift(q, gg, src, g);
    Lift l2 = lift(q, gg, dst, g);
    OneMorphism m2_inv = invert(q, gg, l2.source, dst, l2.morphism);
    OneMorphism inner = compose(q, gg, l1.source, src, dst, f, l1.morphism);
    CleavageMorphism out;
    out.src_g = std::move(l1.source);
    out.dst_g = std::move(l2.source);
    out.f_g = compose(q, gg, out.src_g, dst, out.dst_g, m2_inv, inner);
    if (out.f_g.t != gg.conj_by(gg.inv(g), f.t))
        throw invariant_error(mism("cleavage_morphism: t^g != g^-1 t g"));
    return out;
}

CompositorObject compositor_object(const FiniteGroup& q, const TwoGroup& gg,
                                   const WeakRepObject& x, Elt g, Elt h) {
    Lift lh = lift(q, gg, x, h);          // m(h,rho): x^h -> x
    Lift lg = lift(q, gg, lh.source, g);  // m(g,rho^h): (x^h)^g -> x^h
    Lift lhg = lift(q, gg, x, gg.mul(h, g));
    OneMorphism inner = compose(q, gg, lg.source, lh.source, x, lh.morphism, lg.morphism);
    OneMorphism mi = invert(q, gg, lhg.source, x, lhg.morphism);
    CompositorObject out;
    out.src = std::move(lg.source);
    out.dst = std::move(lhg.source);
    out.mor = compose(q, gg, out.src, x, out.dst, mi, inner);
    return out;
}

int64_t cleavage_compositor_2cell_exp(const TwoGroup& gg, Elt g, Elt s, Elt t) {
    Elt gi = gg.inv(g);
    Elt tg = gg.mul(t, g), sg = gg.mul(s, g);
    Elt gtg = gg.mul(gi, tg);
    return mod_floor(gg.aexp(gi, sg, gtg) + gg.aexp(s, g, gtg) - gg.aexp(g, gi, tg) -
                         gg.aexp(s, t, g),
                     gg.modulus());
}

int64_t compositor_naturality_2cell_exp(const TwoGroup& gg, Elt g, Elt h, Elt t) {
    Elt gi = gg.inv(g), hi = gg.inv(h);
    Elt thg = gg.mul(gg.mul(t, h), g);
    Elt th = gg.mul(t, h);
    Elt hg = gg.mul(h, g);
    return mod_floor(gg.aexp(gi, hi, thg) + gg.aexp(hg, gi, hi) - gg.aexp(hi, th, g) -
                         gg.aexp(h, g, gi) - gg.aexp(t, h, g),
                     gg.modulus());
}

int64_t associativity_modification_exp(const TwoGroup& gg, Elt g, Elt h, Elt k) {
    Elt gi = gg.inv(g);
    Elt kh = gg.mul(k, h), hg = gg.mul(h, g);
    Elt khi = gg.inv(kh), hgi = gg.inv(hg);
    return mod_floor(gg.aexp(g, gi, g) + gg.aexp(kh, khi, kh) - gg.aexp(k, h, g) -
                         gg.aexp(hgi, hg, hgi),
                     gg.modulus());
}

}  // namespace flat2g
