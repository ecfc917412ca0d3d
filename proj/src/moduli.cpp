#include "flat2g/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "flat2g/parallel.hpp"

namespace flat2g {

GBundle make_g_bundle(const FiniteGroup& g, int genus, std::vector<Elt> tuple) {
    if (genus < 1) throw spec_error("g-bundle: genus must be >= 1");
    if (static_cast<int>(tuple.size()) != 2 * genus)
        throw spec_error("g-bundle: tuple must have 2*genus entries");
    Elt rel = 0;
    for (int i = 0; i < genus; ++i)
        rel = g.mul(rel, g.commutator(tuple[2 * i], tuple[2 * i + 1]));
    if (rel != 0) throw spec_error("g-bundle: commutator relation fails");
    return GBundle{genus, std::move(tuple)};
}

namespace {

std::vector<Elt> conj_tuple(const FiniteGroup& g, const std::vector<Elt>& t, Elt c) {
    std::vector<Elt> out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = g.conj(c, t[i]);
    return out;
}

// all 2k-tuples with product of commutators equal to a prescribed value,
// grouped by that value
std::map<Elt, std::vector<std::vector<Elt>>> tuples_by_commutator(const FiniteGroup& g, int k) {
    std::map<Elt, std::vector<std::vector<Elt>>> cur;
    cur[0] = {{}};
    for (int handle = 0; handle < k; ++handle) {
        std::map<Elt, std::vector<std::vector<Elt>>> next;
        for (Elt a = 0; a < g.order(); ++a)
            for (Elt b = 0; b < g.order(); ++b) {
                Elt c = g.commutator(a, b);
                for (const auto& [val, list] : cur) {
                    Elt nv = g.mul(val, c);
                    for (const auto& t : list) {
                        auto nt = t;
                        nt.push_back(a);
                        nt.push_back(b);
                        next[nv].push_back(std::move(nt));
                    }
                }
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

BundleEnumeration enumerate_g_bundles(const FiniteGroup& g, int genus, int64_t budget,
                                      unsigned workers) {
    if (genus < 1) throw spec_error("enumerate_g_bundles: genus must be >= 1");
    double space = std::pow(static_cast<double>(g.order()), 2.0 * genus);
    if (space > static_cast<double>(budget))
        throw budget_error("enumerate_g_bundles: |G|^(2g) exceeds budget");

    std::vector<std::vector<Elt>> tuples;
    if (genus == 1) {
        // commuting pairs; partition the first coordinate across workers
        auto chunk = [&](size_t begin, size_t end) {
            std::vector<std::vector<Elt>> out;
            for (size_t a = begin; a < end; ++a)
                for (Elt b = 0; b < g.order(); ++b)
                    if (g.commute(static_cast<Elt>(a), b))
                        out.push_back({static_cast<Elt>(a), b});
            return out;
        };
        tuples = parallel_chunks(
            static_cast<size_t>(g.order()), workers, std::vector<std::vector<Elt>>{}, chunk,
            [](auto acc, auto part) {
                acc.insert(acc.end(), part.begin(), part.end());
                return acc;
            });
    } else {
        auto by_comm = tuples_by_commutator(g, genus);
        auto it = by_comm.find(0);
        if (it != by_comm.end()) tuples = std::move(it->second);
    }

    BundleEnumeration out;
    out.total_tuples = static_cast<int64_t>(tuples.size());
    std::set<std::vector<Elt>> seen;
    for (const auto& t : tuples) {
        if (seen.count(t)) continue;
        std::set<std::vector<Elt>> orbit;
        for (Elt c = 0; c < g.order(); ++c) orbit.insert(conj_tuple(g, t, c));
        OrbitInfo info;
        info.rep = *orbit.begin();  // lexicographically least
        info.orbit_size = static_cast<int64_t>(orbit.size());
        info.aut = g.centralizer(info.rep);
        out.orbits.push_back(std::move(info));
        seen.insert(orbit.begin(), orbit.end());
    }
    std::sort(out.orbits.begin(), out.orbits.end(),
              [](const OrbitInfo& a, const OrbitInfo& b) { return a.rep < b.rep; });
    return out;
}

CircleElement transport_over_cycle(const TwoGroup& gg, int genus, const std::vector<Elt>& rho,
                                   Elt t, const Chain2& cyc) {
    const FiniteGroup& g = gg.group();
    GBundle b = make_g_bundle(g, genus, rho);  // validates the relator
    Elt ti = g.inv(t);
    EvalMap ev_dst(g, b.tuple);
    std::vector<Elt> src_tuple(b.tuple.size());
    for (size_t i = 0; i < b.tuple.size(); ++i) src_tuple[i] = g.conj(ti, b.tuple[i]);
    EvalMap ev_src(g, src_tuple);
    int64_t acc = 0;
    for (const auto& term : cyc.terms) {
        Elt u2 = ev_dst.eval(term.slots[0]), v2 = ev_dst.eval(term.slots[1]);
        Elt u1 = ev_src.eval(term.slots[0]), v1 = ev_src.eval(term.slots[1]);
        acc += term.coeff *
               (gg.aexp(t, u1, v1) + gg.aexp(u2, v2, t) - gg.aexp(u2, t, v1));
    }
    return CircleElement::make(acc, gg.modulus());
}

CircleElement transport(const TwoGroup& gg, int genus, const std::vector<Elt>& rho, Elt t) {
    return transport_over_cycle(gg, genus, rho, t, fundamental_cycle(genus));
}

CircleElement transport_via_pairing(const TwoGroup& gg, int genus, const std::vector<Elt>& rho,
                                    Elt t) {
    const FiniteGroup& g = gg.group();
    GBundle b = make_g_bundle(g, genus, rho);
    SurfaceGroup sg(genus);
    EvalMap ev(g, b.tuple, t);  // throws unless t centralizes the holonomy
    Chain3 cyc = shuffle_with_circle(sg, fundamental_cycle(genus));
    auto f = [&gg](Elt x, Elt y, Elt z) { return gg.aexp(x, y, z); };
    return pair3(f, gg.modulus(), ev, cyc);
}

bool FQCharacter::trivial() const {
    return std::all_of(values.begin(), values.end(),
                       [](const auto& kv) { return kv.second.is_identity(); });
}

int64_t FQCharacter::image_order(int64_t modulus) const {
    std::set<int64_t> image;
    for (const auto& [t, v] : values) image.insert(v.numerator());
    // image is a subgroup of Z_N; its order is N / gcd-span
    int64_t gcd_all = modulus;
    for (int64_t x : image) gcd_all = std::gcd(gcd_all, x);
    return modulus / gcd_all;
}

std::optional<CircleElement> FQCharacter::at(Elt t) const {
    for (const auto& [s, v] : values)
        if (s == t) return v;
    return std::nullopt;
}

FQCharacter fq_character(const TwoGroup& gg, int genus, const OrbitInfo& orbit) {
    FQCharacter chi;
    chi.rep = orbit.rep;
    for (Elt t : orbit.aut) chi.values.emplace_back(t, transport(gg, genus, orbit.rep, t));
    // verify multiplicativity over Aut(rho)
    const FiniteGroup& g = gg.group();
    auto val = [&](Elt t) -> CircleElement {
        auto v = chi.at(t);
        if (!v) throw invariant_error("fq_character: value missing on Aut element");
        return *v;
    };
    for (Elt s : orbit.aut)
        for (Elt t : orbit.aut)
            if (val(g.mul(s, t)) != val(s) * val(t))
                throw invariant_error("fq_character: not a homomorphism on Aut(rho)");
    return chi;
}

FlatClassification classify_flat_2bundles(const TwoGroup& gg, int genus,
                                          const BundleEnumeration& bundles) {
    int64_t n = gg.modulus();
    FlatClassification out;
    out.total = 0;
    for (const auto& orbit : bundles.orbits) {
        FQCharacter chi = fq_character(gg, genus, orbit);
        int64_t im = chi.image_order(n);
        // (rho, sigma) ~ (rho, sigma * chi(t)); cosets of the image in mu_N
        int64_t step = n / im;  // image = <im-th roots> = multiples of n/im
        for (int64_t rep = 0; rep < step; ++rep) {
            out.classes.push_back(FlatClass{orbit.rep, CircleElement::make(rep, n)});
            ++out.total;
        }
    }
    return out;
}

int64_t cs_dimension(const TwoGroup& gg, int genus, const BundleEnumeration& bundles) {
    int64_t dim = 0;
    for (const auto& orbit : bundles.orbits)
        if (fq_character(gg, genus, orbit).trivial()) ++dim;
    return dim;
}

int64_t cs_dimension_by_sections(const TwoGroup& gg, int genus,
                                 const BundleEnumeration& bundles) {
    const FiniteGroup& g = gg.group();
    int64_t n = gg.modulus();
    int64_t dim = 0;
    for (const auto& orbit : bundles.orbits) {
        // propagate a section value over the orbit; conflict kills the orbit
        std::map<std::vector<Elt>, int64_t> val;
        std::queue<std::vector<Elt>> queue;
        val[orbit.rep] = 0;
        queue.push(orbit.rep);
        bool ok = true;
        while (!queue.empty() && ok) {
            auto cur = queue.front();
            queue.pop();
            int64_t sc = val[cur];
            for (Elt t = 0; t < g.order() && ok; ++t) {
                // morphism t: (t^-1 cur t) -> cur, sigma_cur = sigma_src + tr
                auto src = conj_tuple(g, cur, g.inv(t));
                int64_t tr = transport(gg, genus, cur, t).numerator();
                int64_t want = mod_floor(sc - tr, n);
                auto it = val.find(src);
                if (it == val.end()) {
                    val[src] = want;
                    queue.push(src);
                } else if (it->second != want) {
                    ok = false;
                }
            }
        }
        if (ok) ++dim;
    }
    return dim;
}

bool elliptic_transform_check(const TwoGroup& gg, Elt gh_g, Elt gh_h, Elt t) {
    const FiniteGroup& g = gg.group();
    if (!g.commute(gh_g, gh_h)) throw spec_error("elliptic check: pair must commute");
    Elt ti = g.inv(t);
    Elt g1a = g.conj(ti, gh_g), g1b = g.conj(ti, gh_h);  // source images
    Elt g2a = gh_g, g2b = gh_h;                          // target images
    int64_t display = gg.aexp(t, g1b, g1a) + gg.aexp(g2a, t, g1b) + gg.aexp(g2b, g2a, t) -
                      gg.aexp(t, g1a, g1b) - gg.aexp(g2b, t, g1a) - gg.aexp(g2a, g2b, t);
    CircleElement lhs = transport(gg, 1, {gh_g, gh_h}, t);
    return lhs == CircleElement::make(display, gg.modulus());
}

}  // namespace flat2g
