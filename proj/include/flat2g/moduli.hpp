#pragma once

// Enumeration of Bun_G(Sigma_g) as 2g-tuples with the product-of-commutators
// relation, conjugation orbits and centralizers, the transport factor along
// bundle morphisms, Freed-Quinn characters, the (rho, sigma) classification
// of flat 2-group bundles, and Chern-Simons section dimensions (computed two
// independent ways).

#include <optional>

#include "flat2g/surface.hpp"
#include "flat2g/two_group.hpp"

namespace flat2g {

// A flat G-bundle on Sigma_g: tuple (g_1,h_1,...,g_g,h_g), prod [g_i,h_i] = 1.
struct GBundle {
    int genus;
    std::vector<Elt> tuple;
};

GBundle make_g_bundle(const FiniteGroup& g, int genus, std::vector<Elt> tuple);

struct OrbitInfo {
    std::vector<Elt> rep;       // lexicographically least tuple in the orbit
    int64_t orbit_size;
    std::vector<Elt> aut;       // centralizer of the representative tuple
};

struct BundleEnumeration {
    int64_t total_tuples;
    std::vector<OrbitInfo> orbits;
};

BundleEnumeration enumerate_g_bundles(const FiniteGroup& g, int genus,
                                      int64_t budget = 100'000'000, unsigned workers = 1);

// The A-value by which sigma changes along the 1-morphism with G-component t
// from (t^-1 rho t, .) to (rho, .). t need not centralize the tuple.
CircleElement transport(const TwoGroup& gg, int genus, const std::vector<Elt>& rho, Elt t);

// Same value computed through the shuffle 3-cycle pairing <rho_t^* alpha,
// [Sigma x S^1]> with rho_t(a, n) = rho(a) t^n. Requires t in Aut(rho).
CircleElement transport_via_pairing(const TwoGroup& gg, int genus, const std::vector<Elt>& rho,
                                    Elt t);

// transport computed against a caller-supplied 2-cycle (for homologous
// replacement checks).
CircleElement transport_over_cycle(const TwoGroup& gg, int genus, const std::vector<Elt>& rho,
                                   Elt t, const Chain2& cycle);

struct FQCharacter {
    std::vector<Elt> rep;
    std::vector<std::pair<Elt, CircleElement>> values;  // over Aut(rep)

    bool trivial() const;
    int64_t image_order(int64_t modulus) const;
    std::optional<CircleElement> at(Elt t) const;
};

// t |-> transport(rho, t) over Aut(rho); multiplicativity is verified and a
// failure raises invariant_error (it would signal an implementation bug).
FQCharacter fq_character(const TwoGroup& gg, int genus, const OrbitInfo& orbit);

struct FlatClass {
    std::vector<Elt> rep;   // orbit representative tuple
    CircleElement sigma;
};

struct FlatClassification {
    std::vector<FlatClass> classes;
    int64_t total;
};

// Isomorphism classes of flat 2-group bundles: per orbit [rho], sigma in mu_N
// modulo the image of the Freed-Quinn character.
FlatClassification classify_flat_2bundles(const TwoGroup& gg, int genus,
                                          const BundleEnumeration& bundles);

// dim CS(G, alpha)(Sigma_g) = #{orbits with trivial character}.
int64_t cs_dimension(const TwoGroup& gg, int genus, const BundleEnumeration& bundles);

// Independent route: brute-force section construction on the action groupoid
// (BFS over each orbit with transport factors on every edge; an orbit
// contributes iff no propagation conflict appears).
int64_t cs_dimension_by_sections(const TwoGroup& gg, int genus, const BundleEnumeration& bundles);

// Verifies the torus transformation-law display against transport for one
// commuting pair and one t. Returns true when they agree.
bool elliptic_transform_check(const TwoGroup& gg, Elt g, Elt h, Elt t);

}  // namespace flat2g
