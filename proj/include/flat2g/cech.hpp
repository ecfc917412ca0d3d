#pragma once

// Combinatorial Cech data for flat 2-group bundles on good-cover nerves:
// objects (rho, gamma), 1-morphisms (t, eta), 2-morphisms omega subject to
// the displayed cocycle equations; 2-gerbes lambda_{P,alpha} and their
// trivializations; the gerbe torsor action; and pi_0 classification by
// spanning-tree gauge fixing plus exact linear algebra over Z_N.
//
// Data lives on ordered tuples whose support is a nerve face, repeated
// entries included (the fibered-power model): the degenerate equations are
// what force rho(i,i) = 1 and rho(j,i) = rho(i,j)^-1.

#include <map>
#include <optional>
#include <set>
#include <string>

#include "flat2g/two_group.hpp"
#include "flat2g/znlinalg.hpp"

namespace flat2g {

class Nerve {
  public:
    // faces: vertex subsets (sizes 2..4); downward closure is completed.
    Nerve(int num_vertices, std::vector<std::vector<int>> faces, bool good_cover,
          std::vector<std::string> vertex_names = {});

    int num_vertices() const { return nv_; }
    bool good_cover() const { return good_cover_; }
    const std::vector<std::string>& vertex_names() const { return names_; }
    bool has_face(std::vector<int> sorted_unique) const;

    // unordered faces of a given size
    std::vector<std::vector<int>> faces_of_size(int k) const;
    // ordered (k+1)-tuples with support a face, repeats included
    const std::vector<std::vector<int>>& tuples(int k) const;
    int tuple_index(const std::vector<int>& t) const;

    std::vector<std::pair<int, int>> edges() const;  // i < j
    std::vector<std::pair<int, int>> spanning_tree() const;
    bool connected() const;

  private:
    void build_tuples() const;

    int nv_;
    bool good_cover_;
    std::set<std::vector<int>> faces_;
    std::vector<std::string> names_;
    mutable std::vector<std::vector<std::vector<int>>> tuples_;  // per k = 0..4
    mutable std::map<std::vector<int>, int> tuple_index_;
};

Nerve builtin_nerve(const std::string& name);  // "circle3", "sphere-tetra", "torus7"
Nerve load_nerve(const std::string& path);
Nerve barycentric_subdivision(const Nerve& n, std::vector<int>* vertex_image = nullptr);

// rho over ordered 1-simplices (pairs), gamma over ordered 2-simplices
// (triples), dense in nerve tuple order.
struct CechGData {
    std::vector<Elt> rho;
    std::vector<int64_t> gamma;
};

struct CechOneMorphism {
    std::vector<Elt> t;          // per vertex
    std::vector<int64_t> eta;    // per ordered pair
};

struct CechTwoMorphism {
    std::vector<int64_t> omega;  // per vertex
};

struct Violation {
    std::vector<int> simplex;
    std::string equation;
};

// Exhaustive check of the displayed equations; first violation reported.
std::optional<Violation> validate_object(const Nerve& n, const TwoGroup& gg,
                                         const CechGData& data);
std::optional<Violation> validate_one_morphism(const Nerve& n, const TwoGroup& gg,
                                               const CechGData& src, const CechGData& dst,
                                               const CechOneMorphism& m);
std::optional<Violation> validate_two_morphism(const Nerve& n, const TwoGroup& gg,
                                               const CechOneMorphism& m1,
                                               const CechOneMorphism& m2,
                                               const CechTwoMorphism& w);

// lambda_{P,alpha}(y1..y4) = alpha(rho(y1,y2), rho(y2,y3), rho(y3,y4)) over
// ordered 3-simplices; verified closed on 4-simplex tuples.
struct TwoGerbe {
    std::vector<int64_t> lambda;
};
TwoGerbe two_gerbe_of(const Nerve& n, const TwoGroup& gg, const std::vector<Elt>& rho);

// Generic Cech coboundary of a 2-cochain (independent code path from the
// object validator): (d gamma)(y1..y4) = g(234) - g(134) + g(124) - g(123).
std::vector<int64_t> cech_coboundary2(const Nerve& n, int64_t modulus,
                                      const std::vector<int64_t>& gamma);

// Waldorf-style validator: rho a G-cocycle and gamma a trivialization of
// lambda_{rho,alpha}, i.e. d gamma = 1/lambda.
bool is_string_structure(const Nerve& n, const TwoGroup& gg, const CechGData& data);

// gamma |-> gamma * beta for a closed gerbe 2-cocycle beta.
CechGData gerbe_twist(const Nerve& n, const TwoGroup& gg, const CechGData& data,
                      const std::vector<int64_t>& beta);

struct CechClass {
    CechGData rep;
};

struct CechClassification {
    int64_t count;
    std::vector<CechClass> classes;
    int64_t g_orbit_count;  // underlying G-bundle classes
};

CechClassification classify(const Nerve& n, const TwoGroup& gg, int64_t budget = 100'000'000,
                            unsigned workers = 1);

// 1-morphism existence between two valid objects (pi_0 equivalence).
bool equivalent(const Nerve& n, const TwoGroup& gg, const CechGData& a, const CechGData& b);

// Ordered product of rho along a closed vertex path.
Elt holonomy(const Nerve& n, const FiniteGroup& g, const CechGData& data,
             const std::vector<int>& loop);

// Pullback of data along a simplicial map (vertex image table) r: n' -> n.
CechGData pullback_data(const Nerve& refined, const std::vector<int>& vertex_image,
                        const Nerve& base, const TwoGroup& gg, const CechGData& data);

// Build full tables from values given on ordered tuples. Distinct-entry rho
// values are required up to orientation (a missing reversed pair is filled
// with the inverse, diagonal entries default to the identity); unspecified
// gamma entries must be repeated-index ones and are solved for, since the
// equations are linear in them. Throws spec_error when a required value is
// missing; returns nullopt when the degenerate completion is infeasible.
std::optional<CechGData> complete_data(const Nerve& n, const TwoGroup& gg,
                                       const std::map<std::vector<int>, Elt>& rho_in,
                                       const std::map<std::vector<int>, int64_t>& gamma_in);

}  // namespace flat2g
