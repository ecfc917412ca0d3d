#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>

#include "flat2g/cech.hpp"
#include "flat2g/moduli.hpp"

using namespace flat2g;

namespace {

TwoGroup zg(const std::string& spec, const std::string& coc, int64_t n = 1) {
    FiniteGroup g = build_group(spec);
    auto cs = parse_cocycle(coc, g, n);
    return make_two_group(std::move(g), cs.modulus, std::move(cs.alpha));
}

CechGData trivial_data(const Nerve& n) {
    return CechGData{std::vector<Elt>(n.tuples(1).size(), 0),
                     std::vector<int64_t>(n.tuples(2).size(), 0)};
}

}  // namespace

TEST_CASE("nerve structure") {
    auto c3 = builtin_nerve("circle3");
    CHECK(c3.num_vertices() == 3);
    CHECK(c3.edges().size() == 3);
    CHECK(c3.faces_of_size(3).empty());

    auto st = builtin_nerve("sphere-tetra");
    CHECK(st.edges().size() == 6);
    CHECK(st.faces_of_size(3).size() == 4);
    CHECK(st.faces_of_size(4).empty());

    auto t7 = builtin_nerve("torus7");
    CHECK(t7.num_vertices() == 7);
    CHECK(t7.edges().size() == 21);
    CHECK(t7.faces_of_size(3).size() == 14);
    // ordered tuple tables, repeats included
    CHECK(t7.tuples(1).size() == 49);
    CHECK(t7.tuples(2).size() == 217);
    CHECK(t7.tuples(3).size() == 805);

    CHECK_THROWS_AS(builtin_nerve("klein"), spec_error);
}

TEST_CASE("validators on trivial and perturbed data") {
    auto gg = zg("Z2", "trivial", 2);
    for (const char* name : {"circle3", "sphere-tetra", "torus7"}) {
        auto n = builtin_nerve(name);
        CHECK_FALSE(validate_object(n, gg, trivial_data(n)).has_value());
    }

    // perturbing one gamma value on the tetrahedral nerve breaks the gamma
    // equation and the violated 3-simplex is reported
    auto st = builtin_nerve("sphere-tetra");
    auto data = trivial_data(st);
    data.gamma[st.tuple_index({0, 1, 2})] = 1;
    auto v = validate_object(st, gg, data);
    REQUIRE(v.has_value());
    CHECK(v->simplex.size() == 4);
    CHECK(v->equation == "1/d gamma = rho^* alpha");
}

TEST_CASE("circle nerve: rho around the loop with gamma-free validation") {
    auto gg = zg("S3", "trivial");
    auto c3 = builtin_nerve("circle3");
    // 3-arc circle: rho(0,1) = rho(1,2) = 1, rho(2,0) = g gives holonomy g
    std::map<std::vector<int>, Elt> rho;
    rho[{0, 1}] = 0;
    rho[{1, 2}] = 0;
    rho[{2, 0}] = 3;
    auto data = complete_data(c3, gg, rho, {});
    REQUIRE(data.has_value());
    CHECK_FALSE(validate_object(c3, gg, *data).has_value());
    CHECK(holonomy(c3, gg.group(), *data, {0, 1, 2, 0}) == 3);
    CHECK(holonomy(c3, gg.group(), *data, {0, 0}) == 0);
    CHECK_THROWS_AS(holonomy(c3, gg.group(), *data, {0, 1}), spec_error);
}

TEST_CASE("classification counts") {
    // conjugacy classes of holonomy
    CHECK(classify(builtin_nerve("circle3"), zg("S3", "trivial", 1)).count == 3);
    // flat gerbe classes H^2(S^2; mu_3)
    CHECK(classify(builtin_nerve("sphere-tetra"), zg("Z1", "trivial", 3)).count == 3);
    // torus: 4 G-classes x 2 gerbe classes
    auto cls = classify(builtin_nerve("torus7"), zg("Z2", "trivial", 2));
    CHECK(cls.count == 8);
    CHECK(cls.g_orbit_count == 4);
    // H^2(T^2; mu_N) through the trivial group
    CHECK(classify(builtin_nerve("torus7"), zg("Z1", "trivial", 2)).count == 2);
    CHECK(classify(builtin_nerve("torus7"), zg("Z1", "trivial", 3)).count == 3);
}

TEST_CASE("two-gerbe and trivializations") {
    auto gg = zg("Z2", "cyclic:2:1", 2);
    auto t7 = builtin_nerve("torus7");
    auto cls = classify(t7, gg);
    CHECK(cls.count == 8);
    for (const auto& c : cls.classes) {
        // Waldorf-style route agrees with the object validator on real data
        CHECK(is_string_structure(t7, gg, c.rep));
        auto gerbe = two_gerbe_of(t7, gg, c.rep.rho);
        auto d = cech_coboundary2(t7, gg.modulus(), c.rep.gamma);
        for (size_t i = 0; i < d.size(); ++i)
            CHECK(mod_floor(d[i] + gerbe.lambda[i], gg.modulus()) == 0);
    }
    // trivial rho or trivial alpha give the trivial 2-gerbe
    auto triv = zg("Z2", "trivial", 2);
    auto lam = two_gerbe_of(t7, triv, std::vector<Elt>(t7.tuples(1).size(), 0)).lambda;
    for (int64_t v : lam) CHECK(v == 0);
    // trivial rho with a nontrivial normalized alpha too
    auto lam2 = two_gerbe_of(t7, gg, std::vector<Elt>(t7.tuples(1).size(), 0)).lambda;
    for (int64_t v : lam2) CHECK(v == 0);
}

TEST_CASE("gerbe twisting acts on classes") {
    auto gg = zg("Z1", "trivial", 3);
    auto st = builtin_nerve("sphere-tetra");
    auto cls = classify(st, gg);
    REQUIRE(cls.count == 3);
    const auto& d0 = cls.classes[0].rep;
    const auto& d1 = cls.classes[1].rep;
    // beta = gamma_1 - gamma_0 is closed (both trivialize the same gerbe)
    std::vector<int64_t> beta(d0.gamma.size());
    for (size_t i = 0; i < beta.size(); ++i)
        beta[i] = mod_floor(d1.gamma[i] - d0.gamma[i], 3);
    auto twisted = gerbe_twist(st, gg, d0, beta);
    CHECK_FALSE(validate_object(st, gg, twisted).has_value());
    CHECK(equivalent(st, gg, twisted, d1));
    CHECK_FALSE(equivalent(st, gg, twisted, d0));  // class moved
    // identity and inverse twists
    auto zero = std::vector<int64_t>(beta.size(), 0);
    CHECK(gerbe_twist(st, gg, d0, zero).gamma == d0.gamma);
    std::vector<int64_t> binv(beta.size());
    for (size_t i = 0; i < beta.size(); ++i) binv[i] = mod_floor(-beta[i], 3);
    CHECK(gerbe_twist(st, gg, twisted, binv).gamma == d0.gamma);
    // non-closed beta rejected
    std::vector<int64_t> bad(beta.size(), 0);
    bad[st.tuple_index({0, 1, 2})] = 1;
    CHECK_THROWS_AS(gerbe_twist(st, gg, d0, bad), spec_error);
}

TEST_CASE("fibers over a fixed rho are free transitive mu_N-sets") {
    auto gg = zg("Z2", "trivial", 2);
    auto t7 = builtin_nerve("torus7");
    auto cls = classify(t7, gg);
    std::map<std::vector<Elt>, std::vector<const CechGData*>> by_rho;
    for (const auto& c : cls.classes) by_rho[c.rep.rho].push_back(&c.rep);
    CHECK(by_rho.size() == 4);
    for (const auto& [rho, fiber] : by_rho) {
        CHECK(fiber.size() == 2);  // = N
        // transitivity: the closed difference beta moves class 0 to class 1
        std::vector<int64_t> beta(fiber[0]->gamma.size());
        for (size_t i = 0; i < beta.size(); ++i)
            beta[i] = mod_floor(fiber[1]->gamma[i] - fiber[0]->gamma[i], 2);
        auto moved = gerbe_twist(t7, gg, *fiber[0], beta);
        CHECK(equivalent(t7, gg, moved, *fiber[1]));
        // freeness: the nontrivial twist never fixes a class
        CHECK_FALSE(equivalent(t7, gg, moved, *fiber[0]));
        // twisting by a coboundary stays in the class
        std::vector<int64_t> eta(t7.tuples(1).size(), 1);
        std::vector<int64_t> deta(t7.tuples(2).size());
        for (size_t i = 0; i < t7.tuples(2).size(); ++i) {
            const auto& t = t7.tuples(2)[i];
            deta[i] = mod_floor(eta[t7.tuple_index({t[0], t[1]})] +
                                    eta[t7.tuple_index({t[1], t[2]})] -
                                    eta[t7.tuple_index({t[0], t[2]})],
                                2);
        }
        auto same = gerbe_twist(t7, gg, *fiber[0], deta);
        CHECK(equivalent(t7, gg, same, *fiber[0]));
    }
}

TEST_CASE("torus holonomy loops reproduce the commuting pair") {
    auto gg = zg("Z2", "trivial", 2);
    auto t7 = builtin_nerve("torus7");
    auto cls = classify(t7, gg);
    // step-1 and step-2 straight loops generate pi_1 of the 7-vertex torus
    std::vector<int> loop_a = {0, 1, 2, 3, 4, 5, 6, 0};
    std::vector<int> loop_b = {0, 2, 4, 6, 1, 3, 5, 0};
    std::set<std::pair<Elt, Elt>> seen;
    for (const auto& c : cls.classes) {
        Elt ha = holonomy(t7, gg.group(), c.rep, loop_a);
        Elt hb = holonomy(t7, gg.group(), c.rep, loop_b);
        CHECK(gg.group().commute(ha, hb));
        seen.insert({ha, hb});
    }
    // all four Z2 bundle types appear among the classes
    CHECK(seen.size() == 4);

    // cross-module consistency: the multiset of holonomy pairs matches the
    // moduli enumeration orbit representatives (Z2 abelian: no conjugation)
    auto bundles = enumerate_g_bundles(gg.group(), 1);
    std::set<std::pair<Elt, Elt>> expect;
    for (const auto& o : bundles.orbits) expect.insert({o.rep[0], o.rep[1]});
    CHECK(seen == expect);
}

TEST_CASE("refinement invariance") {
    auto gg = zg("S3", "trivial", 1);
    auto c3 = builtin_nerve("circle3");
    std::vector<int> img;
    auto ref = barycentric_subdivision(c3, &img);
    CHECK(ref.num_vertices() == 6);  // 3 vertices + 3 edge barycenters
    CHECK(classify(ref, gg).count == classify(c3, gg).count);

    auto g3 = zg("Z1", "trivial", 3);
    auto st = builtin_nerve("sphere-tetra");
    std::vector<int> img2;
    auto ref2 = barycentric_subdivision(st, &img2);
    CHECK(classify(ref2, g3).count == 3);
    // pullback of data along the refinement stays valid
    auto cls = classify(st, g3);
    for (const auto& c : cls.classes) {
        auto pulled = pullback_data(ref2, img2, st, g3, c.rep);
        CHECK_FALSE(validate_object(ref2, g3, pulled).has_value());
    }
}

TEST_CASE("one- and two-morphism validators") {
    auto gg = zg("Z2", "trivial", 2);
    auto c3 = builtin_nerve("circle3");
    auto d = trivial_data(c3);
    CechOneMorphism id{std::vector<Elt>(3, 0), std::vector<int64_t>(c3.tuples(1).size(), 0)};
    CHECK_FALSE(validate_one_morphism(c3, gg, d, d, id).has_value());
    // breaking the t-compatibility is caught
    std::map<std::vector<int>, Elt> rho;
    rho[{0, 1}] = 1;
    rho[{1, 2}] = 0;
    rho[{2, 0}] = 0;
    auto dd = complete_data(c3, gg, rho, {});
    REQUIRE(dd.has_value());
    CHECK(validate_one_morphism(c3, gg, *dd, d, id).has_value());
    // two-morphisms: omega must intertwine the etas
    CechTwoMorphism w{std::vector<int64_t>(3, 0)};
    CHECK_FALSE(validate_two_morphism(c3, gg, id, id, w).has_value());
    CechOneMorphism other = id;
    other.eta[c3.tuple_index({0, 1})] = 1;
    CHECK(validate_two_morphism(c3, gg, id, other, w).has_value());
}

TEST_CASE("nerve JSON loading") {
    {
        std::ofstream f("/tmp/flat2g_nerve.json");
        f << R"({"vertices":["a","b","c"],"simplices":{"1":[[0,1],[1,2],[0,2]],"2":[[0,1,2]]},"good_cover":true})";
    }
    auto n = load_nerve("/tmp/flat2g_nerve.json");
    CHECK(n.num_vertices() == 3);
    CHECK(n.good_cover());
    CHECK(n.faces_of_size(3).size() == 1);
    CHECK_THROWS_AS(load_nerve("/tmp/flat2g_missing.json"), spec_error);
}
