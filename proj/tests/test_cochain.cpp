#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flat2g/cochain.hpp"

using namespace flat2g;

TEST_CASE("coboundary convention") {
    auto z2 = build_group("Z2");
    // d gamma(x,x,x) = 1 for every normalized 2-cochain on Z2
    for (int64_t v = 0; v < 4; ++v) {
        Cochain gamma(z2, 2, 4);
        gamma.set({1, 1}, v);
        Cochain d = coboundary(z2, gamma);
        CHECK(d.at({1, 1, 1}) == 0);
        CHECK(d.is_normalized());
    }
    // constant-identity maps to constant-identity
    Cochain c(z2, 2, 4);
    CHECK(coboundary(z2, c).is_identity());
}

TEST_CASE("d of d is trivial") {
    auto s3 = build_group("S3");
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int64_t> dist(0, 5);
    for (int degree = 0; degree <= 2; ++degree) {
        for (int trial = 0; trial < 100; ++trial) {
            Cochain c(s3, degree, 6);
            for (size_t i = 0; i < c.raw().size(); ++i) c.raw_at(i) = dist(rng);
            CHECK(coboundary(s3, coboundary(s3, c)).is_identity());
        }
    }
}

TEST_CASE("cyclic cocycle family") {
    auto z2 = build_group("Z2");
    auto a21 = cyclic_cocycle(z2, 1);
    CHECK(a21.value(1, 1, 1) == CircleElement::make(1, 2));  // the half turn
    CHECK(is_cocycle(z2, a21.cochain()));

    auto z4 = build_group("Z4");
    auto a41 = cyclic_cocycle(z4, 1);
    CHECK(a41.value(1, 3, 3) == CircleElement::make(1, 4));  // floor(6/4) = 1
    CHECK(cyclic_cocycle(z4, 0).is_trivial());

    for (int n = 1; n <= 8; ++n) {
        auto zn = build_group("Z" + std::to_string(n));
        for (int p = 0; p < n; ++p) {
            auto a = cyclic_cocycle(zn, p);
            CHECK(a.cochain().is_normalized());
            CHECK(is_cocycle(zn, a.cochain()));
        }
    }
}

TEST_CASE("non-closed perturbation is rejected with a witness") {
    auto z4 = build_group("Z4");
    Cochain c = cyclic_cocycle(z4, 1).cochain();
    // single-entry perturbations of a nontrivial cocycle: at least one is
    // non-closed, and any such one must be rejected with a quadruple
    bool found_nonclosed = false;
    for (Elt a = 1; a < 4 && !found_nonclosed; ++a)
        for (Elt b = 1; b < 4 && !found_nonclosed; ++b)
            for (Elt d = 1; d < 4 && !found_nonclosed; ++d) {
                Cochain bad = c;
                bad.set({a, b, d}, bad.at({a, b, d}) + 1);
                if (auto w = cocycle_witness(z4, bad)) {
                    found_nonclosed = true;
                    CHECK(w->size() == 4);
                    CHECK_THROWS_AS(ThreeCocycle(z4, bad), spec_error);
                }
            }
    CHECK(found_nonclosed);

    auto z2 = build_group("Z2");
    Cochain notnorm(z2, 3, 2);
    notnorm.set({1, 1, 0}, 1);
    CHECK_THROWS_AS(ThreeCocycle(z2, notnorm), spec_error);
}

TEST_CASE("product of cyclic cocycles is cohomologous to the sum") {
    for (int n = 2; n <= 4; ++n) {
        auto zn = build_group("Z" + std::to_string(n));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                auto prod = cyclic_cocycle(zn, p).mul(zn, cyclic_cocycle(zn, q));
                auto sum = cyclic_cocycle(zn, p + q);
                // difference must be a coboundary of a normalized 2-cochain
                Cochain diff = prod.cochain().mul(sum.cochain().inv());
                bool found = false;
                int free_entries = (n - 1) * (n - 1);
                int64_t total = 1;
                for (int i = 0; i < free_entries; ++i) total *= n;
                std::vector<std::pair<Elt, Elt>> pos;
                for (Elt a = 1; a < n; ++a)
                    for (Elt b = 1; b < n; ++b) pos.emplace_back(a, b);
                for (int64_t code = 0; code < total && !found; ++code) {
                    Cochain beta(zn, 2, n);
                    int64_t x = code;
                    for (auto [a, b] : pos) {
                        beta.set({a, b}, x % n);
                        x /= n;
                    }
                    found = coboundary(zn, beta).raw() == diff.raw();
                }
                CHECK(found);
            }
    }
}

TEST_CASE("h3 enumeration matches H^3(Z_n; U(1)) = Z_n") {
    auto z1 = build_group("Z1");
    CHECK(enumerate_h3(z1, 5).size() == 1);
    auto z2 = build_group("Z2");
    CHECK(enumerate_h3(z2, 2).size() == 2);
    auto z3 = build_group("Z3");
    auto classes = enumerate_h3(z3, 3);
    CHECK(classes.size() == 3);
    int64_t total = 0;
    for (const auto& c : classes) total += c.class_size;
    CHECK(total == 27);  // all normalized mu_3-valued cocycles on Z3

    auto s3 = build_group("S3");
    CHECK_THROWS_AS(enumerate_h3(s3, 6), budget_error);
}

TEST_CASE("pullback along a quotient homomorphism") {
    auto s3 = build_group("S3");
    auto z2 = build_group("Z2");
    auto homs = s3.homs_to(z2);
    REQUIRE(homs.size() == 2);
    const auto& sign = homs[1];  // nontrivial one (sorted order puts trivial first)
    auto a = pullback_cocycle(s3, sign, z2, cyclic_cocycle(z2, 1));
    CHECK(a.cochain().is_normalized());
    CHECK(is_cocycle(s3, a.cochain()));
    CHECK_FALSE(a.is_trivial());

    std::vector<Elt> not_hom(6, 1);
    CHECK_THROWS_AS(pullback_cocycle(s3, not_hom, z2, cyclic_cocycle(z2, 1)), spec_error);
}

TEST_CASE("cocycle spec parsing") {
    auto z2 = build_group("Z2");
    auto cs = parse_cocycle("trivial", z2, 1);
    CHECK(cs.modulus == 2);  // lcm(|G|, 1)
    CHECK(cs.alpha.is_trivial());

    auto cyclic = parse_cocycle("cyclic:2:1", z2, 2);
    CHECK(cyclic.modulus == 2);
    CHECK(cyclic.alpha.value(1, 1, 1) == CircleElement::make(1, 2));

    CHECK_THROWS_AS(parse_cocycle("cyclic:3:1", z2, 1), spec_error);
    CHECK_THROWS_AS(parse_cocycle("garbage", z2, 1), spec_error);
}
