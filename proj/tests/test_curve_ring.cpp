#include "doctest.h"

#include "ffrep/curve_ring.hpp"
#include "ffrep/errors.hpp"
#include "test_util.hpp"

using namespace ffrep;
using namespace ffrep::testutil;

namespace {

RingPresentation quartic_ring() {
    auto K = make_quartic_field();
    return {K, {{K->alpha(), 1}, {K->one(), 1}}, "quartic"};
}

RingPresentation semigroup_ring(const ExtFieldPtr& K, std::vector<unsigned> degs,
                                const std::string& label) {
    RingPresentation pres{K, {}, label};
    for (unsigned d : degs) pres.generators.push_back({K->one(), d});
    return pres;
}

ExtFieldPtr trivial_field(Fp p) {
    auto k = BaseField::finite(p, 1);
    return ExtField::create(k, {BaseElem::zero(k), BaseElem::one(k)});  // K = k
}

}  // namespace

TEST_CASE("quartic coefficient spaces match the hand computation") {
    auto ring = CurveRing::analyze(quartic_ring());
    auto K = ring.field();
    auto a = K->alpha();
    CHECK(ring.V(0) == Subspace::span(K, {K->one()}));
    CHECK(ring.V(1) == Subspace::span(K, {K->one(), a}));
    CHECK(ring.V(2) == Subspace::span(K, {K->one(), a, a * a}));
    CHECK(ring.conductor() == 3);
    CHECK(ring.V(3).is_full());
    CHECK(ring.hilbert_dim(1, 1) == 2);
    CHECK(ring.hilbert_dim(3, 7) == 4);
}

TEST_CASE("cusp k[t^2,t^3]") {
    auto K = trivial_field(2);
    auto ring = CurveRing::analyze(semigroup_ring(K, {2, 3}, "cusp"));
    CHECK(ring.V(0).is_full());  // K = k here
    CHECK(ring.V(1).is_zero());
    CHECK(ring.V(2).is_full());
    CHECK(ring.conductor() == 2);
    CHECK(ring.semigroup().conductor == 2);
    CHECK(ring.hilbert_dim(1, 1) == 0);
}

TEST_CASE("k[t] itself has conductor 0") {
    auto K = trivial_field(3);
    auto ring = CurveRing::analyze(semigroup_ring(K, {1}, "line"));
    CHECK(ring.conductor() == 0);
}

TEST_CASE("k[t^5,t^7] conductor equals the semigroup conductor 24") {
    auto K = trivial_field(2);
    auto ring = CurveRing::analyze(semigroup_ring(K, {5, 7}, "t5t7"));
    CHECK(ring.conductor() == 24);
    CHECK(ring.semigroup().conductor == 24);
    CHECK_FALSE(ring.semigroup().contains(23));
    CHECK(ring.semigroup().contains(12));  // 5+7
}

TEST_CASE("multiplicativity V_i * V_j <= V_{i+j}") {
    for (auto pres : {quartic_ring(),
                      semigroup_ring(trivial_field(2), {3, 4, 5}, "s345")}) {
        auto ring = CurveRing::analyze(pres);
        unsigned c = ring.conductor();
        for (unsigned i = 0; i <= c; ++i)
            for (unsigned j = 0; j <= c; ++j) {
                for (const auto& vi : ring.V(i).basis_elements())
                    for (const auto& vj : ring.V(j).basis_elements())
                        CHECK(ring.V(i + j).contains(vi * vj));
            }
    }
}

TEST_CASE("dim V is non-decreasing along generator degrees") {
    auto ring = CurveRing::analyze(quartic_ring());
    for (unsigned i = 0; i + 1 <= ring.conductor() + 2; ++i)
        CHECK(ring.V(i + 1).dim() >= ring.V(i).dim());  // both generators have degree 1
}

TEST_CASE("coefficient_space agrees with the profile") {
    auto pres = semigroup_ring(trivial_field(2), {3, 4, 5}, "s345");
    auto ring = CurveRing::analyze(pres);
    for (unsigned i = 0; i <= ring.conductor() + 3; ++i)
        CHECK(coefficient_space(pres, i) == ring.V(i));
}

TEST_CASE("invalid presentations are rejected") {
    auto K = make_gf16();
    RingPresentation zero_coeff{K, {{K->zero(), 1}}, "bad"};
    CHECK_THROWS_AS(CurveRing::analyze(zero_coeff), InvalidPresentation);

    RingPresentation bad_gcd{K, {{K->one(), 2}, {K->alpha(), 4}}, "bad-gcd"};
    CHECK_THROWS_AS(CurveRing::analyze(bad_gcd), InvalidPresentation);

    // A = k[t] inside GF(16)[t]: integral closure is k[t], not K[t]
    RingPresentation skinny{K, {{K->one(), 1}}, "skinny"};
    CHECK_THROWS_AS(CurveRing::analyze(skinny), StabilizationFailure);
}

TEST_CASE("H from V matches the plain semigroup when all coefficients lie in k") {
    auto K = trivial_field(2);
    auto ring = CurveRing::analyze(semigroup_ring(K, {4, 7}, "s47"));
    // direct closure of {4,7} under addition
    std::vector<bool> direct(64, false);
    direct[0] = true;
    for (unsigned i = 0; i < direct.size(); ++i) {
        if (!direct[i]) continue;
        if (i + 4 < direct.size()) direct[i + 4] = true;
        if (i + 7 < direct.size()) direct[i + 7] = true;
    }
    for (unsigned i = 0; i < 40; ++i) CHECK(ring.semigroup().contains(i) == direct[i]);
}
