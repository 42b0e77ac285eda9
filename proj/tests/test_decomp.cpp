#include "doctest.h"

#include <set>

#include "ffrep/decomp.hpp"
#include "ffrep/errors.hpp"
#include "test_util.hpp"

using namespace ffrep;
using namespace ffrep::testutil;

namespace {

CurveRing quartic_ring() {
    auto K = make_quartic_field();
    return CurveRing::analyze({K, {{K->alpha(), 1}, {K->one(), 1}}, "quartic"});
}

CurveRing gf16_ring() {
    auto K = make_gf16();
    return CurveRing::analyze({K, {{K->alpha(), 1}, {K->one(), 1}}, "gf16"});
}

CurveRing semigroup_ring(Fp p, std::vector<unsigned> degs, const std::string& label) {
    auto k = BaseField::finite(p, 1);
    auto K = ExtField::create(k, {BaseElem::zero(k), BaseElem::one(k)});
    RingPresentation pres{K, {}, label};
    for (unsigned d : degs) pres.generators.push_back({K->one(), d});
    return CurveRing::analyze(pres);
}

}  // namespace

TEST_CASE("cusp decomposition at e=1: B + B(-3/2)") {
    auto ring = semigroup_ring(2, {2, 3}, "cusp");
    auto rep = decompose(ring, 1);
    REQUIRE(rep.summands.size() == 2);
    CHECK(rep.summands[0].kind == SummandKind::Free);
    CHECK(rep.summands[0].shift == Rational(0, 1));
    CHECK(rep.summands[1].kind == SummandKind::Free);
    CHECK(rep.summands[1].shift == Rational(-3, 2));
    CHECK(rep.hilbert_ok);
}

TEST_CASE("quartic decomposition at e=2") {
    auto ring = quartic_ring();
    auto rep = decompose(ring, 2);
    REQUIRE(rep.summands.size() == 4);
    for (std::uint64_t i : {0u, 1u, 2u}) {
        CHECK(rep.summands[i].kind == SummandKind::Proper);
        CHECK(rep.summands[i].space->dim() == i + 1);
        CHECK(rep.summands[i].space.value() == ring.V(i).root_space(2));
    }
    CHECK(rep.summands[3].kind == SummandKind::Free);
    CHECK(rep.hilbert_ok);
}

TEST_CASE("k[t]: every residue free") {
    auto ring = semigroup_ring(3, {1}, "line");
    auto rep = decompose(ring, 2);
    CHECK(rep.summands.size() == 9);
    for (const auto& d : rep.summands) CHECK(d.kind == SummandKind::Free);
}

TEST_CASE("q below the conductor is an error") {
    auto ring = semigroup_ring(2, {5, 7}, "t5t7");  // c = 24
    CHECK_THROWS_AS(decompose(ring, 2), ConductorNotCleared);
    CHECK_NOTHROW(decompose(ring, 5));  // q = 32 >= 24
}

TEST_CASE("pairwise_noniso") {
    auto ring = quartic_ring();
    auto self = pairwise_noniso(ring, 2, 1, 2, 1);
    CHECK(self.equivalent);
    CHECK(self.witness.has_value());

    auto cross = pairwise_noniso(ring, 2, 1, 3, 1);
    CHECK_FALSE(cross.equivalent);
    CHECK(cross.transporter.is_zero());

    CHECK_THROWS_AS(pairwise_noniso(ring, 2, 3, 2, 1), NotProper);  // residue 3 is free

    auto gf16 = gf16_ring();
    // Frobenius on GF(16) has order 4, so classes repeat with period 4
    for (unsigned e : {2u, 3u, 4u})
        for (std::uint64_t i : {1u, 2u})
            CHECK(pairwise_noniso(gf16, e, i, e + 4, i).equivalent);
}

TEST_CASE("classify: cusp has the single Free class") {
    auto ring = semigroup_ring(2, {2, 3}, "cusp");
    auto table = classify(ring, 4);
    CHECK(table.classes.size() == 1);
    for (unsigned e = table.e_min; e <= 4; ++e) {
        CHECK(table.multiplicities.at(e).at(0) == table.per_e.at(e).q);
    }
}

TEST_CASE("classify: GF(16) instance stabilizes with period dividing 4") {
    auto ring = gf16_ring();
    auto table = classify(ring, 10);
    CHECK(table.e_min == 2);
    // class count stable: nothing new after the first period
    auto early = classify(ring, 6);
    CHECK(early.classes.size() == table.classes.size());
    for (unsigned e = 2; e + 4 <= 10; ++e)
        for (std::uint64_t i = 0; i < 3; ++i)
            CHECK(table.per_e.at(e).summands[i].class_id ==
                  table.per_e.at(e + 4).summands[i].class_id);
}

TEST_CASE("classify: quartic residue-1 classes are pairwise distinct") {
    auto ring = quartic_ring();
    auto table = classify(ring, 5);
    std::set<int> ids;
    for (unsigned e = 2; e <= 5; ++e) ids.insert(table.per_e.at(e).summands[1].class_id);
    CHECK(ids.size() == 4);
}

TEST_CASE("recurrence certificate steps match the hand computation") {
    auto ring = quartic_ring();
    auto cert = recurrence_certificate(ring, 6);
    REQUIRE(cert.steps.size() == 5);
    CHECK(cert.steps[0].f == FpPoly(2, {1}));
    CHECK(cert.steps[0].g == FpPoly(2, {0, 1}));
    CHECK(cert.steps[0].h == FpPoly(2, {1}));
    // e = 3: (1+u^2, u, 0)
    CHECK(cert.steps[1].f == FpPoly(2, {1, 0, 1}));
    CHECK(cert.steps[1].g == FpPoly(2, {0, 1}));
    CHECK(cert.steps[1].h.is_zero());
    // e = 4: f = 1+u^2+u^4, g = u+u^5
    CHECK(cert.steps[2].f == FpPoly(2, {1, 0, 1, 0, 1}));
    CHECK(cert.steps[2].g == FpPoly(2, {0, 1, 0, 0, 0, 1}));

    auto gf16 = gf16_ring();
    CHECK_THROWS_AS(recurrence_certificate(gf16, 6), PatternMismatch);
}

TEST_CASE("verdicts") {
    auto cusp = semigroup_ring(2, {2, 3}, "cusp");
    auto v1 = ffrt_verdict(cusp, 6);
    CHECK(v1.kind == VerdictKind::FFRT_CERTIFIED);

    auto quartic = quartic_ring();
    auto v2 = ffrt_verdict(quartic, 6);
    CHECK(v2.kind == VerdictKind::NOT_FFRT_CERTIFIED);
    CHECK(v2.certificate.has_value());

    auto gf16 = gf16_ring();
    auto v3 = ffrt_verdict(gf16, 10);
    CHECK(v3.kind == VerdictKind::FFRT_CERTIFIED);
    CHECK(4 % v3.period == 0);

    // sextic family: engine reports a lower bound only
    auto Ks = make_sextic_field();
    auto sextic = CurveRing::analyze({Ks, {{Ks->alpha(), 1}, {Ks->one(), 1}}, "sextic"});
    auto v4 = ffrt_verdict(sextic, 4);
    CHECK(v4.kind == VerdictKind::LOWER_BOUND_ONLY);
    CHECK(v4.distinct_classes >= 2);
}
