#include "doctest.h"

#include <random>

#include "ffrep/errors.hpp"
#include "ffrep/tower.hpp"
#include "test_util.hpp"

using namespace ffrep;
using namespace ffrep::testutil;

namespace {

MultiPoly mono(Fp p, std::size_t n, std::vector<unsigned> e, Fp c = 1) {
    return MultiPoly::monomial(p, n, std::move(e), c);
}

CurveRing semigroup_ring(Fp p, std::vector<unsigned> degs, const std::string& label) {
    auto k = BaseField::finite(p, 1);
    auto K = ExtField::create(k, {BaseElem::zero(k), BaseElem::one(k)});
    RingPresentation pres{K, {}, label};
    for (unsigned d : degs) pres.generators.push_back({K->one(), d});
    return CurveRing::analyze(pres);
}

std::uint64_t total_count(const TowerReport& rep) {
    std::uint64_t t = 0;
    for (const auto& [key, cnt] : rep.summands) t += cnt;
    return t;
}

}  // namespace

TEST_CASE("multivariate polynomials over F_p") {
    auto x = mono(2, 2, {1, 0});
    auto y = mono(2, 2, {0, 1});
    CHECK((x + y) * (x + y) == x * x + y * y);  // char 2
    CHECK((x + x).is_zero());
    auto f = mono(3, 2, {2, 0}) + mono(3, 2, {0, 3}, 2);
    CHECK(f.str({"x", "y"}) == "2*y^3 + x^2");
    CHECK(f.pow(0) == mono(3, 2, {0, 0}));
    // weighted homogeneity: x^2 + y^3 under weights (3, 2)
    auto g = mono(5, 2, {2, 0}) + mono(5, 2, {0, 3});
    CHECK(g.homogeneous_degree({Rational(3, 1), Rational(2, 1)}) == Rational(6, 1));
    CHECK_THROWS_AS(g.homogeneous_degree({Rational(1, 1), Rational(1, 1)}),
                    InvalidPresentation);
}

TEST_CASE("freshman's dream across prime powers") {
    CHECK(substitution_identity_check(2, 2));
    CHECK(substitution_identity_check(7, 7));
    CHECK(substitution_identity_check(3, 9));
    for (Fp p : {2u, 3u, 5u, 7u}) {
        std::uint64_t q = 1;
        for (int m = 0; m < 3; ++m) {
            q *= p;
            CHECK(substitution_identity_check(p, q));
        }
    }
    // q not a power of p fails with a named falsifying term
    std::string term;
    CHECK_FALSE(substitution_identity_check(2, 3, &term));
    CHECK(term.find("g") != std::string::npos);
}

TEST_CASE("Fedder criterion hand cases") {
    CHECK(fedder_fpure(MultiPoly(2, 2), 2));  // regular ring
    CHECK(fedder_fpure(mono(2, 2, {1, 1}), 2));  // xy
    auto cusp7 = mono(2, 2, {2, 0}) + mono(2, 2, {0, 3});  // x^2 + y^3
    CHECK_FALSE(fedder_fpure(cusp7, 2));
    // x^2 + yz is a split quadric in char 2
    auto quadric = mono(2, 3, {2, 0, 0}) + mono(2, 3, {0, 1, 1});
    CHECK(fedder_fpure(quadric, 2));
    CHECK_FALSE(fedder_fpure(mono(3, 2, {2, 0}) + mono(3, 2, {0, 3}), 3));
    CHECK(fedder_fpure(mono(3, 2, {1, 1}) + mono(3, 2, {2, 0}), 3));  // xy + x^2
}

TEST_CASE("Fedder agrees with the splitting-search oracle") {
    // curated homogeneous instances of total degree <= 6
    std::vector<std::vector<std::vector<unsigned>>> shapes = {
        {{1, 1}},          {{2, 0}, {0, 2}},  {{2, 0}, {1, 1}, {0, 2}},
        {{3, 0}, {0, 3}},  {{2, 1}, {1, 2}},  {{4, 0}, {2, 2}, {0, 4}},
        {{5, 0}, {0, 5}},  {{6, 0}, {3, 3}, {0, 6}}, {{3, 2}, {2, 3}},
    };
    for (Fp p : {2u, 3u}) {
        for (const auto& shape : shapes) {
            MultiPoly f(p, 2);
            for (const auto& e : shape) f.add_term(e, 1);
            CHECK(fedder_fpure(f, p) == fpure_bruteforce(f, p, p));
        }
        // random homogeneous instances, degree <= 6
        std::mt19937_64 rng(41 + p);
        for (int trial = 0; trial < 40; ++trial) {
            unsigned d = 1 + static_cast<unsigned>(rng() % 6);
            MultiPoly f(p, 2);
            for (unsigned i = 0; i <= d; ++i)
                f.add_term({i, d - i}, static_cast<Fp>(rng() % p));
            if (f.is_zero()) continue;
            CHECK(fedder_fpure(f, p) == fpure_bruteforce(f, p, p));
        }
    }
}

TEST_CASE("brenner instances: shape, identity, Hilbert conservation") {
    for (Fp p : {2u, 3u, 7u}) {
        auto T = brenner_instance(p);
        REQUIRE(T.poly_base.has_value());
        CHECK(T.steps.size() == 1);
        CHECK(T.steps[0].exponent == p);
        CHECK(substitution_identity_check(p, T.steps[0].exponent));
        for (unsigned e : {1u, 2u}) {
            auto rep = tower_summands(T, e, 40);
            CHECK(rep.hilbert_ok);
            CHECK(rep.all_free);
            CHECK(rep.trunc_degree == 40);
            // q_adjoin * (p^e)^2 shifted free pieces over the 2-variable base
            CHECK(total_count(rep) == p * pow_u64(p, e) * pow_u64(p, e));
            CHECK(rep.clears_tower_exponents);
        }
    }
    CHECK_THROWS_AS(brenner_instance(5), UnsupportedCharacteristic);
    CHECK_THROWS_AS(brenner_instance(11), UnsupportedCharacteristic);
}

TEST_CASE("brenner p=7 induced weight is 6/7") {
    auto T = brenner_instance(7);
    auto rep = tower_summands(T, 1, 20);
    // smallest nonzero shift comes from z alone: -(6/7)/7 = -6/49
    bool found = false;
    for (const auto& [key, cnt] : rep.summands)
        if (key.second == Rational(-6, 49)) found = true;
    CHECK(found);
}

TEST_CASE("k[s^q, st, t] towers are all free") {
    struct Case { Fp p; std::uint64_t q; };
    for (auto [p, q] : {Case{2, 2}, Case{3, 3}, Case{2, 4}}) {
        auto T = segre_like_instance(p, q);
        unsigned e = 1;
        while (pow_u64(p, e) < q) ++e;  // clear the adjoined exponent
        for (unsigned ee : {e, e + 1}) {
            auto rep = tower_summands(T, ee, 40);
            CHECK(rep.hilbert_ok);
            CHECK(rep.all_free);
            CHECK(rep.clears_tower_exponents);
        }
    }
    CHECK_THROWS_AS(segre_like_instance(2, 3), InvalidPresentation);
    CHECK_THROWS_AS(segre_like_instance(4, 4), UnsupportedCharacteristic);
}

TEST_CASE("f = 0 adjunction: S = k[y][x]/(x^2)") {
    TowerPresentation T;
    T.poly_base = WeightedPolyRing{2, {"y"}, {Rational(1, 1)}};
    AdjoinStep st;
    st.var = "x";
    st.exponent = 2;
    st.f = MultiPoly(2, 2);
    st.weight = Rational(1, 1);
    T.steps.push_back(st);
    T.label = "nilpotent";
    auto rep = tower_summands(T, 1, 30);
    CHECK(rep.hilbert_ok);
    REQUIRE(rep.summands.size() == 3);
    CHECK(rep.summands.at({0, Rational(0, 1)}) == 1);
    CHECK(rep.summands.at({0, Rational(-1, 2)}) == 2);
    CHECK(rep.summands.at({0, Rational(-1, 1)}) == 1);

    // without the explicit weight the presentation is rejected
    T.steps[0].weight.reset();
    CHECK_THROWS_AS(tower_summands(T, 1), InvalidPresentation);
}

TEST_CASE("invalid tower presentations") {
    TowerPresentation T;
    T.poly_base = WeightedPolyRing{2, {"x"}, {Rational(1, 1)}};
    AdjoinStep st;
    st.var = "y";
    st.exponent = 3;  // not a power of p = 2
    st.f = mono(2, 2, {2, 0});
    T.steps.push_back(st);
    CHECK_THROWS_AS(tower_summands(T, 1), InvalidPresentation);

    T.steps[0].exponent = 2;
    T.steps[0].f = mono(2, 2, {2, 0}) + mono(2, 2, {1, 0});  // inhomogeneous
    CHECK_THROWS_AS(tower_summands(T, 1), InvalidPresentation);

    T.steps[0].f = mono(2, 2, {0, 1});  // f may not use the variable it defines
    CHECK_THROWS_AS(tower_summands(T, 1), InvalidPresentation);
}

TEST_CASE("iterated adjunction matches the one-shot construction") {
    // base k[x, w]; adjoin y with y^2 = xw, then z with z^2 = xy
    TowerPresentation T2;
    T2.poly_base = WeightedPolyRing{2, {"x", "w"}, {Rational(1, 1), Rational(1, 1)}};
    AdjoinStep s1{"y", 2, mono(2, 4, {1, 1, 0, 0}), {}};
    AdjoinStep s2{"z", 2, mono(2, 4, {1, 0, 1, 0}), {}};
    T2.steps = {s1, s2};

    TowerPresentation T1 = T2;
    T1.steps = {AdjoinStep{"y", 2, mono(2, 3, {1, 1, 0}), {}}};

    unsigned e = 1;
    auto rep2 = tower_summands(T2, e, 30);
    CHECK(rep2.hilbert_ok);
    CHECK(rep2.fpurity_checked);  // z-step iterates over the y-hypersurface
    auto rep1 = tower_summands(T1, e, 30);

    // one-shot multiset = first-step multiset convolved with the z-basis shifts
    std::map<std::pair<int, Rational>, std::uint64_t> expect;
    Rational wz(1, 1);  // deg z = deg(xy)/2 = (1 + 1)/2
    for (const auto& [key, cnt] : rep1.summands)
        for (std::int64_t a = 0; a < 2; ++a)
            expect[{key.first, key.second - Rational(a, 1) * wz * Rational(1, 2)}] += cnt;
    CHECK(rep2.summands == expect);
}

TEST_CASE("iterating over a non-F-pure intermediate ring is rejected") {
    // y^2 = x^3 gives the cusp; adjoining z with f involving y needs its
    // F-purity, which Fedder denies
    TowerPresentation T;
    T.poly_base = WeightedPolyRing{2, {"x"}, {Rational(1, 1)}};
    AdjoinStep s1{"y", 2, mono(2, 3, {3, 0, 0}), {}};
    AdjoinStep s2{"z", 2, mono(2, 3, {1, 1, 0}), {}};
    T.steps = {s1, s2};
    CHECK_THROWS_AS(tower_summands(T, 1), FPurityFailure);
}

TEST_CASE("curve-ring bases") {
    auto cusp = std::make_shared<CurveRing>(semigroup_ring(2, {2, 3}, "cusp"));
    TowerPresentation T;
    T.curve_base = CurveBase{cusp, 8};
    AdjoinStep st;
    st.var = "x";
    st.exponent = 2;
    st.f = MultiPoly(2, 1);
    st.weight = Rational(1, 1);
    T.steps.push_back(st);
    T.label = "cusp_tower";
    auto rep = tower_summands(T, 1, 30);
    CHECK(rep.hilbert_ok);
    CHECK(rep.all_free);
    CHECK(total_count(rep) == 4);  // 2 cusp summands x 2 basis monomials

    // a base with proper summands still balances degreewise
    auto gf16 = std::make_shared<CurveRing>([] {
        auto K = make_gf16();
        return CurveRing::analyze({K, {{K->alpha(), 1}, {K->one(), 1}}, "gf16"});
    }());
    TowerPresentation Tg;
    Tg.curve_base = CurveBase{gf16, 12};
    Tg.steps.push_back(st);
    auto repg = tower_summands(Tg, 2, 25);
    CHECK(repg.hilbert_ok);
    CHECK_FALSE(repg.all_free);

    // an uncertifiable base is refused
    auto quartic = std::make_shared<CurveRing>([] {
        auto K = make_quartic_field();
        return CurveRing::analyze({K, {{K->alpha(), 1}, {K->one(), 1}}, "quartic"});
    }());
    TowerPresentation Tq;
    Tq.curve_base = CurveBase{quartic, 6};
    Tq.steps.push_back(st);
    CHECK_THROWS_AS(tower_summands(Tq, 2), BaseNotCertified);

    // f != 0 over a curve base is out of scope
    TowerPresentation Tf = T;
    Tf.steps[0].f = MultiPoly(2, 1);
    Tf.steps[0].f.add_term({1}, 1);
    CHECK_THROWS_AS(tower_summands(Tf, 1), InvalidPresentation);
}

TEST_CASE("splitting check on curve rings") {
    CHECK_FALSE(curve_base_fpure(semigroup_ring(2, {2, 3}, "cusp")));
    CHECK(curve_base_fpure(semigroup_ring(2, {1}, "line")));
    CHECK(curve_base_fpure(semigroup_ring(3, {1}, "line3")));
}
