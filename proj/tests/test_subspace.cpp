#include "doctest.h"

#include "ffrep/subspace.hpp"
#include "ffrep/errors.hpp"
#include "test_util.hpp"

using namespace ffrep;
using namespace ffrep::testutil;

namespace {

Subspace brute_transporter(const Subspace& w1, const Subspace& w2) {
    std::vector<ExtElem> in;
    for (const auto& beta : enumerate_ext_field(w1.parent())) {
        bool ok = true;
        for (const auto& w : w1.basis_elements())
            if (!w2.contains(beta * w)) {
                ok = false;
                break;
            }
        if (ok) in.push_back(beta);
    }
    return Subspace::span(w1.parent(), in);
}

Subspace random_subspace(const ExtFieldPtr& K, std::mt19937_64& rng, std::size_t max_vecs = 2) {
    std::uniform_int_distribution<std::size_t> cnt(0, max_vecs);
    std::vector<ExtElem> v;
    for (std::size_t i = cnt(rng); i > 0; --i) v.push_back(random_ext_elem(K, rng));
    return Subspace::span(K, v);
}

}  // namespace

TEST_CASE("span basics") {
    auto K = make_gf16();
    CHECK(Subspace::span(K, {}).is_zero());
    auto a = K->alpha();
    auto s = Subspace::span(K, {K->one(), a, K->one() + a});
    CHECK(s.dim() == 2);
    CHECK(s == Subspace::span(K, {K->one(), a}));

    auto Kq = make_quartic_field();
    auto b = Kq->alpha();
    CHECK(Subspace::span(Kq, {Kq->one(), b, b * b}).dim() == 3);
}

TEST_CASE("membership and canonical equality") {
    auto K = make_gf16();
    auto a = K->alpha();
    auto s = Subspace::span(K, {K->one() + a, a});
    CHECK(s.contains(K->one()));
    CHECK_FALSE(s.contains(a * a));
    CHECK(s == Subspace::span(K, {K->one(), a}));
}

TEST_CASE("root_space") {
    auto K = make_gf16();
    auto a = K->alpha();
    CHECK(Subspace::zero(K).root_space(3).is_zero());
    auto w = Subspace::span(K, {K->one(), a});
    CHECK(w.root_space(1) == Subspace::span(K, {K->one(), a.pow(8)}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        auto s = random_subspace(K, rng, 3);
        CHECK(s.root_space(2).dim() == s.dim());
    }
}

TEST_CASE("root_space commutes with span") {
    auto K = make_gf16();
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        std::vector<ExtElem> vecs{random_ext_elem(K, rng), random_ext_elem(K, rng)};
        std::vector<ExtElem> roots;
        for (const auto& v : vecs) roots.push_back(v.pth_root());
        CHECK(Subspace::span(K, vecs).root_space(1) == Subspace::span(K, roots));
    }
}

TEST_CASE("scaling transporter hand cases") {
    auto K = make_gf16();
    auto a = K->alpha();
    auto one_space = Subspace::span(K, {K->one()});
    CHECK(scaling_transporter(one_space, one_space) == one_space);

    auto w1 = Subspace::span(K, {K->one(), a});
    auto w2 = Subspace::span(K, {K->one(), a * a});
    CHECK(scaling_transporter(w1, w2).is_zero());
    CHECK(brute_transporter(w1, w2).is_zero());

    CHECK(scaling_transporter(w1, Subspace::full(K)).is_full());
}

TEST_CASE("transporter matches the brute-force oracle") {
    std::mt19937_64 rng(29);
    for (auto K : {make_gf16(), make_gf27()}) {
        for (int i = 0; i < 60; ++i) {
            auto w1 = random_subspace(K, rng);
            auto w2 = random_subspace(K, rng);
            CHECK(scaling_transporter(w1, w2) == brute_transporter(w1, w2));
        }
    }
}

TEST_CASE("transporter elements really transport") {
    auto K = make_gf16();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        auto w1 = random_subspace(K, rng);
        auto w2 = random_subspace(K, rng);
        auto t = scaling_transporter(w1, w2);
        for (const auto& beta : t.basis_elements())
            for (const auto& w : w1.basis_elements()) CHECK(w2.contains(beta * w));
    }
}

TEST_CASE("projective equivalence basics") {
    auto K = make_gf16();
    auto a = K->alpha();
    auto w = Subspace::span(K, {K->one(), a});
    auto res = projectively_equivalent(w, w);
    CHECK(res.equivalent);
    REQUIRE(res.witness.has_value());
    CHECK(w.scaled(*res.witness) == w);
    CHECK_THROWS_AS(projectively_equivalent(Subspace::zero(K), w), ZeroSubspace);
}

TEST_CASE("quartic: V_1 root spaces at e=2 vs e=3 are inequivalent") {
    auto K = make_quartic_field();
    auto a = K->alpha();
    auto v1 = Subspace::span(K, {K->one(), a});
    auto w2 = v1.root_space(2);  // span{1, a^(1/4)}
    auto w3 = v1.root_space(3);  // span{1, a^(1/8)}
    auto res = projectively_equivalent(w2, w3);
    CHECK_FALSE(res.equivalent);
    CHECK(res.transporter.is_zero());
}

TEST_CASE("equivalence relation laws on random subspaces") {
    auto K = make_gf16();
    std::mt19937_64 rng(41);
    int transitive_hits = 0;
    for (int i = 0; i < 300; ++i) {
        auto w1 = random_subspace(K, rng);
        auto w2 = random_subspace(K, rng);
        auto w3 = random_subspace(K, rng);
        if (w1.is_zero() || w2.is_zero() || w3.is_zero()) continue;
        auto r12 = projectively_equivalent(w1, w2);
        auto r21 = projectively_equivalent(w2, w1);
        CHECK(r12.equivalent == r21.equivalent);  // symmetry
        CHECK(projectively_equivalent(w1, w1).equivalent);  // reflexivity
        auto r23 = projectively_equivalent(w2, w3);
        if (r12.equivalent && r23.equivalent) {
            ++transitive_hits;
            CHECK(projectively_equivalent(w1, w3).equivalent);
        }
    }
    CHECK(transitive_hits > 0);
}

TEST_CASE("Moebius specialization: span{1,x} ~ span{1,y} iff dim span{1,x,y,xy} <= 3") {
    auto K = make_gf16();
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        auto x = random_ext_elem(K, rng);
        auto y = random_ext_elem(K, rng);
        auto w1 = Subspace::span(K, {K->one(), x});
        auto w2 = Subspace::span(K, {K->one(), y});
        if (w1.dim() != 2 || w2.dim() != 2) continue;
        bool expected = Subspace::span(K, {K->one(), x, y, x * y}).dim() <= 3;
        CHECK(projectively_equivalent(w1, w2).equivalent == expected);
    }
}

TEST_CASE("canonical orbit labels are scaling invariant") {
    auto K = make_gf27();
    std::mt19937_64 rng(47);
    for (int i = 0; i < 30; ++i) {
        auto w = random_subspace(K, rng);
        if (w.is_zero()) continue;
        auto beta = random_ext_elem(K, rng);
        if (beta.is_zero()) continue;
        CHECK(canonical_orbit_label(w) == canonical_orbit_label(w.scaled(beta)));
    }
}
