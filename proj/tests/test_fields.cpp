#include "doctest.h"

#include "ffrep/ext_field.hpp"
#include "ffrep/errors.hpp"
#include "test_util.hpp"

using namespace ffrep;
using namespace ffrep::testutil;

TEST_CASE("GF(16) arithmetic against hand values") {
    auto K = make_gf16();
    auto a = K->alpha();
    // a^4 = a + 1
    CHECK(a.pow(4) == a + K->one());
    CHECK(a * a.pow(3) == a + K->one());
    CHECK(K->one().inv() == K->one());
    CHECK_THROWS_AS(K->zero().inv(), DivisionByZero);
}

TEST_CASE("field axioms on random GF(16) and GF(27) elements") {
    std::mt19937_64 rng(7);
    for (auto K : {make_gf16(), make_gf27()}) {
        for (int i = 0; i < 200; ++i) {
            auto a = random_ext_elem(K, rng);
            auto b = random_ext_elem(K, rng);
            auto c = random_ext_elem(K, rng);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            if (!a.is_zero()) CHECK(a * a.inv() == K->one());
        }
    }
}

TEST_CASE("frobenius basics") {
    auto K = make_gf16();
    auto a = K->alpha();
    CHECK(a.frobenius(0) == a);
    CHECK(a.frobenius(1) == a * a);
    // frobenius is additive and multiplicative
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto x = random_ext_elem(K, rng);
        auto y = random_ext_elem(K, rng);
        CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
        CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
    }
}

TEST_CASE("pth_root in GF(16): forced by field size") {
    auto K = make_gf16();
    auto a = K->alpha();
    CHECK(K->one().pth_root() == K->one());
    CHECK(a.pth_root() == a.pow(8));
    CHECK(a.pow(8) * a.pow(8) == a);
}

TEST_CASE("perfect closure of F_2(u): representation and roots") {
    auto k = BaseField::perfect_closure(2);
    auto u = BaseElem::variable(k);
    auto r = u.pth_root();
    CHECK(r.pc().level == 1);
    CHECK(r.pc().num == FpPoly(2, {0, 1}));
    CHECK(r.pow_p() == u);
    // normalization never increases level: (u^(1/2))^2 is back at level 0
    CHECK(r.pow_p().pc().level == 0);
    CHECK(BaseElem::one(k).pth_root() == BaseElem::one(k));
}

TEST_CASE("quartic extension over the perfect closure") {
    auto K = make_quartic_field();
    auto k = K->base();
    auto a = K->alpha();
    auto u = K->from_base(BaseElem::variable(k));
    // a^4 = a^2 + u a + 1
    CHECK(a * a.pow(3) == a * a + u * a + K->one());
    CHECK(a.frobenius(2) == a * a + u * a + K->one());
    // a^8 = (a^2+ua+1)^2 = (1+u^2) a^2 + u a  (char 2)
    auto u2 = u * u;
    CHECK(a.frobenius(3) == (K->one() + u2) * (a * a) + u * a);
}

TEST_CASE("round trips frobenius <-> pth_root") {
    std::mt19937_64 rng(23);
    for (auto K : {make_gf16(), make_gf27(), make_quartic_field()}) {
        for (int i = 0; i < 150; ++i) {
            auto x = random_ext_elem(K, rng);
            CHECK(x.pth_root().frobenius(1) == x);
            CHECK(x.frobenius(1).pth_root() == x);
        }
    }
}

TEST_CASE("normal forms are canonical in the perfect closure") {
    auto k = BaseField::perfect_closure(2);
    auto u = BaseElem::variable(k);
    // u/u = 1, (u^2 + u)/(u) = u + 1, etc.
    CHECK(u * u.inv() == BaseElem::one(k));
    auto x = (u * u + u) * u.inv();
    CHECK(x == u + BaseElem::one(k));
    CHECK(x.pc().level == 0);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto a = random_base_elem(k, rng);
        auto b = random_base_elem(k, rng);
        CHECK(((a - b).is_zero()) == (a == b));
    }
}

TEST_CASE("field mismatch is detected") {
    auto K1 = make_gf16();
    auto K2 = make_gf27();
    CHECK_THROWS_AS(K1->alpha() + K2->alpha(), FieldMismatch);
}

TEST_CASE("irreducibility screening") {
    auto f2 = BaseField::finite(2, 1);
    // x^4 + x^2 + 1 = (x^2+x+1)^2 is reducible
    std::vector<BaseElem> bad;
    for (int c : {1, 0, 1, 0, 1}) bad.push_back(BaseElem::from_int(f2, c));
    CHECK_THROWS_AS(ExtField::create(f2, bad), InvalidPresentation);

    // over the perfect closure, the trusted flag is required
    auto k = BaseField::perfect_closure(2);
    std::vector<BaseElem> mp = {BaseElem::one(k), BaseElem::variable(k), BaseElem::one(k),
                                BaseElem::zero(k), BaseElem::one(k)};
    CHECK_THROWS_AS(ExtField::create(k, mp, false), InvalidPresentation);
    CHECK_NOTHROW(ExtField::create(k, mp, true));
    // x^2 - u has the obvious... no small root, but it is inseparable in char 2
    std::vector<BaseElem> insep = {-BaseElem::variable(k), BaseElem::zero(k), BaseElem::one(k)};
    CHECK_THROWS_AS(ExtField::create(k, insep, true), InvalidPresentation);
}
