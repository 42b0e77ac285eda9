#include "ffrep/base_field.hpp"

#include <algorithm>

namespace ffrep {

namespace {

// Trial division by all monic polynomials of degree <= deg(m)/2.
// Fields here stay small, so brute force is fine.
bool irreducible_over_fp(const FpPoly& m) {
    Fp p = m.characteristic();
    int n = m.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (m.coeff(0) == 0) return false;
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<Fp> c(d + 1, 0);
        c[d] = 1;
        while (true) {
            FpPoly divisor(p, c);
            FpPoly q(p), r(p);
            FpPoly::divmod(m, divisor, q, r);
            if (r.is_zero()) return false;
            // next candidate of degree d
            int i = 0;
            while (i < d && c[i] == p - 1) c[i++] = 0;
            if (i == d) break;
            ++c[i];
        }
    }
    return true;
}

FpPoly find_irreducible(Fp p, unsigned f) {
    if (f == 1) return FpPoly(p, {0, 1});  // x
    std::vector<Fp> c(f + 1, 0);
    c[f] = 1;
    while (true) {
        FpPoly m(p, c);
        if (irreducible_over_fp(m)) return m;
        unsigned i = 0;
        while (i < f && c[i] == p - 1) c[i++] = 0;
        if (i == f) break;
        ++c[i];
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

std::vector<Fp> poly_mod_coords(const FpPoly& a, const FpPoly& modulus, unsigned f) {
    FpPoly q(a.characteristic()), r(a.characteristic());
    FpPoly::divmod(a, modulus, q, r);
    std::vector<Fp> coords(f, 0);
    for (unsigned i = 0; i < f; ++i) coords[i] = r.coeff(i);
    return coords;
}

FpPoly coords_to_poly(Fp p, const std::vector<Fp>& coords) {
    return FpPoly(p, coords);
}

// inverse of a modulo m over F_p, m irreducible, a != 0 mod m
FpPoly fp_poly_inv_mod(const FpPoly& a, const FpPoly& m) {
    Fp p = a.characteristic();
    FpPoly r0 = m, r1 = a;
    FpPoly t0(p), t1 = FpPoly::constant(p, 1);
    while (!r1.is_zero()) {
        FpPoly q(p), rem(p);
        FpPoly::divmod(r0, r1, q, rem);
        FpPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd, a unit since m irreducible and a nonzero
    if (r0.degree() != 0) throw DivisionByZero("element not invertible");
    return t0.scaled(fp_inv(r0.coeff(0), p));
}

}  // namespace

BaseFieldPtr BaseField::finite(Fp p, unsigned f) {
    if (!is_prime(p)) throw InvalidPresentation("characteristic must be prime, got " + std::to_string(p));
    if (f < 1) throw InvalidPresentation("extension degree f must be >= 1");
    auto fld = std::shared_ptr<BaseField>(new BaseField());
    fld->kind_ = FieldKind::Finite;
    fld->p_ = p;
    fld->f_ = f;
    fld->modulus_ = find_irreducible(p, f);
    return fld;
}

BaseFieldPtr BaseField::perfect_closure(Fp p, std::string variable) {
    if (!is_prime(p)) throw InvalidPresentation("characteristic must be prime, got " + std::to_string(p));
    auto fld = std::shared_ptr<BaseField>(new BaseField());
    fld->kind_ = FieldKind::PerfectClosure;
    fld->p_ = p;
    fld->f_ = 1;
    fld->var_ = std::move(variable);
    return fld;
}

std::uint64_t BaseField::order() const {
    if (kind_ != FieldKind::Finite) throw Error("order() of an infinite field");
    std::uint64_t n = 1;
    for (unsigned i = 0; i < f_; ++i) n *= p_;
    return n;
}

bool BaseField::same_as(const BaseField& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && f_ == o.f_ && var_ == o.var_;
}

BaseElem::BaseElem(BaseFieldPtr field, std::vector<Fp> coords)
    : field_(std::move(field)), rep_(std::move(coords)) {
    auto& c = std::get<std::vector<Fp>>(rep_);
    c.resize(field_->f(), 0);
    for (auto& x : c) x %= field_->p();
}

BaseElem::BaseElem(BaseFieldPtr field, PCRep rep) : field_(std::move(field)), rep_(std::move(rep)) {
    normalize();
}

BaseElem BaseElem::zero(const BaseFieldPtr& field) { return from_int(field, 0); }
BaseElem BaseElem::one(const BaseFieldPtr& field) { return from_int(field, 1); }

BaseElem BaseElem::from_int(const BaseFieldPtr& field, std::int64_t v) {
    Fp p = field->p();
    Fp c = static_cast<Fp>(((v % p) + p) % p);
    if (field->is_finite()) {
        std::vector<Fp> coords(field->f(), 0);
        coords[0] = c;
        return BaseElem(field, std::move(coords));
    }
    PCRep r;
    r.num = FpPoly::constant(p, c);
    r.den = FpPoly::constant(p, 1);
    return BaseElem(field, std::move(r));
}

BaseElem BaseElem::variable(const BaseFieldPtr& field) {
    if (field->is_finite()) throw Error("variable() on a finite field");
    PCRep r;
    r.num = FpPoly(field->p(), {0, 1});
    r.den = FpPoly::constant(field->p(), 1);
    return BaseElem(field, std::move(r));
}

BaseElem BaseElem::rational(const BaseFieldPtr& field, unsigned level, FpPoly num, FpPoly den) {
    if (field->is_finite()) throw Error("rational() on a finite field");
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    PCRep r{level, std::move(num), std::move(den)};
    return BaseElem(field, std::move(r));
}

bool BaseElem::is_zero() const {
    if (field_->is_finite()) {
        for (Fp c : coords())
            if (c != 0) return false;
        return true;
    }
    return pc().num.is_zero();
}

bool BaseElem::is_one() const {
    if (field_->is_finite()) {
        const auto& c = coords();
        if (c[0] != 1) return false;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    return pc().num.is_one() && pc().den.is_one();
}

void BaseElem::check_same(const BaseElem& o) const {
    if (!field_ || !o.field_ || !field_->same_as(*o.field_))
        throw FieldMismatch("operands from different base fields");
}

void BaseElem::normalize() {
    if (field_->is_finite()) return;
    auto& r = std::get<PCRep>(rep_);
    if (r.den.is_zero()) throw DivisionByZero("zero denominator");
    if (r.num.is_zero()) {
        r.level = 0;
        r.num = FpPoly(field_->p());
        r.den = FpPoly::constant(field_->p(), 1);
        return;
    }
    FpPoly g = FpPoly::gcd(r.num, r.den);
    if (g.degree() > 0) {
        FpPoly q(field_->p()), rem(field_->p());
        FpPoly::divmod(r.num, g, q, rem);
        r.num = q;
        FpPoly::divmod(r.den, g, q, rem);
        r.den = q;
    }
    Fp lead = r.den.leading();
    if (lead != 1) {
        Fp li = fp_inv(lead, field_->p());
        r.num = r.num.scaled(li);
        r.den = r.den.scaled(li);
    }
    // minimal level: deflate by p while possible
    Fp p = field_->p();
    while (r.level > 0) {
        FpPoly dn(p), dd(p);
        if (r.num.try_deflate(p, dn) && r.den.try_deflate(p, dd)) {
            r.num = std::move(dn);
            r.den = std::move(dd);
            --r.level;
        } else {
            break;
        }
    }
}

BaseElem BaseElem::operator+(const BaseElem& o) const {
    check_same(o);
    if (field_->is_finite()) {
        std::vector<Fp> c(field_->f());
        for (unsigned i = 0; i < field_->f(); ++i)
            c[i] = (coords()[i] + o.coords()[i]) % field_->p();
        return BaseElem(field_, std::move(c));
    }
    const PCRep &a = pc(), &b = o.pc();
    unsigned lvl = std::max(a.level, b.level);
    std::size_t sa = 1, sb = 1;
    for (unsigned i = a.level; i < lvl; ++i) sa *= field_->p();
    for (unsigned i = b.level; i < lvl; ++i) sb *= field_->p();
    FpPoly an = a.num.inflate(sa), ad = a.den.inflate(sa);
    FpPoly bn = b.num.inflate(sb), bd = b.den.inflate(sb);
    PCRep r{lvl, an * bd + bn * ad, ad * bd};
    return BaseElem(field_, std::move(r));
}

BaseElem BaseElem::operator-() const {
    if (field_->is_finite()) {
        std::vector<Fp> c(field_->f());
        for (unsigned i = 0; i < field_->f(); ++i)
            c[i] = (field_->p() - coords()[i]) % field_->p();
        return BaseElem(field_, std::move(c));
    }
    PCRep r = pc();
    r.num = FpPoly(field_->p()) - r.num;
    return BaseElem(field_, std::move(r));
}

BaseElem BaseElem::operator-(const BaseElem& o) const { return *this + (-o); }

BaseElem BaseElem::operator*(const BaseElem& o) const {
    check_same(o);
    if (field_->is_finite()) {
        FpPoly prod = coords_to_poly(field_->p(), coords()) * coords_to_poly(field_->p(), o.coords());
        return BaseElem(field_, poly_mod_coords(prod, field_->modulus(), field_->f()));
    }
    const PCRep &a = pc(), &b = o.pc();
    unsigned lvl = std::max(a.level, b.level);
    std::size_t sa = 1, sb = 1;
    for (unsigned i = a.level; i < lvl; ++i) sa *= field_->p();
    for (unsigned i = b.level; i < lvl; ++i) sb *= field_->p();
    PCRep r{lvl, a.num.inflate(sa) * b.num.inflate(sb), a.den.inflate(sa) * b.den.inflate(sb)};
    return BaseElem(field_, std::move(r));
}

BaseElem BaseElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (field_->is_finite()) {
        FpPoly a = coords_to_poly(field_->p(), coords());
        FpPoly b = fp_poly_inv_mod(a, field_->modulus());
        return BaseElem(field_, poly_mod_coords(b, field_->modulus(), field_->f()));
    }
    PCRep r{pc().level, pc().den, pc().num};
    return BaseElem(field_, std::move(r));
}

bool BaseElem::operator==(const BaseElem& o) const {
    check_same(o);
    if (field_->is_finite()) return coords() == o.coords();
    const PCRep &a = pc(), &b = o.pc();
    return a.level == b.level && a.num == b.num && a.den == b.den;
}

bool BaseElem::operator<(const BaseElem& o) const {
    check_same(o);
    if (field_->is_finite())
        return std::lexicographical_compare(coords().begin(), coords().end(),
                                            o.coords().begin(), o.coords().end());
    const PCRep &a = pc(), &b = o.pc();
    if (a.level != b.level) return a.level < b.level;
    if (a.den != b.den) return a.den < b.den;
    return a.num < b.num;
}

BaseElem BaseElem::pow_p() const {
    Fp p = field_->p();
    if (field_->is_finite()) {
        BaseElem r = one(field_);
        BaseElem b = *this;
        Fp e = p;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    const PCRep& a = pc();
    if (a.level > 0) {
        // coefficients in F_p are Frobenius-fixed, so raising to the p-th
        // power just drops one level
        PCRep r{a.level - 1, a.num, a.den};
        return BaseElem(field_, std::move(r));
    }
    PCRep r{0, a.num.inflate(p), a.den.inflate(p)};
    return BaseElem(field_, std::move(r));
}

BaseElem BaseElem::pth_root() const {
    if (field_->is_finite()) {
        // a^(p^(f-1)) inverts Frobenius on GF(p^f)
        BaseElem r = *this;
        for (unsigned i = 0; i + 1 < field_->f(); ++i) r = r.pow_p();
        return r;
    }
    const PCRep& a = pc();
    PCRep r{a.level + 1, a.num, a.den};
    return BaseElem(field_, std::move(r));
}

std::string BaseElem::str() const {
    if (field_->is_finite()) {
        FpPoly p(field_->p(), coords());
        return p.is_zero() ? "0" : p.str("g");
    }
    const PCRep& a = pc();
    std::string var = field_->variable();
    if (a.level > 0)
        var += "^(1/" + std::to_string([&] {
            std::uint64_t q = 1;
            for (unsigned i = 0; i < a.level; ++i) q *= field_->p();
            return q;
        }()) + ")";
    std::string s = a.num.str(var);
    if (!a.den.is_one()) s = "(" + s + ")/(" + a.den.str(var) + ")";
    return s;
}

std::vector<BaseElem> enumerate_field(const BaseFieldPtr& field) {
    if (!field->is_finite()) throw Error("cannot enumerate an infinite field");
    std::vector<BaseElem> out;
    std::vector<Fp> c(field->f(), 0);
    while (true) {
        out.push_back(BaseElem(field, c));
        unsigned i = 0;
        while (i < field->f() && c[i] == field->p() - 1) c[i++] = 0;
        if (i == field->f()) break;
        ++c[i];
    }
    return out;
}

}  // namespace ffrep
