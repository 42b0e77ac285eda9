#include "ffrep/ext_field.hpp"

#include <algorithm>

#include "ffrep/errors.hpp"
#include "ffrep/linalg.hpp"

namespace ffrep {

namespace {

// dense polynomials over a BaseField (little-endian, trimmed)
using EPoly = std::vector<BaseElem>;

void trim(EPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

EPoly mul(const EPoly& a, const EPoly& b, const BaseFieldPtr& k) {
    if (a.empty() || b.empty()) return {};
    EPoly r(a.size() + b.size() - 1, BaseElem::zero(k));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    }
    trim(r);
    return r;
}

EPoly sub(const EPoly& a, const EPoly& b, const BaseFieldPtr& k) {
    EPoly r(std::max(a.size(), b.size()), BaseElem::zero(k));
    for (std::size_t i = 0; i < r.size(); ++i) {
        BaseElem ai = i < a.size() ? a[i] : BaseElem::zero(k);
        BaseElem bi = i < b.size() ? b[i] : BaseElem::zero(k);
        r[i] = ai - bi;
    }
    trim(r);
    return r;
}

void divmod(const EPoly& a, const EPoly& b, EPoly& q, EPoly& rem, const BaseFieldPtr& k) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    q.clear();
    rem = a;
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, BaseElem::zero(k));
    BaseElem lead_inv = b.back().inv();
    while (rem.size() >= b.size()) {
        std::size_t shift = rem.size() - b.size();
        BaseElem c = rem.back() * lead_inv;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[shift + j] = rem[shift + j] - c * b[j];
        trim(rem);
        if (rem.empty()) break;
    }
    trim(q);
}

EPoly gcd(EPoly a, EPoly b, const BaseFieldPtr& k) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        EPoly q, r;
        divmod(a, b, q, r, k);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        BaseElem li = a.back().inv();
        for (auto& c : a) c = c * li;
    }
    return a;
}

EPoly powmod(EPoly base, std::uint64_t e, const EPoly& m, const BaseFieldPtr& k) {
    EPoly r{BaseElem::one(k)};
    while (e > 0) {
        EPoly q, rem;
        if (e & 1) {
            r = mul(r, base, k);
            divmod(r, m, q, rem, k);
            r = rem;
        }
        base = mul(base, base, k);
        divmod(base, m, q, rem, k);
        base = rem;
        e >>= 1;
    }
    return r;
}

EPoly derivative(const EPoly& a, const BaseFieldPtr& k) {
    EPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) {
        BaseElem c = BaseElem::zero(k);
        for (std::size_t t = 0; t < i % k->p(); ++t) c = c + a[i];
        r.push_back(c);
    }
    trim(r);
    return r;
}

BaseElem eval(const EPoly& a, const BaseElem& x, const BaseFieldPtr& k) {
    BaseElem r = BaseElem::zero(k);
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

}  // namespace

ExtFieldPtr ExtField::create(BaseFieldPtr base, std::vector<BaseElem> min_poly,
                             bool trusted_irreducible) {
    if (min_poly.size() < 2) throw InvalidPresentation("min_poly must have degree >= 1");
    if (!min_poly.back().is_one()) throw InvalidPresentation("min_poly must be monic");
    for (const auto& c : min_poly)
        if (!c.field()->same_as(*base)) throw FieldMismatch("min_poly coefficient field");

    auto fld = std::shared_ptr<ExtField>(new ExtField());
    fld->base_ = std::move(base);
    fld->min_poly_ = std::move(min_poly);
    fld->n_ = static_cast<unsigned>(fld->min_poly_.size() - 1);
    fld->validate_irreducible(trusted_irreducible);

    // alpha^(p*j) mod m for j < n
    ExtFieldPtr self = fld;
    fld->alpha_pow_p_.reserve(fld->n_);
    for (unsigned j = 0; j < fld->n_; ++j)
        fld->alpha_pow_p_.push_back(fld->alpha_power(static_cast<std::size_t>(fld->base_->p()) * j).coords());
    return fld;
}

void ExtField::validate_irreducible(bool trusted) const {
    const auto& k = base_;
    EPoly m = min_poly_;
    if (n_ == 1) return;  // any monic linear polynomial is irreducible
    if (k->is_finite()) {
        std::uint64_t q = k->order();
        // x^(q^d) mod m chain
        EPoly x{BaseElem::zero(k), BaseElem::one(k)};
        std::vector<EPoly> chain;  // chain[d-1] = x^(q^d) mod m
        EPoly cur = x;
        for (unsigned d = 1; d <= n_; ++d) {
            cur = powmod(cur, q, m, k);
            chain.push_back(cur);
        }
        if (!sub(chain[n_ - 1], x, k).empty())
            throw InvalidPresentation("min_poly is reducible (x^(q^n) != x)");
        for (unsigned t = 2; t <= n_; ++t) {
            if (n_ % t != 0 || !is_prime(t)) continue;
            EPoly g = gcd(sub(chain[n_ / t - 1], x, k), m, k);
            if (g.size() != 1)
                throw InvalidPresentation("min_poly is reducible (degree " +
                                          std::to_string(n_ / t) + " factor)");
        }
        return;
    }
    // Infinite base: cannot decide irreducibility in general. Require the
    // trusted flag, then check separability and absence of small roots.
    if (!trusted)
        throw InvalidPresentation(
            "min_poly over an infinite base requires trusted_irreducible");
    EPoly g = gcd(m, derivative(m, k), k);
    if (g.size() != 1)
        throw InvalidPresentation("min_poly is not separable (not reduced)");
    // small-root scan: num/den with deg num <= 2, den monic of deg <= 1
    Fp p = k->p();
    std::vector<FpPoly> dens = {FpPoly::constant(p, 1)};
    for (Fp c = 0; c < p; ++c) dens.push_back(FpPoly(p, {c, 1}));
    std::vector<Fp> nc(3, 0);
    while (true) {
        FpPoly num(p, nc);
        for (const auto& den : dens) {
            BaseElem cand = BaseElem::rational(k, 0, num, den);
            if (eval(m, cand, k).is_zero())
                throw InvalidPresentation("min_poly has root " + cand.str());
        }
        unsigned i = 0;
        while (i < 3 && nc[i] == p - 1) nc[i++] = 0;
        if (i == 3) break;
        ++nc[i];
    }
}

std::uint64_t ExtField::order() const {
    std::uint64_t q = base_->order();
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n_; ++i) r *= q;
    return r;
}

ExtElem ExtField::zero() const {
    return ExtElem(shared_from_this(), std::vector<BaseElem>(n_, BaseElem::zero(base_)));
}

ExtElem ExtField::one() const { return from_base(BaseElem::one(base_)); }

ExtElem ExtField::alpha() const { return alpha_power(1); }

ExtElem ExtField::alpha_power(std::size_t j) const {
    EPoly x(j + 1, BaseElem::zero(base_));
    x[j] = BaseElem::one(base_);
    EPoly q, rem;
    divmod(x, min_poly_, q, rem, base_);
    rem.resize(n_, BaseElem::zero(base_));
    return ExtElem(shared_from_this(), std::move(rem));
}

ExtElem ExtField::from_base(const BaseElem& c) const {
    std::vector<BaseElem> coords(n_, BaseElem::zero(base_));
    coords[0] = c;
    return ExtElem(shared_from_this(), std::move(coords));
}

ExtElem ExtField::element(std::vector<BaseElem> coords) const {
    return ExtElem(shared_from_this(), std::move(coords));
}

bool ExtField::same_as(const ExtField& o) const {
    if (!base_->same_as(*o.base_) || n_ != o.n_) return false;
    for (unsigned i = 0; i <= n_; ++i)
        if (min_poly_[i] != o.min_poly_[i]) return false;
    return true;
}

ExtElem::ExtElem(ExtFieldPtr parent, std::vector<BaseElem> coords)
    : parent_(std::move(parent)), coords_(std::move(coords)) {
    if (coords_.size() != parent_->degree())
        throw Error("coordinate vector has wrong length");
}

bool ExtElem::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const BaseElem& c) { return c.is_zero(); });
}

void ExtElem::check_same(const ExtElem& o) const {
    if (!parent_ || !o.parent_ || !parent_->same_as(*o.parent_))
        throw FieldMismatch("operands from different extension fields");
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_same(o);
    std::vector<BaseElem> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
    return ExtElem(parent_, std::move(c));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator-() const {
    std::vector<BaseElem> c(coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
    return ExtElem(parent_, std::move(c));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check_same(o);
    const auto& k = parent_->base();
    EPoly a = coords_, b = o.coords_;
    trim(a);
    trim(b);
    EPoly prod = mul(a, b, k);
    EPoly q, rem;
    divmod(prod, parent_->min_poly(), q, rem, k);
    rem.resize(parent_->degree(), BaseElem::zero(k));
    return ExtElem(parent_, std::move(rem));
}

ExtElem ExtElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in K");
    const auto& k = parent_->base();
    EPoly a = coords_;
    trim(a);
    EPoly r0 = parent_->min_poly(), r1 = a;
    EPoly t0, t1{BaseElem::one(k)};
    while (!r1.empty()) {
        EPoly q, rem;
        divmod(r0, r1, q, rem, k);
        EPoly t2 = sub(t0, mul(q, t1, k), k);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    BaseElem li = r0.back().inv();
    for (auto& c : t0) c = c * li;
    EPoly q, rem;
    divmod(t0, parent_->min_poly(), q, rem, k);
    rem.resize(parent_->degree(), BaseElem::zero(k));
    return ExtElem(parent_, std::move(rem));
}

bool ExtElem::operator==(const ExtElem& o) const {
    check_same(o);
    return coords_ == o.coords_;
}

bool ExtElem::operator<(const ExtElem& o) const {
    check_same(o);
    return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                        o.coords_.begin(), o.coords_.end());
}

ExtElem ExtElem::pow(std::uint64_t e) const {
    ExtElem r = parent_->one();
    ExtElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

ExtElem ExtElem::pow_p() const {
    // a^p = sum_j a_j^p * alpha^(p j)
    const auto& k = parent_->base();
    std::vector<BaseElem> acc(parent_->degree(), BaseElem::zero(k));
    const auto& table = parent_->alpha_pow_p();
    for (std::size_t j = 0; j < coords_.size(); ++j) {
        if (coords_[j].is_zero()) continue;
        BaseElem cj = coords_[j].pow_p();
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] = acc[i] + cj * table[j][i];
    }
    return ExtElem(parent_, std::move(acc));
}

ExtElem ExtElem::frobenius(unsigned e) const {
    ExtElem r = *this;
    for (unsigned i = 0; i < e; ++i) r = r.pow_p();
    return r;
}

ExtElem ExtElem::pth_root() const {
    // Solve sum_j c_j * alpha^(p j) = a for c, then b_j = c_j^(1/p).
    const auto& k = parent_->base();
    unsigned n = parent_->degree();
    const auto& table = parent_->alpha_pow_p();
    linalg::Mat M(n, linalg::Vec(n, BaseElem::zero(k)));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) M[i][j] = table[j][i];
    linalg::Vec x;
    if (!linalg::solve(M, coords_, x, k))
        throw Error("pth_root: Frobenius system inconsistent (field not perfect?)");
    std::vector<BaseElem> b(n, BaseElem::zero(k));
    for (unsigned j = 0; j < n; ++j) b[j] = x[j].pth_root();
    return ExtElem(parent_, std::move(b));
}

ExtElem ExtElem::pth_root_iter(unsigned e) const {
    ExtElem r = *this;
    for (unsigned i = 0; i < e; ++i) r = r.pth_root();
    return r;
}

std::string ExtElem::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = coords_[i].str();
        bool simple = coords_[i].is_one();
        if (i == 0) {
            s += c;
        } else {
            if (!simple) s += "(" + c + ")*";
            s += "a";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<ExtElem> enumerate_ext_field(const ExtFieldPtr& field) {
    if (!field->is_finite()) throw Error("cannot enumerate an infinite field");
    auto base_elems = enumerate_field(field->base());
    std::vector<ExtElem> out;
    unsigned n = field->degree();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<BaseElem> coords;
        coords.reserve(n);
        for (unsigned j = 0; j < n; ++j) coords.push_back(base_elems[idx[j]]);
        out.push_back(field->element(std::move(coords)));
        unsigned i = 0;
        while (i < n && idx[i] == base_elems.size() - 1) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return out;
}

}  // namespace ffrep
