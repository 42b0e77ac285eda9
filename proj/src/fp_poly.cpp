#include "ffrep/fp_poly.hpp"

#include <algorithm>

namespace ffrep {

Fp fp_inv(Fp a, Fp p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Fp>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FpPoly::FpPoly(Fp p, std::vector<Fp> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_;
    trim();
}

FpPoly FpPoly::monomial(Fp p, Fp c, std::size_t deg) {
    std::vector<Fp> v(deg + 1, 0);
    v[deg] = c % p;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r(p_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = (coeff(i) + o.coeff(i)) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r(p_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    FpPoly r(p_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            r.coeffs_[i + j] =
                static_cast<Fp>((r.coeffs_[i + j] +
                                 static_cast<std::uint64_t>(coeffs_[i]) * o.coeffs_[j]) % p_);
        }
    }
    r.trim();
    return r;
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(),
                                        o.coeffs_.rbegin(), o.coeffs_.rend());
}

FpPoly FpPoly::scaled(Fp c) const {
    c %= p_;
    FpPoly r(p_);
    r.coeffs_.reserve(coeffs_.size());
    for (Fp a : coeffs_)
        r.coeffs_.push_back(static_cast<Fp>(static_cast<std::uint64_t>(a) * c % p_));
    r.trim();
    return r;
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading(), p_));
}

FpPoly FpPoly::derivative() const {
    FpPoly r(p_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(static_cast<Fp>(static_cast<std::uint64_t>(coeffs_[i]) * (i % p_) % p_));
    r.trim();
    return r;
}

FpPoly FpPoly::inflate(std::size_t k) const {
    if (is_zero() || k == 1) return *this;
    FpPoly r(p_);
    r.coeffs_.assign((coeffs_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * k] = coeffs_[i];
    return r;
}

bool FpPoly::try_deflate(std::size_t k, FpPoly& out) const {
    if (k == 1 || is_zero()) {
        out = *this;
        return true;
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0 && i % k != 0) return false;
    FpPoly r(p_);
    for (std::size_t i = 0; i < coeffs_.size(); i += k) r.coeffs_.push_back(coeffs_[i]);
    r.trim();
    out = std::move(r);
    return true;
}

void FpPoly::divmod(const FpPoly& a, const FpPoly& b, FpPoly& quot, FpPoly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    Fp p = a.p_;
    quot = FpPoly(p);
    rem = a;
    if (a.degree() < b.degree()) return;
    quot.coeffs_.assign(a.degree() - b.degree() + 1, 0);
    Fp lead_inv = fp_inv(b.leading(), p);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        std::size_t shift = rem.degree() - b.degree();
        Fp c = static_cast<Fp>(static_cast<std::uint64_t>(rem.leading()) * lead_inv % p);
        quot.coeffs_[shift] = c;
        rem = rem - b.scaled(c) * FpPoly::monomial(p, 1, shift);
    }
    quot.trim();
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly q(a.p_), r(a.p_);
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string FpPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || coeffs_[i] != 1) s += std::to_string(coeffs_[i]);
        if (i >= 1) {
            if (coeffs_[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace ffrep
