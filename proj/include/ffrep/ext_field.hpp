#ifndef FFREP_EXT_FIELD_HPP
#define FFREP_EXT_FIELD_HPP

#include <memory>
#include <vector>

#include "ffrep/base_field.hpp"

namespace ffrep {

class ExtField;
class ExtElem;
using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// K = k[x]/(m(x)) for a monic irreducible m of degree n over the base
/// field k. Elements live in the power basis 1, alpha, ..., alpha^(n-1).
class ExtField : public std::enable_shared_from_this<ExtField> {
public:
    /// min_poly: coefficients c_0..c_n with c_n = 1. Over a finite base
    /// irreducibility is verified; over the perfect closure the caller
    /// must pass trusted_irreducible and the polynomial is checked for
    /// separability and absence of small rational roots.
    static ExtFieldPtr create(BaseFieldPtr base, std::vector<BaseElem> min_poly,
                              bool trusted_irreducible = false);

    const BaseFieldPtr& base() const { return base_; }
    unsigned degree() const { return n_; }
    const std::vector<BaseElem>& min_poly() const { return min_poly_; }
    bool is_finite() const { return base_->is_finite(); }
    /// |K| (finite kind only).
    std::uint64_t order() const;
    /// f with |K| = p^f (finite kind only) — the Frobenius period.
    unsigned frobenius_period() const { return base_->f() * n_; }

    ExtElem zero() const;
    ExtElem one() const;
    ExtElem alpha() const;
    /// alpha^j reduced into the power basis, any j >= 0.
    ExtElem alpha_power(std::size_t j) const;
    ExtElem from_base(const BaseElem& c) const;
    ExtElem element(std::vector<BaseElem> coords) const;

    /// alpha^(p*j) for j < n; drives Frobenius and p-th roots.
    const std::vector<std::vector<BaseElem>>& alpha_pow_p() const { return alpha_pow_p_; }

    bool same_as(const ExtField& o) const;

private:
    ExtField() = default;
    void validate_irreducible(bool trusted) const;

    BaseFieldPtr base_;
    std::vector<BaseElem> min_poly_;
    unsigned n_ = 1;
    std::vector<std::vector<BaseElem>> alpha_pow_p_;
};

/// An element of an ExtField; immutable, exact, canonical.
class ExtElem {
public:
    ExtElem() = default;
    ExtElem(ExtFieldPtr parent, std::vector<BaseElem> coords);

    const ExtFieldPtr& parent() const { return parent_; }
    const std::vector<BaseElem>& coords() const { return coords_; }
    bool is_zero() const;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem inv() const;
    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }
    bool operator<(const ExtElem& o) const;

    ExtElem pow(std::uint64_t e) const;
    /// a^(p^e)
    ExtElem frobenius(unsigned e) const;
    /// unique b with b^p = a
    ExtElem pth_root() const;
    ExtElem pth_root_iter(unsigned e) const;

    std::string str() const;

private:
    void check_same(const ExtElem& o) const;
    ExtElem pow_p() const;

    ExtFieldPtr parent_;
    std::vector<BaseElem> coords_;
};

/// All |K| elements of a finite ExtField in deterministic order.
std::vector<ExtElem> enumerate_ext_field(const ExtFieldPtr& field);

}  // namespace ffrep

#endif
