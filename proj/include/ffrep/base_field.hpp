#ifndef FFREP_BASE_FIELD_HPP
#define FFREP_BASE_FIELD_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ffrep/fp_poly.hpp"

namespace ffrep {

enum class FieldKind { Finite, PerfectClosure };

class BaseField;
using BaseFieldPtr = std::shared_ptr<const BaseField>;

/// The coefficient field k: either GF(p^f) or the perfect closure of
/// F_p(u), i.e. the union of F_p(u^{1/p^m}) over all m.
class BaseField : public std::enable_shared_from_this<BaseField> {
public:
    static BaseFieldPtr finite(Fp p, unsigned f);
    static BaseFieldPtr perfect_closure(Fp p, std::string variable = "u");

    FieldKind kind() const { return kind_; }
    Fp p() const { return p_; }
    unsigned f() const { return f_; }
    const std::string& variable() const { return var_; }
    /// GF(p^f) modulus polynomial over F_p (degree f); x for f = 1.
    const FpPoly& modulus() const { return modulus_; }
    bool is_finite() const { return kind_ == FieldKind::Finite; }
    /// Number of elements; only valid for the finite kind.
    std::uint64_t order() const;

    bool same_as(const BaseField& o) const;

private:
    BaseField() = default;

    FieldKind kind_ = FieldKind::Finite;
    Fp p_ = 2;
    unsigned f_ = 1;
    std::string var_;
    FpPoly modulus_;
};

/// Level-tagged rational function in v = u^{1/p^m}; stored with minimal
/// level, reduced fraction, monic denominator.
struct PCRep {
    unsigned level = 0;
    FpPoly num;
    FpPoly den;
};

/// An element of a BaseField, immutable with canonical normal form.
class BaseElem {
public:
    BaseElem() = default;
    /// Finite kind: coords over F_p in the power basis (length f).
    BaseElem(BaseFieldPtr field, std::vector<Fp> coords);
    BaseElem(BaseFieldPtr field, PCRep rep);

    static BaseElem zero(const BaseFieldPtr& field);
    static BaseElem one(const BaseFieldPtr& field);
    static BaseElem from_int(const BaseFieldPtr& field, std::int64_t v);
    /// Perfect-closure kind only: the transcendental u itself.
    static BaseElem variable(const BaseFieldPtr& field);
    /// Perfect-closure kind: num(v)/den(v) at the given level.
    static BaseElem rational(const BaseFieldPtr& field, unsigned level,
                             FpPoly num, FpPoly den);

    const BaseFieldPtr& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    const std::vector<Fp>& coords() const { return std::get<std::vector<Fp>>(rep_); }
    const PCRep& pc() const { return std::get<PCRep>(rep_); }

    BaseElem operator+(const BaseElem& o) const;
    BaseElem operator-(const BaseElem& o) const;
    BaseElem operator*(const BaseElem& o) const;
    BaseElem operator-() const;
    BaseElem inv() const;
    bool operator==(const BaseElem& o) const;
    bool operator!=(const BaseElem& o) const { return !(*this == o); }
    /// Total order on normal forms; used for canonical subspace labels.
    bool operator<(const BaseElem& o) const;

    /// p-th power (base-field Frobenius).
    BaseElem pow_p() const;
    /// Unique b with b^p = a; always exists (perfect field).
    BaseElem pth_root() const;

    std::string str() const;

private:
    void check_same(const BaseElem& o) const;
    void normalize();

    BaseFieldPtr field_;
    std::variant<std::vector<Fp>, PCRep> rep_;
};

/// All elements of a finite BaseField, in a fixed deterministic order.
std::vector<BaseElem> enumerate_field(const BaseFieldPtr& field);

}  // namespace ffrep

#endif
