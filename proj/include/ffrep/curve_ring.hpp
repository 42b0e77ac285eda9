#ifndef FFREP_CURVE_RING_HPP
#define FFREP_CURVE_RING_HPP

#include <string>
#include <vector>

#include "ffrep/subspace.hpp"

namespace ffrep {

struct Generator {
    ExtElem coeff;    // nonzero element of K
    unsigned degree;  // n_i >= 1
};

/// A = k[a_1 t^{n_1}, ..., a_r t^{n_r}] inside B = K[t].
struct RingPresentation {
    ExtFieldPtr field;  // K over k
    std::vector<Generator> generators;
    std::string label;
};

/// Degrees realized by A, with membership known up to the stabilization
/// bound used when the profile was computed.
struct NumericalSemigroup {
    std::vector<unsigned> generators;
    std::vector<bool> membership;  // membership[i] <=> V_i != 0, i < bound
    unsigned conductor = 0;        // c(H)
    bool contains(unsigned i) const { return i >= membership.size() || membership[i]; }
};

/// The table i -> V_i for i below the conductor; V_i = K beyond it.
class CoefficientProfile {
public:
    CoefficientProfile(ExtFieldPtr field, std::vector<Subspace> table, unsigned conductor)
        : field_(std::move(field)), table_(std::move(table)), conductor_(conductor) {}

    unsigned conductor() const { return conductor_; }
    const Subspace& at(std::size_t i) const;
    std::size_t table_size() const { return table_.size(); }

private:
    ExtFieldPtr field_;
    std::vector<Subspace> table_;  // V_0 .. V_{size-1}, all indices >= conductor are full
    unsigned conductor_ = 0;
    mutable std::vector<Subspace> full_cache_;
};

/// A validated presentation with its derived data (V_i, conductor, H).
class CurveRing {
public:
    /// Validates the presentation and computes the coefficient profile.
    /// Throws InvalidPresentation / StabilizationFailure.
    static CurveRing analyze(RingPresentation pres);

    const RingPresentation& presentation() const { return pres_; }
    const ExtFieldPtr& field() const { return pres_.field; }
    unsigned conductor() const { return profile_->conductor(); }
    const NumericalSemigroup& semigroup() const { return semigroup_; }
    const CoefficientProfile& profile() const { return *profile_; }
    const Subspace& V(std::size_t i) const { return profile_->at(i); }

    /// dim_k [A^{1/q}]_{j/q} = dim_k V_j; e kept for interface fidelity.
    unsigned hilbert_dim(unsigned e, std::size_t j) const;

private:
    CurveRing() = default;

    RingPresentation pres_;
    std::shared_ptr<const CoefficientProfile> profile_;
    NumericalSemigroup semigroup_;
};

/// V_i from scratch (DP over generator degrees); used by CurveRing and
/// directly testable.
Subspace coefficient_space(const RingPresentation& pres, std::size_t i);

}  // namespace ffrep

#endif
