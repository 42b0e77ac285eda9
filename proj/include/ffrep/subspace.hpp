#ifndef FFREP_SUBSPACE_HPP
#define FFREP_SUBSPACE_HPP

#include <optional>
#include <vector>

#include "ffrep/ext_field.hpp"
#include "ffrep/linalg.hpp"

namespace ffrep {

/// A k-vector subspace of K, stored as a reduced row-echelon basis in
/// the power-basis coordinates of K. The RREF basis is canonical: two
/// subspaces are equal iff their bases are identical.
class Subspace {
public:
    static Subspace zero(ExtFieldPtr parent);
    static Subspace full(ExtFieldPtr parent);
    static Subspace span(ExtFieldPtr parent, const std::vector<ExtElem>& vectors);

    const ExtFieldPtr& parent() const { return parent_; }
    const linalg::Mat& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == parent_->degree(); }

    std::vector<ExtElem> basis_elements() const;
    bool contains(const ExtElem& v) const;
    bool contains_space(const Subspace& w) const;

    /// beta * W
    Subspace scaled(const ExtElem& beta) const;
    /// W^(1/p^e): coordinatewise inverse Frobenius of the basis, re-echelonized.
    Subspace root_space(unsigned e) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// total order by (dim, lexicographic flattened basis); canonical-label tie-break
    bool operator<(const Subspace& o) const;

private:
    Subspace(ExtFieldPtr parent, linalg::Mat basis)
        : parent_(std::move(parent)), basis_(std::move(basis)) {}

    ExtFieldPtr parent_;
    linalg::Mat basis_;
};

/// T = {beta in K | beta * W1 <= W2}, as a k-subspace of K.
Subspace scaling_transporter(const Subspace& w1, const Subspace& w2);

struct EquivResult {
    bool equivalent = false;
    std::optional<ExtElem> witness;  // beta with beta*W1 = W2, when equivalent
    Subspace transporter;            // zero transporter is the absence certificate
};

/// W1 ~ W2 iff dim W1 = dim W2 and the transporter is
/// nonzero. Both subspaces must be nonzero.
EquivResult projectively_equivalent(const Subspace& w1, const Subspace& w2);

/// Finite k only: lexicographically least RREF basis among {beta*W, beta in K*}.
Subspace canonical_orbit_label(const Subspace& w);

}  // namespace ffrep

#endif
