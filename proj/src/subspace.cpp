#include "ffrep/subspace.hpp"

#include <algorithm>

#include "ffrep/errors.hpp"

namespace ffrep {

namespace {

// column j = coordinates of w * alpha^j; entries lie in k
linalg::Mat mult_matrix(const ExtElem& w) {
    const auto& K = w.parent();
    unsigned n = K->degree();
    linalg::Mat M(n, linalg::Vec(n, BaseElem::zero(K->base())));
    for (unsigned j = 0; j < n; ++j) {
        ExtElem col = w * K->alpha_power(j);
        for (unsigned i = 0; i < n; ++i) M[i][j] = col.coords()[i];
    }
    return M;
}

}  // namespace

Subspace Subspace::zero(ExtFieldPtr parent) { return Subspace(std::move(parent), {}); }

Subspace Subspace::full(ExtFieldPtr parent) {
    unsigned n = parent->degree();
    const auto& k = parent->base();
    linalg::Mat basis(n, linalg::Vec(n, BaseElem::zero(k)));
    for (unsigned i = 0; i < n; ++i) basis[i][i] = BaseElem::one(k);
    return Subspace(std::move(parent), std::move(basis));
}

Subspace Subspace::span(ExtFieldPtr parent, const std::vector<ExtElem>& vectors) {
    linalg::Mat m;
    for (const auto& v : vectors) {
        if (!v.parent()->same_as(*parent))
            throw FieldMismatch("span over mixed parent fields");
        m.push_back(v.coords());
    }
    linalg::rref(m);
    return Subspace(std::move(parent), std::move(m));
}

std::vector<ExtElem> Subspace::basis_elements() const {
    std::vector<ExtElem> out;
    out.reserve(basis_.size());
    for (const auto& row : basis_) out.push_back(parent_->element(row));
    return out;
}

bool Subspace::contains(const ExtElem& v) const {
    linalg::Mat m = basis_;
    m.push_back(v.coords());
    linalg::rref(m);
    return m.size() == basis_.size();
}

bool Subspace::contains_space(const Subspace& w) const {
    return std::all_of(w.basis_.begin(), w.basis_.end(), [&](const linalg::Vec& row) {
        return contains(parent_->element(row));
    });
}

Subspace Subspace::scaled(const ExtElem& beta) const {
    std::vector<ExtElem> vecs;
    vecs.reserve(basis_.size());
    for (const auto& v : basis_elements()) vecs.push_back(beta * v);
    return span(parent_, vecs);
}

Subspace Subspace::root_space(unsigned e) const {
    std::vector<ExtElem> vecs;
    vecs.reserve(basis_.size());
    for (const auto& v : basis_elements()) vecs.push_back(v.pth_root_iter(e));
    return span(parent_, vecs);
}

bool Subspace::operator==(const Subspace& o) const {
    if (!parent_->same_as(*o.parent_)) throw FieldMismatch("subspace comparison");
    if (basis_.size() != o.basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] != o.basis_[i]) return false;
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (basis_.size() != o.basis_.size()) return basis_.size() < o.basis_.size();
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_[i].size(); ++j) {
            if (basis_[i][j] != o.basis_[i][j]) return basis_[i][j] < o.basis_[i][j];
        }
    return false;
}

Subspace scaling_transporter(const Subspace& w1, const Subspace& w2) {
    if (!w1.parent()->same_as(*w2.parent()))
        throw FieldMismatch("transporter between different fields");
    const auto& K = w1.parent();
    const auto& k = K->base();
    unsigned n = K->degree();
    if (w1.is_zero() || w2.is_full()) return Subspace::full(K);

    // functionals vanishing on W2
    linalg::Mat ann = linalg::nullspace(w2.basis(), n, k);

    // each basis w of W1 and functional phi give a linear condition
    // phi^T (M_w beta) = 0 on beta's coordinates
    linalg::Mat constraints;
    for (const auto& w : w1.basis_elements()) {
        linalg::Mat Mw = mult_matrix(w);
        for (const auto& phi : ann) {
            linalg::Vec row(n, BaseElem::zero(k));
            for (unsigned j = 0; j < n; ++j)
                for (unsigned i = 0; i < n; ++i)
                    row[j] = row[j] + phi[i] * Mw[i][j];
            constraints.push_back(std::move(row));
        }
    }
    if (constraints.empty()) return Subspace::full(K);
    linalg::Mat basis = linalg::nullspace(std::move(constraints), n, k);
    std::vector<ExtElem> vecs;
    for (const auto& row : basis) vecs.push_back(K->element(row));
    return Subspace::span(K, vecs);
}

EquivResult projectively_equivalent(const Subspace& w1, const Subspace& w2) {
    if (w1.is_zero() || w2.is_zero())
        throw ZeroSubspace("projective equivalence needs nonzero subspaces");
    EquivResult res{false, std::nullopt, scaling_transporter(w1, w2)};
    if (w1.dim() == w2.dim() && !res.transporter.is_zero()) {
        res.equivalent = true;
        res.witness = res.transporter.basis_elements().front();
    } else if (w1.dim() != w2.dim()) {
        // unequal dimensions: report the zero transporter as certificate
        res.transporter = Subspace::zero(w1.parent());
    }
    return res;
}

Subspace canonical_orbit_label(const Subspace& w) {
    const auto& K = w.parent();
    if (!K->is_finite())
        throw Error("canonical orbit labels require a finite field");
    std::optional<Subspace> best;
    for (const auto& beta : enumerate_ext_field(K)) {
        if (beta.is_zero()) continue;
        Subspace s = w.scaled(beta);
        if (!best || s < *best) best = std::move(s);
    }
    return *best;
}

}  // namespace ffrep
