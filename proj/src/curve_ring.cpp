#include "ffrep/curve_ring.hpp"

#include <algorithm>
#include <numeric>

#include "ffrep/errors.hpp"

namespace ffrep {

namespace {

void validate(const RingPresentation& pres) {
    if (!pres.field) throw InvalidPresentation("missing extension field");
    if (pres.generators.empty()) throw InvalidPresentation("no generators");
    unsigned g = 0;
    for (const auto& gen : pres.generators) {
        if (gen.degree < 1) throw InvalidPresentation("generator degree must be >= 1");
        if (gen.coeff.is_zero()) throw InvalidPresentation("generator coefficient is zero");
        if (!gen.coeff.parent()->same_as(*pres.field))
            throw FieldMismatch("generator coefficient outside K");
        g = std::gcd(g, gen.degree);
    }
    if (g != 1) throw InvalidPresentation("gcd of generator degrees must be 1");
}

// one DP layer: V_i = span of  a_j * V_{i - n_j}  over all generators
Subspace dp_step(const RingPresentation& pres, const std::vector<Subspace>& table,
                 std::size_t i) {
    std::vector<ExtElem> vecs;
    for (const auto& gen : pres.generators) {
        if (gen.degree > i) continue;
        for (const auto& v : table[i - gen.degree].basis_elements())
            vecs.push_back(gen.coeff * v);
    }
    return Subspace::span(pres.field, vecs);
}

}  // namespace

const Subspace& CoefficientProfile::at(std::size_t i) const {
    if (i < table_.size()) return table_[i];
    if (full_cache_.empty()) full_cache_.push_back(Subspace::full(field_));
    return full_cache_.front();
}

Subspace coefficient_space(const RingPresentation& pres, std::size_t i) {
    validate(pres);
    std::vector<Subspace> table;
    table.push_back(Subspace::span(pres.field, {pres.field->one()}));
    for (std::size_t d = 1; d <= i; ++d) table.push_back(dp_step(pres, table, d));
    return table[i];
}

CurveRing CurveRing::analyze(RingPresentation pres) {
    validate(pres);
    unsigned n = pres.field->degree();
    unsigned max_deg = 0;
    std::vector<unsigned> degrees;
    for (const auto& gen : pres.generators) {
        max_deg = std::max(max_deg, gen.degree);
        degrees.push_back(gen.degree);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    // once V_i = K for max_deg consecutive i, it stays K forever
    const std::size_t hard_cap = 4u * n * max_deg + max_deg;
    std::vector<Subspace> table;
    table.push_back(Subspace::span(pres.field, {pres.field->one()}));
    unsigned run = table[0].is_full() ? 1 : 0;
    std::size_t run_start = 0;
    std::size_t i = 0;
    while (run < max_deg) {
        ++i;
        if (i > hard_cap)
            throw StabilizationFailure(
                "V_i did not stabilize at K within the bound; the integral closure of '" +
                pres.label + "' is not K[t]");
        table.push_back(dp_step(pres, table, i));
        if (table[i].is_full()) {
            if (run == 0) run_start = i;
            ++run;
        } else {
            run = 0;
        }
    }
    unsigned c = static_cast<unsigned>(run_start);

    CurveRing ring;
    ring.semigroup_.generators = degrees;
    ring.semigroup_.membership.resize(table.size());
    for (std::size_t j = 0; j < table.size(); ++j)
        ring.semigroup_.membership[j] = !table[j].is_zero();
    unsigned ch = 0;
    for (std::size_t j = 0; j < table.size(); ++j)
        if (!ring.semigroup_.membership[j]) ch = static_cast<unsigned>(j) + 1;
    ring.semigroup_.conductor = ch;

    table.erase(table.begin() + c, table.end());  // all indices >= c are full
    ring.profile_ = std::make_shared<CoefficientProfile>(pres.field, std::move(table), c);
    ring.pres_ = std::move(pres);
    return ring;
}

unsigned CurveRing::hilbert_dim(unsigned /*e*/, std::size_t j) const {
    return static_cast<unsigned>(V(j).dim());
}

}  // namespace ffrep
