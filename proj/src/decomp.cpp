#include "ffrep/decomp.hpp"

#include <algorithm>
#include <numeric>

#include "ffrep/errors.hpp"

namespace ffrep {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

unsigned min_clearing_exponent(const CurveRing& ring) {
    Fp p = ring.field()->base()->p();
    unsigned e = 0;
    std::uint64_t q = 1;
    while (q < ring.conductor()) {
        q *= p;
        ++e;
    }
    return std::max(e, 1u);
}

DecompositionReport decompose(const CurveRing& ring, unsigned e, std::size_t check_degree) {
    if (e < 1) throw Error("decompose needs e >= 1");
    Fp p = ring.field()->base()->p();
    std::uint64_t q = pow_u64(p, e);
    unsigned c = ring.conductor();
    if (q < c)
        throw ConductorNotCleared("q = " + std::to_string(q) + " < c = " + std::to_string(c) +
                                  "; the decomposition formula needs q >= c");

    unsigned n = ring.field()->degree();
    DecompositionReport rep;
    rep.e = e;
    rep.q = q;
    rep.summands.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        const Subspace& Vi = ring.V(i);
        SummandDescriptor d;
        d.e = e;
        d.q = q;
        d.residue = i;
        if (Vi.is_zero()) {
            d.kind = SummandKind::Free;
            d.shift = Rational(-static_cast<std::int64_t>(i + q), static_cast<std::int64_t>(q));
        } else if (Vi.is_full()) {
            d.kind = SummandKind::Free;
            d.shift = Rational(-static_cast<std::int64_t>(i), static_cast<std::int64_t>(q));
        } else {
            d.kind = SummandKind::Proper;
            d.shift = Rational(-static_cast<std::int64_t>(i), static_cast<std::int64_t>(q));
            d.space = Vi.root_space(e);
        }
        rep.summands.push_back(std::move(d));
    }

    // degreewise conservation: dim [A^{1/q}]_{j/q} from the summand list
    // must equal dim V_j
    rep.hilbert_checked_to = check_degree;
    rep.hilbert_ok = true;
    for (std::size_t j = 0; j <= check_degree; ++j) {
        const SummandDescriptor& d = rep.summands[j % q];
        std::size_t layer = j / q;
        std::size_t got;
        if (d.kind == SummandKind::Proper)
            got = layer == 0 ? d.space->dim() : n;
        else if (ring.V(d.residue).is_zero())
            got = layer == 0 ? 0 : n;
        else
            got = n;
        if (got != ring.hilbert_dim(e, j)) {
            rep.hilbert_ok = false;
            break;
        }
    }
    return rep;
}

EquivResult pairwise_noniso(const CurveRing& ring, unsigned e1, std::uint64_t i1,
                            unsigned e2, std::uint64_t i2) {
    Fp p = ring.field()->base()->p();
    unsigned c = ring.conductor();
    for (unsigned e : {e1, e2})
        if (pow_u64(p, e) < c)
            throw ConductorNotCleared("q = p^" + std::to_string(e) + " < c");
    for (std::uint64_t i : {i1, i2}) {
        const Subspace& V = ring.V(i);
        if (V.is_zero() || V.is_full())
            throw NotProper("summand at residue " + std::to_string(i) +
                            " is free; comparison is shift-only");
    }
    Subspace w1 = ring.V(i1).root_space(e1);
    Subspace w2 = ring.V(i2).root_space(e2);
    return projectively_equivalent(w1, w2);
}

namespace {

class ClassRegistry {
public:
    explicit ClassRegistry(const CurveRing& ring) : ring_(ring) {
        ClassInfo free;
        free.id = 0;
        free.free = true;
        free.dim = ring.field()->degree();
        classes_.push_back(std::move(free));
    }

    int classify_summand(const SummandDescriptor& d) {
        if (d.kind == SummandKind::Free) return 0;
        const Subspace& w = *d.space;
        if (ring_.field()->is_finite()) {
            Subspace label = canonical_orbit_label(w);
            auto it = label_to_id_.find(label);
            if (it != label_to_id_.end()) return it->second;
            int id = new_class(label);
            label_to_id_.emplace(std::move(label), id);
            return id;
        }
        // infinite base field: match against representatives pairwise
        for (const auto& cls : classes_) {
            if (cls.free || cls.dim != w.dim()) continue;
            if (projectively_equivalent(*cls.representative, w).equivalent) return cls.id;
        }
        return new_class(w);
    }

    std::vector<ClassInfo> take() { return std::move(classes_); }

private:
    int new_class(Subspace rep) {
        ClassInfo info;
        info.id = static_cast<int>(classes_.size());
        info.free = false;
        info.dim = rep.dim();
        info.representative = std::move(rep);
        classes_.push_back(std::move(info));
        return classes_.back().id;
    }

    const CurveRing& ring_;
    std::vector<ClassInfo> classes_;
    std::map<Subspace, int> label_to_id_;
};

}  // namespace

ClassTable classify(const CurveRing& ring, unsigned e_max, std::optional<unsigned> e_min_opt,
                    std::size_t check_degree) {
    unsigned e_min = e_min_opt.value_or(min_clearing_exponent(ring));
    Fp p = ring.field()->base()->p();
    if (pow_u64(p, e_min) < ring.conductor())
        throw ConductorNotCleared("e_min = " + std::to_string(e_min) + " has q < c");
    if (e_max < e_min) throw Error("e_max < e_min");

    ClassTable table;
    table.e_min = e_min;
    table.e_max = e_max;
    ClassRegistry registry(ring);
    for (unsigned e = e_min; e <= e_max; ++e) {
        DecompositionReport rep = decompose(ring, e, check_degree);
        auto& mult = table.multiplicities[e];
        for (auto& d : rep.summands) {
            d.class_id = registry.classify_summand(d);
            ++mult[d.class_id];
        }
        table.per_e.emplace(e, std::move(rep));
    }
    table.classes = registry.take();
    return table;
}

bool matches_quartic_family(const CurveRing& ring) {
    const auto& K = ring.field();
    const auto& k = K->base();
    if (k->is_finite() || k->p() != 2 || K->degree() != 4) return false;
    auto u = BaseElem::variable(k);
    std::vector<BaseElem> expect = {BaseElem::one(k), u, BaseElem::one(k), BaseElem::zero(k),
                                    BaseElem::one(k)};
    for (unsigned i = 0; i <= 4; ++i)
        if (K->min_poly()[i] != expect[i]) return false;
    const auto& gens = ring.presentation().generators;
    if (gens.size() != 2) return false;
    std::vector<ExtElem> coeffs;
    for (const auto& g : gens) {
        if (g.degree != 1) return false;
        coeffs.push_back(g.coeff);
    }
    auto a = K->alpha();
    auto one = K->one();
    return (coeffs[0] == a && coeffs[1] == one) || (coeffs[0] == one && coeffs[1] == a);
}

RecurrenceCertificate recurrence_certificate(const CurveRing& ring, unsigned e_max) {
    if (!matches_quartic_family(ring))
        throw PatternMismatch("ring is not the quartic family k[alpha t, t], "
                              "alpha^4 + alpha^2 + u alpha + 1 = 0 over perfect closure of F_2(u)");
    const auto& K = ring.field();
    const auto& k = K->base();
    auto a = K->alpha();
    auto a2 = a * a;

    FpPoly f(2, {1});      // f_2 = 1
    FpPoly g(2, {0, 1});   // g_2 = u
    FpPoly h(2, {1});      // h_2 = 1, read off alpha^4 = alpha^2 + u alpha + 1
    RecurrenceCertificate cert;
    for (unsigned e = 2; e <= e_max; ++e) {
        if (f.is_zero() || g.is_zero())
            throw CertificateFailure("f_e or g_e vanished at e = " + std::to_string(e));
        int expected_gap = (e % 2 == 0) ? -1 : 1;  // deg f - deg g
        if (f.degree() - g.degree() != expected_gap)
            throw CertificateFailure("degree pattern broken at e = " + std::to_string(e));
        auto lift = [&](const FpPoly& poly) {
            return K->from_base(BaseElem::rational(k, 0, poly, FpPoly::constant(2, 1)));
        };
        ExtElem rhs = lift(f) * a2 + lift(g) * a + lift(h);
        if (a.frobenius(e) != rhs)
            throw CertificateFailure("identity alpha^(2^e) = f a^2 + g a + h fails at e = " +
                                     std::to_string(e));
        cert.steps.push_back({e, f, g, h});
        FpPoly f2 = f * f;
        FpPoly next_f = f2 + g * g;
        FpPoly next_g = FpPoly(2, {0, 1}) * f2;
        FpPoly next_h = f2 + h * h;
        f = std::move(next_f);
        g = std::move(next_g);
        h = std::move(next_h);
    }
    return cert;
}

Verdict ffrt_verdict(const CurveRing& ring, unsigned e_max, const ClassTable& table) {
    Verdict v;
    v.distinct_classes = table.classes.size();

    if (matches_quartic_family(ring)) {
        v.kind = VerdictKind::NOT_FFRT_CERTIFIED;
        v.certificate = recurrence_certificate(ring, std::max(e_max, 12u));
        v.detail = "recurrence certificate valid through e = " +
                   std::to_string(v.certificate->steps.back().e) +
                   "; with the inductive degree argument the proper summand classes at "
                   "residue 1 are pairwise distinct for all e >= 2";
        return v;
    }

    if (!ring.field()->is_finite()) {
        v.kind = VerdictKind::LOWER_BOUND_ONLY;
        v.detail = "observed " + std::to_string(v.distinct_classes) +
                   " distinct classes up to e_max = " + std::to_string(e_max) +
                   "; no closing argument over an infinite residue field";
        return v;
    }

    // finite residue field: V_i^{1/q} depends only on e mod f, |K| = p^f
    unsigned f = ring.field()->frobenius_period();
    unsigned e_min = table.e_min;
    bool periodic = true;
    unsigned period = 0;
    for (unsigned d = 1; d <= f && period == 0; ++d) {
        if (f % d != 0) continue;
        bool ok = true;
        for (unsigned e = e_min; e + d <= e_max && ok; ++e) {
            const auto& r1 = table.per_e.at(e);
            const auto& r2 = table.per_e.at(e + d);
            for (std::uint64_t i = 0; i < std::min<std::uint64_t>(r1.q, ring.conductor()); ++i)
                if (r1.summands[i].class_id != r2.summands[i].class_id) {
                    ok = false;
                    break;
                }
        }
        if (ok) period = d;
    }
    if (period == 0) periodic = false;

    bool two_periods_observed = e_max >= e_min + 2 * f;
    // the class list must be closed: nothing new in the last period
    bool stable = true;
    if (two_periods_observed) {
        std::vector<bool> seen(table.classes.size(), false);
        seen[0] = true;
        for (unsigned e = e_min; e <= e_max - f; ++e)
            for (const auto& d : table.per_e.at(e).summands)
                if (d.class_id >= 0) seen[d.class_id] = true;
        stable = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    if (periodic && two_periods_observed && stable) {
        v.kind = VerdictKind::FFRT_CERTIFIED;
        v.period = period;
        v.detail = "class assignment periodic in e with period " + std::to_string(period) +
                   " (dividing f = " + std::to_string(f) + "); " +
                   std::to_string(v.distinct_classes) + " classes over two observed periods";
    } else {
        v.kind = VerdictKind::LOWER_BOUND_ONLY;
        v.detail = periodic ? "e-range too short to observe two full Frobenius periods"
                            : "periodicity check failed (unexpected for a finite field)";
    }
    return v;
}

Verdict ffrt_verdict(const CurveRing& ring, unsigned e_max) {
    if (matches_quartic_family(ring) || !ring.field()->is_finite()) {
        // classify only over a short window; the verdict logic does the rest
        ClassTable table = classify(ring, std::min(e_max, min_clearing_exponent(ring) + 4));
        return ffrt_verdict(ring, e_max, table);
    }
    ClassTable table = classify(ring, e_max);
    return ffrt_verdict(ring, e_max, table);
}

}  // namespace ffrep
