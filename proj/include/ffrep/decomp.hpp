#ifndef FFREP_DECOMP_HPP
#define FFREP_DECOMP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ffrep/curve_ring.hpp"

namespace ffrep {

/// Exact rational, always stored in lowest terms with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const { return {num * o.den, den * o.num}; }
    Rational operator-() const { return {-num, den}; }
    std::string str() const;
};

enum class SummandKind { Free, Proper };

/// One graded summand of A^{1/q}: residue class i of the degree grid.
/// shift is the grading shift a with generator degree -a.
struct SummandDescriptor {
    unsigned e = 0;
    std::uint64_t q = 0;
    std::uint64_t residue = 0;
    SummandKind kind = SummandKind::Free;
    Rational shift;
    std::optional<Subspace> space;  // W = V_i^{1/q} for Proper summands
    int class_id = -1;              // filled by classify; 0 is the Free class
};

struct DecompositionReport {
    unsigned e = 0;
    std::uint64_t q = 0;
    std::vector<SummandDescriptor> summands;  // exactly q of them
    unsigned rank = 1;   // r in B^{rq} + k^l; A itself is rank one
    unsigned torsion_length = 0;  // l; zero for the torsion-free A
    bool hilbert_ok = false;
    std::size_t hilbert_checked_to = 0;
};

struct ClassInfo {
    int id = 0;
    bool free = false;
    std::optional<Subspace> representative;  // canonical orbit label over finite k
    std::size_t dim = 0;                     // [K:k] for the Free class
};

struct ClassTable {
    unsigned e_min = 0;
    unsigned e_max = 0;
    std::vector<ClassInfo> classes;
    std::map<unsigned, DecompositionReport> per_e;
    /// n_{e,i}: per e, multiplicity of each class id
    std::map<unsigned, std::map<int, std::uint64_t>> multiplicities;
};

/// One step of the quartic counterexample recurrence, polynomials in u
/// over F_2: alpha^(2^e) = f*alpha^2 + g*alpha + h.
struct RecurrenceStep {
    unsigned e = 0;
    FpPoly f, g, h;
};

struct RecurrenceCertificate {
    std::vector<RecurrenceStep> steps;  // e = 2 .. e_max
};

enum class VerdictKind { FFRT_CERTIFIED, NOT_FFRT_CERTIFIED, LOWER_BOUND_ONLY };

struct Verdict {
    VerdictKind kind = VerdictKind::LOWER_BOUND_ONLY;
    unsigned period = 0;             // verified period (FFRT case)
    std::size_t distinct_classes = 0;
    std::optional<RecurrenceCertificate> certificate;
    std::string detail;
};

std::uint64_t pow_u64(std::uint64_t b, unsigned e);

/// A^{1/q} = sum of q graded summands; requires q = p^e >= c.
/// check_degree bounds the degreewise Hilbert conservation check.
DecompositionReport decompose(const CurveRing& ring, unsigned e, std::size_t check_degree = 50);

/// Isomorphism test for two Proper summands; NotProper if either is
/// Free, ConductorNotCleared if a q misses the conductor.
EquivResult pairwise_noniso(const CurveRing& ring, unsigned e1, std::uint64_t i1,
                            unsigned e2, std::uint64_t i2);

/// Class ids across e_min..e_max (e_min defaults to the least e with
/// p^e >= c). Class 0 is Free.
ClassTable classify(const CurveRing& ring, unsigned e_max, std::optional<unsigned> e_min = {},
                    std::size_t check_degree = 50);

/// Smallest e with p^e >= c.
unsigned min_clearing_exponent(const CurveRing& ring);

/// Machine-checks the quartic family's recurrence f' = f^2+g^2, g' = u f^2
/// from (1, u, 1); PatternMismatch when the ring is not that family.
RecurrenceCertificate recurrence_certificate(const CurveRing& ring, unsigned e_max);
bool matches_quartic_family(const CurveRing& ring);

Verdict ffrt_verdict(const CurveRing& ring, unsigned e_max, const ClassTable& table);
Verdict ffrt_verdict(const CurveRing& ring, unsigned e_max);

}  // namespace ffrep

#endif
