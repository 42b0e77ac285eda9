#ifndef FFREP_TOWER_HPP
#define FFREP_TOWER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffrep/decomp.hpp"

namespace ffrep {

/// Sparse multivariate polynomial over F_p; exponent vector -> coefficient.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(Fp p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static MultiPoly monomial(Fp p, std::size_t nvars, std::vector<unsigned> exps, Fp coeff);

    Fp characteristic() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<std::vector<unsigned>, Fp>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly pow(std::uint64_t e) const;
    bool operator==(const MultiPoly& o) const;

    void add_term(std::vector<unsigned> exps, Fp coeff);
    /// weighted degree of each monomial must agree; returns it
    Rational homogeneous_degree(const std::vector<Rational>& weights) const;
    /// largest variable index actually used, or -1
    int max_var_used() const;

    std::string str(const std::vector<std::string>& names) const;

private:
    Fp p_ = 2;
    std::size_t nvars_ = 0;
    std::map<std::vector<unsigned>, Fp> terms_;
};

/// Base ring for a tower: either a weighted polynomial ring over a
/// finite field, or an analyzed curve ring (FFRT-certified before use).
struct WeightedPolyRing {
    Fp p = 2;
    std::vector<std::string> vars;
    std::vector<Rational> weights;
};

struct CurveBase {
    std::shared_ptr<CurveRing> ring;
    unsigned certify_e_max = 10;  // e-range used to certify FFRT of the base
};

struct AdjoinStep {
    std::string var;
    std::uint64_t exponent = 2;          // q_i = p^{e_i}
    MultiPoly f;                         // over base vars + earlier adjoined vars
    std::optional<Rational> weight;      // required when f = 0, derived otherwise
};

struct TowerPresentation {
    std::optional<WeightedPolyRing> poly_base;
    std::optional<CurveBase> curve_base;
    std::vector<AdjoinStep> steps;
    std::string label;

    Fp p() const;
};

/// Verifies the char-p identity (x + g)^q = x^q + g^q by symbolic
/// expansion; with g = f^{1/q} this rewrites x^q + f. Returns false and
/// the offending term when q is not a power of p.
bool substitution_identity_check(Fp p, std::uint64_t q, std::string* falsifying_term = nullptr);

/// Fedder's criterion for R = k[x_1..x_n]/(f): F-pure iff f^(p-1) is not
/// in (x_1^p, ..., x_n^p). f = 0 (regular ring) short-circuits to true.
bool fedder_fpure(const MultiPoly& f, Fp p);

/// Brute-force splitting search used as the Fedder oracle in tests:
/// hunts for u with Phi((u f^(p-1))^(1/p)) a unit mod f, where Phi is the
/// trace generator of Hom(P^(1/p), P) extracting the (p-1,..,p-1) digit.
bool fpure_bruteforce(const MultiPoly& f, Fp p, unsigned degree_bound);

/// Splitting check for a graded curve base: the projection of A^(1/p)
/// onto its residue-0 summand restricts to A iff V_{pj}^(1/p) lies in
/// V_j for every j below the conductor.
bool curve_base_fpure(const CurveRing& ring);

struct TowerReport {
    unsigned e = 0;
    std::uint64_t q = 0;
    /// predicted summand multiset of ^eS: (base class id, shift) -> count;
    /// class id 0 is the free class over a polynomial base
    std::map<std::pair<int, Rational>, std::uint64_t> summands;
    bool all_free = true;
    bool hilbert_ok = false;
    std::size_t trunc_degree = 0;
    bool fpurity_checked = false;
    bool clears_tower_exponents = false;  // p^e >= max q_i
};

/// Predicted summand multiset of ^eS with the Hilbert-series
/// conservation check at the given truncation degree.
TowerReport tower_summands(const TowerPresentation& T, unsigned e, std::size_t trunc_degree = 40);

/// The x^2 + y^3 + z^7 instances, solved for the variable whose exponent
/// equals p. UnsupportedCharacteristic unless p is 2, 3 or 7.
TowerPresentation brenner_instance(Fp p);

/// k[s^q, st, t] = k[x,z][y]/(y^q - x z^q) as a tower over k[x,z].
TowerPresentation segre_like_instance(Fp p, std::uint64_t q);

}  // namespace ffrep

#endif
