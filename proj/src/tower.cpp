#include "ffrep/tower.hpp"

#include <algorithm>
#include <numeric>

#include "ffrep/errors.hpp"

namespace ffrep {

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::monomial(Fp p, std::size_t nvars, std::vector<unsigned> exps, Fp coeff) {
    MultiPoly m(p, nvars);
    m.add_term(std::move(exps), coeff);
    return m;
}

void MultiPoly::add_term(std::vector<unsigned> exps, Fp coeff) {
    if (exps.size() != nvars_) throw Error("monomial arity mismatch");
    coeff %= p_;
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), coeff);
    } else {
        it->second = (it->second + coeff) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_) throw Error("polynomial ring mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (p_ != o.p_ || nvars_ != o.nvars_) throw Error("polynomial ring mismatch");
    MultiPoly r(p_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(std::move(e), (c1 * c2) % p_);
        }
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly r = monomial(p_, nvars_, std::vector<unsigned>(nvars_, 0), 1);
    MultiPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rational MultiPoly::homogeneous_degree(const std::vector<Rational>& weights) const {
    if (weights.size() != nvars_) throw Error("weight vector arity mismatch");
    if (terms_.empty()) throw Error("degree of the zero polynomial");
    std::optional<Rational> deg;
    for (const auto& [e, c] : terms_) {
        (void)c;
        Rational d(0, 1);
        for (std::size_t i = 0; i < nvars_; ++i)
            d = d + Rational(static_cast<std::int64_t>(e[i]), 1) * weights[i];
        if (!deg) {
            deg = d;
        } else if (!(*deg == d)) {
            throw InvalidPresentation("polynomial is not weighted-homogeneous");
        }
    }
    return *deg;
}

int MultiPoly::max_var_used() const {
    int m = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) m = std::max(m, static_cast<int>(i));
    }
    return m;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += mono;
        }
    }
    return out;
}

// ------------------------------------------------------------- presentation

Fp TowerPresentation::p() const {
    if (poly_base) return poly_base->p;
    if (curve_base) return curve_base->ring->field()->base()->p();
    throw InvalidPresentation("tower has no base ring");
}

namespace {

bool is_power_of(std::uint64_t q, Fp p) {
    if (q < p) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

struct Grading {
    std::size_t base_nvars = 0;
    std::vector<Rational> weights;  // base vars, then adjoined vars
    std::int64_t D = 1;             // lcm of weight denominators
};

Grading derive_grading(const TowerPresentation& T) {
    bool poly = T.poly_base.has_value();
    if (poly == T.curve_base.has_value())
        throw InvalidPresentation("tower needs exactly one base ring");
    if (T.steps.empty()) throw InvalidPresentation("tower adjoins no variables");
    Fp p = T.p();
    if (!is_prime(p)) throw InvalidPresentation("characteristic is not prime");

    Grading g;
    if (poly) {
        g.base_nvars = T.poly_base->vars.size();
        if (g.base_nvars == 0) throw InvalidPresentation("polynomial base has no variables");
        if (T.poly_base->weights.size() != g.base_nvars)
            throw InvalidPresentation("one weight per base variable required");
        for (const auto& w : T.poly_base->weights) {
            if (w.num <= 0) throw InvalidPresentation("weights must be positive");
            g.weights.push_back(w);
        }
    }
    const std::size_t total = g.base_nvars + T.steps.size();
    for (std::size_t i = 0; i < T.steps.size(); ++i) {
        const AdjoinStep& st = T.steps[i];
        if (!is_power_of(st.exponent, p))
            throw InvalidPresentation("adjoined exponent " + std::to_string(st.exponent) +
                                      " is not a power of p = " + std::to_string(p));
        if (!st.f.is_zero()) {
            if (!poly)
                throw InvalidPresentation(
                    "adjoining with f != 0 over a curve base is not supported; "
                    "present f over a polynomial base");
            if (st.f.characteristic() != p || st.f.nvars() != total)
                throw InvalidPresentation("f must live in F_p[all tower variables]");
            if (st.f.max_var_used() >= static_cast<int>(g.base_nvars + i))
                throw InvalidPresentation("f may only use earlier variables");
            Rational w = st.f.homogeneous_degree(
                             [&] {
                                 auto ws = g.weights;
                                 ws.resize(total, Rational(0, 1));
                                 return ws;
                             }()) /
                         Rational(static_cast<std::int64_t>(st.exponent), 1);
            if (st.weight && !(*st.weight == w))
                throw InvalidPresentation("declared weight of " + st.var +
                                          " contradicts deg f / q");
            g.weights.push_back(w);
        } else {
            if (!st.weight || st.weight->num <= 0)
                throw InvalidPresentation("f = 0 requires an explicit positive weight for " +
                                          st.var);
            g.weights.push_back(*st.weight);
        }
    }
    for (const auto& w : g.weights) g.D = lcm64(g.D, w.den);
    return g;
}

// relation polynomial x_i^{q_i} + f_i of step i, over the full variable list
MultiPoly relation_poly(const TowerPresentation& T, const Grading& g, std::size_t i) {
    const std::size_t total = g.base_nvars + T.steps.size();
    std::vector<unsigned> exps(total, 0);
    exps[g.base_nvars + i] = static_cast<unsigned>(T.steps[i].exponent);
    MultiPoly r = MultiPoly::monomial(T.p(), total, exps, 1);
    if (!T.steps[i].f.is_zero()) r = r + T.steps[i].f;
    return r;
}

// F-purity of the intermediate base when step i genuinely iterates the
// construction (its f involves previously adjoined variables): Fedder on
// the product of the earlier relations.
void check_intermediate_fpurity(const TowerPresentation& T, const Grading& g, bool* checked) {
    for (std::size_t i = 1; i < T.steps.size(); ++i) {
        const MultiPoly& f = T.steps[i].f;
        if (f.is_zero() || f.max_var_used() < static_cast<int>(g.base_nvars)) continue;
        MultiPoly G = relation_poly(T, g, 0);
        for (std::size_t j = 1; j < i; ++j) G = G * relation_poly(T, g, j);
        *checked = true;
        if (!fedder_fpure(G, T.p()))
            throw FPurityFailure("intermediate base of step " + std::to_string(i) +
                                 " is not F-pure; iterated adjunction needs an F-pure base");
    }
}

using Dist = std::map<std::int64_t, std::uint64_t>;  // degree * D -> count

Dist convolve(const Dist& a, const Dist& b) {
    Dist r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) r[da + db] += ca * cb;
    return r;
}

// degrees (scaled by D) of the free basis {x^a : 0 <= a_i < q_i}
Dist adjoined_basis_dist(const TowerPresentation& T, const Grading& g) {
    Dist dist{{0, 1}};
    for (std::size_t i = 0; i < T.steps.size(); ++i) {
        const Rational& w = g.weights[g.base_nvars + i];
        std::int64_t step = w.num * (g.D / w.den);
        Dist layer;
        for (std::uint64_t a = 0; a < T.steps[i].exponent; ++a)
            layer[static_cast<std::int64_t>(a) * step] += 1;
        dist = convolve(dist, layer);
    }
    return dist;
}

}  // namespace

// ------------------------------------------------------------------- checks

bool substitution_identity_check(Fp p, std::uint64_t q, std::string* falsifying_term) {
    if (!is_prime(p)) throw UnsupportedCharacteristic("p is not prime");
    // two formal variables x and g; with g = f^{1/q} the identity rewrites
    // (x + f^{1/q})^q as x^q + f
    MultiPoly x = MultiPoly::monomial(p, 2, {1, 0}, 1);
    MultiPoly gv = MultiPoly::monomial(p, 2, {0, 1}, 1);
    MultiPoly lhs = (x + gv).pow(q);
    MultiPoly rhs = MultiPoly::monomial(p, 2, {static_cast<unsigned>(q), 0}, 1) +
                    MultiPoly::monomial(p, 2, {0, static_cast<unsigned>(q)}, 1);
    if (lhs == rhs) return true;
    if (falsifying_term) {
        MultiPoly diff = lhs + rhs * MultiPoly::monomial(p, 2, {0, 0}, p - 1);
        *falsifying_term = diff.str({"x", "g"});
    }
    return false;
}

bool fedder_fpure(const MultiPoly& f, Fp p) {
    if (f.is_zero()) return true;  // regular ring
    MultiPoly fp = f.pow(p - 1);
    // f^(p-1) lies outside (x_1^p, ..., x_n^p) iff it has a monomial with
    // every exponent < p
    for (const auto& [e, c] : fp.terms()) {
        (void)c;
        bool small = true;
        for (unsigned a : e)
            if (a >= p) small = false;
        if (small) return true;
    }
    return false;
}

namespace {

// lex leading term of f (var 0 strongest)
std::pair<std::vector<unsigned>, Fp> lex_lead(const MultiPoly& f) {
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (std::lexicographical_compare(best->first.begin(), best->first.end(),
                                         it->first.begin(), it->first.end()))
            best = it;
    return *best;
}

MultiPoly reduce_mod(MultiPoly g, const MultiPoly& f) {
    auto [lt, lc] = lex_lead(f);
    Fp p = f.characteristic();
    Fp lcinv = fp_inv(lc, p);
    for (;;) {
        const std::map<std::vector<unsigned>, Fp>* terms = &g.terms();
        bool reduced = false;
        for (const auto& [e, c] : *terms) {
            bool div = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] < lt[i]) div = false;
            if (!div) continue;
            std::vector<unsigned> quo(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) quo[i] = e[i] - lt[i];
            Fp scale = (c * lcinv) % p;
            g = g + f * MultiPoly::monomial(p, e.size(), quo, (p - scale) % p);
            reduced = true;
            break;
        }
        if (!reduced) return g;
    }
}

}  // namespace

bool fpure_bruteforce(const MultiPoly& f, Fp p, unsigned degree_bound) {
    if (f.is_zero()) return true;
    const std::size_t n = f.nvars();
    // f^(p-1) by naive repeated multiplication (independent of pow's ladder)
    MultiPoly fp = MultiPoly::monomial(p, n, std::vector<unsigned>(n, 0), 1);
    for (Fp i = 1; i < p; ++i) fp = fp * f;
    // enumerate candidate multipliers u = x^c
    std::vector<unsigned> c(n, 0);
    for (;;) {
        MultiPoly u = MultiPoly::monomial(p, n, c, 1);
        MultiPoly prod = u * fp;
        // Phi extracts the (p-1,...,p-1) digit: terms with a == p-1 mod p
        // map to x^((a-(p-1))/p)
        MultiPoly phi(p, n);
        for (const auto& [e, cf] : prod.terms()) {
            bool hit = true;
            for (unsigned a : e)
                if (a % p != p - 1) hit = false;
            if (!hit) continue;
            std::vector<unsigned> digit(n);
            for (std::size_t i = 0; i < n; ++i) digit[i] = (e[i] - (p - 1)) / p;
            phi.add_term(std::move(digit), cf);
        }
        // phi(1) must be a unit mod f: nonzero constant term after reduction
        MultiPoly red = reduce_mod(phi, f);
        auto it = red.terms().find(std::vector<unsigned>(n, 0));
        if (it != red.terms().end()) return true;
        // next exponent vector, all entries <= degree_bound
        std::size_t i = 0;
        while (i < n && c[i] == degree_bound) c[i++] = 0;
        if (i == n) return false;
        ++c[i];
    }
}

bool curve_base_fpure(const CurveRing& ring) {
    Fp p = ring.field()->base()->p();
    for (std::size_t j = 0; j < ring.conductor(); ++j) {
        Subspace root = ring.V(p * j).root_space(1);
        if (!ring.V(j).contains_space(root)) return false;
    }
    return true;
}

// ------------------------------------------------------------ tower engine

namespace {

// dim_k of the graded pieces of the base ring on the 1/D grid, indices
// 0..max_idx; polynomial base only
std::vector<std::uint64_t> poly_base_dims(const Grading& g, std::int64_t max_idx) {
    std::vector<std::uint64_t> dim(static_cast<std::size_t>(max_idx) + 1, 0);
    dim[0] = 1;
    for (std::size_t v = 0; v < g.base_nvars; ++v) {
        const Rational& w = g.weights[v];
        std::int64_t step = w.num * (g.D / w.den);
        for (std::int64_t i = step; i <= max_idx; ++i) dim[i] += dim[i - step];
    }
    return dim;
}

TowerReport summands_poly(const TowerPresentation& T, const Grading& g, unsigned e,
                          std::size_t trunc) {
    const Fp p = T.p();
    const std::int64_t q = static_cast<std::int64_t>(pow_u64(p, e));
    const std::int64_t D = g.D;

    Dist dist_a = adjoined_basis_dist(T, g);
    Dist dist_b{{0, 1}};  // degrees of the monomial basis of ^eR over R
    for (std::size_t v = 0; v < g.base_nvars; ++v) {
        const Rational& w = g.weights[v];
        std::int64_t step = w.num * (D / w.den);
        Dist layer;
        for (std::int64_t b = 0; b < q; ++b) layer[b * step] += 1;
        dist_b = convolve(dist_b, layer);
    }
    Dist dist_ab = convolve(dist_a, dist_b);

    TowerReport rep;
    rep.e = e;
    rep.q = static_cast<std::uint64_t>(q);
    rep.trunc_degree = trunc;
    rep.all_free = true;
    for (const auto& [ds, cnt] : dist_ab)
        rep.summands[{0, Rational(-ds, D * q)}] += cnt;

    // Hilbert conservation on the 1/(D q) grid up to degree trunc:
    // dim [S]_{p^e d} must equal the multiset sum of shifted base pieces
    const std::int64_t N = static_cast<std::int64_t>(trunc) * D * q;
    std::vector<std::uint64_t> dimR = poly_base_dims(g, N);
    std::vector<std::uint64_t> lhs(static_cast<std::size_t>(N) + 1, 0);
    for (const auto& [da, cnt] : dist_a)
        for (std::int64_t i = da; i <= N; ++i) lhs[i] += cnt * dimR[i - da];
    std::vector<std::uint64_t> rhs(static_cast<std::size_t>(N) + 1, 0);
    for (const auto& [ds, cnt] : dist_ab)
        for (std::int64_t r = 0; r * q + ds <= N; ++r) rhs[r * q + ds] += cnt * dimR[r];
    rep.hilbert_ok = (lhs == rhs);
    return rep;
}

TowerReport summands_curve(const TowerPresentation& T, const Grading& g, unsigned e,
                           std::size_t trunc) {
    const CurveBase& cb = *T.curve_base;
    const CurveRing& A = *cb.ring;
    const Fp p = T.p();
    const std::int64_t q = static_cast<std::int64_t>(pow_u64(p, e));
    const std::int64_t D = g.D;
    const unsigned n = A.field()->degree();

    unsigned table_emax = std::max(e, cb.certify_e_max);
    ClassTable table = classify(A, table_emax);
    Verdict v = ffrt_verdict(A, cb.certify_e_max, table);
    if (v.kind != VerdictKind::FFRT_CERTIFIED)
        throw BaseNotCertified("curve base '" + A.presentation().label +
                               "' is not FFRT-certified at e_max = " +
                               std::to_string(cb.certify_e_max));
    if (e < table.e_min)
        throw ConductorNotCleared("p^e < conductor of the curve base");
    const DecompositionReport& base = table.per_e.at(e);

    Dist dist_a = adjoined_basis_dist(T, g);

    TowerReport rep;
    rep.e = e;
    rep.q = static_cast<std::uint64_t>(q);
    rep.trunc_degree = trunc;
    rep.all_free = true;
    for (const auto& [da, cnt] : dist_a)
        for (const auto& s : base.summands) {
            if (s.kind == SummandKind::Proper) rep.all_free = false;
            rep.summands[{s.class_id, s.shift - Rational(da, D * q)}] += cnt;
        }

    // dim [A]_j on the integer grid
    auto dimA = [&](std::int64_t j) -> std::uint64_t {
        if (j < 0) return 0;
        return A.V(static_cast<std::size_t>(j)).dim();
    };
    // graded piece of one base summand at fine-grid degree didx/(D q)
    auto piece_dim = [&](const SummandDescriptor& s, std::int64_t didx) -> std::uint64_t {
        // t = degree - generator degree, generator degree = -shift
        std::int64_t tg = didx + s.shift.num * (D * q / s.shift.den);
        if (tg < 0 || tg % (D * q) != 0) return 0;
        if (tg == 0 && s.kind == SummandKind::Proper) return s.space->dim();
        return n;
    };
    const std::int64_t N = static_cast<std::int64_t>(trunc) * D * q;
    bool ok = true;
    for (std::int64_t didx = 0; didx <= N && ok; ++didx) {
        std::uint64_t lhs = 0, rhs = 0;
        for (const auto& [da, cnt] : dist_a) {
            std::int64_t t = didx - da;  // on the 1/D grid after scaling by p^e
            if (t >= 0 && t % D == 0) lhs += cnt * dimA(t / D);
            for (const auto& s : base.summands) rhs += cnt * piece_dim(s, didx - da);
        }
        ok = (lhs == rhs);
    }
    rep.hilbert_ok = ok;
    return rep;
}

}  // namespace

TowerReport tower_summands(const TowerPresentation& T, unsigned e, std::size_t trunc_degree) {
    if (e < 1) throw Error("tower_summands needs e >= 1");
    Grading g = derive_grading(T);
    bool checked = false;
    if (T.poly_base) check_intermediate_fpurity(T, g, &checked);
    TowerReport rep = T.poly_base ? summands_poly(T, g, e, trunc_degree)
                                  : summands_curve(T, g, e, trunc_degree);
    rep.fpurity_checked = checked;
    std::uint64_t qmax = 0;
    for (const auto& st : T.steps) qmax = std::max(qmax, st.exponent);
    rep.clears_tower_exponents = pow_u64(T.p(), e) >= qmax;
    return rep;
}

// ---------------------------------------------------------------- instances

TowerPresentation brenner_instance(Fp p) {
    if (p != 2 && p != 3 && p != 7)
        throw UnsupportedCharacteristic(
            "x^2 + y^3 + z^7 is only certified at p = 2, 3, 7; got p = " + std::to_string(p));
    TowerPresentation T;
    WeightedPolyRing R;
    R.p = p;
    AdjoinStep st;
    st.exponent = p;
    if (p == 7) {
        // solve for z: z^7 = -(x^2 + y^3)
        R.vars = {"x", "y"};
        R.weights = {Rational(3, 1), Rational(2, 1)};
        st.var = "z";
        st.f = MultiPoly(p, 3);
        st.f.add_term({2, 0, 0}, 1);
        st.f.add_term({0, 3, 0}, 1);
        T.label = "brenner_p7";
    } else if (p == 3) {
        // solve for y: y^3 = -(x^2 + z^7)
        R.vars = {"x", "z"};
        R.weights = {Rational(7, 1), Rational(2, 1)};
        st.var = "y";
        st.f = MultiPoly(p, 3);
        st.f.add_term({2, 0, 0}, 1);
        st.f.add_term({0, 7, 0}, 1);
        T.label = "brenner_p3";
    } else {
        // solve for x: x^2 = -(y^3 + z^7)
        R.vars = {"y", "z"};
        R.weights = {Rational(7, 1), Rational(3, 1)};
        st.var = "x";
        st.f = MultiPoly(p, 3);
        st.f.add_term({3, 0, 0}, 1);
        st.f.add_term({0, 7, 0}, 1);
        T.label = "brenner_p2";
    }
    T.poly_base = std::move(R);
    T.steps.push_back(std::move(st));
    return T;
}

TowerPresentation segre_like_instance(Fp p, std::uint64_t q) {
    if (!is_prime(p)) throw UnsupportedCharacteristic("p is not prime");
    if (!is_power_of(q, p))
        throw InvalidPresentation("q must be a power of p");
    // k[s^q, st, t] = k[x, z][y] / (y^q - x z^q) with x = s^q, y = st, z = t
    TowerPresentation T;
    WeightedPolyRing R;
    R.p = p;
    R.vars = {"x", "z"};
    R.weights = {Rational(static_cast<std::int64_t>(q), 1), Rational(1, 1)};
    AdjoinStep st;
    st.var = "y";
    st.exponent = q;
    st.f = MultiPoly(p, 3);
    st.f.add_term({1, static_cast<unsigned>(q), 0}, p - 1);
    T.poly_base = std::move(R);
    T.steps.push_back(std::move(st));
    T.label = "segre_q" + std::to_string(q) + "_p" + std::to_string(p);
    return T;
}

}  // namespace ffrep
