#ifndef FFREP_SELFTEST_HPP
#define FFREP_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffrep/curve_ring.hpp"
#include "ffrep/tower.hpp"

namespace ffrep::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// bundled example corpus
ExtFieldPtr gf16_field();
ExtFieldPtr gf27_field();
ExtFieldPtr quartic_field();
ExtFieldPtr sextic_field();
CurveRing cusp_ring();
CurveRing quartic_ring();
CurveRing sextic_ring();
CurveRing gf16_ring();
CurveRing semigroup_ring(Fp p, const std::vector<unsigned>& degs, const std::string& label);

/// Runs the bundled corpus end to end (verdicts for cusp, quartic,
/// sextic, GF(16); Hilbert checks for the three Brenner towers).
std::vector<CheckResult> run_corpus();

/// The eight acceptance checks; each result carries its wall time.
std::vector<CheckResult> run_acceptance();

/// Randomized property suites: field round trips, V multiplicativity,
/// equivalence-relation laws, report determinism.
std::vector<CheckResult> run_properties(std::uint64_t seed);

/// One fixed-width pass/fail line per result; returns the failure count.
int report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace ffrep::selftest

#endif
