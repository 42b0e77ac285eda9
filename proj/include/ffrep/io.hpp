#ifndef FFREP_IO_HPP
#define FFREP_IO_HPP

#include <string>

#include "ffrep/decomp.hpp"
#include "ffrep/tower.hpp"
#include "json.hpp"

namespace ffrep::io {

using json = nlohmann::json;

// ---- spec files ----------------------------------------------------------
// ring spec: {label, base_field: {kind, p, f | variable},
//             extension: {min_poly, trusted_irreducible}?,
//             generators: [{coeff, degree}]}
// finite base elements are arrays of F_p coords (little-endian); perfect-
// closure elements are {level, num, den}; K-elements are arrays of base
// elements in the power basis of alpha.
RingPresentation parse_ring_spec(const json& j);
RingPresentation load_ring_spec(const std::string& path);
json ring_spec_json(const RingPresentation& pres);

// tower spec: {label, base: {type: polyring, p, vars, weights} |
//                    {type: ring, ring: <ring spec>, certify_emax?},
//              adjoin: [{var, exponent, f: [{coeff, exps}], weight?}]}
TowerPresentation parse_tower_spec(const json& j);
TowerPresentation load_tower_spec(const std::string& path);
json tower_spec_json(const TowerPresentation& T);

// ---- element encodings ---------------------------------------------------
json base_elem_json(const BaseElem& a);
BaseElem parse_base_elem(const json& j, const BaseFieldPtr& field);
json ext_elem_json(const ExtElem& a);
ExtElem parse_ext_elem(const json& j, const ExtFieldPtr& field);
json subspace_json(const Subspace& w);
Subspace parse_subspace(const json& j, const ExtFieldPtr& field);

// ---- reports -------------------------------------------------------------
json report_json(const DecompositionReport& rep);
json class_table_json(const ClassTable& table);
json verdict_json(const Verdict& v);
json certificate_json(const RecurrenceCertificate& cert);
json tower_report_json(const TowerReport& rep);

/// canonical serialization used everywhere; key-sorted, 2-space indent,
/// trailing newline — byte-identical across runs
std::string dump(const json& j);
void write_file(const std::string& path, const std::string& text);
json load_file(const std::string& path);

}  // namespace ffrep::io

#endif
