#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "padicla/banach.hpp"
#include "padicla/iwasawa.hpp"
#include "padicla/mahler.hpp"
#include "padicla/poly.hpp"
#include "padicla/pseudorep.hpp"
#include "padicla/rational.hpp"
#include "padicla/residue.hpp"
#include "padicla/scalar.hpp"

// JSON encodings. nlohmann::json keeps object keys sorted, so dump() output
// is canonical; no encoding uses floating point. Decoders throw kParseError
// with a message starting at the offending path, e.g. "matrix[1]: ...".
namespace padicla::jsonio {

using nlohmann::json;

json encode(const Rational& r);
Rational decode_rational(const json& j, const std::string& where = "$");

json encode(const Valuation& v);

// {"val": v, "unit": "u", "prec": N}; zero is {"val": null, "unit": "0",
// "prec": k} with k its absolute precision.
json encode(const PadicScalar& x);
// Also accepts a bare integer, read at `precision`.
PadicScalar decode_scalar(const json& j, Prime p, int precision, const std::string& where = "$");

json encode(const PadicPoly& f);
PadicPoly decode_poly(const json& j, Prime p, int precision, const std::string& where = "$");

// {"prime", "prec", "basis", "filtration", "matrix", "exact"}.
json encode(const BoundedOperator& t);
BoundedOperator decode_operator(const json& j, const std::string& where = "$");

// {"prime", "exponent", "rows": [["decimal", ...], ...]}.
json encode(const ResidueMatrix& m);

// {"prime", "k", "prec", "terms": [{"u": [...], "s": [...], "coeff": scalar}]}.
json encode(const PolydiscFunction& f);
PolydiscFunction decode_polydisc(const json& j, const std::string& where = "$");

// {"table": [[...], ...]}.
json encode(const FiniteGroupTable& g);
FiniteGroupTable decode_group(const json& j, const std::string& where = "$");

// {"prime", "prec", "sigma_star", "values": [scalar, ...]}; the group is
// stored separately.
json encode(const TraceFunction<PadicScalar>& t);
TraceFunction<PadicScalar> decode_trace(const json& j, const FiniteGroupTable& group,
                                        const std::string& where = "$");

// {"prime", "prec", "samples": [scalar, ...]}.
std::vector<PadicScalar> decode_samples(const json& j, Prime& p, const std::string& where = "$");

// {"prime", "j", "coefficient_exponent", "k_level", "analytic_level",
//  "invariant_bound", "generators": [{"kind": ..., ...}]}.
json encode(const ToyAdmissible& model);
ToyAdmissible decode_toy(const json& j, const std::string& where = "$");

// Serialization used for reports: two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace padicla::jsonio
