#include "reports.hpp"

#include <sstream>

#include "padicla/error.hpp"
#include "padicla/fixtures.hpp"
#include "padicla/json_io.hpp"
#include "padicla/locan.hpp"

namespace padicla::cli {

namespace io = jsonio;

namespace {

json optional_int(const std::optional<int>& x) { return x ? json(*x) : json(nullptr); }

json optional_rational(const std::optional<Rational>& x) {
  return x ? io::encode(*x) : json(nullptr);
}

const char* witness_name(WitnessMode m) {
  switch (m) {
    case WitnessMode::kCharpoly: return "charpoly";
    case WitnessMode::kPower: return "power";
    case WitnessMode::kMinimalPolyLift: return "minimal-poly-lift";
  }
  return "?";
}

}  // namespace

Report analyze_operator(const BoundedOperator& t, OperatorMode mode) {
  const auto direct = is_top_nilpotent(t);
  if (mode == OperatorMode::kAuto) {
    mode = direct.top_nilpotent ? OperatorMode::kDirect : OperatorMode::kUnipotent;
  }
  const BoundedOperator target =
      mode == OperatorMode::kDirect ? t : t - BoundedOperator::identity(t.space(), t.working_precision());
  const auto nil = mode == OperatorMode::kDirect ? direct : is_top_nilpotent(target);

  Report r;
  r.body = {{"prime", t.prime()},
            {"dimension", t.dimension()},
            {"mode", mode == OperatorMode::kDirect ? "direct" : "unipotent"},
            {"top_nilpotent", nil.top_nilpotent},
            {"nilpotency_index", optional_int(nil.index)},
            {"truncation_only", nil.truncation_only},
            {"closure_rank_mod_p", algebra_closure(t.space(), {target}, 1).rank}};
  if (!nil.top_nilpotent) {
    r.body["locan_degree"] = nullptr;
    r.body["witness_poly"] = nullptr;
    r.body["witness_verified"] = false;
    r.pass = false;
    return r;
  }
  const auto cert = charpoly_witness(target);
  const bool verified = verify_certificate(cert, target);
  r.body["locan_degree"] = optional_int(locan_degree(target));
  r.body["witness_poly"] = io::encode(cert.witness_poly);
  r.body["witness_mode"] = witness_name(cert.mode);
  r.body["verified_exponent"] = cert.verified_exponent;
  r.body["witness_verified"] = verified;
  r.pass = verified && r.body["locan_degree"].is_number_integer();
  return r;
}

Report iwasawa_extend(const GroupActionSpec& action, const PolydiscFunction& f,
                      std::optional<int> n) {
  const auto n_min = minimal_uniform_exponent(action);
  require(n.has_value() || n_min.has_value(), ErrorCode::kPreconditionViolation,
          "some T_i is not topologically nilpotent, so no uniform exponent exists");
  const int used = n ? *n : *n_min;
  const BoundedOperator result = polydisc_eval(f, action, used);
  Report r;
  r.body = {{"n_min", optional_int(n_min)},
            {"n", used},
            {"rank", action.rank()},
            {"result_matrix", io::encode(result)},
            {"norm", io::encode(op_norm(result))},
            {"function_integral", f.is_integral()}};
  return r;
}

Report mahler(const std::vector<PadicScalar>& samples, std::optional<int> level) {
  const MahlerSeries series = mahler_transform(samples);
  const AnalyticityReport a = amice_level(series);
  Report r;
  json coeffs = json::array();
  for (const auto& c : series.coefficients) coeffs.push_back(io::encode(c));
  r.body = {{"prime", series.p},
            {"coefficients", coeffs},
            {"tail_bound", series.tail_bound ? io::encode(*series.tail_bound) : json(nullptr)},
            {"level", optional_int(a.level)},
            {"margin", optional_rational(a.margin)},
            {"decay", optional_rational(a.decay)},
            {"inconclusive", a.inconclusive()}};
  if (level) {
    std::string verdict = "inconclusive";
    if (a.level) verdict = *a.level <= *level ? "yes" : "no";
    r.body["requested_level"] = *level;
    r.body["verdict"] = verdict;
    r.pass = verdict == "yes";
  }
  return r;
}

Report harness(const ToyAdmissible& model, int n) {
  const OclaReport o = ocla_harness(model, n);
  json gens = json::array();
  for (const auto& g : o.restricted_generators) gens.push_back(io::encode(g));
  Report r;
  r.body = {{"model", io::encode(model)},
            {"n", n},
            {"invariant_rank", o.invariant_rank},
            {"analytic_rank", o.analytic_rank},
            {"analytic_confirmed", o.analytic_confirmed},
            {"factors", o.factors},
            {"closure_rank", o.closure_rank},
            {"closure_log_size", o.closure_log_size},
            {"joint_log_size", o.joint_log_size},
            {"restricted_generators", gens}};
  r.pass = o.factors && o.analytic_confirmed;
  return r;
}

Report pseudorep(const TraceFunction<PadicScalar>& trace, bool reconstruct_requested) {
  Report r;
  const auto v = validate_trace(trace);
  json validation = {{"valid", v.valid}, {"axiom", v.valid ? json(nullptr) : json(v.axiom)},
                     {"message", v.message}};
  validation["witness"] = v.witness ? json::array({v.witness->first, v.witness->second}) : json(nullptr);
  r.body = {{"group_order", trace.group.order()},
            {"sigma_star", trace.sigma_star},
            {"validation", validation},
            {"split", nullptr},
            {"reducibility", nullptr},
            {"reconstruction", nullptr}};
  if (!v.valid) {
    r.pass = false;
    return r;
  }
  if (trace.values.front().prime() == 2) {
    r.body["split"] = {{"skipped", "even-prime"}};
    return r;
  }
  const auto s = odd_split(trace);
  json a = json::array(), d = json::array();
  for (std::size_t e = 0; e < s.order; ++e) {
    a.push_back(io::encode(s.a[e]));
    d.push_back(io::encode(s.d[e]));
  }
  r.body["split"] = {{"a", a}, {"d", d}};

  const auto red = reducibility_ideal(s);
  json gens = json::array();
  for (const auto& g : red.generators) {
    gens.push_back({{"sigma", g.sigma}, {"tau", g.tau}, {"value", io::encode(g.value)},
                    {"valuation", io::encode(g.value.valuation())}});
  }
  r.body["reducibility"] = {
      {"reducible_at_precision", red.reducible_at_precision},
      {"min_valuation", red.min_valuation ? io::encode(*red.min_valuation) : json(nullptr)},
      {"generator_count", red.generator_count},
      {"principal", red.principal()},
      {"generators", gens}};

  if (reconstruct_requested) {
    const auto pivot = find_pivot(s);
    if (!pivot) {
      r.body["reconstruction"] = {{"pivot", nullptr},
                                  {"reason", "no x(sigma, tau) is a unit"}};
      return r;
    }
    const auto rec = reconstruct(trace, s, pivot->first, pivot->second);
    json mats = json::array();
    for (const auto& m : rec.matrices) {
      json row = json::array();
      for (const auto& x : m) row.push_back(io::encode(x));
      mats.push_back(row);
    }
    r.body["reconstruction"] = {{"pivot", json::array({rec.sigma0, rec.tau0})},
                                {"multiplicative", rec.multiplicative},
                                {"trace_matches", rec.trace_matches},
                                {"determinant_matches", rec.determinant_matches},
                                {"matrices", mats}};
    r.pass = rec.verified();
  }
  return r;
}

json fixture(const FixtureRequest& q) {
  const json meta = {{"kind", q.kind}, {"seed", q.seed}};
  json out;
  if (q.kind == "translation") {
    out = io::encode(make_translation(q.p, q.size, q.precision));
  } else if (q.kind == "random-nilres") {
    out = io::encode(make_random_nilres(q.p, q.size, q.seed, q.precision));
  } else if (q.kind == "group-trace") {
    const auto fx = make_group_trace(q.group, q.p, q.precision);
    json oracle = json::array();
    for (const auto& m : fx.matrices) oracle.push_back(m);
    out = {{"group", io::encode(fx.trace.group)},
           {"trace", io::encode(fx.trace)},
           {"oracle_matrices", oracle}};
  } else if (q.kind == "toy-admissible") {
    out = io::encode(make_toy_admissible(q.p, q.j, q.seed));
  } else {
    fail(ErrorCode::kPreconditionViolation, "unknown fixture kind '" + q.kind + "'");
  }
  out["fixture"] = meta;
  return out;
}

namespace {

std::string detect(const json& j) {
  if (j.is_array()) return "action";
  if (!j.is_object()) return "unknown";
  if (j.contains("matrix")) return "operator";
  if (j.contains("terms")) return "polydisc";
  if (j.contains("samples")) return "samples";
  if (j.contains("generators") && j.contains("j")) return "toy";
  if (j.contains("group") && j.contains("trace")) return "group-trace";
  if (j.contains("table")) return "group";
  if (j.contains("values")) return "trace";
  if (j.contains("unit")) return "scalar";
  return "unknown";
}

}  // namespace

Report schema_validate(const json& doc, const std::string& requested) {
  const std::string schema = requested == "auto" ? detect(doc) : requested;
  Report r;
  r.body = {{"schema", schema}, {"valid", true}, {"errors", json::array()}};
  try {
    if (schema == "operator") {
      io::decode_operator(doc);
    } else if (schema == "action") {
      if (!doc.is_array()) fail(ErrorCode::kParseError, "$: expected an array of operators");
      for (std::size_t i = 0; i < doc.size(); ++i) io::decode_operator(doc[i], "$[" + std::to_string(i) + "]");
    } else if (schema == "polydisc") {
      io::decode_polydisc(doc);
    } else if (schema == "samples") {
      Prime p;
      io::decode_samples(doc, p);
    } else if (schema == "toy") {
      io::decode_toy(doc);
    } else if (schema == "group") {
      io::decode_group(doc);
    } else if (schema == "group-trace") {
      io::decode_trace(doc.at("trace"), io::decode_group(doc.at("group"), "$.group"), "$.trace");
    } else if (schema == "trace") {
      // Without a group only the shape can be checked.
      if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
        fail(ErrorCode::kParseError, "$.values: expected an array");
      }
    } else if (schema == "scalar") {
      if (!doc.is_object() || !doc.contains("prime")) {
        fail(ErrorCode::kParseError, "$: a standalone scalar needs a 'prime' field");
      }
      const auto p = doc["prime"];
      if (!p.is_number_unsigned() || !is_prime(p.get<Prime>())) {
        fail(ErrorCode::kParseError, "$.prime: not a prime");
      }
      io::decode_scalar(doc, p.get<Prime>(), 1);
    } else {
      fail(ErrorCode::kParseError, "$: cannot tell which schema applies");
    }
  } catch (const Error& e) {
    r.body["valid"] = false;
    r.body["errors"].push_back(e.what());
    r.pass = false;
  }
  return r;
}

json error_report(const std::string& code, const std::string& message) {
  return {{"error", code}, {"message", message}};
}

std::string render_text(const json& report) {
  std::ostringstream os;
  if (!report.is_object()) return report.dump() + "\n";
  for (const auto& [key, value] : report.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

}  // namespace padicla::cli
