#include "padicla/json_io.hpp"

#include "padicla/error.hpp"

namespace padicla::jsonio {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::kParseError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string at(const std::string& where, const char* key) { return where + "." + key; }
std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

mpz_class big_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) bad(where, "not a decimal integer");
    return z;
  }
  bad(where, "expected an integer or decimal string");
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

Prime read_prime(const json& j, const std::string& where) {
  const std::int64_t p = integer(field(j, "prime", where), at(where, "prime"));
  if (p < 2 || !is_prime(static_cast<Prime>(p))) bad(at(where, "prime"), std::to_string(p) + " is not prime");
  return static_cast<Prime>(p);
}

int read_prec(const json& j, const std::string& where) {
  const std::int64_t n = integer(field(j, "prec", where), at(where, "prec"));
  if (n < 1 || n > 100000) bad(at(where, "prec"), "precision must be in [1, 100000]");
  return static_cast<int>(n);
}

// Re-throws library precondition failures as parse errors at `where`.
template <class F>
auto guarded(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    bad(where, e.what());
  }
}

}  // namespace

json encode(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

Rational decode_rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto num = integer(field(j, "num", where), at(where, "num"));
  const auto den = integer(field(j, "den", where), at(where, "den"));
  if (den == 0) bad(at(where, "den"), "zero denominator");
  return guarded(where, [&] { return Rational(num, den); });
}

json encode(const Valuation& v) {
  return {{"infinite", v.is_infinite()}, {"value", v.value()}};
}

json encode(const PadicScalar& x) {
  if (x.is_zero()) return {{"val", nullptr}, {"unit", "0"}, {"prec", x.absolute_precision()}};
  return {{"val", x.valuation().value()},
          {"unit", x.unit().get_str()},
          {"prec", x.relative_precision()}};
}

PadicScalar decode_scalar(const json& j, Prime p, int precision, const std::string& where) {
  if (j.is_number_integer() || j.is_string()) {
    return PadicScalar::from_integer(big_integer(j, where), p, precision);
  }
  const json& val = field(j, "val", where);
  const mpz_class unit = big_integer(field(j, "unit", where), at(where, "unit"));
  const std::int64_t prec = integer(field(j, "prec", where), at(where, "prec"));
  if (val.is_null()) {
    if (unit != 0) bad(at(where, "unit"), "a zero scalar has unit \"0\"");
    return PadicScalar::zero(p, prec);
  }
  const std::int64_t v = integer(val, at(where, "val"));
  if (prec < 1) bad(at(where, "prec"), "relative precision must be >= 1");
  if (unit % p == 0) bad(at(where, "unit"), "p divides the unit");
  return guarded(where, [&] { return PadicScalar::from_parts(p, static_cast<int>(prec), v, unit); });
}

json encode(const PadicPoly& f) {
  json out = json::array();
  for (const auto& c : f.coefficients()) out.push_back(encode(c));
  return out;
}

PadicPoly decode_poly(const json& j, Prime p, int precision, const std::string& where) {
  std::vector<PadicScalar> cs;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    cs.push_back(decode_scalar(j[i], p, precision, at(where, i)));
  }
  return PadicPoly(p, std::move(cs), precision);
}

json encode(const BoundedOperator& t) {
  const auto& space = t.space();
  json rows = json::array();
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < t.dimension(); ++k) row.push_back(encode(t.at(i, k)));
    rows.push_back(std::move(row));
  }
  json filtration = nullptr;
  if (space.filtration()) filtration = *space.filtration();
  return {{"prime", space.prime()},
          {"prec", t.working_precision()},
          {"basis", space.labels()},
          {"filtration", filtration},
          {"matrix", rows},
          {"exact", t.is_exact()}};
}

BoundedOperator decode_operator(const json& j, const std::string& where) {
  const Prime p = read_prime(j, where);
  const int prec = read_prec(j, where);
  const json& rows = array(field(j, "matrix", where), at(where, "matrix"));
  const std::size_t d = rows.size();
  if (d == 0) bad(at(where, "matrix"), "empty matrix");

  std::vector<std::string> labels;
  if (j.contains("basis") && !j["basis"].is_null()) {
    const json& b = array(j["basis"], at(where, "basis"));
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) bad(at(at(where, "basis"), i), "expected a string label");
      labels.push_back(b[i].get<std::string>());
    }
    if (labels.size() != d) {
      bad(at(where, "basis"), std::to_string(labels.size()) + " labels for a " + std::to_string(d) +
                                  "-row matrix");
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  }
  std::optional<std::vector<int>> filtration;
  if (j.contains("filtration") && !j["filtration"].is_null()) {
    const json& f = array(j["filtration"], at(where, "filtration"));
    std::vector<int> levels;
    for (std::size_t i = 0; i < f.size(); ++i) {
      levels.push_back(static_cast<int>(integer(f[i], at(at(where, "filtration"), i))));
    }
    filtration = std::move(levels);
  }
  bool exact = false;
  if (j.contains("exact")) {
    if (!j["exact"].is_boolean()) bad(at(where, "exact"), "expected a boolean");
    exact = j["exact"].get<bool>();
  }

  std::vector<PadicScalar> entries;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string rw = at(at(where, "matrix"), i);
    const json& row = array(rows[i], rw);
    if (row.size() != d) {
      bad(rw, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(d));
    }
    for (std::size_t k = 0; k < d; ++k) entries.push_back(decode_scalar(row[k], p, prec, at(rw, k)));
  }
  return guarded(where, [&] {
    TruncatedSpace space(p, std::move(labels), std::move(filtration));
    return BoundedOperator(std::move(space), std::move(entries),
                           exact ? Exactness::kFiltrationExact : Exactness::kApproximate);
  });
}

json encode(const ResidueMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return {{"prime", m.prime()}, {"exponent", m.exponent()}, {"rows", rows}};
}

json encode(const PolydiscFunction& f) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms()) {
    terms.push_back({{"u", mono.u}, {"s", mono.s}, {"coeff", encode(c)}});
  }
  return {{"prime", f.prime()}, {"k", f.k()}, {"prec", f.precision()}, {"terms", terms}};
}

PolydiscFunction decode_polydisc(const json& j, const std::string& where) {
  const Prime p = read_prime(j, where);
  const int prec = read_prec(j, where);
  const std::int64_t k = integer(field(j, "k", where), at(where, "k"));
  if (k < 1) bad(at(where, "k"), "k must be >= 1");
  PolydiscFunction f(p, static_cast<std::size_t>(k), prec);
  const json& terms = array(field(j, "terms", where), at(where, "terms"));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tw = at(at(where, "terms"), t);
    PolydiscMonomial m;
    for (const char* key : {"u", "s"}) {
      const json& e = array(field(terms[t], key, tw), at(tw, key));
      if (e.size() != static_cast<std::size_t>(k)) bad(at(tw, key), "expected k exponents");
      auto& dst = key[0] == 'u' ? m.u : m.s;
      for (std::size_t i = 0; i < e.size(); ++i) {
        const auto x = integer(e[i], at(at(tw, key), i));
        if (x < 0) bad(at(at(tw, key), i), "negative exponent");
        dst.push_back(static_cast<unsigned>(x));
      }
    }
    f.add_term(m, decode_scalar(field(terms[t], "coeff", tw), p, prec, at(tw, "coeff")));
  }
  return f;
}

json encode(const FiniteGroupTable& g) { return {{"table", g.table()}}; }

FiniteGroupTable decode_group(const json& j, const std::string& where) {
  const json& t = array(field(j, "table", where), at(where, "table"));
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string rw = at(at(where, "table"), i);
    std::vector<std::size_t> row;
    for (std::size_t k = 0; k < array(t[i], rw).size(); ++k) {
      const auto x = integer(t[i][k], at(rw, k));
      if (x < 0) bad(at(rw, k), "negative element index");
      row.push_back(static_cast<std::size_t>(x));
    }
    table.push_back(std::move(row));
  }
  return guarded(where, [&] { return FiniteGroupTable(std::move(table)); });
}

json encode(const TraceFunction<PadicScalar>& t) {
  json values = json::array();
  int prec = 1;
  for (const auto& v : t.values) {
    values.push_back(encode(v));
    prec = std::max(prec, v.relative_precision());
  }
  return {{"prime", t.values.empty() ? 0 : t.values.front().prime()},
          {"prec", prec},
          {"sigma_star", t.sigma_star},
          {"values", values}};
}

TraceFunction<PadicScalar> decode_trace(const json& j, const FiniteGroupTable& group,
                                        const std::string& where) {
  const Prime p = read_prime(j, where);
  const int prec = read_prec(j, where);
  const auto star = integer(field(j, "sigma_star", where), at(where, "sigma_star"));
  if (star < 0 || static_cast<std::size_t>(star) >= group.order()) {
    bad(at(where, "sigma_star"), "not an element of the group");
  }
  const json& vs = array(field(j, "values", where), at(where, "values"));
  if (vs.size() != group.order()) {
    bad(at(where, "values"), std::to_string(vs.size()) + " values for a group of order " +
                                 std::to_string(group.order()));
  }
  TraceFunction<PadicScalar> t{group, {}, static_cast<std::size_t>(star)};
  for (std::size_t i = 0; i < vs.size(); ++i) {
    t.values.push_back(decode_scalar(vs[i], p, prec, at(at(where, "values"), i)));
  }
  return t;
}

std::vector<PadicScalar> decode_samples(const json& j, Prime& p, const std::string& where) {
  p = read_prime(j, where);
  const int prec = read_prec(j, where);
  const json& s = array(field(j, "samples", where), at(where, "samples"));
  std::vector<PadicScalar> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(decode_scalar(s[i], p, prec, at(at(where, "samples"), i)));
  }
  if (out.empty()) bad(at(where, "samples"), "no samples");
  return out;
}

namespace {

const char* kind_name(AGenerator::Kind k) {
  switch (k) {
    case AGenerator::Kind::kShift: return "shift";
    case AGenerator::Kind::kConvolution: return "convolution";
    case AGenerator::Kind::kScalar: return "scalar";
    case AGenerator::Kind::kCharacter: return "character";
    case AGenerator::Kind::kMatrix: return "matrix";
  }
  return "?";
}

}  // namespace

json encode(const ToyAdmissible& model) {
  json gens = json::array();
  for (const auto& g : model.generators) {
    json e = {{"kind", kind_name(g.kind)}};
    switch (g.kind) {
      case AGenerator::Kind::kShift:
        e["shift"] = g.shift;
        break;
      case AGenerator::Kind::kConvolution: {
        json w = json::array();
        for (const auto& x : g.weights) w.push_back(x.get_str());
        e["weights"] = w;
        break;
      }
      case AGenerator::Kind::kScalar:
      case AGenerator::Kind::kCharacter:
        e["value"] = g.value.get_str();
        break;
      case AGenerator::Kind::kMatrix:
        e["rows"] = encode(*g.matrix)["rows"];
        break;
    }
    gens.push_back(std::move(e));
  }
  json bound = nullptr;
  if (model.invariant_bound) bound = *model.invariant_bound;
  return {{"prime", model.p},
          {"j", model.j},
          {"coefficient_exponent", model.coefficient_exponent},
          {"k_level", model.k_level},
          {"analytic_level", model.analytic_level},
          {"invariant_bound", bound},
          {"generators", gens}};
}

ToyAdmissible decode_toy(const json& j, const std::string& where) {
  ToyAdmissible t;
  t.p = read_prime(j, where);
  auto small = [&](const char* key, std::int64_t lo) {
    const auto x = integer(field(j, key, where), at(where, key));
    if (x < lo || x > 16) bad(at(where, key), "out of range");
    return static_cast<int>(x);
  };
  t.j = small("j", 1);
  t.coefficient_exponent = small("coefficient_exponent", 1);
  t.k_level = small("k_level", 0);
  t.analytic_level = small("analytic_level", 0);
  if (j.contains("invariant_bound") && !j["invariant_bound"].is_null()) {
    t.invariant_bound = integer(j["invariant_bound"], at(where, "invariant_bound"));
  }
  const json& gens = array(field(j, "generators", where), at(where, "generators"));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string gw = at(at(where, "generators"), i);
    const json& kind = field(gens[i], "kind", gw);
    if (!kind.is_string()) bad(at(gw, "kind"), "expected a string");
    const std::string k = kind.get<std::string>();
    AGenerator g;
    if (k == "shift") {
      g.kind = AGenerator::Kind::kShift;
      g.shift = integer(field(gens[i], "shift", gw), at(gw, "shift"));
    } else if (k == "convolution") {
      g.kind = AGenerator::Kind::kConvolution;
      const json& w = array(field(gens[i], "weights", gw), at(gw, "weights"));
      for (std::size_t y = 0; y < w.size(); ++y) g.weights.push_back(big_integer(w[y], at(at(gw, "weights"), y)));
    } else if (k == "scalar" || k == "character") {
      g.kind = k == "scalar" ? AGenerator::Kind::kScalar : AGenerator::Kind::kCharacter;
      g.value = big_integer(field(gens[i], "value", gw), at(gw, "value"));
    } else if (k == "matrix") {
      g.kind = AGenerator::Kind::kMatrix;
      const json& rows = array(field(gens[i], "rows", gw), at(gw, "rows"));
      const std::size_t d = rows.size();
      ResidueMatrix m(t.p, t.coefficient_exponent, d, d);
      for (std::size_t r = 0; r < d; ++r) {
        const std::string rw = at(at(gw, "rows"), r);
        if (array(rows[r], rw).size() != d) bad(rw, "row length does not match the row count");
        for (std::size_t c = 0; c < d; ++c) m.set(r, c, big_integer(rows[r][c], at(rw, c)));
      }
      g.matrix = std::move(m);
    } else {
      bad(at(gw, "kind"), "unknown generator kind '" + k + "'");
    }
    t.generators.push_back(std::move(g));
  }
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace padicla::jsonio
