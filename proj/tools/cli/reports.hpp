#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "padicla/banach.hpp"
#include "padicla/iwasawa.hpp"
#include "padicla/mahler.hpp"
#include "padicla/pseudorep.hpp"

namespace padicla::cli {

using nlohmann::json;

// A report plus the verdict it carries: exit status 0 when `pass`, 1 otherwise.
struct Report {
  json body;
  bool pass = true;
};

enum class OperatorMode { kAuto, kDirect, kUnipotent };

// Direct mode analyses T itself, unipotent mode T - I. Auto picks direct when
// T is topologically nilpotent and unipotent otherwise.
Report analyze_operator(const BoundedOperator& t, OperatorMode mode);

// n = nullopt means the least uniform exponent.
Report iwasawa_extend(const GroupActionSpec& action, const PolydiscFunction& f,
                      std::optional<int> n);

Report mahler(const std::vector<PadicScalar>& samples, std::optional<int> level);

Report harness(const ToyAdmissible& model, int n);

Report pseudorep(const TraceFunction<PadicScalar>& trace, bool reconstruct);

struct FixtureRequest {
  std::string kind;  // translation, random-nilres, group-trace, toy-admissible
  Prime p = 2;
  int precision = kDefaultPrecision;
  std::uint64_t seed = 0;
  std::size_t size = 2;         // degree or dimension
  int j = 2;                    // toy-admissible
  std::string group = "s3-standard";
};
json fixture(const FixtureRequest& request);

// schema: operator, action, polydisc, samples, toy, group, trace, scalar, or
// auto (detected from the fields present).
Report schema_validate(const json& document, const std::string& schema);

json error_report(const std::string& code, const std::string& message);

// key: value lines for --report text.
std::string render_text(const json& report);

}  // namespace padicla::cli
