#include "app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "padicla/error.hpp"
#include "padicla/json_io.hpp"
#include "reports.hpp"

namespace padicla::cli {

namespace io = jsonio;
namespace fs = std::filesystem;

namespace {

struct Globals {
  std::optional<Prime> prime;
  std::optional<int> prec;
  std::string report = "json";
  std::uint64_t seed = 0;
};

// Library errors that are verdicts rather than bad input.
bool is_verdict(ErrorCode code) {
  return code == ErrorCode::kCounterexampleFound || code == ErrorCode::kImplicationViolated;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kParseError, path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParseError, path + ": " + e.what());
  }
}

// Fills "prime" and "prec" from the global flags when an input omits them;
// an explicit --prime must agree with the input.
void apply_globals(json& j, const Globals& g, const std::string& path) {
  if (j.is_array()) {
    for (auto& e : j) apply_globals(e, g, path);
    return;
  }
  if (!j.is_object()) return;
  if (g.prime) {
    if (!j.contains("prime")) {
      j["prime"] = *g.prime;
    } else if (j["prime"] != json(*g.prime)) {
      fail(ErrorCode::kPreconditionViolation,
           path + ": input prime " + j["prime"].dump() + " differs from --prime " +
               std::to_string(*g.prime));
    }
  }
  if (g.prec && !j.contains("prec")) j["prec"] = *g.prec;
}

json load(const std::string& path, const Globals& g) {
  json j = read_json(path);
  apply_globals(j, g, path);
  return j;
}

OperatorMode parse_mode(const std::string& m) {
  if (m == "direct") return OperatorMode::kDirect;
  if (m == "unipotent") return OperatorMode::kUnipotent;
  return OperatorMode::kAuto;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic locally analytic diagnostics", "padicla"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--prime", g.prime, "Prime p; fills inputs that omit it and must match the rest")
      ->check(CLI::PositiveNumber);
  app.add_option("--prec", g.prec, "Precision N for fixtures and inputs that omit it")
      ->check(CLI::Range(1, 100000));
  app.add_option("--report", g.report, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for fixtures");

  // analyze-operator
  auto* analyze = app.add_subcommand("analyze-operator", "Local analyticity of one operator");
  std::string input, batch, mode = "auto";
  auto* input_opt = analyze->add_option("--input", input, "Operator JSON file")->check(CLI::ExistingFile);
  auto* batch_opt = analyze->add_option("--batch", batch, "Directory of operator JSON files")->check(CLI::ExistingDirectory);
  input_opt->excludes(batch_opt);
  analyze->add_option("--mode", mode, "auto, direct (T) or unipotent (T - I)")
      ->check(CLI::IsMember({"auto", "direct", "unipotent"}));

  // iwasawa-extend
  auto* extend = app.add_subcommand("iwasawa-extend", "Evaluate a polydisc function on a Z_p^k action");
  std::string action_path, function_path, n_text = "AUTO";
  extend->add_option("--action", action_path, "JSON array of commuting operators")
      ->required()
      ->check(CLI::ExistingFile);
  extend->add_option("--function", function_path, "Polydisc function JSON")
      ->required()
      ->check(CLI::ExistingFile);
  extend->add_option("--n", n_text, "Exponent n, or AUTO for the least uniform one");

  // mahler
  auto* mahler_cmd = app.add_subcommand("mahler", "Mahler coefficients and analyticity level");
  std::string samples_path;
  std::optional<int> level;
  mahler_cmd->add_option("--samples", samples_path, "Samples f(0..M) JSON")
      ->required()
      ->check(CLI::ExistingFile);
  mahler_cmd->add_option("--level", level, "Pass iff f is analytic at this level")
      ->check(CLI::NonNegativeNumber);

  // harness
  auto* harness_cmd = app.add_subcommand("harness", "Analytic-vector factoring check on a toy model");
  std::string model_path;
  int harness_n = 1;
  harness_cmd->add_option("--model", model_path, "Toy model JSON")->required()->check(CLI::ExistingFile);
  harness_cmd->add_option("--n", harness_n, "Coefficient exponent n")->check(CLI::PositiveNumber);

  // pseudorep
  auto* pseudo = app.add_subcommand("pseudorep", "Validate and split a degree-2 trace");
  std::string group_path, trace_path;
  bool want_reconstruct = false;
  pseudo->add_option("--group", group_path, "Group table JSON (or a combined group-trace file)")
      ->required()
      ->check(CLI::ExistingFile);
  pseudo->add_option("--trace", trace_path, "Trace JSON")->check(CLI::ExistingFile);
  pseudo->add_flag("--reconstruct", want_reconstruct, "Also rebuild a matrix representation");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Emit a deterministic fixture");
  FixtureRequest fx;
  std::string out_path;
  fixtures->add_option("--kind", fx.kind, "Fixture kind")
      ->required()
      ->check(CLI::IsMember({"translation", "random-nilres", "group-trace", "toy-admissible"}));
  fixtures->add_option("--size", fx.size, "Degree (translation) or dimension (random-nilres)");
  fixtures->add_option("--j", fx.j, "Level j of Z/p^j for toy-admissible");
  fixtures->add_option("--group", fx.group, "Group-trace kind")
      ->check(CLI::IsMember({"s3-standard", "char-sum", "char-sum-trivial", "dihedral"}));
  fixtures->add_option("--out", out_path, "Output file (default: standard output)");

  // schema-validate
  auto* validate = app.add_subcommand("schema-validate", "Check an input file against its schema");
  std::string validate_path, schema = "auto";
  validate->add_option("path", validate_path, "JSON file")->required();
  validate->add_option("--schema", schema, "Schema name, or auto")
      ->check(CLI::IsMember({"auto", "operator", "action", "polydisc", "samples", "toy", "group",
                             "group-trace", "trace", "scalar"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto emit = [&](const json& body) {
    if (g.report == "text") {
      out << render_text(body);
    } else {
      out << io::dump(body);
    }
  };

  try {
    Report r;
    if (analyze->parsed()) {
      require(!input.empty() || !batch.empty(), ErrorCode::kParseError,
              "analyze-operator needs --input or --batch");
      if (!batch.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(batch)) {
          if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        json reports = json::array();
        bool all = true;
        for (const auto& f : files) {
          json item = {{"file", f.filename().string()}};
          try {
            const Report one = analyze_operator(io::decode_operator(load(f.string(), g)), parse_mode(mode));
            item["report"] = one.body;
            item["pass"] = one.pass;
            all = all && one.pass;
          } catch (const Error& e) {
            item["report"] = error_report(std::string(to_string(e.code())), e.what());
            item["pass"] = false;
            all = false;
          }
          reports.push_back(std::move(item));
        }
        r.body = {{"batch", batch}, {"reports", reports}};
        r.pass = all;
      } else {
        r = analyze_operator(io::decode_operator(load(input, g)), parse_mode(mode));
      }
    } else if (extend->parsed()) {
      json action = load(action_path, g);
      if (action.is_object() && action.contains("generators")) action = action["generators"];
      require(action.is_array() && !action.empty(), ErrorCode::kParseError,
              action_path + ": expected a non-empty array of operators");
      std::vector<BoundedOperator> gens;
      for (std::size_t i = 0; i < action.size(); ++i) {
        gens.push_back(io::decode_operator(action[i], "$[" + std::to_string(i) + "]"));
      }
      std::optional<int> n;
      if (n_text != "AUTO" && n_text != "auto") {
        try {
          n = std::stoi(n_text);
        } catch (const std::exception&) {
          fail(ErrorCode::kParseError, "--n must be AUTO or an integer");
        }
        require(*n >= 1, ErrorCode::kParseError, "--n must be >= 1");
      }
      r = iwasawa_extend(GroupActionSpec(std::move(gens)), io::decode_polydisc(load(function_path, g)), n);
    } else if (mahler_cmd->parsed()) {
      Prime p = 2;
      const auto samples = io::decode_samples(load(samples_path, g), p);
      r = mahler(samples, level);
    } else if (harness_cmd->parsed()) {
      r = harness(io::decode_toy(load(model_path, g)), harness_n);
    } else if (pseudo->parsed()) {
      json group_doc = load(group_path, g);
      json trace_doc;
      if (trace_path.empty()) {
        require(group_doc.contains("group") && group_doc.contains("trace"), ErrorCode::kParseError,
                "--trace is required unless --group holds both group and trace");
        trace_doc = group_doc["trace"];
        group_doc = json(group_doc["group"]);
      } else {
        trace_doc = load(trace_path, g);
        if (group_doc.contains("group")) group_doc = json(group_doc["group"]);
      }
      const auto group = io::decode_group(group_doc, "$group");
      r = pseudorep(io::decode_trace(trace_doc, group, "$trace"), want_reconstruct);
    } else if (fixtures->parsed()) {
      require(g.prime.has_value(), ErrorCode::kParseError, "fixtures needs --prime");
      fx.p = *g.prime;
      require(is_prime(fx.p), ErrorCode::kPreconditionViolation, std::to_string(fx.p) + " is not prime");
      fx.precision = g.prec.value_or(kDefaultPrecision);
      fx.seed = g.seed;
      const json body = fixture(fx);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        require(f.good(), ErrorCode::kParseError, out_path + ": cannot write");
        f << io::dump(body);
        r.body = {{"written", out_path}, {"kind", fx.kind}};
      } else {
        r.body = body;
      }
    } else if (validate->parsed()) {
      require(fs::exists(validate_path), ErrorCode::kParseError, validate_path + ": no such file");
      std::ifstream in(validate_path);
      json doc;
      try {
        doc = json::parse(in);
      } catch (const json::parse_error& e) {
        r.body = {{"schema", schema}, {"valid", false}, {"errors", json::array({e.what()})}};
        r.pass = false;
        emit(r.body);
        return 1;
      }
      r = schema_validate(doc, schema);
    }
    emit(r.body);
    return r.pass ? 0 : 1;
  } catch (const Error& e) {
    const std::string code(to_string(e.code()));
    err << "error: " << e.what() << "\n";
    emit(error_report(code, e.what()));
    return is_verdict(e.code()) ? 1 : 2;
  }
}

}  // namespace padicla::cli
