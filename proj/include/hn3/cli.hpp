#pragma once

// Command-line front end. Every subcommand produces a list of reports which
// are rendered as text or as one JSON document.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed,
// 2 parse or usage error, 3 the input file could not be read or written.

#include <array>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hn3/connections.hpp"
#include "hn3/errors.hpp"
#include "hn3/io.hpp"
#include "hn3/lie.hpp"
#include "hn3/nijenhuis.hpp"
#include "hn3/report.hpp"
#include "hn3/structures.hpp"

namespace hn3 {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

namespace cli {

struct Options {
  bool json = false;
  bool example = false;
  bool force = false;
  std::string lambda = "1";
  std::string spec;
  std::string tensor;
  std::string emit;
  int alpha = 0;
  int beta = 0;
  bool lambda_given = false;
};

inline Scalar parse_lambda(const std::string& text) {
  const Scalar lambda = parse_scalar(text);
  if (is_zero(lambda)) throw CLI::ValidationError("--lambda", "the example parameter must be nonzero");
  return lambda;
}

inline HN3Manifold load(const Options& o) {
  if (o.example && !o.spec.empty()) throw CLI::ValidationError("give either --example or a spec file, not both");
  if (o.example) return builtin_example(parse_lambda(o.lambda));
  if (o.lambda_given) throw CLI::ValidationError("--lambda only applies to --example");
  if (o.spec.empty()) throw CLI::ValidationError("a spec file or --example is required");
  return parse_spec(o.spec);
}

/// Lie, metric and structure validation. The product extension is checked
/// only when the base is valid.
inline std::vector<Report> validation_reports(const HN3Manifold& h) {
  std::vector<Report> out{validate_lie(h.algebra()), validate_ac3(h), validate_hn_metric(h)};
  Report sig("signature");
  if (h.metric().is_symmetric()) {
    std::ostringstream os;
    os << "metric signature " << signature(h.metric());
    sig.note(os.str());
  }
  bool valid = true;
  for (const auto& r : out) valid = valid && r.passed();
  if (valid) {
    const ProductExtension p = build_product(h);
    std::ostringstream os;
    os << "product metric signature " << signature(p.metric());
    sig.note(os.str());
    out.push_back(validate_hypercomplex_hn(p));
  }
  out.push_back(std::move(sig));
  return out;
}

inline bool all_passed(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

/// Refuses to compute on input that is not a valid structure unless forced.
inline std::optional<std::vector<Report>> guard(const HN3Manifold& h, const Options& o) {
  auto reports = validation_reports(h);
  if (all_passed(reports) || o.force) return std::nullopt;
  return reports;
}

inline Tensor named_tensor(const HN3Manifold& h, const std::string& name, const Options& o, Report& report) {
  const auto alpha = [&]() -> Alpha { return name.back() - '0'; };
  if (name == "LC") return levi_civita(h.metric_algebra()).coefficients();
  if (name == "braces") return braces(h.metric_algebra());
  if (name.size() == 2 && name[0] == 'F') return fundamental_F(h, alpha());
  if (name.size() == 2 && name[0] == 'N') return nijenhuis_N(h, alpha()).lowered;
  if (name.rfind("Nhat", 0) == 0) return assoc_nijenhuis(h, alpha()).lowered;
  const TorsionForm t = torsion_for(h, alpha(), o.force);
  if (!t.is_certified()) report.note("non-certified: class condition fails, torsion formula evaluated with --force");
  return t.tensor();
}

inline std::vector<Report> cmd_validate(const HN3Manifold& h) { return validation_reports(h); }

inline std::vector<Report> cmd_compute(const HN3Manifold& h, const Options& o) {
  if (auto failed = guard(h, o)) return *failed;
  Report report("compute-" + o.tensor);
  report.attach(o.tensor, named_tensor(h, o.tensor, o, report));
  return {report};
}

inline std::vector<Report> cmd_classify(const HN3Manifold& h, const Options& o) {
  if (auto failed = guard(h, o)) return *failed;
  std::vector<Report> out;
  out.push_back(class_condition_W(fundamental_F(h, 1), h));
  for (Alpha a = 2; a <= 3; ++a) out.push_back(class_condition_F3F7(fundamental_F(h, a), h, a));
  // Failing class conditions are findings; only the equivalence checks gate
  // the exit status.
  for (auto& r : out) {
    Report finding(r.check());
    finding.note(r.passed() ? "holds" : "does not hold");
    for (const auto& v : r.violations())
      finding.note("violated " + v.what + " at " + format_index(v.indices) + ": lhs = " + to_string(v.lhs) +
                   ", rhs = " + to_string(v.rhs));
    r = std::move(finding);
  }
  out.push_back(classify(h));
  return out;
}

inline std::vector<Report> cmd_connection(const HN3Manifold& h, const Options& o) {
  if (auto failed = guard(h, o)) return *failed;
  std::vector<Report> out;
  bool all_exist = true;
  for (Alpha a = 1; a <= 3; ++a) {
    Report r("natural-connection-" + std::to_string(a));
    const TorsionForm t = torsion_for(h, a, /*force=*/true);
    if (t.is_certified()) {
      r.attach("T" + std::to_string(a), t.tensor());
      r.merge(check_natural(build_connection(h, a, t), h));
    } else {
      all_exist = false;
      r.note("class condition fails: no natural connection with totally skew-symmetric torsion for structure " +
             std::to_string(a));
      if (o.force) {
        r.note("non-certified: torsion formula evaluated with --force");
        r.attach("T" + std::to_string(a), t.tensor());
      }
    }
    out.push_back(std::move(r));
  }
  if (!all_exist) return out;
  try {
    out.push_back(coincidence_check(h).report);
  } catch (const PreconditionError& e) {
    Report r("connection-coincidence");
    r.note(std::string("not decided: ") + e.what());
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<Report> cmd_product(const HN3Manifold& h, const Options& o) {
  if (auto failed = guard(h, o)) return *failed;
  const ProductExtension p = build_product(h);
  std::vector<Report> out{validate_hypercomplex_hn(p)};
  if ((o.alpha == 0) != (o.beta == 0))
    throw CLI::ValidationError("give both --alpha and --beta, or neither");
  Report braces_report("associated-tensors-JJ");
  for (Alpha a = 1; a <= 3; ++a)
    for (Alpha b = a; b <= 3; ++b) {
      if (o.alpha != 0 && !((a == o.alpha && b == o.beta) || (a == o.beta && b == o.alpha))) continue;
      const std::string name = "{J" + std::to_string(a) + ",J" + std::to_string(b) + "}";
      braces_report.attach(name, assoc_JJ(p, a, b));
    }
  out.push_back(std::move(braces_report));
  for (Alpha a = 1; a <= 3; ++a)
    if (o.alpha == 0 || a == o.alpha || a == o.beta) out.push_back(check_block_identity(p, a));
  return out;
}

inline void render(const std::vector<Report>& reports, const Options& o, std::ostream& out) {
  if (o.json) {
    nlohmann::json doc;
    doc["status"] = all_passed(reports) ? "pass" : "fail";
    doc["reports"] = reports;
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) out << r;
}

}  // namespace cli

/// Parses argv and runs one subcommand.
inline int run_subcommand(int argc, const char* const* argv, std::ostream& out = std::cout,
                          std::ostream& err = std::cerr) {
  using cli::Options;
  Options o;
  CLI::App app{"Exact verification of almost contact HN-metric 3-structures on metric Lie algebras", "hn3"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_spec) {
    sub->add_flag("--json", o.json, "emit JSON instead of text");
    sub->add_flag("--example", o.example, "use the built-in 7-dimensional example");
    sub->add_option("--lambda", o.lambda, "parameter of the built-in example, p/q, nonzero")
        ->each([&](const std::string&) { o.lambda_given = true; });
    sub->add_flag("--force", o.force, "evaluate even when validation or class conditions fail");
    if (with_spec) sub->add_option("spec", o.spec, "JSON spec file");
  };

  std::function<std::vector<Report>(const HN3Manifold&)> action;
  auto* validate = app.add_subcommand("validate", "check all structure axioms");
  common(validate, true);
  validate->callback([&] { action = [&](const HN3Manifold& h) { return cli::cmd_validate(h); }; });

  auto* compute = app.add_subcommand("compute", "print the nonzero components of one tensor");
  common(compute, true);
  compute->add_option("--tensor", o.tensor, "tensor name")
      ->required()
      ->check(CLI::IsMember({"F1", "F2", "F3", "N1", "N2", "N3", "Nhat1", "Nhat2", "Nhat3", "T1", "T2", "T3", "LC",
                             "braces"}));
  compute->callback([&] { action = [&](const HN3Manifold& h) { return cli::cmd_compute(h, o); }; });

  auto* classify_cmd = app.add_subcommand("classify", "class conditions and their equivalent forms");
  common(classify_cmd, true);
  classify_cmd->callback([&] { action = [&](const HN3Manifold& h) { return cli::cmd_classify(h, o); }; });

  auto* connection = app.add_subcommand("connection", "natural connections with totally skew-symmetric torsion");
  common(connection, true);
  connection->callback([&] { action = [&](const HN3Manifold& h) { return cli::cmd_connection(h, o); }; });

  auto* product = app.add_subcommand("product", "almost hypercomplex structure on the product with a line");
  common(product, true);
  product->add_option("--alpha", o.alpha, "first structure index")->check(CLI::Range(1, 3));
  product->add_option("--beta", o.beta, "second structure index")->check(CLI::Range(1, 3));
  product->callback([&] { action = [&](const HN3Manifold& h) { return cli::cmd_product(h, o); }; });

  auto* example = app.add_subcommand("example", "write the built-in example as a spec file");
  example->add_option("--lambda", o.lambda, "parameter, p/q, nonzero");
  example->add_option("--emit", o.emit, "output path (default: standard output)");
  bool emit_example = false;
  example->callback([&] { emit_example = true; });

  try {
    app.parse(argc, argv);
    if (emit_example) {
      const HN3Manifold h = builtin_example(cli::parse_lambda(o.lambda));
      if (o.emit.empty())
        out << spec_to_json(h).dump(2) << "\n";
      else
        write_spec(h, o.emit);
      return kOk;
    }
    const HN3Manifold h = cli::load(o);
    if (h.dim() % 4 != 3 && !o.json)
      err << "warning: dimension " << h.dim() << " is not of the form 4n+3\n";
    const auto reports = action(h);
    cli::render(reports, o, out);
    return cli::all_passed(reports) ? kOk : kCheckFailed;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const SingularMatrixError& e) {
    err << "degenerate input: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace hn3
