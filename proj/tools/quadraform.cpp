// Command-line front end: parse algebra files, dispatch operations, emit
// machine-readable certificates and human-readable reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "quadraform/cli.hpp"
#include "quadraform/errors.hpp"

namespace {

using quadraform::Json;

Json load_input(const std::string& path_or_builtin) {
  if (path_or_builtin.rfind("builtin:", 0) == 0) {
    return quadraform::builtin_document(path_or_builtin.substr(8));
  }
  std::ifstream in(path_or_builtin);
  if (!in)
    throw quadraform::Error(quadraform::ErrorCode::ParseError,
                            "cannot open '" + path_or_builtin + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw quadraform::Error(quadraform::ErrorCode::ParseError,
                            "bad JSON in '" + path_or_builtin + "': " + e.what());
  }
  return doc;
}

int finish(const quadraform::cli::CommandResult& result, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write certificate to '" << out_path << "'\n";
      return 1;
    }
    out << result.certificate.dump(2) << "\n";
  }
  std::cout << result.report;
  if (out_path.empty()) std::cout << result.certificate.dump(2) << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadraform: invariant metrics on current Lie algebras, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "write the certificate JSON to this path")
      ->configurable(false);

  quadraform::cli::Options options;
  long max_box = -1;
  app.add_option("--max-box", max_box, "override the integer-box search bound (0 skips searches)");

  std::string input_a, input_b, builtin_spec;

  auto* validate = app.add_subcommand("validate", "check the algebra axioms of a file");
  validate->add_option("file", input_a, "algebra file (or builtin:<name[:param]>)");
  validate->add_option("--builtin", builtin_spec, "use a builtin instead of a file");

  auto* invariants =
      app.add_subcommand("invariants", "center, derived subalgebra, centroid, invariant forms");
  invariants->add_option("file", input_a, "algebra file");
  invariants->add_option("--builtin", builtin_spec, "use a builtin instead of a file");

  auto* current = app.add_subcommand("current-metric",
                                     "solve for an invariant metric on g (x) S");
  current->add_option("g_file", input_a, "lie algebra file")->required();
  current->add_option("s_file", input_b, "assoc algebra file")->required();
  current->add_flag("--verify-only", options.verify_only,
                    "only verify the 'current_form' in the input");

  auto* dext = app.add_subcommand("double-extend", "double extension of (h, B_h) by D");
  dext->add_option("h_file", input_a, "lie algebra file with 'form' and 'D'")->required();
  dext->add_flag("--round-trip", options.round_trip, "witt-split the result and compare");

  auto* wsplit = app.add_subcommand("witt-split", "split g along an isotropic central c");
  wsplit->add_option("g_file", input_a, "lie algebra file with 'form' and 'c'")->required();
  wsplit->add_flag("--round-trip", options.round_trip, "double-extend the parts and compare");

  auto* reverse = app.add_subcommand("reverse", "recover a metric on g from one on g (x) S");
  reverse->add_option("file", input_a, "file with 'lie', 'assoc' and 'current_form'")->required();
  std::size_t s_index = 0;
  auto* s_index_opt = reverse->add_option("--s-index", s_index, "S-basis index for s (default: unit)");

  auto* heis = app.add_subcommand("heisenberg", "emit h_n or h_n(D) as an algebra file");
  std::size_t heis_n = 1;
  bool extended = false;
  heis->add_option("n", heis_n, "number of (p, q) pairs")->required();
  heis->add_flag("--extended", extended, "extend by the default derivation and attach the metric");

  auto* frob = app.add_subcommand("frobenius", "invariant bilinear forms of an assoc algebra");
  frob->add_option("s_file", input_a, "assoc algebra file");
  frob->add_option("--builtin", builtin_spec, "use a builtin instead of a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1, --help exits 0
  }

  try {
    options.max_dim = quadraform::cli::max_dim_from_env();
    if (max_box >= 0) options.max_box = max_box;

    auto primary_input = [&]() -> Json {
      if (!builtin_spec.empty()) return quadraform::builtin_document(builtin_spec);
      if (input_a.empty())
        throw quadraform::Error(quadraform::ErrorCode::ParseError,
                                "missing input file (or --builtin)");
      return load_input(input_a);
    };

    quadraform::cli::CommandResult result;
    if (*validate) {
      result = quadraform::cli::cmd_validate(primary_input());
    } else if (*invariants) {
      result = quadraform::cli::cmd_invariants(primary_input());
    } else if (*current) {
      result = quadraform::cli::cmd_current_metric(load_input(input_a), load_input(input_b),
                                                   options);
    } else if (*dext) {
      result = quadraform::cli::cmd_double_extend(load_input(input_a), options);
    } else if (*wsplit) {
      result = quadraform::cli::cmd_witt_split(load_input(input_a), options);
    } else if (*reverse) {
      if (s_index_opt->count() > 0) options.s_index = s_index;
      result = quadraform::cli::cmd_reverse(load_input(input_a), options);
    } else if (*heis) {
      result = quadraform::cli::cmd_heisenberg(heis_n, extended);
    } else if (*frob) {
      result = quadraform::cli::cmd_frobenius(primary_input());
    } else {
      return 1;
    }
    return finish(result, out_path);
  } catch (const quadraform::Error& e) {
    std::cerr << e.code_name() << ": " << e.what() << "\n";
    if (!out_path.empty()) {
      Json cert;
      cert["tool"] = "quadraform";
      cert["error"] = e.code_name();
      cert["witness"] = e.what();
      std::ofstream out(out_path);
      out << cert.dump(2) << "\n";
    }
    switch (e.code()) {
      case quadraform::ErrorCode::ParseError:
      case quadraform::ErrorCode::DimensionMismatch:
      case quadraform::ErrorCode::LimitExceeded:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
