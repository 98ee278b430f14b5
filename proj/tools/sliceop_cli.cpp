// Command line front end for the sliceop library.
//
// Series arguments are JSON files in the interchange format documented in
// sliceop/serialization.hpp. Subcommands that produce a series print it to
// stdout (or write it with -o); `--out` selects json, table, or csv
// rendering for everything printed to stdout. JSON output is deterministic:
// identical inputs, seed, and flags give byte-identical bytes.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sliceop/compose.hpp"
#include "sliceop/errors.hpp"
#include "sliceop/hardy.hpp"
#include "sliceop/moebius.hpp"
#include "sliceop/serialization.hpp"
#include "sliceop/series.hpp"
#include "sliceop/verify.hpp"

namespace {

using namespace sliceop;

struct GlobalOpts {
  std::size_t degree = 128;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  std::string out = "table";
};

// %.17g, with non-finite values rendered as quoted strings so the output
// stays valid JSON.
std::string json_number(double v) {
  if (std::isfinite(v)) return format_double(v);
  if (std::isnan(v)) return "\"nan\"";
  return v > 0 ? "\"inf\"" : "\"-inf\"";
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        out += ch;
    }
  }
  out += '"';
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    out += ch;
    if (ch == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string quat_json(const Quaternion& q) {
  return "[" + json_number(q.w) + "," + json_number(q.x) + "," + json_number(q.y) + "," +
         json_number(q.z) + "]";
}

void emit_series(const Series& f, const GlobalOpts& g, const std::string& out_path) {
  if (!out_path.empty()) {
    write_series(f, out_path);
    return;
  }
  if (g.out == "json") {
    std::cout << serialize_series(f) << "\n";
  } else if (g.out == "csv") {
    std::cout << "n,w,x,y,z\n";
    for (std::size_t n = 0; n <= f.degree(); ++n) {
      const Quaternion& c = f.coeff(n);
      std::cout << n << "," << format_double(c.w) << "," << format_double(c.x) << ","
                << format_double(c.y) << "," << format_double(c.z) << "\n";
    }
  } else {
    const double r = f.radius();
    std::cout << "degree " << f.degree() << ", radius "
              << (std::isinf(r) ? std::string("inf") : format_double(r)) << "\n";
    for (std::size_t n = 0; n <= f.degree(); ++n) {
      const Quaternion& c = f.coeff(n);
      std::printf("%4zu  % .17g  % .17g  % .17g  % .17g\n", n, c.w, c.x, c.y, c.z);
    }
  }
}

CompositionVariant parse_variant(const std::string& name) {
  if (name == "odot-right") return CompositionVariant::odot_right;
  if (name == "odot-left") return CompositionVariant::odot_left;
  if (name == "vlacci-right") return CompositionVariant::vlacci_right;
  if (name == "vlacci-left") return CompositionVariant::vlacci_left;
  if (name == "bullet-up") return CompositionVariant::bullet_up;
  if (name == "bullet-down") return CompositionVariant::bullet_down;
  throw InvalidArgument("unknown composition variant \"" + name + "\"");
}

std::string verify_report_json(const VerifyReport& r) {
  std::string out = "{\"cases\":[";
  bool first = true;
  for (const VerifyCase& c : r.cases) {
    if (!first) out += ",";
    first = false;
    out += "{\"name\":" + json_quote(c.name) + ",\"paper_anchor\":" + json_quote(c.paper_anchor) +
           ",\"status\":" + json_quote(to_string(c.status)) +
           ",\"max_error\":" + json_number(c.max_error) + "}";
  }
  out += "],\"summary\":{\"pass\":" + std::to_string(r.summary.pass) +
         ",\"fail\":" + std::to_string(r.summary.fail) +
         ",\"flagged\":" + std::to_string(r.summary.flagged) +
         ",\"skipped\":" + std::to_string(r.summary.skipped) + "}";
  if (!r.note.empty()) out += ",\"note\":" + json_quote(r.note);
  out += "}";
  return out;
}

int run_verify_cmd(const GlobalOpts& g, const std::string& suite) {
  const VerifyReport r = run_verify(suite, g.seed);
  if (g.out == "json") {
    std::cout << verify_report_json(r) << "\n";
  } else if (g.out == "csv") {
    std::cout << "name,status,max_error,paper_anchor\n";
    for (const VerifyCase& c : r.cases) {
      std::cout << c.name << "," << to_string(c.status) << "," << format_double(c.max_error)
                << "," << csv_quote(c.paper_anchor) << "\n";
    }
  } else {
    std::size_t width = 4;
    for (const VerifyCase& c : r.cases) width = std::max(width, c.name.size());
    for (const VerifyCase& c : r.cases) {
      std::printf("%-19s  %-*s  %-11.3e  %s\n", to_string(c.status), static_cast<int>(width),
                  c.name.c_str(), c.max_error, c.paper_anchor.c_str());
    }
    std::printf("summary: %d pass, %d fail, %d flagged, %d skipped\n", r.summary.pass,
                r.summary.fail, r.summary.flagged, r.summary.skipped);
    if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
  }
  return r.summary.fail == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slice regular power series toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--degree", g.degree, "truncation degree for compositions and matrices")
      ->capture_default_str();
  app.add_option("--tol", g.tol, "tolerance for iterative computations")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--out", g.out, "output rendering")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  std::string path_a, path_b, out_path, variant_name = "odot-right", estimate_path;
  std::string suite = "all", side_name = "c";
  double p = 2.0;
  std::size_t times = 1, max_iter = 20000, samples = 64;
  bool do_symmetrize = false, sweep = false;

  // Let --degree/--tol/--seed/--out match from after the subcommand too.
  app.fallthrough();

  CLI::App* star = app.add_subcommand("star", "star product of two series");
  star->add_option("f", path_a, "left factor (series JSON file)")->required();
  star->add_option("g", path_b, "right factor (series JSON file)")->required();
  star->add_option("-o,--output", out_path, "write the result to this file");

  CLI::App* conjugate = app.add_subcommand("conjugate", "regular conjugate of a series");
  conjugate->add_option("f", path_a, "series JSON file")->required();
  conjugate->add_flag("--symmetrize", do_symmetrize, "emit the symmetrization f * f^c instead");
  conjugate->add_option("-o,--output", out_path, "write the result to this file");

  CLI::App* reciprocal =
      app.add_subcommand("reciprocal", "star reciprocal, truncated at --degree");
  reciprocal->add_option("f", path_a, "series JSON file")->required();
  reciprocal->add_option("-o,--output", out_path, "write the result to this file");

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "regular composition, truncated at --degree");
  compose_cmd->add_option("f", path_a, "outer series (JSON file)")->required();
  compose_cmd->add_option("phi", path_b, "inner series (JSON file)")->required();
  compose_cmd
      ->add_option("--variant", variant_name, "composition variant")
      ->check(CLI::IsMember({"odot-right", "odot-left", "vlacci-right", "vlacci-left",
                             "bullet-up", "bullet-down"}))
      ->capture_default_str();
  compose_cmd->add_option("--estimate", estimate_path,
                          "write per-coefficient roundoff estimates (JSON array) here");
  compose_cmd->add_option("-o,--output", out_path, "write the result to this file");

  CLI::App* norm = app.add_subcommand("norm", "Hardy space norm of a series");
  norm->add_option("f", path_a, "series JSON file")->required();
  norm->add_option("--p", p, "exponent (2 = exact coefficient norm, inf = sup estimate)")
      ->capture_default_str();

  CLI::App* opnorm = app.add_subcommand("opnorm", "composition operator norm at --degree");
  opnorm->add_option("phi", path_a, "inner self-map (series JSON file)")->required();
  opnorm->add_option("--side", side_name, "c (right linear) or d (left linear)")
      ->check(CLI::IsMember({"c", "d"}))
      ->capture_default_str();
  opnorm->add_option("--samples", samples, "kernel samples for the lower bound")
      ->capture_default_str();
  opnorm->add_flag("--sweep", sweep, "with --out csv: sweep N doubling from 16 to --degree");

  CLI::App* iterate_cmd = app.add_subcommand("iterate", "n-fold self-composition");
  iterate_cmd->add_option("f", path_a, "series JSON file")->required();
  iterate_cmd->add_option("-n,--times", times, "number of compositions")->capture_default_str();
  iterate_cmd->add_option("-o,--output", out_path, "write the result to this file");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "fixed point classification of a disc self-map");
  classify_cmd->add_option("f", path_a, "series JSON file")->required();

  CLI::App* dw = app.add_subcommand("denjoy-wolff", "iterate to the attracting fixed point");
  dw->add_option("f", path_a, "series JSON file")->required();
  dw->add_option("--max-iter", max_iter, "iteration cap")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "replay the worked examples and invariants");
  verify->add_option("--suite", suite,
                     "examples, littlewood, conjugation, star-pointwise, opnorm, compactness, "
                     "denjoy-wolff, hp-bounds, h2-slice, representation, or all")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (star->parsed()) {
      emit_series(sliceop::star(parse_series(path_a), parse_series(path_b)), g, out_path);
    } else if (conjugate->parsed()) {
      const Series f = parse_series(path_a);
      emit_series(do_symmetrize ? symmetrize(f) : regular_conjugate(f), g, out_path);
    } else if (reciprocal->parsed()) {
      emit_series(star_reciprocal(parse_series(path_a), g.degree), g, out_path);
    } else if (compose_cmd->parsed()) {
      const CompositionVariant variant = parse_variant(variant_name);
      VlacciEstimate estimate;
      const Series h =
          compose(parse_series(path_a), parse_series(path_b), variant, g.degree, &estimate);
      if (!estimate_path.empty()) {
        std::string doc = "[";
        for (std::size_t n = 0; n < estimate.coeff_error.size(); ++n) {
          if (n) doc += ",";
          doc += json_number(estimate.coeff_error[n]);
        }
        doc += "]\n";
        std::FILE* fp = std::fopen(estimate_path.c_str(), "wb");
        if (!fp) throw IoError("cannot open " + estimate_path);
        std::fwrite(doc.data(), 1, doc.size(), fp);
        std::fclose(fp);
      }
      emit_series(h, g, out_path);
    } else if (norm->parsed()) {
      const Series f = parse_series(path_a);
      const double value = p == 2.0            ? h2_norm(f)
                           : std::isinf(p)     ? sup_norm_estimate(f)
                                               : hp_norm(f, p);
      if (g.out == "json") {
        std::cout << "{\"p\":" << json_number(p) << ",\"norm\":" << json_number(value) << "}\n";
      } else if (g.out == "csv") {
        std::cout << "p,norm\n" << format_double(p) << "," << format_double(value) << "\n";
      } else {
        std::cout << "norm (p=" << format_double(p) << ") = " << format_double(value) << "\n";
      }
    } else if (opnorm->parsed()) {
      const Series phi = parse_series(path_a);
      const OperatorSide side =
          side_name == "c" ? OperatorSide::right_linear_C : OperatorSide::left_linear_D;
      if (sweep && g.out == "csv") {
        std::cout << "N,norm\n";
        for (std::size_t n = 16; n <= g.degree; n *= 2) {
          std::cout << n << "," << format_double(operator_norm(composition_matrix(phi, n, side)))
                    << "\n";
        }
      } else {
        const double sigma = operator_norm(composition_matrix(phi, g.degree, side));
        const double lower = norm_lower_bound(phi, samples);
        if (g.out == "json") {
          std::cout << "{\"N\":" << g.degree << ",\"side\":\"" << (side_name == "c" ? "C" : "D")
                    << "\",\"norm\":" << json_number(sigma)
                    << ",\"lower_bound\":" << json_number(lower) << "}\n";
        } else if (g.out == "csv") {
          std::cout << "N,side,norm,lower_bound\n"
                    << g.degree << "," << (side_name == "c" ? "C" : "D") << ","
                    << format_double(sigma) << "," << format_double(lower) << "\n";
        } else {
          std::cout << "N = " << g.degree << ", side = " << (side_name == "c" ? "C" : "D")
                    << "\nnorm        = " << format_double(sigma)
                    << "\nlower bound = " << format_double(lower) << "\n";
        }
      }
    } else if (iterate_cmd->parsed()) {
      emit_series(iterate(parse_series(path_a), times, g.degree), g, out_path);
    } else if (classify_cmd->parsed()) {
      const Classification c = classify(parse_series(path_a));
      if (g.out == "json") {
        std::string doc = "{\"type\":";
        doc += json_quote(to_string(c.type));
        doc += ",\"fixed_points\":[";
        for (std::size_t n = 0; n < c.fixed_points.size(); ++n) {
          const FixedPoint& fp = c.fixed_points[n];
          if (n) doc += ",";
          doc += "{\"point\":" + quat_json(fp.point) +
                 ",\"location\":" + json_quote(to_string(fp.location)) +
                 ",\"multiplier\":" + json_number(fp.multiplier) + "}";
        }
        doc += "],\"note\":" + json_quote(c.note) + "}";
        std::cout << doc << "\n";
      } else if (g.out == "csv") {
        std::cout << "w,x,y,z,location,multiplier\n";
        for (const FixedPoint& fp : c.fixed_points) {
          std::cout << format_double(fp.point.w) << "," << format_double(fp.point.x) << ","
                    << format_double(fp.point.y) << "," << format_double(fp.point.z) << ","
                    << to_string(fp.location) << "," << format_double(fp.multiplier) << "\n";
        }
      } else {
        std::cout << "type: " << to_string(c.type) << "\n";
        for (const FixedPoint& fp : c.fixed_points) {
          std::cout << "fixed point " << quat_json(fp.point) << "  " << to_string(fp.location)
                    << "  multiplier " << format_double(fp.multiplier) << "\n";
        }
        if (!c.note.empty()) std::cout << "note: " << c.note << "\n";
      }
    } else if (dw->parsed()) {
      const DenjoyWolffResult r = denjoy_wolff(parse_series(path_a), g.tol, max_iter);
      if (g.out == "json") {
        std::string doc = "{\"limit\":" + quat_json(r.limit) + ",\"iterations\":" +
                          std::to_string(r.trace.size()) + ",\"trace\":[";
        for (std::size_t n = 0; n < r.trace.size(); ++n) {
          if (n) doc += ",";
          doc += json_number(r.trace[n]);
        }
        doc += "]}";
        std::cout << doc << "\n";
      } else if (g.out == "csv") {
        std::cout << "n,sup_distance\n";
        for (std::size_t n = 0; n < r.trace.size(); ++n) {
          std::cout << n + 1 << "," << format_double(r.trace[n]) << "\n";
        }
      } else {
        std::cout << "limit " << quat_json(r.limit) << " after " << r.trace.size()
                  << " iterations (sup distance "
                  << format_double(r.trace.empty() ? 0.0 : r.trace.back()) << ")\n";
      }
    } else if (verify->parsed()) {
      return run_verify_cmd(g, suite);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
