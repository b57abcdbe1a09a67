// congruent: generate and verify rational triangles and their congruent
// numbers.
//
//   congruent tau --tau 1/2 --x 2
//   congruent integer-points --tau 1
//   congruent ellipse --axis 2 --count 5 --format records
//   congruent circumcircle --radius 5/2 --t 1/2
//   congruent excircle --kind c --x 1/3
//   congruent tables
//   congruent tau --tau 3 --count 20 --format records | congruent verify

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congruent/congruent.hpp"

namespace {

using namespace congruent;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string format = "text";
  bool distinct_classes = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  cmd->add_flag("--distinct-classes", opts.distinct_classes, "Drop records whose class was already emitted");
}

std::vector<Rat> parse_all(const std::vector<std::string>& texts) {
  std::vector<Rat> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(Rat::parse(t));
  return out;
}

// Maps the positive rationals bijectively onto (0, 1) via s -> s / (1 + s).
std::vector<Rat> sample_unit_interval(std::size_t count) {
  std::vector<Rat> out;
  SternBrocot seq;
  for (std::size_t i = 0; i < count; ++i) {
    Rat s = seq.next();
    out.push_back(s / (Rat(1) + s));
  }
  return out;
}

std::vector<Rat> sample_positive(std::size_t count) {
  std::vector<Rat> out;
  SternBrocot seq;
  for (std::size_t i = 0; i < count; ++i) out.push_back(seq.next());
  return out;
}

int emit(const std::vector<OutputRecord>& records, const OutputOptions& opts) {
  std::set<BigInt> seen;
  bool all_verified = true;
  for (const auto& r : records) {
    if (opts.distinct_classes && r.cls && !seen.insert(*r.cls).second) continue;
    all_verified = all_verified && r.verified;
    std::cout << (opts.format == "records" ? to_json_line(r) : to_text_line(r)) << '\n';
  }
  return all_verified ? kExitOk : kExitVerifyFailed;
}

void require_one_source(bool has_values, std::size_t count, const char* what) {
  if (has_values == (count > 0)) {
    throw CLI::ValidationError(std::string("give either ") + what + " values or --count N, not both or neither");
  }
}

int verify_stream(std::istream& in, const FactorLimits& limits) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;
  bool parse_failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    OutputRecord r;
    try {
      r = parse_record(line);
    } catch (const ParseError& e) {
      std::cerr << "line " << line_no << ": parse error: " << e.what() << '\n';
      parse_failed = true;
      continue;
    }
    ++checked;
    std::vector<std::string> failures = check_record(r, limits);
    bool passed = failures.empty();
    if (r.verified != passed) {
      failures.push_back(std::string("record claims verified=") + (r.verified ? "true" : "false"));
    }
    if (!failures.empty()) {
      ++failed;
      for (const auto& f : failures) std::cout << "line " << line_no << ": " << f << '\n';
    }
  }
  std::cout << checked << " record(s) checked, " << failed << " failed\n";
  if (parse_failed) return kExitUsage;
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational triangles, tau-congruent and congruent numbers"};
  app.require_subcommand(1);

  OutputOptions out_opts;
  std::string tau_text;
  std::vector<std::string> x_texts;
  std::vector<std::string> t_texts;
  std::string axis_text = "1";
  std::string radius_text;
  std::string kind_text;
  std::size_t count = 0;
  bool consecutive = false;

  auto* tau_cmd = app.add_subcommand("tau", "Heron triangles with angle 2 atan(tau) around the unit circle");
  tau_cmd->add_option("--tau", tau_text, "tau = tan(theta/2) as p/q")->required();
  tau_cmd->add_option("--x", x_texts, "x coordinates on X_tau (use --x=-p/q for negatives)");
  tau_cmd->add_option("--count", count, "Number of points with x > tau in Stern-Brocot order");
  add_output_options(tau_cmd, out_opts);

  auto* ip_cmd = app.add_subcommand("integer-points", "Integer points on X_tau for 1/tau a positive integer");
  ip_cmd->add_option("--tau", tau_text, "tau as p/q")->required();
  ip_cmd->add_option("--format", out_opts.format, "Output format")->check(CLI::IsMember({"text", "records"}));

  auto* ell_cmd = app.add_subcommand("ellipse", "Right triangles circumscribing the area-pi ellipse E_axis");
  ell_cmd->add_option("--axis", axis_text, "Ellipse parameter (default 1)");
  ell_cmd->add_option("--t", t_texts, "Curve parameters t > 0");
  ell_cmd->add_option("--count", count, "Number of parameters in Stern-Brocot order (1..N with --consecutive)");
  ell_cmd->add_flag("--consecutive", consecutive, "Integer t: the scaled triangle of area t(t+1)(t+2)");
  add_output_options(ell_cmd, out_opts);

  auto* circ_cmd = app.add_subcommand("circumcircle", "Right triangles inscribed in a circle of radius R");
  circ_cmd->add_option("--radius", radius_text, "Circumradius R > 0")->required();
  circ_cmd->add_option("--t", t_texts, "Parameters in (0, 1)");
  circ_cmd->add_option("--count", count, "Number of parameters in (0, 1)");
  add_output_options(circ_cmd, out_opts);

  auto* ex_cmd = app.add_subcommand("excircle", "Right triangles with a unit exradius");
  ex_cmd->add_option("--kind", kind_text, "Excircle opposite side a, b or c")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c"}));
  ex_cmd->add_option("--x", x_texts, "Parameters in (0, 1)");
  ex_cmd->add_option("--count", count, "Number of parameters in (0, 1)");
  add_output_options(ex_cmd, out_opts);

  auto* tables_cmd = app.add_subcommand("tables", "Recompute the three reference tables");
  auto* verify_cmd = app.add_subcommand("verify", "Re-check JSON records read from standard input");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    FactorLimits limits = FactorLimits::from_environment();

    if (*tau_cmd) {
      require_one_source(!x_texts.empty(), count, "--x");
      Tau tau(Rat::parse(tau_text));
      std::vector<XTauPoint> points;
      if (count > 0) {
        points = sample_tau_points(tau, count);
      } else {
        for (const Rat& x : parse_all(x_texts)) points.push_back(point_from_x(tau, x));
      }
      std::vector<OutputRecord> records;
      for (const auto& p : points) records.push_back(tau_record(p, limits));
      return emit(records, out_opts);
    }

    if (*ip_cmd) {
      Tau tau(Rat::parse(tau_text));
      std::vector<XTauPoint> points = integer_points(tau, limits);
      if (out_opts.format == "records") {
        for (const auto& p : points) {
          std::cout << R"({"x":")" << p.x() << R"(","y":")" << p.y() << "\"}\n";
        }
      } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
          std::cout << (i ? " " : "") << '(' << points[i].x() << ',' << points[i].y() << ')';
        }
        std::cout << '\n';
      }
      return kExitOk;
    }

    if (*ell_cmd) {
      require_one_source(!t_texts.empty(), count, "--t");
      Rat axis = Rat::parse(axis_text);
      std::vector<OutputRecord> records;
      if (consecutive) {
        if (axis != Rat(1)) throw CLI::ValidationError("--consecutive uses axis 1");
        std::vector<BigInt> ts;
        for (std::size_t i = 1; i <= count; ++i) ts.emplace_back(i);
        for (const Rat& t : parse_all(t_texts)) {
          if (!t.is_integer()) throw InvalidParameter("--consecutive needs integer t, got " + t.str());
          ts.push_back(t.num());
        }
        for (const auto& t : ts) records.push_back(consecutive_record(t, limits));
      } else {
        std::vector<Rat> ts = count > 0 ? sample_positive(count) : parse_all(t_texts);
        for (const auto& t : ts) records.push_back(ellipse_record(axis, t, limits));
      }
      return emit(records, out_opts);
    }

    if (*circ_cmd) {
      require_one_source(!t_texts.empty(), count, "--t");
      Rat radius = Rat::parse(radius_text);
      std::vector<Rat> ts = count > 0 ? sample_unit_interval(count) : parse_all(t_texts);
      std::vector<OutputRecord> records;
      for (const auto& t : ts) records.push_back(circumcircle_record(radius, t, limits));
      return emit(records, out_opts);
    }

    if (*ex_cmd) {
      require_one_source(!x_texts.empty(), count, "--x");
      ExcircleKind kind = *parse_excircle_kind(kind_text);
      std::vector<Rat> xs = count > 0 ? sample_unit_interval(count) : parse_all(x_texts);
      std::vector<OutputRecord> records;
      for (const auto& x : xs) records.push_back(excircle_record(kind, x, limits));
      return emit(records, out_opts);
    }

    if (*tables_cmd) {
      std::cout << render_tables(limits);
      return kExitOk;
    }

    if (*verify_cmd) return verify_stream(std::cin, limits);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FactorizationLimitExceeded& e) {
    std::cerr << "error: FactorizationLimitExceeded: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const PoleInput& e) {
    std::cerr << "error: PoleInput: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NonIntegralInverseTau& e) {
    std::cerr << "error: NonIntegralInverseTau: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
