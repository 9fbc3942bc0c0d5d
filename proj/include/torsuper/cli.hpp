#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// internal error, 2 invalid arguments, 3 malformed specialization.

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "torsuper/dyck.hpp"
#include "torsuper/format.hpp"
#include "torsuper/poly.hpp"
#include "torsuper/records.hpp"
#include "torsuper/superpoly.hpp"
#include "torsuper/verify.hpp"

namespace torsuper::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_bad_specialization = 3;

/// Default for --jobs, read from TORSUPER_JOBS.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("TORSUPER_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

namespace detail {

template <class Vars>
std::string render(const laurent<Vars>& p, const std::string& format) {
  if (format == "latex") return to_latex(p) + "\n";
  if (format == "csv") return to_csv(p);
  if (format == "json") return to_json(p).dump() + "\n";
  return to_text(p) + "\n";
}

inline std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct shape_args {
  int m = 0;
  int n = 0;
};

inline void add_shape(CLI::App* cmd, shape_args& a) {
  cmd->add_option("m", a.m, "horizontal extent (first torus parameter)")->required();
  cmd->add_option("n", a.n, "vertical extent (strand count)")->required();
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superpolynomials of positive torus knots from rational Dyck paths"};
  app.require_subcommand(1);

  detail::shape_args paths_shape;
  bool rugged_only = false, with_stats = false, count_only = false;
  auto* paths_cmd = app.add_subcommand("paths", "enumerate (m,n)-Dyck paths as JSON lines");
  detail::add_shape(paths_cmd, paths_shape);
  paths_cmd->add_flag("--rugged", rugged_only, "only rugged paths");
  paths_cmd->add_flag("--stats", with_stats, "include area, h, outer vertices and k");
  paths_cmd->add_flag("--count", count_only, "print the number of paths only");

  detail::shape_args sp_shape;
  bool minus = false, plus = false;
  std::string spec_text, sp_format = "text";
  auto* sp_cmd = app.add_subcommand("superpoly", "superpolynomial of the (m,n) torus knot");
  detail::add_shape(sp_cmd, sp_shape);
  auto* minus_opt = sp_cmd->add_flag("--minus", minus, "coefficient of the lowest MFW alpha-degree");
  sp_cmd->add_flag("--plus", plus, "coefficient of the highest MFW alpha-degree")->excludes(minus_opt);
  sp_cmd->add_option("--specialize", spec_text, "substitution, e.g. T=-1 or T=-1,a=1 or T=-1,a=Q^2");
  sp_cmd->add_option("--format", sp_format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));

  int max_sum = 0;
  std::string checks_text;
  unsigned jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification sweep over coprime shapes");
  verify_cmd->add_option("--max-sum", max_sum, "largest m+n to sweep")->required();
  verify_cmd->add_option("--checks", checks_text, "comma-separated checks (default: all)");
  verify_cmd->add_option("--jobs", jobs, "worker threads (default: $TORSUPER_JOBS or 1)")
      ->check(CLI::PositiveNumber);

  int table_max_sum = 0;
  std::string table_format = "csv";
  auto* table_cmd = app.add_subcommand("table", "superpolynomials of all coprime shapes up to a bound");
  table_cmd->add_option("--max-sum", table_max_sum, "largest m+n")->required();
  table_cmd->add_option("--format", table_format, "output format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*paths_cmd) {
      const torus_shape shape(paths_shape.m, paths_shape.n);
      std::size_t count = 0;
      auto emit = [&](const dyck_path& p) {
        ++count;
        if (!count_only) out << path_record(p, with_stats).dump() << "\n";
      };
      if (rugged_only)
        for_each_rugged_path(shape, emit);
      else
        for_each_dyck_path(shape, emit);
      if (count_only) out << count << "\n";
      return exit_ok;
    }

    if (*sp_cmd) {
      const torus_shape shape(sp_shape.m, sp_shape.n);
      std::optional<specialization> spec;
      if (!spec_text.empty()) spec = parse_specialization(spec_text);

      std::optional<superpoly_result> full;
      homfly_poly value;
      std::string part = "full";
      if (minus) {
        value = p_minus(shape);
        part = "minus";
      } else if (plus) {
        value = p_plus(shape);
        part = "plus";
      } else {
        full = mellit_superpolynomial(shape);
        value = full->poly;
      }
      if (spec) value = specialize(value, *spec);

      if (sp_format == "json") {
        json j;
        if (full && !spec) {
          j = superpoly_record(*full);
        } else {
          j = json::object();
          j["m"] = shape.m();
          j["n"] = shape.n();
          j["part"] = part;
          if (spec) j["specialization"] = spec_text;
          j["terms"] = to_json(value);
        }
        out << j.dump() << "\n";
      } else {
        out << detail::render(value, sp_format);
      }
      return exit_ok;
    }

    if (*verify_cmd) {
      sweep_spec spec;
      spec.max_sum = max_sum;
      if (max_sum < 3) {
        err << "verify: --max-sum must be at least 3\n";
        return exit_usage;
      }
      if (checks_text.empty()) {
        spec.checks.assign(all_checks.begin(), all_checks.end());
      } else {
        for (const auto& item : detail::split_commas(checks_text)) {
          const auto c = parse_check(item);
          if (!c) {
            err << "verify: unknown check '" << item << "'\n";
            return exit_usage;
          }
          if (std::find(spec.checks.begin(), spec.checks.end(), *c) == spec.checks.end()) spec.checks.push_back(*c);
        }
      }
      const auto started = std::chrono::steady_clock::now();
      const auto summary = run_sweep(spec, jobs, [&](const shape_report& rep) {
        for (const auto& r : rep.results) out << to_json(r).dump() << "\n";
        out.flush();
      });
      const auto elapsed =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
      json s = json::object();
      s["summary"] = to_json(summary);
      out << s.dump() << "\n";
      err << "verify: " << summary.passed << "/" << summary.checks << " checks passed over " << summary.shapes
          << " shapes, wall time " << elapsed.count() << " ms\n";
      return summary.ok() ? exit_ok : exit_failed;
    }

    if (*table_cmd) {
      if (table_max_sum < 2) {
        err << "table: --max-sum must be at least 2\n";
        return exit_usage;
      }
      if (table_format == "csv") out << "m,n,paths,rugged,superpoly\n";
      for (const auto& shape : sweep_shapes(table_max_sum)) {
        const auto r = mellit_superpolynomial(shape);
        if (table_format == "csv")
          out << shape.m() << "," << shape.n() << "," << r.path_count << "," << r.rugged_count << ","
              << to_text(r.poly) << "\n";
        else
          out << superpoly_record(r).dump() << "\n";
      }
      return exit_ok;
    }
  } catch (const invalid_shape& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const specialization_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_specialization;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_failed;
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_failed;
  }
  return exit_usage;
}

}  // namespace torsuper::cli
