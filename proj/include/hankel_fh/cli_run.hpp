#pragma once

// Command-line front end. Output is assembled in memory and written once.

#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hankel_fh/applications.hpp"
#include "hankel_fh/asymptotics.hpp"
#include "hankel_fh/equilibrium.hpp"
#include "hankel_fh/oracle.hpp"
#include "hankel_fh/spec_io.hpp"

namespace hankel_fh::cli {

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;
  std::string spec_path;
  std::vector<int> n_list;
  int bits = 0;  ///< 0: default precision per n
  int cheb_degree = kDefaultChebDegree;
  Format format = Format::Json;
  std::string thinning_path;
  std::vector<double> x_list;  ///< evaluation points for `density`
  bool timing = false;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"density", "constants", "verify", "partition", "clt", "corr", "gap"};
  return c;
}

inline constexpr const char* kUsage =
    "usage: hankel_fh <command> --spec PATH [--n LIST] [--bits INT] [--cheb-degree INT]\n"
    "                 [--format json|csv] [--thinning PATH] [--x LIST] [--timing]\n"
    "commands: density constants verify partition clt corr gap\n";

namespace detail {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json cjson(ComplexValue z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline void require_n(const RunConfig& c) {
  if (c.n_list.empty()) throw InvalidInput("command '" + c.command + "' needs --n");
  for (int n : c.n_list)
    if (n < 1) throw InvalidInput("--n entries must be positive");
}

inline std::string emit_table(const RunConfig& c, const std::vector<std::string>& header,
                              const std::vector<std::vector<double>>& rows, json extra = json::object()) {
  std::ostringstream out;
  if (c.format == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << ",";
        if (header[i] == "n") out << static_cast<long>(r[i]);
        else out << num(r[i]);
      }
      out << "\n";
    }
    return out.str();
  }
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (header[i] == "n") row[header[i]] = static_cast<long>(r[i]);
      else row[header[i]] = r[i];
    }
    arr.push_back(row);
  }
  extra["rows"] = arr;
  return extra.dump(2) + "\n";
}

inline std::string constants_output(const RunConfig& c, const AsymptoticConstants& k, const std::string& command) {
  if (c.format == Format::Csv) {
    std::ostringstream out;
    out << "name,re,im\n";
    const std::pair<const char*, ComplexValue> items[] = {{"C1", k.C1}, {"C2", k.C2}, {"C3", k.C3}, {"C4", k.C4}};
    for (const auto& [name, z] : items) out << name << "," << num(z.real()) << "," << num(z.imag()) << "\n";
    out << "beta_max," << num(k.beta_max) << ",0\n";
    out << "error_exponent," << num(k.error_exponent) << ",0\n";
    return out.str();
  }
  json j{{"command", command},       {"C1", cjson(k.C1)},         {"C2", cjson(k.C2)},
         {"C3", cjson(k.C3)},        {"C4", cjson(k.C4)},         {"beta_max", k.beta_max},
         {"error_exponent", k.error_exponent}};
  return j.dump(2) + "\n";
}

}  // namespace detail

/// Runs one command; returns the process exit code.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    bool known = false;
    for (const auto& k : commands()) known = known || k == c.command;
    if (!known) {
      err << "unknown command '" << c.command << "'\n" << kUsage;
      return 1;
    }
    if (c.spec_path.empty()) throw InvalidInput("--spec is required");
    if (c.cheb_degree < 2 || c.cheb_degree > kMaxChebDegree)
      throw InvalidInput("--cheb-degree must lie in 2.." + std::to_string(kMaxChebDegree));
    if (c.bits != 0 && c.bits < kMinOracleBits)
      throw InvalidInput("--bits must be at least " + std::to_string(kMinOracleBits));
    const SpecFile file = parse_spec_file(c.spec_path);
    const WeightSpec& spec = file.spec;
    std::string text;

    if (c.command == "density") {
      const auto d = solve_density(spec.V, spec.ensemble, c.cheb_degree);
      std::vector<double> xs = c.x_list;
      if (xs.empty()) {
        xs = lobatto_nodes(8);
        std::reverse(xs.begin(), xs.end());
        xs = std::vector<double>(xs.begin() + 1, xs.end() - 1);
      }
      std::vector<std::vector<double>> rows;
      for (double x : xs) {
        if (!(x > -1.0 && x < 1.0)) throw DomainError("--x points must lie in (-1, 1)");
        rows.push_back({x, d.psi(x), d.rho(x)});
      }
      json extra{{"command", "density"},
                 {"class", std::string(to_string(spec.ensemble))},
                 {"normalization_defect", d.normalization_defect},
                 {"edge_residual", d.edge_residual}};
      if (c.format == Format::Csv) {
        for (auto& r : rows) {
          r.push_back(d.normalization_defect);
          r.push_back(d.edge_residual);
        }
        text = detail::emit_table(c, {"x", "psi", "rho", "normalization_defect", "edge_residual"}, rows);
      } else {
        text = detail::emit_table(c, {"x", "psi", "rho"}, rows, extra);
      }
    } else if (c.command == "constants") {
      text = detail::constants_output(c, constants(spec, c.cheb_degree), "constants");
    } else if (c.command == "verify") {
      detail::require_n(c);
      const auto rows = convergence_sweep(spec, c.n_list, c.bits, c.cheb_degree, c.timing);
      std::vector<std::vector<double>> t;
      for (const auto& r : rows)
        t.push_back({static_cast<double>(r.n), r.oracle_log_abs, r.asymptotic_re, r.delta, r.phase_defect,
                     r.pivot_decay, r.seconds});
      text = detail::emit_table(
          c, {"n", "oracle_log_abs", "asymptotic_re", "delta", "phase_defect", "pivot_decay", "seconds"}, t,
          json{{"command", "verify"}});
    } else if (c.command == "partition") {
      const int m = spec.m();
      const auto k = partition_asymptotics(spec.ensemble, spec.V, spec.alpha(0), spec.alpha(m + 1), c.cheb_degree);
      if (c.n_list.empty()) {
        text = detail::constants_output(c, k, "partition");
      } else {
        std::vector<std::vector<double>> t;
        for (int n : c.n_list) {
          const auto v = asymptotic_log_dn(k, n).value;
          t.push_back({static_cast<double>(n), v.real(), v.imag()});
        }
        text = detail::emit_table(c, {"n", "log_dn_re", "log_dn_im"}, t,
                                  json{{"command", "partition"}, {"C1", detail::cjson(k.C1)},
                                       {"C2", detail::cjson(k.C2)}, {"C3", detail::cjson(k.C3)},
                                       {"C4", detail::cjson(k.C4)}});
      }
    } else if (c.command == "clt") {
      const int m = spec.m();
      if (spec.alpha(0).imag() != 0.0 || spec.alpha(m + 1).imag() != 0.0)
        throw InvalidSpec("clt needs real edge exponents alpha_0, alpha_{m+1}");
      const auto d = solve_density(spec.V, spec.ensemble, c.cheb_degree);
      const auto p = clt_params(spec.ensemble, d, spec.W, spec.alpha(0).real(), spec.alpha(m + 1).real());
      if (c.format == Format::Csv) {
        text = "mu,sigma2,centering\n" + detail::num(p.mu) + "," + detail::num(p.sigma2) + "," +
               detail::num(p.centering) + "\n";
      } else {
        text = json{{"command", "clt"}, {"mu", p.mu}, {"sigma2", p.sigma2}, {"centering", p.centering}}.dump(2) + "\n";
      }
    } else if (c.command == "corr") {
      detail::require_n(c);
      std::vector<std::vector<double>> t;
      for (int n : c.n_list) {
        const auto v = char_poly_correlation_log(spec, n, c.cheb_degree);
        t.push_back({static_cast<double>(n), v.real(), v.imag()});
      }
      text = detail::emit_table(c, {"n", "log_re", "log_im"}, t, json{{"command", "corr"}});
    } else if (c.command == "gap") {
      detail::require_n(c);
      std::optional<ThinningSpec> th = file.thinning;
      if (!c.thinning_path.empty()) th = parse_thinning_file(c.thinning_path);
      if (!th) throw InvalidInput("gap needs --thinning or a 'thinning' entry in the spec");
      validate(*th, spec.m());
      std::vector<std::vector<double>> t;
      for (int n : c.n_list) {
        const auto v = gap_probability_log(spec, *th, n, c.cheb_degree);
        const double exact = mp::log(thinned_expectation(spec, *th, n, c.bits)).to_double();
        t.push_back({static_cast<double>(n), v.real(), v.imag(), exact, exact - v.real()});
      }
      text = detail::emit_table(c, {"n", "log_re", "log_im", "oracle_log", "difference"}, t,
                                json{{"command", "gap"}});
    }
    out << text;
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

/// Parses argv and dispatches to run().
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel determinants with Fisher-Hartwig singularities"};
  RunConfig c;
  std::string format = "json";
  std::string n_text;
  std::vector<double> xs;
  app.add_option("command", c.command, "density|constants|verify|partition|clt|corr|gap")->required();
  app.add_option("--spec", c.spec_path, "spec file (JSON)");
  app.add_option("--n", n_text, "comma-separated list of n");
  app.add_option("--bits", c.bits, "working precision in bits (default 256 + 32 n)");
  app.add_option("--cheb-degree", c.cheb_degree, "Chebyshev degree for density fits");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--thinning", c.thinning_path, "thinning spec file (JSON) for gap");
  app.add_option("--x", xs, "evaluation points for density")->delimiter(',');
  app.add_flag("--timing", c.timing, "record wall-clock seconds in verify output");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << kUsage;
    return 1;
  }
  c.format = format == "csv" ? Format::Csv : Format::Json;
  c.x_list = xs;
  if (!n_text.empty()) {
    std::stringstream ss(n_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        c.n_list.push_back(v);
      } catch (const std::exception&) {
        err << "error: --n expects comma-separated integers\n" << kUsage;
        return 1;
      }
    }
  }
  return run(c, out, err);
}

}  // namespace hankel_fh::cli
