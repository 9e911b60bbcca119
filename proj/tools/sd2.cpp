// Command-line frontend: build generator matrices, compare spectra, emit
// eigenvector tables and transition matrices, run the verification suite.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sd2/io.hpp"
#include "sd2/j2rep.hpp"
#include "sd2/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

sd2::Tolerances tolerances_from_env() {
  sd2::Tolerances tol;
  if (const char* env = std::getenv("SD2_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || !(v > 0.0)) {
      throw std::invalid_argument("SD2_TOL must be a positive number");
    }
    tol.residual_tol = v;
  }
  return tol;
}

std::vector<double> parse_gauge(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    values.push_back(std::stod(item));
  }
  return values;
}

std::vector<std::pair<double, double>> parse_grid(const std::string& text) {
  if (text == "default") return sd2::default_mu_grid();
  std::vector<std::pair<double, double>> grid;
  std::stringstream ss(text);
  std::string pair_text;
  while (std::getline(ss, pair_text, ';')) {
    const auto comma = pair_text.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("grid entries must look like mx,my");
    }
    grid.emplace_back(std::stod(pair_text.substr(0, comma)),
                      std::stod(pair_text.substr(comma + 1)));
  }
  if (grid.empty()) throw std::invalid_argument("empty grid");
  return grid;
}

int run_build(const sd2::OscParams& params, const std::string& basis,
              const std::string& gauge_text, const std::string& out) {
  const sd2::Tolerances tol = tolerances_from_env();
  const sd2::BasisOrdering ordering = sd2::basis_from_name(basis);
  sd2::GeneratorSet gs;
  switch (ordering) {
    case sd2::BasisOrdering::CartesianV:
      gs = sd2::build_cartesian(params);
      break;
    case sd2::BasisOrdering::CircularB1:
    case sd2::BasisOrdering::CircularB2:
      gs = sd2::build_circular(params, ordering);
      break;
    case sd2::BasisOrdering::J2Eigen: {
      const int m = (params.level % 2 == 0) ? params.level / 2
                                            : (params.level - 1) / 2;
      sd2::GaugeSeq gauge = sd2::GaugeSeq::ones(m);
      if (!gauge_text.empty()) gauge.values = parse_gauge(gauge_text);
      gs = sd2::build_j3_j2basis(params, gauge, tol);
      break;
    }
  }
  nlohmann::json doc = sd2::generator_set_to_json(gs, tol);
  if (ordering == sd2::BasisOrdering::CircularB2) {
    doc["matrices"]["Q"] = sd2::matrix_to_json(sd2::build_q(params));
  }
  sd2::write_text_file(out, doc.dump(2) + "\n");
  std::cerr << "wrote " << out << "\n";
  return kExitOk;
}

int run_spectrum(const sd2::OscParams& params, const std::string& op_name,
                 const std::string& out) {
  const sd2::Tolerances tol = tolerances_from_env();
  sd2::OperatorKind kind;
  sd2::Matrix built;
  if (op_name == "J2") {
    kind = sd2::OperatorKind::J2;
    built = sd2::build_circular(params, sd2::BasisOrdering::CircularB2).J2;
  } else if (op_name == "J3") {
    kind = sd2::OperatorKind::J3;
    built = sd2::build_cartesian(params).J3;
  } else if (op_name == "Q") {
    kind = sd2::OperatorKind::Q;
    built = sd2::build_q(params);
  } else if (op_name == "H") {
    kind = sd2::OperatorKind::H;
    built = sd2::build_cartesian(params).H;
  } else {
    throw std::invalid_argument("spectrum: --op must be one of J2, J3, Q, H");
  }

  const std::vector<double> closed = sd2::spectrum_closed_form(params, kind);
  const auto numeric_complex = sd2::eigenvalues_sorted(built, tol);
  std::vector<double> numeric;
  numeric.reserve(numeric_complex.size());
  for (const auto& lam : numeric_complex) numeric.push_back(lam.real());
  std::sort(numeric.begin(), numeric.end());

  double max_dev = 0.0;
  for (const auto& lam : numeric_complex) {
    max_dev = std::max(max_dev, std::abs(lam.imag()));
  }
  std::printf("%-6s %-22s %-22s %s\n", "index", "closed_form", "numeric",
              "abs_diff");
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double diff = std::abs(closed[i] - numeric[i]);
    max_dev = std::max(max_dev, diff);
    std::printf("%-6zu %-22.15g %-22.15g %.3g\n", i, closed[i], numeric[i],
                diff);
  }
  const bool match = max_dev <= tol.eig_match_tol;
  std::cout << (match ? "MATCH" : "MISMATCH") << " (max deviation " << max_dev
            << ", tolerance " << tol.eig_match_tol << ")\n";
  if (!out.empty()) {
    sd2::write_text_file(out, sd2::spectrum_csv(closed, numeric));
    std::cerr << "wrote " << out << "\n";
  }
  return match ? kExitOk : kExitVerificationFailed;
}

int run_eigvecs(const sd2::OscParams& params, const std::string& out,
                const std::string& format) {
  const sd2::Tolerances tol = tolerances_from_env();
  const sd2::EigvecTable q_table = sd2::assemble_q_eigvecs(params);
  const sd2::EigvecTable j2_table = sd2::q_to_j2(q_table, params);
  if (format == "json") {
    sd2::write_text_file(
        out, sd2::eigvec_table_to_json(q_table, j2_table, tol).dump(2) + "\n");
  } else if (format == "csv") {
    std::ostringstream ss;
    ss.precision(17);
    ss << "table,k,sign,eigenvalue,component,re,im\n";
    auto emit = [&](const char* name, const sd2::EigvecTable& table) {
      for (const auto& v : table.vectors) {
        for (Eigen::Index i = 0; i < v.coords.size(); ++i) {
          ss << name << ',' << v.k << ',' << (v.sign > 0 ? '+' : '-') << ','
             << v.eigenvalue << ',' << i << ',' << v.coords[i].real() << ','
             << v.coords[i].imag() << '\n';
        }
      }
    };
    emit("Q", q_table);
    emit("J2", j2_table);
    sd2::write_text_file(out, ss.str());
  } else {
    throw std::invalid_argument("eigvecs: --format must be json or csv");
  }
  std::cerr << "wrote " << out << "\n";
  return kExitOk;
}

int run_transition(const sd2::OscParams& params, const std::string& out) {
  const sd2::Tolerances tol = tolerances_from_env();
  const sd2::TransitionMatrix t = sd2::build_transition(params);
  sd2::write_text_file(out,
                       sd2::transition_to_json(t, params, tol).dump(2) + "\n");
  std::cerr << "wrote " << out << "\n";
  return kExitOk;
}

int run_verify(int n_max, const std::string& grid_text,
               const std::string& report_path) {
  const sd2::Tolerances tol = tolerances_from_env();
  const auto grid = parse_grid(grid_text);
  const sd2::Report report = sd2::run_suite(n_max, grid, tol);
  std::size_t failed = 0;
  for (const auto& rec : report.records) {
    if (!rec.pass) {
      ++failed;
      std::cerr << "FAIL " << rec.id << " [" << rec.params << "] residual "
                << rec.max_residual << " " << rec.notes << "\n";
    }
  }
  std::cout << (report.overall ? "PASS" : "FAIL") << ": "
            << report.records.size() - failed << "/" << report.records.size()
            << " checks passed\n";
  if (!report_path.empty()) {
    sd2::write_text_file(report_path, report.to_json().dump(2) + "\n");
    std::cerr << "wrote " << report_path << "\n";
  }
  return report.overall ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schwinger-Dunkl sd(2) representation toolkit"};
  app.require_subcommand(1);

  int n = 0;
  double mux = 0.0;
  double muy = 0.0;
  std::string basis = "cartesian";
  std::string gauge_text;
  std::string out;
  std::string op_name = "J2";
  std::string format = "json";
  int n_max = 8;
  std::string grid_text = "default";
  std::string report_path;

  auto add_params = [&](CLI::App* cmd, bool need_out) {
    cmd->add_option("--n", n, "energy level N")->required();
    cmd->add_option("--mux", mux, "reflection weight mu_x");
    cmd->add_option("--muy", muy, "reflection weight mu_y");
    if (need_out) cmd->add_option("--out", out, "output path")->required();
  };

  CLI::App* build = app.add_subcommand("build", "build generator matrices");
  add_params(build, true);
  build->add_option("--basis", basis,
                    "cartesian | circular-b1 | circular-b2 | j2-eigen");
  build->add_option("--gauge", gauge_text,
                    "comma-separated gauge values (j2-eigen only)");

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "closed-form vs numeric spectrum");
  add_params(spectrum, false);
  spectrum->add_option("--op", op_name, "J2 | J3 | Q | H");
  spectrum->add_option("--out", out, "optional CSV path");

  CLI::App* eigvecs =
      app.add_subcommand("eigvecs", "Q and J2 eigenvector tables (B2)");
  add_params(eigvecs, true);
  eigvecs->add_option("--format", format, "json | csv");

  CLI::App* transition =
      app.add_subcommand("transition", "circular-to-Cartesian transition");
  add_params(transition, true);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--n-max", n_max, "largest level to check");
  verify->add_option("--grid", grid_text,
                     "default | semicolon list mx,my;mx,my;...");
  verify->add_option("--report", report_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help/error text
    return (e.get_exit_code() == 0) ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      return run_build(sd2::OscParams(n, mux, muy), basis, gauge_text, out);
    }
    if (spectrum->parsed()) {
      return run_spectrum(sd2::OscParams(n, mux, muy), op_name, out);
    }
    if (eigvecs->parsed()) {
      return run_eigvecs(sd2::OscParams(n, mux, muy), out, format);
    }
    if (transition->parsed()) {
      return run_transition(sd2::OscParams(n, mux, muy), out);
    }
    if (verify->parsed()) {
      return run_verify(n_max, grid_text, report_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
