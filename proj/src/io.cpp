#include "sd2/io.hpp"

#include <fstream>
#include <sstream>

namespace sd2 {

std::string basis_name(BasisOrdering ordering) {
  switch (ordering) {
    case BasisOrdering::CartesianV:
      return "cartesian";
    case BasisOrdering::CircularB1:
      return "circular-b1";
    case BasisOrdering::CircularB2:
      return "circular-b2";
    case BasisOrdering::J2Eigen:
      return "j2-eigen";
  }
  throw std::invalid_argument("basis_name: unknown ordering");
}

BasisOrdering basis_from_name(const std::string& name) {
  if (name == "cartesian") return BasisOrdering::CartesianV;
  if (name == "circular-b1") return BasisOrdering::CircularB1;
  if (name == "circular-b2") return BasisOrdering::CircularB2;
  if (name == "j2-eigen") return BasisOrdering::J2Eigen;
  throw std::invalid_argument("unknown basis name: " + name);
}

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix_from_json: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& entry = row.at(static_cast<std::size_t>(c));
      m(i, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json tolerances_to_json(const Tolerances& tol) {
  return {{"residual_tol", tol.residual_tol},
          {"eig_match_tol", tol.eig_match_tol},
          {"degeneracy_tol", tol.degeneracy_tol}};
}

nlohmann::json params_to_json(const OscParams& params) {
  return {{"n", params.level}, {"mu_x", params.mu_x}, {"mu_y", params.mu_y}};
}

nlohmann::json generator_set_to_json(const GeneratorSet& gs,
                                     const Tolerances& tol) {
  nlohmann::json matrices;
  matrices["J1"] = matrix_to_json(gs.J1);
  matrices["J2"] = matrix_to_json(gs.J2);
  matrices["J3"] = matrix_to_json(gs.J3);
  matrices["Rx"] = matrix_to_json(gs.Rx);
  matrices["Ry"] = matrix_to_json(gs.Ry);
  matrices["H"] = matrix_to_json(gs.H);
  matrices["Casimir"] = matrix_to_json(gs.Casimir);
  return {{"params", params_to_json(gs.params)},
          {"basis", basis_name(gs.ordering)},
          {"matrices", std::move(matrices)},
          {"meta",
           {{"version", kVersion}, {"tolerances", tolerances_to_json(tol)}}}};
}

nlohmann::json transition_to_json(const TransitionMatrix& t,
                                  const OscParams& params,
                                  const Tolerances& tol) {
  return {{"params", params_to_json(params)},
          {"basis", "circular-b1"},
          {"matrices", {{"T", matrix_to_json(t.T.cast<Complex>())}}},
          {"meta",
           {{"version", kVersion},
            {"tolerances", tolerances_to_json(tol)},
            {"column_convention", t.column_convention},
            {"condition_number", t.condition_number}}}};
}

namespace {

nlohmann::json vectors_to_json(const EigvecTable& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : table.vectors) {
    nlohmann::json coords = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.coords.size(); ++i) {
      coords.push_back({v.coords[i].real(), v.coords[i].imag()});
    }
    arr.push_back({{"k", v.k},
                   {"sign", v.sign > 0 ? "+" : "-"},
                   {"eigenvalue", v.eigenvalue},
                   {"components", std::move(coords)}});
  }
  return arr;
}

}  // namespace

nlohmann::json eigvec_table_to_json(const EigvecTable& q_table,
                                    const EigvecTable& j2_table,
                                    const Tolerances& tol) {
  return {{"params", params_to_json(q_table.params)},
          {"basis", "circular-b2"},
          {"q_eigenvectors", vectors_to_json(q_table)},
          {"j2_eigenvectors", vectors_to_json(j2_table)},
          {"meta",
           {{"version", kVersion}, {"tolerances", tolerances_to_json(tol)}}}};
}

std::string spectrum_csv(const std::vector<double>& closed,
                         const std::vector<double>& numeric) {
  if (closed.size() != numeric.size()) {
    throw std::invalid_argument("spectrum_csv: size mismatch");
  }
  std::ostringstream out;
  out.precision(17);
  out << "index,closed_form,numeric,abs_diff\n";
  for (std::size_t i = 0; i < closed.size(); ++i) {
    out << i << ',' << closed[i] << ',' << numeric[i] << ','
        << std::abs(closed[i] - numeric[i]) << '\n';
  }
  return out.str();
}

std::string coeff_pair_csv(const CoeffPair& cp) {
  std::ostringstream out;
  out.precision(17);
  out << "n,a,b\n";
  for (std::size_t n = 0; n < cp.a_seq.size(); ++n) {
    out << n << ',' << cp.a_seq[n] << ',' << cp.b_seq[n] << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace sd2
