#ifndef SD2_IO_HPP
#define SD2_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "sd2/interbasis.hpp"
#include "sd2/qdiag.hpp"
#include "sd2/repmat.hpp"

namespace sd2 {

inline constexpr const char* kVersion = "0.1.0";

std::string basis_name(BasisOrdering ordering);
BasisOrdering basis_from_name(const std::string& name);

/// Row-major nested arrays; complex entries as two-element [re, im] arrays.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json tolerances_to_json(const Tolerances& tol);
nlohmann::json params_to_json(const OscParams& params);

/// {"params": {...}, "basis": ..., "matrices": {...}, "meta": {...}}
nlohmann::json generator_set_to_json(const GeneratorSet& gs,
                                     const Tolerances& tol);
nlohmann::json transition_to_json(const TransitionMatrix& t,
                                  const OscParams& params,
                                  const Tolerances& tol);
nlohmann::json eigvec_table_to_json(const EigvecTable& q_table,
                                    const EigvecTable& j2_table,
                                    const Tolerances& tol);

/// Flat CSV: value per line with closed-form / numeric columns.
std::string spectrum_csv(const std::vector<double>& closed,
                         const std::vector<double>& numeric);
std::string coeff_pair_csv(const CoeffPair& cp);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace sd2

#endif  // SD2_IO_HPP
