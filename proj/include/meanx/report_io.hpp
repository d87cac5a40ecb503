#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "meanx/classify.hpp"
#include "meanx/polar.hpp"
#include "meanx/spectra.hpp"
#include "meanx/types.hpp"
#include "meanx/verify.hpp"

namespace meanx {

// On-disk matrix format: {"n": <dim>, "data": [[[re,im], ...], ...]} with
// exactly n rows of n entries. Vectors use {"n": <len>, "data": [[re,im],...]}.
// Malformed content raises InvalidSpecError (the CLI maps that to exit 2).
CMatrix parse_matrix_json(const nlohmann::json& j);
CMatrix load_matrix_file(const std::string& path);
nlohmann::json matrix_to_json(const CMatrix& m);

CVector parse_vector_json(const nlohmann::json& j);
CVector load_vector_file(const std::string& path);
nlohmann::json vector_to_json(const CVector& v);

nlohmann::json complex_to_json(const Complex& z);
Complex parse_complex_json(const nlohmann::json& j);

nlohmann::json tolerance_to_json(const ToleranceContext& tol);
nlohmann::json polar_to_json(const PolarParts& parts);
nlohmann::json classification_to_json(const ClassificationReport& report);
nlohmann::json joint_spectrum_to_json(const std::vector<JointSpectrumPoint>& pts);
nlohmann::json aj_inclusion_to_json(const AjInclusionReport& report);

// Verification summaries; elapsed time is deliberately left out so repeated
// runs with the same seed serialize to identical bytes.
std::string report_status(const VerdictReport& report);
nlohmann::json verdict_report_to_json(const VerdictReport& report);

// Top-level envelope every CLI command prints.
nlohmann::json report_envelope(const std::string& command,
                               const ToleranceContext& tol,
                               nlohmann::json result, int exit_status);
std::string dump_report(const nlohmann::json& j);

}  // namespace meanx
