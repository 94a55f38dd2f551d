#pragma once

#include <string>

#include <json.hpp>

#include "kappa/means.hpp"
#include "kappa/spectral.hpp"
#include "kappa/verify.hpp"

namespace kappa {

// Shared wire format: {"dim": n, "entries": [[re, im], ...]}, n^2 row-major
// pairs. Validation (finiteness, Hermitian, PSD) happens on load.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
PsdMatrix load_psd_file(const std::string& path);

nlohmann::json to_json(const DistanceReport& r);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const CounterexampleReport& r);

}  // namespace kappa
