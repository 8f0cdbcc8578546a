#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "owalk/autos.hpp"
#include "owalk/periodicity.hpp"
#include "owalk/spectral.hpp"
#include "owalk/support.hpp"
#include "owalk/tolerances.hpp"
#include "owalk/transfer.hpp"

// JSON sections of the analysis report. Field names are documented in
// docs/report-schema.md.
namespace owalk::report {

using nlohmann::json;

inline constexpr const char* kVersion = "owalk 1.0.0";

json graph_summary(const OrientedGraph& g, const std::string& label);
json spectrum(const SpectralDecomposition& sd);
json support(const SpectralDecomposition& sd, const EigenvalueSupport& s);
json periodicity(const SpectralDecomposition& sd, const PeriodicityCertificate& cert,
                 bool verified);
json automorphism(const SwitchingAutomorphism& p);
json cospectrality(const SpectralDecomposition& sd, const CospectralityCertificate& cert);

// Transfer entry; when the source is periodic the time is also expressed as
// a multiple of sigma (sigma_multiple is null if no p/q with q <= 1e6 fits).
json transfer(const TransferCertificate& cert, const std::optional<PeriodicityCertificate>& period,
              std::optional<Parity> first_char, double rational_tol);
json mst(const MSTCertificate& cert, double rational_tol);
json tolerances(const Tolerances& tol, int n);

// Deterministic serialization: two-space indent, object keys sorted,
// floating-point values printed with 17 significant digits.
std::string write_json(const json& value);

}  // namespace owalk::report
