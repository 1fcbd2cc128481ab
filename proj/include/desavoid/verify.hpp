#pragma once

#include <optional>

#include "desavoid/clusters.hpp"
#include "desavoid/oracle.hpp"
#include "desavoid/report.hpp"

namespace desavoid {

// N = 1/U with U_n summed over fixed points. Needs des(u) <= 1.
TSeries reciprocity_series(const SeriesRequest& req, const OracleOptions& opt = {});

// dp is the reference; brute, reciprocity and closed are compared against
// it wherever they apply, and reference fixtures are checked when one
// matches the request. corrupt adds x t to one weight table entry.
VerifyReport verify_methods(const SeriesRequest& req, const OracleOptions& opt = {},
                            std::optional<LetterPair> corrupt = std::nullopt);

}  // namespace desavoid
