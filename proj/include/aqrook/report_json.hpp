#pragma once

#include <string>

#include "aqrook/identities.hpp"

namespace aqrook {

/// {"identity": ..., "params": {...}, "holds": ..., "elapsed_ms": ...,
///  "witness": {"lhs": ..., "rhs": ...}?} — one object per verification.
std::string report_to_json(const VerificationReport& report, int indent = -1);

/// Inverse of report_to_json (elapsed is carried over verbatim).
VerificationReport report_from_json(const std::string& text);

}  // namespace aqrook
