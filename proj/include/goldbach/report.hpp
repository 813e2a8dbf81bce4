#ifndef GOLDBACH_REPORT_HPP
#define GOLDBACH_REPORT_HPP

#include "goldbach/decompose.hpp"

#include <string>

namespace goldbach {

/// Session-style text block: input, monomial list, exponent matrix,
/// companion-point matrix, and the two summand lists, followed by the full
/// certified summand sequence.
std::string session_report(const Decomposition& d);

std::string localized_report(const LocalizedDecomposition& d);

/// Machine-readable document. Integers inside exponent vectors are encoded
/// as decimal strings so arbitrary precision survives the round trip;
/// serialization is byte-deterministic.
std::string decomposition_to_json(const Decomposition& d, int indent = 2);

/// Inverse of decomposition_to_json (accepts exactly the documented schema).
Decomposition decomposition_from_json(const std::string& text);

std::string localized_to_json(const LocalizedDecomposition& d, int indent = 2);

std::string certify_report_to_json(const CertifyReport& report, int indent = 2);

}  // namespace goldbach

#endif
