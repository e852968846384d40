#pragma once

#include <stdexcept>
#include <string>

namespace mirrorext {

/// Bad construction parameters (rank/level out of range, malformed labels).
struct ArgumentError : std::invalid_argument {
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Floating-point result failed an exactness or consistency check.
/// Retrying with more precision bits is the intended recovery.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A spectrum violates the hypotheses of the mirror construction
/// (support outside exp, m_lambda != m_conj, vacuum multiplicity != 1).
struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// The branch-partner scan produced zero or several integrality-consistent
/// candidates and the closed-form twist could not break the tie.
struct PairingAmbiguity : std::runtime_error {
    explicit PairingAmbiguity(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problem size exceeds a desk-scale guard.
struct ScaleError : std::runtime_error {
    explicit ScaleError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mirrorext
