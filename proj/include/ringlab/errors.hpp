#pragma once

/**
 * @file errors.hpp
 * @brief Exception types raised by ringlab operations.
 *
 * Every error derives from RingError so callers can catch the family at once.
 * Errors that carry element indices expose them for diagnostics.
 */

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline std::string join_indices(const std::vector<std::uint32_t>& xs) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out << ", ";
    out << xs[i];
  }
  out << ')';
  return out.str();
}
}  // namespace detail

/// An operation table or involution map breaks a named axiom; the witness
/// lists the element indices that exhibit the failure.
class AxiomViolation : public RingError {
 public:
  AxiomViolation(std::string axiom, std::vector<std::uint32_t> witness)
      : RingError("axiom violation: " + axiom + " at " +
                  detail::join_indices(witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

class IdentityEqualsZero : public RingError {
 public:
  IdentityEqualsZero() : RingError("identity element equals zero element") {}
};

/// Tables of the wrong shape or with out-of-range entries.
class InvalidTables : public RingError {
 public:
  using RingError::RingError;
};

class CapExceeded : public RingError {
 public:
  CapExceeded(std::size_t order, std::size_t cap)
      : RingError("order " + std::to_string(order) + " exceeds cap " +
                  std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

class InvalidIdeal : public RingError {
 public:
  using RingError::RingError;
};

class ImproperIdeal : public RingError {
 public:
  ImproperIdeal() : RingError("ideal contains the identity") {}
};

class NotIdempotent : public RingError {
 public:
  explicit NotIdempotent(std::uint32_t e)
      : RingError("element " + std::to_string(e) + " is not idempotent"), element_(e) {}
  std::uint32_t element() const noexcept { return element_; }

 private:
  std::uint32_t element_;
};

/// x = 1 + (e - e*)*(e - e*) is not a unit.
class PreconditionUnitFails : public RingError {
 public:
  explicit PreconditionUnitFails(std::uint32_t x)
      : RingError("element " + std::to_string(x) + " is not a unit"), x_(x) {}
  std::uint32_t x() const noexcept { return x_; }

 private:
  std::uint32_t x_;
};

/// e - e* lies in neither J(R) nor Nil(R).
class HypothesisFails : public RingError {
 public:
  using RingError::RingError;
};

class IdealNotStarClosed : public RingError {
 public:
  explicit IdealNotStarClosed(std::uint32_t x)
      : RingError("ideal member " + std::to_string(x) + " has star outside the ideal"),
        x_(x) {}
  std::uint32_t witness() const noexcept { return x_; }

 private:
  std::uint32_t x_;
};

class NotProjectionInQuotient : public RingError {
 public:
  explicit NotProjectionInQuotient(std::uint32_t e)
      : RingError("quotient element " + std::to_string(e) + " is not a projection") {}
};

class NotApplicable : public RingError {
 public:
  using RingError::RingError;
};

/// A constructive step produced an element that fails its own post-condition.
/// Signals an implementation defect.
class CertificateFailure : public RingError {
 public:
  using RingError::RingError;
};

/// Conditions that must agree on every finite *-ring disagreed. The message
/// carries the full report.
class EquivalenceBreach : public RingError {
 public:
  using RingError::RingError;
};

class SpecParseError : public RingError {
 public:
  using RingError::RingError;
};

class IoFailure : public RingError {
 public:
  using RingError::RingError;
};

class ReplayMismatch : public RingError {
 public:
  ReplayMismatch(std::string label, const std::string& detail)
      : RingError("replay mismatch for " + label + ": " + detail), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

}  // namespace ringlab
