#pragma once

#include <stdexcept>
#include <string>

namespace trajrisk {

/// Base class for all trajrisk errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document structure problems: missing, extra, or mistyped fields.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// A type invariant does not hold; the message names the offending path.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Non-finite value encountered where a finite one is required.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Requested moment/expansion order exceeds the supported cap.
class OrderError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter value (counts, degrees, tolerances out of range).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Both covariance eigenvalues vanish: the quadratic form is deterministic.
class DegenerateCovariance : public Error {
 public:
  using Error::Error;
};

/// Degenerate input (e.g. vanishing second moment) for a normalization.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Iterative evaluation exhausted its budget before reaching tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Signal raised by ltz_cdf in the near-symmetric regime where the
/// chi-square surrogate is undefined; callers dispatch to imhof_cdf.
class FallbackToImhof : public Error {
 public:
  using Error::Error;
};

/// Trigonometric moment table does not cover a requested entry.
class TableGapError : public Error {
 public:
  using Error::Error;
};

/// Mixture mode structure is inconsistent with the requested mode model.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// SOS certificate could not be verified or repaired.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Method incompatible with the prediction kind (e.g. exact Gaussian CDF
/// methods on propagated non-Gaussian positions).
class MethodKindError : public Error {
 public:
  using Error::Error;
};

/// A method needs moments of higher order than the context provides.
class InsufficientMoments : public Error {
 public:
  using Error::Error;
};

}  // namespace trajrisk
