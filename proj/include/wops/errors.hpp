#pragma once

#include <stdexcept>
#include <string>

namespace wops {

// Base class for every error raised by the toolkit.
class WopsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or polynomial-matrix shapes do not conform.
class ShapeMismatch : public WopsError {
 public:
  using WopsError::WopsError;
};

// A linear system AX = B admits no solution.
class Inconsistent : public WopsError {
 public:
  using WopsError::WopsError;
};

// A matrix required to have full column rank does not.
class RankDeficient : public WopsError {
 public:
  using WopsError::WopsError;
};

// A family parameter is outside its admissible range.
class BadParameter : public WopsError {
 public:
  using WopsError::WopsError;
};

// Operands live in different ambient dimensions d.
class DimensionMismatch : public WopsError {
 public:
  using WopsError::WopsError;
};

// A multi-index violates a builder constraint (e.g. k_1 < k_d).
class BadIndex : public WopsError {
 public:
  using WopsError::WopsError;
};

// The moment functional fails quasi-definiteness; carries the first
// degree at which a Gram block is singular.
class NotQuasiDefinite : public WopsError {
 public:
  explicit NotQuasiDefinite(int degree)
      : WopsError("moment functional is not quasi-definite at degree " +
                  std::to_string(degree)),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

// A polynomial exceeds the degree range of a basis.
class DegreeOverflow : public WopsError {
 public:
  using WopsError::WopsError;
};

// An exact identity that must hold by construction failed; always a bug
// upstream, never valid input.
class IdentityViolation : public WopsError {
 public:
  using WopsError::WopsError;
};

// A coefficient matrix is nonzero outside its theoretical band.
class BandViolation : public WopsError {
 public:
  using WopsError::WopsError;
};

// Two independent computation routes for the same object disagree.
class CrossCheckFailure : public WopsError {
 public:
  using WopsError::WopsError;
};

// A degree-bounded coefficient solve turned out infeasible.
class NoSolution : public WopsError {
 public:
  using WopsError::WopsError;
};

// A recovered object fails its defining postcondition.
class VerificationFailure : public WopsError {
 public:
  using WopsError::WopsError;
};

}  // namespace wops
