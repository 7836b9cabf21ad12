#pragma once

#include <stdexcept>
#include <string>

namespace qfactor {

// Operand shapes disagree (matrix vs. layout, matrix vs. matrix, region vs. layout).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Region is malformed for the requested operation (overlap, out of range, bad partition).
class InvalidRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix function needed a full-rank argument and got an eigenvalue below rank_floor.
class RankDeficient : public std::domain_error {
 public:
  RankDeficient(const std::string& what, double min_eigenvalue)
      : std::domain_error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

// Schatten order p < 1.
class InvalidOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Matrix fails the density-matrix invariants.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class QuadratureTailTooLarge : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Conditional log-Sobolev ratio requested where D_x(rho||sigma) vanishes.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Integration step left the PSD cone beyond tolerance.
class StepRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SamplingFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfactor
