// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_ERROR_HPP
#define THERMOSEMI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace thermosemi
{

// Base of every error raised by the library. The frontend separates input problems
// (InputError and its children) from numerical failures (NumericalError and its children).
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error
{
public:
  using Error::Error;
};

class NumericalError : public Error
{
public:
  using Error::Error;
};

// Parameter outside the unit square, or outside the region Q where required.
class DomainError : public InputError
{
public:
  using InputError::InputError;
};

// Malformed input: bad spectrum list, bad window, too few samples, ...
class ValidationError : public InputError
{
public:
  using InputError::InputError;
};

// The stability hypotheses that define the admissible ξ set do not hold.
class AdmissibilityError : public InputError
{
public:
  using InputError::InputError;
};

// Parameter combination deliberately outside the witness case analysis.
class UnsupportedCaseError : public InputError
{
public:
  using InputError::InputError;
};

// iλ is numerically in the spectrum of the per-mode reduction.
class NearSingularError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

// Characteristic value requested at a pole of the θ-elimination.
class PoleError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

// Power evaluation left the double range.
class OverflowError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

// No root found in the search window. diagnostics() holds the scan data as JSON text.
class NotFoundError : public NumericalError
{
public:
  NotFoundError(const std::string &what, std::string diagnostics)
    : NumericalError(what), diag(std::move(diagnostics))
  {
  }
  const std::string &diagnostics() const noexcept { return diag; }

private:
  std::string diag;
};

// Non-finite state during time integration.
class DivergenceError : public NumericalError
{
public:
  DivergenceError(const std::string &what, double first_bad_time)
    : NumericalError(what), time(first_bad_time)
  {
  }
  double first_bad_time() const noexcept { return time; }

private:
  double time;
};

// Regression on nonpositive or degenerate data.
class FitUndefinedError : public NumericalError
{
public:
  using NumericalError::NumericalError;
};

}  // namespace thermosemi

#endif  // THERMOSEMI_ERROR_HPP
