// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_CHARACTERISTIC_HPP
#define THERMOSEMI_CHARACTERISTIC_HPP

#include <complex>
#include <optional>
#include <nlohmann/json.hpp>
#include "thermosemi/params.hpp"

namespace thermosemi
{

struct CharacteristicQuery
{
  double mu = 1.0;
  std::complex<double> s;
};

// Per-mode characteristic function after eliminating θ:
//   DelayHyperbolic       s² + aμs + μe^{-sτ} + μ^{2β}s/(s + μ^α)
//   DelayParabolic        (s² + μ)(s + aμ^α + κμ^α e^{-sτ}) + μ^{2β}s
//   NoDelayBaseline       s² + μ + μ^{2β}s/(s + μ^α)
//   DelayedDampingString  s² + μ + aμs e^{-sτ} + μs/(s + μ)
// Throws PoleError at a zero of the elimination denominator.
std::complex<double> characteristic_value(const ModelParams &params,
                                          const CharacteristicQuery &q);

// Entire version with the elimination denominator cleared, and its derivative.
std::complex<double> characteristic_entire(const ModelParams &params, double mu,
                                           std::complex<double> s);
std::complex<double> characteristic_entire_derivative(const ModelParams &params, double mu,
                                                      std::complex<double> s);

struct AbscissaSearch
{
  // Real window; defaults to [-(aμ+1), 1] when unset.
  std::optional<double> re_min;
  std::optional<double> re_max;
  // Upper end of the imaginary window; defaults to 2(√μ + μ^α + μ^β) + 20/τ. Roots come in
  // conjugate pairs, so only a thin strip below the real axis is searched.
  std::optional<double> im_max;
  int samples_per_edge = 64;     // initial density, doubled until the count is stable
  double tolerance = 1e-10;      // refinement tolerance on the root (relative to 1 + |s|)
  int max_rectangles = 20000;
};

struct AbscissaResult
{
  double abscissa = 0.0;
  std::complex<double> root;
  double residual = 0.0;  // |χ(root)| relative to the size of its terms
  nlohmann::json diagnostics;
};

// Largest real part among roots of the characteristic function inside the window, located by
// argument-principle counts on rectangles visited in order of their right edge, with Newton
// refinement on boxes holding a single root. Throws NotFoundError when the window holds no
// root; the error carries the scan data.
AbscissaResult spectral_abscissa_estimate(const ModelParams &params, double mu,
                                          const AbscissaSearch &search = {});

}  // namespace thermosemi

#endif  // THERMOSEMI_CHARACTERISTIC_HPP
