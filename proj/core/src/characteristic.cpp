// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/characteristic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"

namespace thermosemi
{

namespace
{

using cd = std::complex<double>;

struct Coefficients
{
  double mu, a, kappa, tau, ma, m2b;
};

Coefficients coefficients(const ModelParams &p, double mu)
{
  if (!(mu > 0.0) || !std::isfinite(mu))
  {
    throw ValidationError("mode eigenvalue must be finite and positive, got " +
                          format_double(mu));
  }
  return {mu, p.a, p.kappa, p.tau, std::pow(mu, p.alpha), std::pow(mu, 2.0 * p.beta)};
}

// Q(s) = P(s) e^{sτ} for the delayed kinds (same zeros as P, no overflow on the far left),
// Q = P for the baseline. Also returns Q'(s) and the sum of term magnitudes.
struct QValue
{
  cd q;
  cd dq;
  double scale;
};

QValue shifted(SystemKind kind, const Coefficients &c, cd s)
{
  const double mu = c.mu;
  switch (kind)
  {
    case SystemKind::DelayHyperbolic:
    {
      const cd e = std::exp(s * c.tau);
      const cd A = (s * s + c.a * mu * s) * (s + c.ma) + c.m2b * s;
      const cd dA = (2.0 * s + c.a * mu) * (s + c.ma) + (s * s + c.a * mu * s) + c.m2b;
      const cd tail = mu * (s + c.ma);
      return {e * A + tail, e * (c.tau * A + dA) + mu, std::abs(e * A) + std::abs(tail)};
    }
    case SystemKind::DelayParabolic:
    {
      const cd e = std::exp(s * c.tau);
      const cd B = (s * s + mu) * (s + c.a * c.ma) + c.m2b * s;
      const cd dB = 2.0 * s * (s + c.a * c.ma) + (s * s + mu) + c.m2b;
      const cd tail = c.kappa * c.ma * (s * s + mu);
      return {e * B + tail, e * (c.tau * B + dB) + 2.0 * c.kappa * c.ma * s,
              std::abs(e * B) + std::abs(tail)};
    }
    case SystemKind::DelayedDampingString:
    {
      const cd e = std::exp(s * c.tau);
      const cd C = (s * s + mu) * (s + mu) + mu * s;
      const cd dC = 2.0 * s * (s + mu) + (s * s + mu) + mu;
      const cd tail = c.a * mu * (s * s + mu * s);
      return {e * C + tail, e * (c.tau * C + dC) + c.a * mu * (2.0 * s + mu),
              std::abs(e * C) + std::abs(tail)};
    }
    case SystemKind::NoDelayBaseline:
      break;
  }
  const cd P = (s * s + mu) * (s + c.ma) + c.m2b * s;
  const cd dP = 2.0 * s * (s + c.ma) + (s * s + mu) + c.m2b;
  return {P, dP, std::abs((s * s + mu) * (s + c.ma)) + std::abs(c.m2b * s)};
}

struct Rect
{
  double x0, x1, y0, y1;
  int count;
  int depth;
};

struct RightEdgeOrder
{
  bool operator()(const Rect &l, const Rect &r) const
  {
    return l.x1 < r.x1 || (l.x1 == r.x1 && l.y1 < r.y1);
  }
};

double principal(double x)
{
  return x - 2.0 * std::numbers::pi * std::round(x / (2.0 * std::numbers::pi));
}

struct Counter
{
  SystemKind kind;
  Coefficients c;
  int initial_samples;
  long evaluations = 0;

  // Winding number of Q around the rectangle at n samples per edge; false on a zero or
  // non-finite sample.
  bool wind(const Rect &r, int n, double &turns, double &max_step)
  {
    const cd corners[5] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}, {r.x0, r.y0}};
    double total = 0.0;
    max_step = 0.0;
    double prev = 0.0;
    bool first = true;
    for (int e = 0; e < 4; e++)
    {
      for (int k = 0; k < n; k++)
      {
        const cd s = corners[e] + (corners[e + 1] - corners[e]) * (static_cast<double>(k) / n);
        const cd q = shifted(kind, c, s).q;
        evaluations++;
        if (!std::isfinite(q.real()) || !std::isfinite(q.imag()) || q == cd(0.0))
        {
          return false;
        }
        const double phase = std::arg(q);
        if (!first)
        {
          const double step = principal(phase - prev);
          total += step;
          max_step = std::max(max_step, std::abs(step));
        }
        prev = phase;
        first = false;
      }
    }
    const cd q0 = shifted(kind, c, corners[0]).q;
    const double step = principal(std::arg(q0) - prev);
    total += step;
    max_step = std::max(max_step, std::abs(step));
    turns = total / (2.0 * std::numbers::pi);
    return true;
  }

  // Root count inside r, or -1 when the sampling did not settle.
  int count(const Rect &r, int *samples_used = nullptr)
  {
    int n = initial_samples;
    double turns = 0.0;
    double step = 0.0;
    if (!wind(r, n, turns, step))
    {
      return -1;
    }
    while (n <= (1 << 16))
    {
      double finer = 0.0;
      double finer_step = 0.0;
      if (!wind(r, 2 * n, finer, finer_step))
      {
        return -1;
      }
      n *= 2;
      if (std::lround(finer) == std::lround(turns) && finer_step < std::numbers::pi / 2.0 &&
          std::abs(finer - std::round(finer)) < 0.1)
      {
        if (samples_used)
        {
          *samples_used = n;
        }
        return static_cast<int>(std::lround(finer));
      }
      turns = finer;
      step = finer_step;
    }
    return -1;
  }
};

bool newton(const Counter &counter, const Rect &r, double tolerance, cd &root, int &iterations)
{
  cd s{0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1)};
  const double w = r.x1 - r.x0;
  const double h = r.y1 - r.y0;
  for (iterations = 1; iterations <= 60; iterations++)
  {
    const QValue v = shifted(counter.kind, counter.c, s);
    if (v.dq == cd(0.0))
    {
      return false;
    }
    const cd step = v.q / v.dq;
    s -= step;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    {
      return false;
    }
    if (std::abs(step) <= tolerance * (1.0 + std::abs(s)))
    {
      root = s;
      const double mx = 1e-9 * (1.0 + std::abs(s));
      return s.real() >= r.x0 - mx && s.real() <= r.x1 + mx && s.imag() >= r.y0 - mx &&
             s.imag() <= r.y1 + mx && w >= 0.0 && h >= 0.0;
    }
  }
  return false;
}

constexpr double kSplit[] = {0.5371, 0.4707, 0.5117, 0.4587, 0.5243, 0.4861};

}  // namespace

std::complex<double> characteristic_value(const ModelParams &params,
                                          const CharacteristicQuery &q)
{
  const Coefficients c = coefficients(params, q.mu);
  const cd s = q.s;
  const double mu = c.mu;
  auto pole_check = [&](cd d, const char *what)
  {
    if (std::abs(d) <= 1e-300 || std::abs(d) < 1e-15 * (std::abs(s) + std::abs(d - s)))
    {
      throw PoleError(std::string("characteristic value at a pole: s + ") + what + " = 0");
    }
  };
  switch (params.kind)
  {
    case SystemKind::DelayHyperbolic:
      pole_check(s + c.ma, "mu^alpha");
      return s * s + c.a * mu * s + mu * std::exp(-s * c.tau) + c.m2b * s / (s + c.ma);
    case SystemKind::DelayParabolic:
      return (s * s + mu) * (s + c.a * c.ma + c.kappa * c.ma * std::exp(-s * c.tau)) +
             c.m2b * s;
    case SystemKind::DelayedDampingString:
      pole_check(s + mu, "mu");
      return s * s + mu + c.a * mu * s * std::exp(-s * c.tau) + mu * s / (s + mu);
    case SystemKind::NoDelayBaseline:
      break;
  }
  pole_check(s + c.ma, "mu^alpha");
  return s * s + mu + c.m2b * s / (s + c.ma);
}

std::complex<double> characteristic_entire(const ModelParams &params, double mu,
                                           std::complex<double> s)
{
  const Coefficients c = coefficients(params, mu);
  const cd q = shifted(params.kind, c, s).q;
  return has_delay(params.kind) ? q * std::exp(-s * c.tau) : q;
}

std::complex<double> characteristic_entire_derivative(const ModelParams &params, double mu,
                                                      std::complex<double> s)
{
  const Coefficients c = coefficients(params, mu);
  const QValue v = shifted(params.kind, c, s);
  return has_delay(params.kind) ? (v.dq - c.tau * v.q) * std::exp(-s * c.tau) : v.dq;
}

AbscissaResult spectral_abscissa_estimate(const ModelParams &params, double mu,
                                          const AbscissaSearch &search)
{
  const Coefficients c = coefficients(params, mu);
  const double tau = has_delay(params.kind) ? params.tau : 1.0;
  const double x0 = search.re_min.value_or(-(params.a * mu + 1.0));
  const double x1 = search.re_max.value_or(1.0);
  const double y1 = search.im_max.value_or(
      2.0 * (std::sqrt(mu) + c.ma + std::pow(mu, params.beta)) + 20.0 / tau);
  const double y0 = -0.173;
  if (!(x0 < x1) || !(y1 > 0.0) || search.samples_per_edge < 4 || !(search.tolerance > 0.0))
  {
    throw ValidationError("bad abscissa search window or settings");
  }

  Counter counter{params.kind, c, search.samples_per_edge};
  nlohmann::json diag;
  diag["window"] = {{"re_min", x0}, {"re_max", x1}, {"im_min", y0}, {"im_max", y1}};
  diag["mu"] = mu;
  nlohmann::json visited = nlohmann::json::array();

  Rect top{x0, x1, y0, y1, 0, 0};
  int samples = 0;
  top.count = counter.count(top, &samples);
  for (int retry = 0; top.count < 0 && retry < 4; retry++)
  {
    top.y0 -= 0.0113 * (retry + 1);
    top.y1 += 0.0271 * (retry + 1);
    top.count = counter.count(top, &samples);
  }
  diag["initial_count"] = top.count;
  diag["initial_samples_per_edge"] = samples;
  if (top.count <= 0)
  {
    diag["evaluations"] = counter.evaluations;
    throw NotFoundError(top.count < 0 ? "argument principle did not settle on the window"
                                      : "no characteristic root in the search window",
                        diag.dump());
  }

  std::priority_queue<Rect, std::vector<Rect>, RightEdgeOrder> queue;
  queue.push(top);
  bool found = false;
  cd best;
  int newton_iterations = 0;
  int examined = 0;
  while (!queue.empty())
  {
    const Rect r = queue.top();
    if (found && r.x1 <= best.real())
    {
      break;
    }
    queue.pop();
    if (++examined > search.max_rectangles)
    {
      break;
    }
    if (visited.size() < 400)
    {
      visited.push_back({r.x0, r.x1, r.y0, r.y1, r.count});
    }

    if (r.count == 1)
    {
      cd root;
      int iterations = 0;
      if (newton(counter, r, search.tolerance, root, iterations))
      {
        newton_iterations += iterations;
        if (!found || root.real() > best.real())
        {
          best = root;
          found = true;
        }
        continue;
      }
    }
    const double w = r.x1 - r.x0;
    const double h = r.y1 - r.y0;
    const cd centre{0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1)};
    if (std::max(w, h) <= search.tolerance * (1.0 + std::abs(centre)))
    {
      if (!found || centre.real() > best.real())
      {
        best = centre;
        found = true;
      }
      continue;
    }

    bool split = false;
    for (int attempt = 0; attempt < 6 && !split; attempt++)
    {
      const double f = kSplit[(r.depth + attempt) % 6];
      Rect a = r;
      Rect b = r;
      a.depth = b.depth = r.depth + 1;
      if (w >= h)
      {
        a.x1 = b.x0 = r.x0 + f * w;
      }
      else
      {
        a.y1 = b.y0 = r.y0 + f * h;
      }
      a.count = counter.count(a);
      b.count = counter.count(b);
      if (a.count < 0 || b.count < 0 || a.count + b.count != r.count)
      {
        continue;
      }
      split = true;
      if (a.count > 0)
      {
        queue.push(a);
      }
      if (b.count > 0)
      {
        queue.push(b);
      }
    }
    if (!split && (!found || centre.real() > best.real()))
    {
      // Counting failed on every split; the box is as far as the search can resolve.
      best = centre;
      found = true;
    }
  }

  diag["rectangles"] = visited;
  diag["rectangles_examined"] = examined;
  diag["newton_iterations"] = newton_iterations;
  diag["evaluations"] = counter.evaluations;
  if (!found)
  {
    throw NotFoundError("rectangle budget exhausted before a root was isolated", diag.dump());
  }
  const QValue v = shifted(params.kind, c, best);
  AbscissaResult result;
  result.abscissa = best.real();
  result.root = best.imag() < 0.0 ? std::conj(best) : best;
  result.residual = v.scale > 0.0 ? std::abs(v.q) / v.scale : std::abs(v.q);
  diag["refined_root"] = {{"re", result.root.real()}, {"im", result.root.imag()}};
  diag["residual"] = result.residual;
  result.diagnostics = std::move(diag);
  return result;
}

}  // namespace thermosemi
