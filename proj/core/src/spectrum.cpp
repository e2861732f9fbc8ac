// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/spectrum.hpp"

#include <cmath>
#include <numbers>
#include "thermosemi/error.hpp"
#include "thermosemi/io.hpp"

namespace thermosemi
{

namespace
{

std::string join(const std::vector<double> &values)
{
  std::string text;
  for (std::size_t i = 0; i < values.size(); i++)
  {
    text += (i ? "," : "") + format_double(values[i]);
  }
  return text;
}

void check(const SpectrumSpec &spec)
{
  using Kind = SpectrumSpec::Kind;
  switch (spec.kind)
  {
    case Kind::List:
      if (spec.values.empty())
      {
        throw ValidationError("explicit spectrum is empty");
      }
      for (std::size_t i = 0; i < spec.values.size(); i++)
      {
        if (!(spec.values[i] > 0.0) || !std::isfinite(spec.values[i]))
        {
          throw ValidationError("eigenvalue " + std::to_string(i + 1) +
                                " is not finite and positive");
        }
        if (i > 0 && spec.values[i] < spec.values[i - 1])
        {
          throw ValidationError("eigenvalues are not nondecreasing at index " +
                                std::to_string(i + 1));
        }
      }
      break;
    case Kind::Power:
      if (!(spec.c > 0.0) || !(spec.s > 0.0) || !std::isfinite(spec.c) ||
          !std::isfinite(spec.s))
      {
        throw ValidationError("power spectrum needs c > 0 and s > 0");
      }
      break;
    case Kind::Beam:
      if (!(spec.length > 0.0) || !std::isfinite(spec.length))
      {
        throw ValidationError("beam length must be positive");
      }
      break;
    case Kind::String:
    case Kind::Plate:
      break;
  }
}

}  // namespace

SpectrumSpec SpectrumSpec::parse(const std::string &text)
{
  SpectrumSpec spec;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "list")
  {
    spec.kind = Kind::List;
    spec.values = parse_double_list(tail);
  }
  else if (head == "power")
  {
    spec.kind = Kind::Power;
    const auto cs = parse_double_list(tail);
    if (cs.size() != 2)
    {
      throw ValidationError("power spectrum expects 'power:c,s'");
    }
    spec.c = cs[0];
    spec.s = cs[1];
  }
  else if (head == "string" && tail.empty())
  {
    spec.kind = Kind::String;
  }
  else if (head == "plate" && tail.empty())
  {
    spec.kind = Kind::Plate;
  }
  else if (head == "beam")
  {
    spec.kind = Kind::Beam;
    if (!tail.empty())
    {
      const auto l = parse_double_list(tail);
      if (l.size() != 1)
      {
        throw ValidationError("beam spectrum expects 'beam:L'");
      }
      spec.length = l[0];
    }
  }
  else
  {
    throw ValidationError("unknown spectrum descriptor '" + text + "'");
  }
  check(spec);
  return spec;
}

std::string SpectrumSpec::to_string() const
{
  switch (kind)
  {
    case Kind::List:
      return "list:" + join(values);
    case Kind::Power:
      return "power:" + format_double(c) + "," + format_double(s);
    case Kind::String:
      return "string";
    case Kind::Plate:
      return "plate";
    case Kind::Beam:
      return "beam:" + format_double(length);
  }
  return "";
}

Spectrum::Spectrum(SpectrumSpec spec_) : spec(std::move(spec_))
{
  check(spec);
  switch (spec.kind)
  {
    case SpectrumSpec::Kind::List:
      text = "explicit list of " + std::to_string(spec.values.size()) + " eigenvalues";
      break;
    case SpectrumSpec::Kind::Power:
      text = "mu_n = " + format_double(spec.c) + " n^" + format_double(spec.s);
      break;
    case SpectrumSpec::Kind::String:
      text = "string on (0,pi): mu_n = n^2";
      break;
    case SpectrumSpec::Kind::Plate:
      text = "hinged plate on (0,pi): mu_n = n^4";
      break;
    case SpectrumSpec::Kind::Beam:
      text = "beam of length " + format_double(spec.length) + ": mu_n = (n pi / L)^4";
      break;
  }
}

double Spectrum::eigenvalue(std::size_t n) const
{
  if (n == 0)
  {
    throw ValidationError("eigenvalue indices start at 1");
  }
  const double x = static_cast<double>(n);
  switch (spec.kind)
  {
    case SpectrumSpec::Kind::List:
      if (n > spec.values.size())
      {
        throw ValidationError("eigenvalue index " + std::to_string(n) +
                              " beyond explicit list of " +
                              std::to_string(spec.values.size()));
      }
      return spec.values[n - 1];
    case SpectrumSpec::Kind::Power:
      return spec.c * std::pow(x, spec.s);
    case SpectrumSpec::Kind::String:
      return x * x;
    case SpectrumSpec::Kind::Plate:
      return x * x * x * x;
    case SpectrumSpec::Kind::Beam:
    {
      const double k = x * std::numbers::pi / spec.length;
      return k * k * k * k;
    }
  }
  return 0.0;
}

std::vector<double> Spectrum::eigenvalues(std::size_t count) const
{
  std::vector<double> mu(count);
  for (std::size_t n = 1; n <= count; n++)
  {
    mu[n - 1] = eigenvalue(n);
  }
  return mu;
}

std::size_t Spectrum::size() const
{
  return finite() ? spec.values.size() : 0;
}

Spectrum make_spectrum(const SpectrumSpec &spec)
{
  return Spectrum(spec);
}

}  // namespace thermosemi
