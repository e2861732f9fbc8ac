// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_SPECTRUM_HPP
#define THERMOSEMI_SPECTRUM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace thermosemi
{

// Descriptor of an eigenvalue sequence μ_n of A, n = 1, 2, ...
//
//   list:3,5,8    explicit finite list
//   power:c,s     μ_n = c n^s
//   string        μ_n = n²          (sin(nx) on (0,π))
//   plate         μ_n = n⁴          (hinged Δ² on (0,π))
//   beam:L        μ_n = (nπ/L)⁴
struct SpectrumSpec
{
  enum class Kind
  {
    List,
    Power,
    String,
    Plate,
    Beam
  };
  Kind kind = Kind::String;
  std::vector<double> values;  // List
  double c = 1.0;              // Power
  double s = 2.0;              // Power
  double length = 3.14159265358979323846;  // Beam

  static SpectrumSpec parse(const std::string &text);
  std::string to_string() const;

  bool operator==(const SpectrumSpec &) const = default;
};

class Spectrum
{
public:
  explicit Spectrum(SpectrumSpec spec);

  // μ_n for 1-based n. Throws ValidationError past the end of a finite list.
  double eigenvalue(std::size_t n) const;

  // First `count` eigenvalues.
  std::vector<double> eigenvalues(std::size_t count) const;

  // Number of available eigenvalues, or 0 for unbounded generators.
  std::size_t size() const;
  bool finite() const { return spec.kind == SpectrumSpec::Kind::List; }

  const std::string &description() const { return text; }
  const SpectrumSpec &descriptor() const { return spec; }

private:
  SpectrumSpec spec;
  std::string text;
};

// Validates the descriptor (positive nondecreasing lists, positive c and L, s > 0).
Spectrum make_spectrum(const SpectrumSpec &spec);

}  // namespace thermosemi

#endif  // THERMOSEMI_SPECTRUM_HPP
