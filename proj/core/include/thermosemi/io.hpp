// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_IO_HPP
#define THERMOSEMI_IO_HPP

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace thermosemi
{

// 17 significant digits, locale independent; round-trips every double.
std::string format_double(double x);

// Joins already formatted fields with commas and terminates the line with '\n'.
void write_csv_row(std::ostream &out, const std::vector<std::string> &fields);

// Parses a comma separated list of doubles ("1,2.5,1e3"). Throws ValidationError.
std::vector<double> parse_double_list(const std::string &text);

// Parses a comma separated list of positive integers; "a:b" expands to a..b and
// "2^a:b" to powers of two 2^a..2^b.
std::vector<std::size_t> parse_index_list(const std::string &text);

}  // namespace thermosemi

#endif  // THERMOSEMI_IO_HPP
