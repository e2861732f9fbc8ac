// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "thermosemi/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include "thermosemi/error.hpp"

namespace thermosemi
{

std::string format_double(double x)
{
  if (std::isnan(x))
  {
    return "nan";
  }
  if (std::isinf(x))
  {
    return x > 0 ? "inf" : "-inf";
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void write_csv_row(std::ostream &out, const std::vector<std::string> &fields)
{
  for (std::size_t i = 0; i < fields.size(); i++)
  {
    if (i > 0)
    {
      out << ',';
    }
    out << fields[i];
  }
  out << '\n';
}

namespace
{

std::vector<std::string> split(const std::string &text, char separator)
{
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, separator))
  {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos)
    {
      continue;
    }
    parts.push_back(item.substr(first, last - first + 1));
  }
  return parts;
}

double to_double(const std::string &item)
{
  try
  {
    std::size_t used = 0;
    const double value = std::stod(item, &used);
    if (used != item.size())
    {
      throw ValidationError("trailing characters in number '" + item + "'");
    }
    return value;
  }
  catch (const std::logic_error &)
  {
    throw ValidationError("not a number: '" + item + "'");
  }
}

std::size_t to_index(const std::string &item)
{
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
  if (ec != std::errc() || ptr != item.data() + item.size())
  {
    throw ValidationError("not a nonnegative integer: '" + item + "'");
  }
  return value;
}

}  // namespace

std::vector<double> parse_double_list(const std::string &text)
{
  std::vector<double> values;
  for (const auto &item : split(text, ','))
  {
    values.push_back(to_double(item));
  }
  return values;
}

std::vector<std::size_t> parse_index_list(const std::string &text)
{
  std::vector<std::size_t> values;
  for (const auto &item : split(text, ','))
  {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
    {
      values.push_back(to_index(item));
      continue;
    }
    std::string head = item.substr(0, colon);
    const std::size_t last = to_index(item.substr(colon + 1));
    const bool powers = head.rfind("2^", 0) == 0;
    const std::size_t first = to_index(powers ? head.substr(2) : head);
    if (first > last || (powers && last > 40))
    {
      throw ValidationError("bad index range '" + item + "'");
    }
    for (std::size_t k = first; k <= last; k++)
    {
      values.push_back(powers ? (std::size_t{1} << k) : k);
    }
  }
  return values;
}

}  // namespace thermosemi
