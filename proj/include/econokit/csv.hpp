#pragma once

#include <iosfwd>
#include <string>

#include "econokit/series.hpp"

namespace econokit {

/// Shared ingestion format: header `date,value`, date tokens `YYYYQn`,
/// decimal-point numbers. Decimal commas are rejected unless `locale_comma`
/// is set, in which case `1991Q1,1234,56` is read as 1234.56.
[[nodiscard]] Series read_series_csv(std::istream& in, const std::string& name,
                                     bool locale_comma = false);
[[nodiscard]] Series read_series_csv_file(const std::string& path, std::string name = "",
                                          bool locale_comma = false);

/// Writes `date,value` rows with shortest round-trip number formatting, so
/// reading the file back reproduces the series bit for bit.
void write_series_csv(const Series& s, std::ostream& out);

/// Shortest decimal representation that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

}  // namespace econokit
