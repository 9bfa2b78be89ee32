#pragma once

// "espts v1" point-set text format:
//
//   espts v1
//   # comment
//   X Y
//
// Each coordinate token is an optionally signed integer or p/q in lowest terms.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cupcap/geometry.hpp"

namespace cupcap {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  /// 1-based line number of the offending input line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Coord parse_coord(std::string_view token);

PointSet read_points(std::istream& in);
PointSet read_points_file(const std::filesystem::path& path);

void write_points(std::ostream& out, std::span<const Point> points);
std::string format_points(std::span<const Point> points);

}  // namespace cupcap
