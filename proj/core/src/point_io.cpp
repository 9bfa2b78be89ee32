#include "cupcap/point_io.hpp"

#include <fstream>
#include <sstream>

namespace cupcap {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Coord parse_coord(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(token, true)) throw std::invalid_argument("malformed coordinate '" + std::string(token) + "'");
    return Coord(mpz_class(strip_plus(token)));
  }
  std::string_view num = token.substr(0, slash);
  std::string_view den = token.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw std::invalid_argument("malformed coordinate '" + std::string(token) + "'");
  }
  mpz_class n(strip_plus(num));
  mpz_class d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) throw std::invalid_argument("rational '" + std::string(token) + "' is not in lowest terms");
  return Coord(n, d);
}

PointSet read_points(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  bool header = false;
  PointSet points;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == '#') continue;
    if (!header) {
      std::string version, extra;
      if (first != "espts" || !(fields >> version) || version != "v1" || (fields >> extra)) {
        throw ParseError(number, "expected header 'espts v1'");
      }
      header = true;
      continue;
    }
    std::string second, extra;
    if (!(fields >> second)) throw ParseError(number, "expected two coordinates");
    if (fields >> extra) throw ParseError(number, "unexpected trailing token '" + extra + "'");
    try {
      points.emplace_back(parse_coord(first), parse_coord(second));
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
  }
  if (!header) throw ParseError(number == 0 ? 1 : number, "missing header 'espts v1'");
  return points;
}

PointSet read_points_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_points(in);
}

void write_points(std::ostream& out, std::span<const Point> points) {
  out << "espts v1\n";
  for (const auto& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

std::string format_points(std::span<const Point> points) {
  std::ostringstream out;
  write_points(out, points);
  return out.str();
}

}  // namespace cupcap
