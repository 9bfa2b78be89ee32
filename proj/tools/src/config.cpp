#include <fstream>
#include <istream>
#include <sstream>

#include "cupcap/cli/cli.hpp"
#include "cupcap/point_io.hpp"

namespace cupcap::cli {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Integers, p/q fractions and terminating decimals, all exact.
Coord parse_number(const std::string& token) {
  auto dot = token.find('.');
  if (dot == std::string::npos) return parse_coord(token);
  std::string whole = token.substr(0, dot), frac = token.substr(dot + 1);
  bool neg = !whole.empty() && whole[0] == '-';
  if (neg) whole.erase(0, 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
      whole.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed number '" + token + "'");
  mpz_class num(whole + frac, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Coord v(num, den);
  v.canonicalize();
  return neg ? Coord(-v) : v;
}

std::uint64_t parse_count(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a non-negative integer, got '" + token + "'");
  return std::stoull(token);
}

}  // namespace

RunConfig parse_config(std::istream& in, RunConfig base) {
  RunConfig cfg = std::move(base);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    auto eq = text.find('=');
    auto fail = [&](const std::string& msg) {
      throw UsageError("config line " + std::to_string(line) + ": " + msg);
    };
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = trim(text.substr(0, eq)), value = trim(text.substr(eq + 1));
    try {
      if (key == "c") cfg.bounds.c = parse_number(value);
      else if (key == "c1") cfg.bounds.c1 = parse_number(value);
      else if (key == "big_c") cfg.bounds.big_c = parse_number(value);
      else if (key == "epsilon") cfg.bounds.epsilon = parse_number(value);
      else if (key == "sample_budget") cfg.sample_budget = parse_count(value);
      else if (key == "search_budget") cfg.search_budget = parse_count(value);
      else if (key == "convex_limit") cfg.convex_limit = parse_count(value);
      else if (key == "seed") cfg.seed = parse_count(value);
      else fail("unknown key '" + key + "'");
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  try {
    cfg.bounds.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  return parse_config(in, std::move(base));
}

}  // namespace cupcap::cli
