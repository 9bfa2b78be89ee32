#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cupcap/cli/cli.hpp"
#include "cupcap/constructions.hpp"
#include "cupcap/errors.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/point_io.hpp"
#include "cupcap/support.hpp"
#include "svg.hpp"

namespace cupcap::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Coord& v) { return to_string(v); }

json to_json(std::span<const Point> points) {
  json arr = json::array();
  for (const Point& p : points) arr.push_back(json::array({to_string(p.x), to_string(p.y)}));
  return arr;
}

json to_json(const EsUpper& u) {
  return json{{"coefficient", to_json(u.coefficient)},
              {"exponent_integer_part", u.exponent_integer_part},
              {"big_c", to_json(u.big_c)},
              {"log2_value", u.log2_value}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::optional<std::filesystem::path>& target, std::ostream& out) {
  if (target) write_atomically(*target, text);
  else out << text;
}

void check_params(std::initializer_list<int> values) {
  for (int v : values)
    if (v < 3) throw UsageError("parameters ell, m, n must be at least 3");
}

json certificate_json(const ConstructionCertificate& cert) {
  json bounds{{"required_size", to_json(cert.required_size)},
              {"max_collinear", cert.max_collinear_points},
              {"no_collinear_ell", cert.no_collinear_ell},
              {"longest_cup", cert.longest_cup_points},
              {"longest_cap", cert.longest_cap_points}};
  bounds["max_convex_subset"] = cert.max_convex_points ? json(*cert.max_convex_points) : json(nullptr);
  return json{{"claim", cert.claim.to_string()}, {"size", cert.size}, {"bounds", bounds}, {"passes", cert.passes}};
}

// Writes the points and a sidecar certificate next to them.
int emit_construction(const PointSet& pts, const Claim& claim, const std::filesystem::path& out_path,
                      std::ostream& out) {
  ConstructionCertificate cert = verify_construction(pts, claim);
  write_atomically(out_path, format_points(pts));
  std::filesystem::path sidecar = out_path;
  sidecar += ".cert.json";
  write_atomically(sidecar, dump(certificate_json(cert)));
  out << "wrote " << pts.size() << " points to " << out_path.string() << " (certificate "
      << (cert.passes ? "passes" : "FAILS") << ")\n";
  return cert.passes ? kOk : kVerificationFailed;
}

int gen_x(const GenX& c, std::ostream& out) {
  check_params({c.ell, c.m, c.n});
  return emit_construction(build_X(c.ell, c.m, c.n), Claim::cupcap(c.ell, c.m, c.n), c.out, out);
}

int gen_es(const GenEs& c, std::ostream& out) {
  check_params({c.ell});
  if (c.n < 6) throw UsageError("gen-es needs n >= 6");
  return emit_construction(build_ES_lower(c.ell, c.n), Claim::convex(c.ell, c.n), c.out, out);
}

int verify(const Verify& c, std::ostream& out) {
  Claim claim;
  try {
    claim = Claim::parse(c.claim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  PointSet pts = read_points_file(c.in);
  ConstructionCertificate cert = verify_construction(pts, claim);
  emit(dump(certificate_json(cert)), c.report, out);
  return cert.passes ? kOk : kVerificationFailed;
}

int analyze(const Analyze& c, const RunConfig& cfg, std::ostream& out) {
  PointSet pts = read_points_file(c.in);
  if (pts.size() < 3) throw UsageError("analyze needs at least 3 points");
  if (has_duplicates(pts)) throw UsageError("input contains duplicate points");
  bool query = c.ell.has_value();
  if (query != c.m.has_value() || query != c.n.has_value())
    throw UsageError("--ell, --m and --n must be given together");
  if (query) check_params({*c.ell, *c.m, *c.n});

  json j;
  j["input_file"] = c.in.string();
  j["n_points"] = pts.size();
  j["distinct_x"] = has_distinct_x(pts);
  json witnesses;
  if (has_distinct_x(pts)) {
    StructureWitness cup = longest_cup(pts), cap = longest_cap(pts);
    j["longest_cup"] = cup.size();
    j["longest_cap"] = cap.size();
    witnesses["cup"] = to_json(cup.members);
    witnesses["cap"] = to_json(cap.members);
  } else {
    // Cups and caps are defined through x-order.
    j["longest_cup"] = nullptr;
    j["longest_cap"] = nullptr;
    witnesses["cup"] = nullptr;
    witnesses["cap"] = nullptr;
  }
  StructureWitness col = max_collinear(pts);
  j["max_collinear"] = col.size();
  witnesses["collinear"] = to_json(col.members);
  if (pts.size() <= cfg.convex_limit) {
    StructureWitness conv = max_convex_subset(pts);
    j["max_convex_subset"] = conv.size();
    witnesses["convex"] = to_json(conv.members);
  } else {
    j["max_convex_subset"] = nullptr;
    witnesses["convex"] = nullptr;
  }
  j["witnesses"] = witnesses;
  if (query) {
    if (!has_distinct_x(pts)) throw UsageError("structure search needs distinct x-coordinates");
    auto found = find_structure(pts, *c.ell, *c.m, *c.n);
    j["structure"] = found ? json{{"kind", to_string(found->kind)}, {"members", to_json(found->members)}}
                           : json(nullptr);
  }
  emit(dump(j), c.report, out);
  return kOk;
}

int bounds(const Bounds& c, const RunConfig& cfg, std::ostream& out) {
  check_params({c.ell, c.max_mn});
  BoundTable t = bound_table(c.ell, c.max_mn, cfg.bounds);
  json j;
  j["ell"] = t.ell;
  j["config"] = json{{"c", to_json(t.config.c)},
                     {"c1", to_json(t.config.c1)},
                     {"big_c", to_json(t.config.big_c)},
                     {"epsilon", to_json(t.config.epsilon)}};
  json rows = json::array();
  for (const CupCapRow& r : t.cupcap)
    rows.push_back(json{{"m", r.m},
                        {"n", r.n},
                        {"f3", r.f3_exact.get_str()},
                        {"f_ell_upper", to_json(r.f_ell_upper)},
                        {"h_ell_lower", to_json(r.h_ell_lower)}});
  j["cupcap"] = rows;
  json es = json::array();
  for (const EsRow& r : t.es) es.push_back(json{{"n", r.n}, {"lower", to_json(r.lower)}, {"upper", to_json(r.upper)}});
  j["es"] = es;
  out << dump(j);
  return kOk;
}

int fat_cap(const FatCapSearch& c, const RunConfig& cfg, std::ostream& out) {
  PointSet pts = read_points_file(c.in);
  std::size_t budget = c.budget.value_or(cfg.search_budget);
  FatCap fc = find_fat_cap(pts, c.k, cfg.seed, budget);
  TransversalResult tr = transversal_check(pts, fc.members, cfg.sample_budget, cfg.seed);
  json j;
  j["input_file"] = c.in.string();
  j["k"] = c.k;
  j["seed"] = cfg.seed;
  j["budget"] = budget;
  j["cap"] = json{{"kind", to_string(fc.kind)}, {"members", to_json(fc.members)}};
  j["occupancies"] = fc.occupancies;
  j["min_occupancy"] = fc.min_occupancy;
  j["transversal"] = json{{"mode", tr.mode == TransversalMode::Exhaustive ? "exhaustive" : "sampled"},
                          {"checked", tr.checked},
                          {"violations", tr.violations},
                          {"ok", tr.ok},
                          {"counterexample", to_json(tr.counterexample)}};
  emit(dump(j), c.report, out);
  return tr.ok ? kOk : kVerificationFailed;
}

int plot(const Plot& c, std::ostream& out) {
  PointSet pts = read_points_file(c.in);
  PointSet mark;
  bool closed = false;
  const std::string& h = c.highlight;
  if (h == "cup" || h == "cap") {
    if (!has_distinct_x(pts)) throw UsageError("cup/cap highlight needs distinct x-coordinates");
    if (pts.size() >= 2) mark = (h == "cup" ? longest_cup(pts) : longest_cap(pts)).members;
  } else if (h == "collinear") {
    if (pts.size() >= 2) mark = max_collinear(pts).members;
    std::sort(mark.begin(), mark.end());
  } else if (h == "convex") {
    if (pts.size() >= 3) mark = convex_hull(max_convex_subset(pts).members);
    closed = true;
  } else if (h != "none") {
    throw UsageError("--highlight must be one of none, cup, cap, collinear, convex");
  }
  write_atomically(c.svg_out, render_svg(pts, mark, closed));
  out << "wrote " << c.svg_out.string() << "\n";
  return kOk;
}

}  // namespace

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << contents;
    f.flush();
    if (!f) throw UsageError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw UsageError("cannot move output into place at " + path.string());
  }
}

int run(const Command& command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return std::visit(
        [&](const auto& c) -> int {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, GenX>) return gen_x(c, out);
          else if constexpr (std::is_same_v<T, GenEs>) return gen_es(c, out);
          else if constexpr (std::is_same_v<T, Analyze>) return analyze(c, config, out);
          else if constexpr (std::is_same_v<T, Verify>) return verify(c, out);
          else if constexpr (std::is_same_v<T, Bounds>) return bounds(c, config, out);
          else if constexpr (std::is_same_v<T, FatCapSearch>) return fat_cap(c, config, out);
          else return plot(c, out);
        },
        command);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "error: " << e.what();
    for (const Point& p : e.witness()) err << " " << to_string(p);
    err << "\n";
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace cupcap::cli
