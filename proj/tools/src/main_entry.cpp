#include <CLI11.hpp>
#include <ostream>

#include "cupcap/cli/cli.hpp"

namespace cupcap::cli {

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cups, caps and convex position: constructions, analysis and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--seed", seed, "random seed (default 0)");

  Command command;

  GenX gx{};
  auto* sub = app.add_subcommand("gen-x", "write a set with no ell collinear points, m-cup or n-cap");
  sub->add_option("ell", gx.ell)->required();
  sub->add_option("m", gx.m)->required();
  sub->add_option("n", gx.n)->required();
  sub->add_option("out", gx.out)->required();
  sub->callback([&] { command = gx; });

  GenEs ge{};
  sub = app.add_subcommand("gen-es", "write a set with no ell collinear points and no n in convex position");
  sub->add_option("ell", ge.ell)->required();
  sub->add_option("n", ge.n)->required();
  sub->add_option("out", ge.out)->required();
  sub->callback([&] { command = ge; });

  Analyze an{};
  sub = app.add_subcommand("analyze", "report extremal structures of a point file");
  sub->add_option("in", an.in)->required();
  sub->add_option("--ell", an.ell);
  sub->add_option("--m", an.m);
  sub->add_option("--n", an.n);
  sub->add_option("--report", an.report, "JSON output path (default stdout)");
  sub->callback([&] { command = an; });

  Verify ve{};
  sub = app.add_subcommand("verify", "certify a construction claim such as x:3,5,5 or es:3,6");
  sub->add_option("in", ve.in)->required();
  sub->add_option("--claim", ve.claim)->required();
  sub->add_option("--report", ve.report, "JSON output path (default stdout)");
  sub->callback([&] { command = ve; });

  Bounds bo{};
  sub = app.add_subcommand("bounds", "print the bound table as JSON");
  sub->add_option("ell", bo.ell)->required();
  sub->add_option("maxmn", bo.max_mn)->required();
  sub->callback([&] { command = bo; });

  FatCapSearch fc{};
  sub = app.add_subcommand("fat-cap", "search for a cup/cap with populated support and check transversals");
  sub->add_option("in", fc.in)->required();
  sub->add_option("k", fc.k, "chain length (default 4)");
  sub->add_option("--budget", fc.budget, "random candidate draws");
  sub->add_option("--report", fc.report, "JSON output path (default stdout)");
  sub->callback([&] { command = fc; });

  Plot pl{};
  sub = app.add_subcommand("plot", "draw a point file as SVG");
  sub->add_option("in", pl.in)->required();
  sub->add_option("svg_out", pl.svg_out)->required();
  sub->add_option("--highlight", pl.highlight, "none, cup, cap, collinear or convex");
  sub->callback([&] { command = pl; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  RunConfig config;
  try {
    if (!config_path.empty()) config = load_config(config_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (seed) config.seed = *seed;
  return run(command, config, out, err);
}

}  // namespace cupcap::cli
