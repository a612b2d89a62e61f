#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ramsplit/cli.hpp"

namespace {

bool slurp(std::istream& in, std::string& out) {
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return !in.bad();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting fields for prime-period Brauer classes from their ramification data"};
  app.require_subcommand(1);

  ramsplit::cli::SessionConfig config;
  std::vector<std::string> files;
  std::string point;

  auto add_common = [&](CLI::App* sub, bool takes_inputs) {
    if (takes_inputs) sub->add_option("inputs", files, "model / alpha / bundle JSON files ('-' for stdin)");
    sub->add_option("--format", config.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
  };

  auto* validate = app.add_subcommand("validate", "check a model (and alpha) for structural and reciprocity violations");
  add_common(validate, true);
  auto* classify = app.add_subcommand("classify", "classify doubly-ramified points as hot, cold or neutral");
  add_common(classify, true);
  classify->add_option("--point", point, "classify only this location");
  auto* index = app.add_subcommand("index", "index l or l^2 by the hot point criterion");
  add_common(index, true);
  auto* split = app.add_subcommand("split", "run the splitting pipeline and verify the result");
  add_common(split, true);
  split->add_flag("--even-padding", config.even_padding, "pad the blow-up sequence to even length");
  auto* blowup = app.add_subcommand("blowup", "blow up one location and carry the residues along");
  add_common(blowup, true);
  blowup->add_option("--at", point, "location to blow up")->required();
  auto* decompose = app.add_subcommand("decompose", "trees, cycle clusters, connecting paths and tails");
  add_common(decompose, true);
  auto* gen = app.add_subcommand("gen", "deterministic random configuration");
  add_common(gen, false);
  gen->add_option("--seed", config.seed, "random seed");
  gen->add_option("--ell", config.gen.ell, "prime period");
  gen->add_option("--components", config.gen.n_components, "number of vertical components");
  gen->add_option("--cycles", config.gen.n_cycles, "Betti number of the ramified subgraph");
  gen->add_flag("--hot", config.gen.hot_allowed, "allow hot points");
  gen->add_option("--cold-fraction", config.gen.cold_fraction, "probability of a cold ramified edge");
  gen->add_option("--max-points", config.gen.max_points, "bound on singular points");
  auto* dot = app.add_subcommand("export-dot", "decorated dual graph in DOT");
  add_common(dot, true);

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (!point.empty()) config.point = point;

  std::vector<std::string> inputs;
  if (config.command != "gen") {
    if (files.empty()) files.push_back("-");
    for (const auto& f : files) {
      std::string text;
      if (f == "-") {
        slurp(std::cin, text);
      } else {
        std::ifstream in(f, std::ios::binary);
        if (!in || !slurp(in, text)) {
          std::cerr << "cannot read " << f << "\n";
          return ramsplit::cli::kExitFailure;
        }
      }
      inputs.push_back(std::move(text));
    }
  }

  ramsplit::cli::RunResult r = ramsplit::cli::run(config, inputs);
  std::cout << r.output;
  return r.exit_code;
}
