// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion N]
//
// Exit status is 0 when every selected criterion passes.

#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "builders.hpp"
#include "oracles.hpp"
#include "ramsplit/cli.hpp"
#include "ramsplit/errors.hpp"
#include "ramsplit/io.hpp"

using namespace rs_test;

namespace {

constexpr int kSplitSeeds = 1000;
constexpr double kSplitBudgetSeconds = 60.0;
constexpr int kHotSeeds = 1000;
constexpr int kReciprocitySeeds = 200;
constexpr int kCensusVertices = 8;
constexpr int kCensusEdges = 10;
constexpr std::int64_t kChainPrimeBound = 13;

const std::vector<std::int64_t> kPrimes{2, 3, 5, 7};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// <= 12 components, <= 20 singular points, 0..3 independent cycles.
GenParams params_for(std::int64_t ell, std::uint64_t seed, bool hot) {
  GenParams p;
  p.ell = ell;
  p.n_cycles = static_cast<int>(seed % 4);
  p.n_components = 3 + static_cast<int>((seed / 4) % 10);
  p.max_points = 20;
  p.cold_fraction = 0.25 * static_cast<double>((seed / 40) % 5);
  p.hot_allowed = hot;
  return p;
}

int ram_betti(const Model& m, const RamificationData& rd) { return betti(m, rd.ramified_components()); }

std::string residue_field(const Model& m, const LocationId& at) {
  if (auto it = m.points().find(at); it != m.points().end()) return it->second.residue_field;
  return m.markers().at(at).residue_field;
}

// ---------------------------------------------------------------------------

Outcome end_to_end() {
  Outcome o;
  int runs = 0, failed = 0, infeasible = 0;
  std::string first;
  auto start = std::chrono::steady_clock::now();
  for (std::int64_t ell : kPrimes) {
    for (std::uint64_t seed = 0; seed < kSplitSeeds; ++seed) {
      std::pair<Model, RamificationData> in{Model(PrimeModulus(ell)), RamificationData(PrimeModulus(ell))};
      try {
        in = generate_random(seed, params_for(ell, seed, false));
      } catch (const InfeasibleParams&) {
        ++infeasible;
        continue;
      }
      ++runs;
      bool ok = false;
      std::string why;
      try {
        SplitResult r = split(in.first, in.second);
        ok = r.report.passed() && !r.report.entries.empty();
        for (const auto& e : r.report.entries) ok = ok && e.residue_killed;
        if (!ok) why = "verification failed";
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (!ok && failed++ == 0) first = "l=" + std::to_string(ell) + " seed=" + std::to_string(seed) + ": " + why;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = failed == 0 && infeasible == 0 && secs < kSplitBudgetSeconds;
  std::ostringstream s;
  s << runs << " splits, " << failed << " failed, " << infeasible << " infeasible, " << secs << " s";
  if (!first.empty()) s << "; first: " << first;
  o.detail = s.str();
  return o;
}

Outcome hot_agreement() {
  Outcome o;
  int hot = 0, mismatched = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < kHotSeeds; ++seed) {
    const std::int64_t ell = kPrimes[seed % kPrimes.size()];
    auto [m, rd] = generate_random(seed, params_for(ell, seed, true));
    IndexReport idx = index_criterion(m, rd);
    std::optional<std::string> thrown;
    bool other = false;
    try {
      split(m, rd);
    } catch (const IndexTooLarge& e) {
      thrown = e.witness();
    } catch (const std::exception&) {
      other = true;
    }
    const bool expect = idx.verdict == IndexVerdict::EllSquared;
    hot += expect;
    bool agree = !other && expect == thrown.has_value() && (!expect || idx.witness->str() == *thrown);
    if (!agree && mismatched++ == 0) first = "seed " + std::to_string(seed);
  }
  o.pass = mismatched == 0;
  o.detail = std::to_string(kHotSeeds) + " inputs, " + std::to_string(hot) + " with index l^2, " +
             std::to_string(mismatched) + " disagreements" + (first.empty() ? "" : "; first: " + first);
  return o;
}

Outcome betti_reduction() {
  Outcome o;
  int runs = 0, chains = 0, cycle_chains = 0, longest = 0, violations = 0;
  std::string first;
  auto note = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };
  for (std::int64_t ell : kPrimes) {
    for (std::uint64_t seed = 0; seed < kSplitSeeds; ++seed) {
      auto [m, rd] = generate_random(seed, params_for(ell, seed, false));
      ++runs;
      const std::string tag = "l=" + std::to_string(ell) + " seed=" + std::to_string(seed);
      int prev = ram_betti(m, rd);
      std::optional<int> chain_start;
      int chain_len = 0;
      SplitOptions opt;
      opt.observer = [&](const Model& mm, const RamificationData& r, const BlowupStep& step) {
        const int b = ram_betti(mm, r);
        if (b > prev) note(tag + ": betti rose at " + step.location.str());
        const bool breaking = step.reason == BlowupReason::CycleBreak || step.reason == BlowupReason::ConnectingBreak;
        if (breaking) {
          if (!chain_start) chain_start = prev;
          ++chain_len;
          if (!step.exceptional_ramified) {
            ++chains;
            cycle_chains += step.reason == BlowupReason::CycleBreak;
            longest = std::max(longest, chain_len);
            // a connecting break cuts a bridge, so only cycle breaks must lower betti
            if (step.reason == BlowupReason::CycleBreak && b >= *chain_start)
              note(tag + ": chain at " + step.location.str() + " did not lower betti");
            if (chain_len > ell) note(tag + ": chain longer than l");
            chain_start.reset();
            chain_len = 0;
          }
        } else if (chain_start) {
          note(tag + ": chain interrupted");
        }
        prev = b;
      };
      try {
        split(m, rd, opt);
      } catch (const std::exception& e) {
        note(tag + ": " + e.what());
      }
      if (chain_start) note(tag + ": unfinished chain");
    }
  }
  // doubled neutral edge with values (v, n v): the chain from (1, n)
  int exhaustive = 0;
  for (std::int64_t ell = 2; ell <= kChainPrimeBound; ++ell) {
    if (!oracle::prime(ell)) continue;
    for (std::int64_t n = 1; n < ell; ++n) {
      ++exhaustive;
      Config c(ell);
      c.comp("A");
      c.comp("B");
      c.point("z1", "A", "B");
      c.point("z2", "A", "B");
      c.set("A", "z1", 0, c.gen("z1", "g"));
      c.set("B", "z1", 0, c.gen("z1", "g", n));
      c.set("A", "z2", 0, c.gen("z2", "h"));
      c.set("B", "z2", 0, c.gen("z2", "h"));
      SplitResult r = split(c.m, c.data());
      // later bipartite repairs of the full dual graph are not part of the chain
      std::vector<BlowupStep> steps;
      for (const auto& st : r.trace.steps)
        if (st.reason == BlowupReason::CycleBreak) steps.push_back(st);
      const std::string tag = "l=" + std::to_string(ell) + " n=" + std::to_string(n);
      if (static_cast<std::int64_t>(steps.size()) != oracle::mod(ell - n, ell)) note(tag + ": wrong chain length");
      for (std::size_t k = 0; k < steps.size(); ++k) {
        const std::int64_t want = oracle::mod(n + 1 + static_cast<std::int64_t>(k), ell);
        if (!steps[k].multiple || steps[k].multiple->value() != want) note(tag + ": wrong multiple");
        if ((want == 0) != !steps[k].exceptional_ramified) note(tag + ": chain did not stop at 0");
      }
      if (!r.report.passed()) note(tag + ": verification failed");
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(runs) + " runs, " + std::to_string(chains) + " chains (" + std::to_string(cycle_chains) + " cycle breaks, longest " +
             std::to_string(longest) + "), " + std::to_string(exhaustive) + " exhaustive chains, " +
             std::to_string(violations) + " violations" + (first.empty() ? "" : "; first: " + first);
  return o;
}

Outcome reciprocity() {
  Outcome o;
  int steps = 0, violations = 0;
  std::string first;
  for (std::uint64_t seed = 0; seed < kReciprocitySeeds; ++seed) {
    const std::int64_t ell = kPrimes[seed % kPrimes.size()];
    auto [m, rd] = generate_random(seed, params_for(ell, seed, false));
    SplitOptions opt;
    opt.even_padding = seed % 2 == 1;
    opt.observer = [&](const Model& mm, const RamificationData& r, const BlowupStep& step) {
      ++steps;
      if ((!validate_reciprocity(mm, r).empty() || !validate_model(mm).empty()) && violations++ == 0)
        first = "seed " + std::to_string(seed) + " after " + step.location.str();
    };
    try {
      split(m, rd, opt);
    } catch (const std::exception& e) {
      if (violations++ == 0) first = "seed " + std::to_string(seed) + ": " + e.what();
    }
  }
  o.pass = violations == 0 && steps > 0;
  o.detail = std::to_string(kReciprocitySeeds) + " runs, " + std::to_string(steps) + " blow-ups re-validated, " +
             std::to_string(violations) + " violations" + (first.empty() ? "" : "; first: " + first);
  return o;
}

Outcome certificates() {
  Outcome o;
  int certs = 0, sabotaged = 0, bad = 0;
  for (std::int64_t ell : kPrimes) {
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      GenParams p = params_for(ell, seed, false);
      p.cold_fraction = 0.75;
      auto [m, rd] = generate_random(seed, p);
      SplitResult r = split(m, rd);
      for (const auto& cert : r.psi.certificates) {
        ++certs;
        if (!glue_check(cert) || !glue_check(r.model, r.psi, cert.point)) ++bad;
        if (cert != cold_glue(r.model, r.rd, cert.point)) ++bad;
        const std::string field = residue_field(r.model, cert.point);
        for (int side = 0; side < 2; ++side) {
          for (std::int64_t k = 1; k < ell; ++k) {
            GluingCertificate s = cert;
            s.choice.coefficients[side] =
                s.choice.coefficients[side] + CharClass::generator(PrimeModulus(ell), {field, "unit"}, k);
            ++sabotaged;
            if (glue_check(s)) ++bad;
          }
        }
      }
    }
  }
  o.pass = bad == 0 && certs > 0;
  o.detail = std::to_string(certs) + " certificates, " + std::to_string(sabotaged) + " sabotaged, " +
             std::to_string(bad) + " wrong verdicts";
  return o;
}

// Library classification of an enumerated graph against the literal oracle.
bool decompositions_agree(const oracle::Graph& g) {
  oracle::Decomposition want = oracle::decompose(g);
  if (want.unnamed_piece) return false;
  Model m = model_of(g);
  Decomposition got = decompose(m, all_components(m));
  auto ids = [](const std::vector<std::set<int>>& parts) {
    std::set<std::set<ComponentId>> out;
    for (const auto& p : parts) {
      std::set<ComponentId> s;
      for (int v : p) s.insert(ComponentId("V" + std::to_string(v)));
      out.insert(s);
    }
    return out;
  };
  auto as_set = [](const std::vector<std::set<ComponentId>>& parts) {
    return std::set<std::set<ComponentId>>(parts.begin(), parts.end());
  };
  if (ids(want.isolated_trees) != as_set(got.isolated_trees) || ids(want.clusters) != as_set(got.cycle_clusters) ||
      ids(want.connecting_paths) != as_set(got.connecting_paths) || ids(want.tails) != as_set(got.tails))
    return false;
  auto edges = g.edge_list();
  auto point = got.point_roles.begin();
  if (got.point_roles.size() != edges.size()) return false;
  for (std::size_t i = 0; i < edges.size(); ++i, ++point) {
    const oracle::Role r = want.roles[i];
    if (r == oracle::Role::Unclassified) return false;
    if (static_cast<int>(r) != static_cast<int>(point->second)) return false;
  }
  return true;
}

// Betti number against the number of chordless cycles, literally.
Outcome census() {
  Outcome o;
  auto classes = oracle::multigraph_classes(kCensusVertices, kCensusEdges);
  std::size_t total = 0, formula_mismatch = 0, betti_mismatch = 0, span_mismatch = 0, decompose_mismatch = 0;
  std::string example;
  int example_edges = kCensusEdges + 1;
  for (const auto& level : classes) {
    for (const auto& g : level) {
      ++total;
      Model m = model_of(g);
      const int b = betti(m, all_components(m));
      if (b != oracle::betti(g)) ++formula_mismatch;
      const int cycles = static_cast<int>(oracle::chordless_cycles(g).size());
      if (b != cycles) {
        ++betti_mismatch;
        if (g.edges() < example_edges) {
          std::ostringstream s;
          s << "betti " << b << " vs " << cycles << " chordless cycles on edges";
          for (auto [u, v] : g.edge_list()) s << " " << u << "-" << v;
          example = s.str();
          example_edges = g.edges();
        }
      }
      if (b != oracle::chordless_span_rank(g)) ++span_mismatch;
      if (!decompositions_agree(g)) ++decompose_mismatch;
    }
  }
  o.pass = formula_mismatch == 0 && betti_mismatch == 0 && span_mismatch == 0 && decompose_mismatch == 0;
  std::ostringstream s;
  s << total << " multigraphs (<=" << kCensusVertices << " vertices, <=" << kCensusEdges << " edges): betti != census on "
    << betti_mismatch << ", betti != chordless span rank on " << span_mismatch << ", decompose mismatches "
    << decompose_mismatch;
  if (!example.empty()) s << "; e.g. " << example;
  o.detail = s.str();
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string reversed_keys(const std::string& text) {
  std::function<nlohmann::ordered_json(const io::Json&)> rev = [&](const io::Json& j) -> nlohmann::ordered_json {
    if (j.is_object()) {
      nlohmann::ordered_json out = nlohmann::ordered_json::object();
      std::vector<std::string> keys;
      for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
      for (auto k = keys.rbegin(); k != keys.rend(); ++k) out[*k] = rev(j.at(*k));
      return out;
    }
    if (j.is_array()) {
      nlohmann::ordered_json out = nlohmann::ordered_json::array();
      for (const auto& x : j) out.push_back(rev(x));
      return out;
    }
    return nlohmann::ordered_json(j);
  };
  return rev(io::Json::parse(text)).dump(1);
}

Outcome determinism() {
  Outcome o;
  int checks = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  std::vector<std::pair<std::string, std::string>> inputs;
  for (const char* name : {"hot_point", "cold_cycle", "neutral_cycle", "tree_horizontal", "connecting_path", "tail"})
    inputs.emplace_back(name, read_file(std::string(RAMSPLIT_FIXTURES) + "/" + name + ".json"));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    cli::SessionConfig g;
    g.command = "gen";
    g.seed = seed;
    g.gen = params_for(kPrimes[seed % kPrimes.size()], seed, seed % 3 == 0);
    cli::RunResult a = cli::run(g, {}), b = cli::run(g, {});
    ++checks;
    if (a.output != b.output || a.exit_code != 0) fail("gen seed " + std::to_string(seed));
    inputs.emplace_back("gen" + std::to_string(seed), a.output);
  }
  for (const auto& [name, text] : inputs) {
    const std::string permuted = reversed_keys(text);
    for (const char* cmd : {"validate", "classify", "index", "split", "decompose", "export-dot"}) {
      for (const char* fmt : {"json", "text", "dot"}) {
        cli::SessionConfig c;
        c.command = cmd;
        c.format = fmt;
        cli::RunResult a = cli::run(c, {text}), b = cli::run(c, {text}), p = cli::run(c, {permuted});
        ++checks;
        if (a.output != b.output || a.output != p.output || a.exit_code != p.exit_code)
          fail(name + " " + cmd + " " + fmt);
      }
    }
    // round trips
    io::Inputs in = io::read_inputs({text});
    ++checks;
    if (io::dump(io::bundle(*in.model, *in.alpha)) != text) fail(name + " bundle round trip");
    try {
      SplitResult r = split(*in.model, *in.alpha);
      const std::string dumped = io::dump(io::to_json(r));
      ++checks;
      if (io::dump(io::to_json(io::result_from_json(io::parse(dumped)))) != dumped) fail(name + " result round trip");
      ++checks;
      if (io::dump(io::to_json(io::result_from_json(io::parse(reversed_keys(dumped))))) != dumped)
        fail(name + " permuted result round trip");
    } catch (const IndexTooLarge&) {
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(checks) + " comparisons, " + std::to_string(bad) + " differences" +
             (first.empty() ? "" : "; first: " + first);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"end-to-end splitting", end_to_end},     {"hot point agreement", hot_agreement},
      {"betti reduction", betti_reduction},     {"reciprocity preservation", reciprocity},
      {"certificate soundness", certificates},  {"oracle equivalence", census},
      {"determinism and round trip", determinism}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i + 1)) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "c" << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
