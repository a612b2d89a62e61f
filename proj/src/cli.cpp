#include "ramsplit/cli.hpp"

#include <iomanip>
#include <sstream>

#include "ramsplit/engine.hpp"
#include "ramsplit/errors.hpp"
#include "ramsplit/io.hpp"

namespace ramsplit::cli {

namespace {

using io::Json;

struct Failure {
  int code;
  Json body;
  std::string text;
};

Failure error_body(const std::string& command, int code, const std::string& kind, const std::string& message) {
  return {code, {{"command", command}, {"error", kind}, {"message", message}}, kind + ": " + message + "\n"};
}

class Session {
 public:
  Session(const SessionConfig& c, const std::vector<std::string>& inputs) : c_(c), inputs_(inputs) {}

  RunResult dispatch();

 private:
  const Model& model() {
    load();
    if (!in_.model) throw SchemaError("input: no model given");
    return *in_.model;
  }
  RamificationData alpha() {
    load();
    if (in_.alpha) return *in_.alpha;
    if (in_.model) return RamificationData(in_.model->modulus());
    throw SchemaError("input: no ramification data given");
  }
  void load() {
    if (!loaded_) {
      in_ = io::read_inputs(inputs_);
      loaded_ = true;
    }
  }

  RunResult emit(const Json& j, const std::string& text, const std::string& dot, int code = kExitOk) {
    if (c_.format == "text") return {code, text};
    if (c_.format == "dot") return {code, dot};
    return {code, io::dump(j)};
  }

  RunResult validate();
  RunResult classify_cmd();
  RunResult index_cmd();
  RunResult split_cmd();
  RunResult blowup_cmd();
  RunResult decompose_cmd();
  RunResult gen_cmd();
  RunResult export_dot_cmd();

  const SessionConfig& c_;
  const std::vector<std::string>& inputs_;
  io::Inputs in_;
  bool loaded_ = false;
};

Json violations_json(const std::vector<Violation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back({{"kind", to_string(v.kind)}, {"subject", v.subject}, {"detail", v.detail}});
  return out;
}

RunResult Session::validate() {
  const Model& m = model();
  std::vector<Violation> vs = validate_model(m);
  if (vs.empty() && in_.alpha) vs = validate_reciprocity(m, *in_.alpha);
  std::ostringstream text;
  text << (vs.empty() ? "valid\n" : "invalid\n");
  for (const auto& v : vs) text << "  " << to_string(v) << "\n";
  Json j = {{"command", "validate"}, {"valid", vs.empty()}, {"violations", violations_json(vs)}};
  return emit(j, text.str(), io::export_dot(m, in_.alpha ? &*in_.alpha : nullptr), vs.empty() ? kExitOk : kExitInvalid);
}

RunResult Session::classify_cmd() {
  const Model& m = model();
  RamificationData rd = alpha();
  require_valid(m, rd);
  std::vector<PointClass> classes;
  if (c_.point) {
    classes.push_back(classify_point(m, rd, LocationId(*c_.point)));
  } else {
    for (const auto& meeting : doubly_ramified(m, rd)) classes.push_back(classify(meeting));
  }
  Json points = Json::object();
  std::ostringstream text;
  for (const auto& pc : classes) {
    Json ratio = pc.ratio ? Json(pc.ratio->value()) : Json(nullptr);
    points[pc.witness.at.str()] = {
        {"kind", to_string(pc.kind)}, {"first", pc.witness.first}, {"second", pc.witness.second}, {"ratio", ratio}};
    text << pc.witness.at.str() << "  " << to_string(pc.kind) << "  " << pc.witness.first << " / "
         << pc.witness.second;
    if (pc.ratio) text << "  n=" << pc.ratio->value();
    text << "\n";
  }
  return emit({{"command", "classify"}, {"points", points}}, text.str(), io::export_dot(m, &rd));
}

RunResult Session::index_cmd() {
  const Model& m = model();
  RamificationData rd = alpha();
  IndexReport r = index_criterion(m, rd);
  std::string verdict = r.verdict == IndexVerdict::EllSquared ? "ℓ²" : r.verdict == IndexVerdict::Ell ? "ℓ" : "1";
  Json witness = r.witness ? Json(r.witness->str()) : Json(nullptr);
  Json j = {{"command", "index"}, {"ell", rd.modulus().ell()}, {"verdict", verdict}, {"witness", witness}};
  std::string text = "index " + verdict + " (ℓ=" + std::to_string(rd.modulus().ell()) + ")";
  if (r.witness) text += ", hot point " + r.witness->str();
  return emit(j, text + "\n", io::export_dot(m, &rd),
              r.verdict == IndexVerdict::EllSquared ? kExitIndexTooLarge : kExitOk);
}

std::string split_text(const SplitResult& r) {
  std::ostringstream os;
  os << "split: " << (r.report.passed() ? "passed" : "FAILED") << " (ℓ=" << r.rd.modulus().ell() << ", "
     << r.trace.steps.size() << " blow-ups, " << r.psi.certificates.size() << " gluing certificates)\n";
  if (!r.trace.steps.empty()) {
    os << "\nblow-ups\n";
    int i = 0;
    for (const auto& s : r.trace.steps) {
      os << std::setw(4) << ++i << "  " << std::left << std::setw(18) << to_string(s.reason) << std::setw(16)
         << s.location.str() << std::setw(6) << s.exceptional.str() << (s.exceptional_ramified ? "ramified" : "unramified");
      if (s.multiple) os << "  multiple " << s.multiple->value();
      os << std::right << "\n";
    }
  }
  os << "\nverification\n";
  os << std::left << std::setw(12) << "divisor" << std::setw(12) << "type" << std::setw(8) << "case" << std::setw(4)
     << "e" << std::setw(8) << "killed" << "trace\n";
  for (const auto& e : r.report.entries) {
    std::string cs(1, e.tree_case);
    if (e.general_case) cs = *e.general_case + "/" + cs;
    os << std::setw(12) << e.divisor << std::setw(12) << (e.vertical ? "vertical" : "horizontal") << std::setw(8) << cs
       << std::setw(4) << e.e << std::setw(8) << (e.residue_killed ? "yes" : "NO") << e.trace << "\n";
  }
  os << std::right;
  for (const auto& z : r.report.glue_failures) os << "glue failure at " << z.str() << "\n";
  return os.str();
}

RunResult Session::split_cmd() {
  SplitOptions options;
  options.even_padding = c_.even_padding;
  SplitResult r = split(model(), alpha(), options);
  return emit(io::to_json(r), split_text(r), io::export_dot(r.model, &r.rd),
              r.report.passed() ? kExitOk : kExitFailure);
}

RunResult Session::blowup_cmd() {
  if (!c_.point) throw std::invalid_argument("blowup needs --at <location>");
  const Model& m = model();
  RamificationData rd = normalized(m, alpha());
  require_valid(m, rd);
  ResidueBlowup b = blowup_residue(m, rd, LocationId(*c_.point));
  Json j = io::bundle(b.model, b.rd);
  Json side = Json::object();
  for (const auto& [c, p] : b.map.side_points) side[c.str()] = p.str();
  j["blowup"] = {{"center", b.map.center.str()},
                 {"exceptional", b.map.exceptional.str()},
                 {"exceptional_ramified", b.exceptional_ramified},
                 {"multiple", b.multiple ? Json(b.multiple->value()) : Json(nullptr)},
                 {"side_points", side}};
  std::ostringstream text;
  text << "blew up " << b.map.center.str() << ": " << b.map.exceptional.str() << " "
       << (b.exceptional_ramified ? "ramified" : "unramified");
  if (b.multiple) text << ", multiple " << b.multiple->value();
  text << "\n";
  return emit(j, text.str(), io::export_dot(b.model, &b.rd));
}

RunResult Session::decompose_cmd() {
  const Model& m = model();
  RamificationData rd = alpha();
  require_valid(m, rd);
  const auto ram = rd.ramified_components();
  Decomposition d = decompose(m, ram);
  const int b = betti(m, ram);
  std::ostringstream text;
  text << "betti " << b << "\n";
  auto list = [&](const char* name, const std::vector<std::set<ComponentId>>& groups) {
    for (const auto& g : groups) {
      text << name << ":";
      for (const auto& c : g) text << " " << c.str();
      text << "\n";
    }
  };
  list("isolated tree", d.isolated_trees);
  list("cycle cluster", d.cycle_clusters);
  list("connecting path", d.connecting_paths);
  list("tail", d.tails);
  for (const auto& [z, r] : d.point_roles) text << z.str() << "  " << to_string(r) << "\n";
  return emit({{"command", "decompose"}, {"betti", b}, {"decomposition", io::to_json(d)}}, text.str(),
              io::export_dot(m, &rd));
}

RunResult Session::gen_cmd() {
  auto [m, rd] = generate_random(c_.seed, c_.gen);
  std::ostringstream text;
  text << "generated " << m.components().size() << " components, " << m.points().size() << " points, "
       << rd.ramified_components().size() << " ramified, betti " << betti(m, rd.ramified_components()) << "\n";
  return emit(io::bundle(m, rd), text.str(), io::export_dot(m, &rd));
}

RunResult Session::export_dot_cmd() {
  const Model& m = model();
  load();
  return {kExitOk, io::export_dot(m, in_.alpha ? &*in_.alpha : nullptr)};
}

RunResult Session::dispatch() {
  const std::string& cmd = c_.command;
  if (cmd == "validate") return validate();
  if (cmd == "classify") return classify_cmd();
  if (cmd == "index") return index_cmd();
  if (cmd == "split") return split_cmd();
  if (cmd == "blowup") return blowup_cmd();
  if (cmd == "decompose") return decompose_cmd();
  if (cmd == "gen") return gen_cmd();
  if (cmd == "export-dot") return export_dot_cmd();
  throw std::invalid_argument("unknown command " + cmd);
}

}  // namespace

RunResult run(const SessionConfig& config, const std::vector<std::string>& inputs) {
  Failure f{kExitFailure, nullptr, ""};
  const std::string& cmd = config.command;
  if (config.format != "json" && config.format != "text" && config.format != "dot") {
    f = error_body(cmd, kExitFailure, "Usage", "unknown format " + config.format);
  } else {
    try {
      return Session(config, inputs).dispatch();
    } catch (const IndexTooLarge& e) {
      f = error_body(cmd, kExitIndexTooLarge, "IndexTooLarge", e.what());
      f.body["witness"] = e.witness();
    } catch (const ValidationError& e) {
      f = error_body(cmd, kExitInvalid, "ValidationError", "input is not valid");
      f.body["violations"] = e.messages();
      for (const auto& m : e.messages()) f.text += "  " + m + "\n";
    } catch (const SchemaError& e) {
      f = error_body(cmd, kExitInvalid, "SchemaError", e.what());
    } catch (const std::invalid_argument& e) {
      f = error_body(cmd, kExitFailure, "Usage", e.what());
    } catch (const Error& e) {
      f = error_body(cmd, kExitFailure, "Error", e.what());
    }
  }
  if (config.format == "text" || config.format == "dot") return {f.code, f.text};
  return {f.code, io::dump(f.body)};
}

}  // namespace ramsplit::cli
