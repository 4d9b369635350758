// Command-line front end: run the windmill, verify the windmill statement,
// sample-check the axiom systems, generate point sets, print the dyadic
// certificate.
//
// Exit codes: 0 success / statement holds, 1 verified false or violations
// found, 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "windmill/io.hpp"

namespace {

using namespace windmill;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct GenSpec {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t bound = 100;
};

GenSpec parse_gen_spec(const std::string& text) {
  GenSpec spec;
  bool have_n = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--gen: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoull(value);
        have_n = true;
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
      } else if (key == "bound") {
        spec.bound = std::stoll(value);
      } else {
        throw InputError("--gen: unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw InputError("--gen: bad value for '" + key + "'");
    }
  }
  if (!have_n) throw InputError("--gen: n is required");
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

struct InputOptions {
  std::string points;
  std::string gen;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--points", points, "points file (JSON lines)");
    auto* g = cmd->add_option("--gen", gen, "generator spec n=N,seed=S[,bound=B]");
    p->excludes(g);
  }

  std::vector<Point> raw() const {
    if (!points.empty() && !gen.empty()) throw InputError("give exactly one of --points and --gen");
    if (!points.empty()) return read_points(read_file(points));
    if (!gen.empty()) {
      const GenSpec spec = parse_gen_spec(gen);
      return gen_points(spec.n, spec.seed, spec.bound).points();
    }
    throw InputError("give exactly one of --points and --gen");
  }

  PointSet validated() const {
    if (!points.empty() && gen.empty()) return parse_points(read_file(points));
    return PointSet(raw());
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"windmill: exact windmill process, statement checker and axiom sampler"};
  app.require_subcommand(1);

  // run
  InputOptions run_in;
  std::string start_mode = "halving";
  std::size_t pivot = 0, other = 0;
  int south = 0;
  std::size_t max_steps = 0;
  std::string run_out, svg_out;
  auto* run_cmd = app.add_subcommand("run", "run the windmill and print the trace");
  run_in.add_to(run_cmd);
  run_cmd->add_option("--start", start_mode, "halving | halving-i | halving-ii | explicit")
      ->check(CLI::IsMember({"halving", "halving-i", "halving-ii", "explicit"}));
  run_cmd->add_option("--pivot", pivot, "explicit start: pivot label (1-based)");
  run_cmd->add_option("--other", other, "explicit start: other label (1-based)");
  run_cmd->add_option("--south", south, "explicit start: orient sign of the Southern side (-1 or 1)");
  run_cmd->add_option("--max-steps", max_steps, "step limit (default n(n-1)+1)");
  run_cmd->add_option("--out", run_out, "trace JSON path (default stdout)");
  run_cmd->add_option("--svg", svg_out, "also write an SVG figure");

  // verify-wm
  InputOptions wm_in;
  std::string witness_path, wm_out;
  auto* wm_cmd = app.add_subcommand("verify-wm", "decide the windmill statement for a point set");
  wm_in.add_to(wm_cmd);
  wm_cmd->add_option("--witness", witness_path, "check this witness instead of searching");
  wm_cmd->add_option("--out", wm_out, "result JSON path (default stdout)");

  // check-axioms
  std::size_t trials = 10000;
  std::uint64_t axiom_seed = 0;
  std::vector<std::string> axiom_names;
  std::string ax_out;
  auto* ax_cmd = app.add_subcommand("check-axioms", "sample-check A1-A6 and J1-J8");
  ax_cmd->add_option("--trials", trials, "instantiations per axiom")->check(CLI::PositiveNumber);
  ax_cmd->add_option("--seed", axiom_seed, "sampler seed");
  ax_cmd->add_option("--axiom", axiom_names, "restrict to these axioms (default all)");
  ax_cmd->add_option("--out", ax_out, "report JSON path (default stdout)");

  // gen
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::int64_t gen_bound = 100;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a general-position point set");
  gen_cmd->add_option("--n", gen_n, "number of points")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--bound", gen_bound, "coordinates are integers in [0, bound]");
  gen_cmd->add_option("--out", gen_out, "points file path (default stdout)");

  // dyadic
  std::string dy_out;
  auto* dy_cmd = app.add_subcommand("dyadic", "print the dyadic-plane separation certificate");
  dy_cmd->add_option("--out", dy_out, "certificate JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run_cmd) {
      const PointSet s = run_in.validated();
      const std::size_t n = s.size();
      Stop start{};
      bool halving = true;
      if (start_mode == "explicit") {
        if (pivot < 1 || pivot > n || other < 1 || other > n || (south != 1 && south != -1)) {
          throw InputError("explicit start needs --pivot, --other in 1..n and --south -1|1");
        }
        start = make_start(s, pivot - 1, other - 1, sign_from(south));
        halving = false;
      } else {
        start = halving_start(s, start_mode == "halving-ii" ? OddCase::II : OddCase::I);
      }
      const Trace t = run(s, start, max_steps ? max_steps : default_max_steps(n));
      const Json doc = trace_json(t, s, halving);
      write_output(run_out, doc.dump(2) + "\n");
      if (!svg_out.empty()) write_output(svg_out, emit_svg(t, s));
      return doc["report"]["violations"].empty() ? kOk : kFalse;
    }
    if (*wm_cmd) {
      const std::vector<Point> pts = wm_in.raw();
      Json doc;
      bool holds = false;
      if (!witness_path.empty()) {
        const PointSet s(pts);
        const Schedule w = parse_witness(read_file(witness_path));
        if (auto why = schedule_defect(w, s.size())) throw InputError("witness is not a schedule: " + *why);
        const auto failed = failing_conjunct(s, w);
        holds = !failed;
        doc["holds"] = holds;
        doc["method"] = "given";
        doc["witness"] = witness_json(w);
        doc["failing_conjunct"] = failed ? Json(*failed) : Json(nullptr);
      } else {
        const WmResult r = wm_eval(pts);
        holds = r.holds;
        doc = wm_json(r);
      }
      write_output(wm_out, doc.dump(2) + "\n");
      return holds ? kOk : kFalse;
    }
    if (*ax_cmd) {
      std::vector<Axiom> axioms;
      if (axiom_names.empty()) {
        axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
      } else {
        for (const auto& name : axiom_names) {
          try {
            axioms.push_back(parse_axiom(name));
          } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
          }
        }
      }
      Json doc;
      doc["seed"] = axiom_seed;
      doc["trials"] = trials;
      Json results = Json::array();
      std::vector<Violation> all;
      for (Axiom a : axioms) {
        const auto vs = check_axiom(a, axiom_seed, trials);
        results.push_back(Json{{"axiom", axiom_name(a)}, {"violations", vs.size()}});
        all.insert(all.end(), vs.begin(), vs.end());
      }
      doc["results"] = results;
      doc["violations"] = violations_json(all);
      write_output(ax_out, doc.dump(2) + "\n");
      return all.empty() ? kOk : kFalse;
    }
    if (*gen_cmd) {
      write_output(gen_out, format_points(gen_points(gen_n, gen_seed, gen_bound)));
      return kOk;
    }
    if (*dy_cmd) {
      const DyadicCertificate c = dyadic_counterexample();
      write_output(dy_out, certificate_json(c).dump(2) + "\n");
      return verify_certificate(c) ? kOk : kFalse;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidPointSet& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
