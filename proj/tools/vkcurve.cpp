#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "vkcurve/builder.hpp"
#include "vkcurve/document.hpp"
#include "vkcurve/fixtures.hpp"
#include "vkcurve/render.hpp"
#include "vkcurve/report.hpp"

using namespace vk;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::string out;
  std::string format;
  int n = 0;
  int n_min = 11, n_max = 101;
  std::string type;
  bool list = false;
  std::uint64_t seed = 0;
  int faces = 0;
  int max_degree = 0;
  int max_components = 2;
  bool color = false;
};

int threads() {
  int hw = std::max(1u, std::thread::hardware_concurrency());
  if (char const* env = std::getenv("VKCURVE_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1) return std::min(cap, hw);
    } catch (std::exception const&) {
    }
    throw InputError("VKCURVE_THREADS must be a positive integer");
  }
  return hw;
}

void check_n(int n) {
  if (n < 11 || n % 2 == 0) throw InputError("n must be odd and >= 11");
}

Diagram load(Config const& cfg) {
  std::string text;
  if (cfg.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(cfg.input, std::ios::binary);
    if (!in) throw InputError("cannot read " + cfg.input);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  Diagram d = parse_diagram_text(text);
  if (cfg.n) {
    check_n(cfg.n);
    if (cfg.n != d.n()) throw InputError("--n " + std::to_string(cfg.n) + " does not match the document");
  }
  return d;
}

Diagram load_disk(Config const& cfg) {
  Diagram d = load(cfg);
  if (!d.is_disk()) throw InputError("this command needs a disk diagram");
  return d;
}

void emit(Config const& cfg, std::string const& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw InputError("cannot write " + cfg.out);
  out << text;
}

void emit(Config const& cfg, Json const& j) {
  emit(cfg, cfg.format == "text" ? to_text(j) : j.dump(2) + "\n");
}

Json failure(std::string const& what) {
  Json j;
  j["error"] = what;
  return j;
}

ColoredDiagram colored(Diagram d) {
  auto red = check_reduced(d);
  if (!red.reduced) throw InputError("diagram is not reduced");
  return color_diagram(std::move(d));
}

int cmd_validate(Config const& cfg) {
  Diagram d = load(cfg);
  Json j;
  j["valid"] = true;
  j["n"] = d.n();
  j["surface"] = d.is_disk() ? "disk" : "sphere";
  j["reduced"] = check_reduced(d).reduced;
  emit(cfg, j);
  return kPass;
}

int cmd_stats(Config const& cfg) {
  emit(cfg, stats_json(load(cfg)));
  return kPass;
}

int cmd_color(Config const& cfg) {
  auto cd = colored(load_disk(cfg));
  auto rep = check_color_lemmas(cd);
  emit(cfg, colored_document(cd));
  if (!rep.ok()) {
    std::cerr << color_report_json(cd, rep).dump(2) << '\n';
    return kFail;
  }
  return kPass;
}

int cmd_classify(Config const& cfg) {
  auto cd = colored(load_disk(cfg));
  auto cls = classify_all(cd);
  auto layers = check_layer_connectivity(cd);
  emit(cfg, classification_json(cd, cls, layers));
  return cls.total() && layers.ok() ? kPass : kFail;
}

int cmd_reduce(Config const& cfg) {
  Diagram k = load_disk(cfg);
  if (!check_reduced(k).reduced) throw InputError("diagram is not reduced");
  int const t = threads();
  auto before = is_spherically_reduced(k, t);
  ReductionTrace trace;
  Diagram r = spherically_reduce(k, &trace, t);
  Json j;
  j["spherically_reduced"] = before.reduced;
  j["witness"] = before.witness ? match_json(k, *before.witness) : Json(nullptr);
  j["face_counts"] = trace.face_counts;
  j["diagram"] = emit_diagram(r);
  emit(cfg, j);
  return kPass;
}

int cmd_sdn(Config const& cfg) {
  check_n(cfg.n);
  emit(cfg, emit_diagram_text(build_sdn(cfg.n)));
  return kPass;
}

int cmd_curvature(Config const& cfg) {
  Diagram k = load_disk(cfg);
  if (!check_reduced(k).reduced) throw InputError("diagram is not reduced");
  auto r = distribute(k);
  emit(cfg, curvature_json(k, r));
  return r.pass ? kPass : kFail;
}

int cmd_certify(Config const& cfg) {
  Diagram k = load_disk(cfg);
  if (!check_reduced(k).reduced) throw InputError("diagram is not reduced");
  auto r = distribute(k);
  if (!r.pass) {
    Json j = failure("curvature distribution did not pass");
    j["deficits"] = r.deficits.size();
    j["problems"] = r.problems;
    emit(cfg, j);
    return kFail;
  }
  auto c = certificate(k, r);
  emit(cfg, certificate_json(c));
  return c.holds && c.corner_holds ? kPass : kFail;
}

int cmd_budgets(Config const& cfg) {
  if (cfg.n_min < 11 || cfg.n_max < cfg.n_min) throw InputError("need 11 <= n-min <= n-max");
  auto r = verify_budgets(cfg.n_min, cfg.n_max);
  emit(cfg, budgets_json(r));
  return r.ok() ? kPass : kFail;
}

int cmd_fixtures(Config const& cfg) {
  if (cfg.list) {
    std::string text;
    for (auto const& name : fixture_names()) text += name + "\n";
    text += "random\n";
    emit(cfg, text);
    return kPass;
  }
  int const n = cfg.n ? cfg.n : 11;
  if (cfg.type.empty()) throw InputError("--type is required");
  if (cfg.type == "random") {
    check_n(n);
    if (cfg.faces < 1) throw InputError("--faces must be positive");
    emit(cfg, emit_diagram_text(random_diagram(cfg.seed, cfg.faces, n)));
    return kPass;
  }
  try {
    emit(cfg, emit_diagram_text(make_fixture(cfg.type, n)));
  } catch (std::invalid_argument const& e) {
    throw InputError(e.what());
  }
  return kPass;
}

int cmd_oracle(Config const& cfg) {
  check_n(cfg.n);
  if (cfg.max_degree < 0 || cfg.max_components < 0) throw InputError("bounds must be non-negative");
  OracleOptions opts;
  opts.n = cfg.n;
  opts.max_degree = cfg.max_degree;
  opts.max_components = cfg.max_components;
  emit(cfg, oracle_rows(enumerate_angle_solutions(opts)));
  return kPass;
}

int cmd_render(Config const& cfg) {
  Diagram d = load(cfg);
  std::optional<ColoredDiagram> cd;
  if (cfg.color) cd = colored(d);
  ColoredDiagram const* c = cd ? &*cd : nullptr;
  if (cfg.format == "svg" && d.is_disk()) {
    emit(cfg, render_svg(d, c));
  } else {
    if (cfg.format == "svg") std::cerr << "sphere: no planar layout, writing DOT\n";
    emit(cfg, render_dot(d, c));
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature and colouring checks for van Kampen diagrams"};
  app.require_subcommand(1);
  Config cfg;
  auto formats = CLI::IsMember({"report-json", "text", "dot", "svg"});

  auto file_cmd = [&](char const* name, char const* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", cfg.input, "Interchange document, or - for stdin")->required();
    sub->add_option("--n", cfg.n, "Expected generator count");
    sub->add_option("--out", cfg.out, "Write the output here instead of stdout");
    sub->add_option("--format", cfg.format, "report-json or text")->check(formats);
    return sub;
  };

  std::map<CLI::App*, int (*)(Config const&)> run;
  run[file_cmd("validate", "Check that a document describes a valid diagram")] = cmd_validate;
  run[file_cmd("stats", "Counts, area, length and boundary word")] = cmd_stats;
  run[file_cmd("color", "Colour the diagram and check the colour lemmas")] = cmd_color;
  run[file_cmd("classify", "Type, layer and run profile of every vertex")] = cmd_classify;
  run[file_cmd("reduce", "Replace large subdiagrams of SDn until none is left")] = cmd_reduce;
  run[file_cmd("curvature", "Distribute curvature and report every corner")] = cmd_curvature;
  run[file_cmd("certify", "Isoperimetric certificate for a passing diagram")] = cmd_certify;
  auto* render = file_cmd("render", "DOT or SVG drawing");
  render->add_flag("--color", cfg.color, "Colour edges by the colour rules");
  run[render] = cmd_render;

  auto* sdn = app.add_subcommand("sdn", "Emit the spherical diagram SDn");
  sdn->add_option("--n", cfg.n, "Generator count")->required();
  sdn->add_option("--out", cfg.out, "Write the document here");
  run[sdn] = cmd_sdn;

  auto* budgets = app.add_subcommand("budgets", "Check every component budget over a range of n");
  budgets->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str();
  budgets->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
  budgets->add_option("--out", cfg.out, "Write the report here");
  budgets->add_option("--format", cfg.format, "report-json or text")->check(formats);
  run[budgets] = cmd_budgets;

  auto* fixtures = app.add_subcommand("fixtures", "Emit a named fixture diagram");
  fixtures->add_option("--type", cfg.type, "Fixture name, or random");
  fixtures->add_option("--n", cfg.n, "Generator count (default 11)");
  fixtures->add_option("--seed", cfg.seed, "Seed for random");
  fixtures->add_option("--faces", cfg.faces, "Face count for random");
  fixtures->add_flag("--list", cfg.list, "List fixture names");
  fixtures->add_option("--out", cfg.out, "Write the document here");
  run[fixtures] = cmd_fixtures;

  auto* oracle = app.add_subcommand("oracle", "Enumerate angle-sum solutions by brute force");
  oracle->add_option("--n", cfg.n, "Generator count")->required();
  oracle->add_option("--max-degree", cfg.max_degree, "Largest degree (0 means 2n + 2)");
  oracle->add_option("--max-components", cfg.max_components, "Most outward/inward run pairs")->capture_default_str();
  oracle->add_option("--out", cfg.out, "Write the rows here");
  run[oracle] = cmd_oracle;

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInput;
  }

  try {
    for (auto const& [sub, fn] : run) {
      if (sub->parsed()) return fn(cfg);
    }
  } catch (InputError const& e) {
    std::cerr << "vkcurve: " << e.what() << '\n';
  } catch (DiagramError const& e) {
    std::cerr << "vkcurve: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (std::invalid_argument const& e) {
    std::cerr << "vkcurve: " << e.what() << '\n';
  } catch (nlohmann::json::exception const& e) {
    std::cerr << "vkcurve: " << e.what() << '\n';
  }
  return kInput;
}
