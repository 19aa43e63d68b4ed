// Prints one PASS/FAIL line per acceptance criterion. With --expect-fail
// a,b the exit status is 0 exactly when the listed criteria fail and all
// others pass; without it, 0 means everything passed.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "vkcurve/builder.hpp"
#include "vkcurve/canonical.hpp"
#include "vkcurve/document.hpp"
#include "vkcurve/fixtures.hpp"
#include "vkcurve/report.hpp"

using namespace vk;
using Terms = std::vector<int>;
using TermSet = std::set<Terms>;

namespace {

// Pinned limits.
constexpr double kSdnSeconds = 1.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kBudgetSeconds = 10.0;
constexpr int kRandomDiagrams = 1000;
constexpr int kRandomMaxFaces = 60;
constexpr int kMutationFixtures = 50;
constexpr int kBudgetMin = 11, kBudgetMax = 101;

int threads() {
  int hw = std::max(1u, std::thread::hardware_concurrency());
  if (char const* env = std::getenv("VKCURVE_THREADS")) hw = std::max(1, std::min(hw, std::atoi(env)));
  return hw;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Terms repeat(int value, int count) { return Terms(static_cast<std::size_t>(count), value); }

Terms concat(std::initializer_list<Terms> parts) {
  Terms out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string show(Terms const& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

std::string show(TermSet const& s) {
  std::string out;
  for (auto const& t : s) out += (out.empty() ? "" : " ") + show(t);
  return out.empty() ? "none" : out;
}

// Random diagrams with 1..60 faces over n = 11, 13, 15, spherically reduced.
std::vector<NamedFixture> const& random_fixtures() {
  static std::vector<NamedFixture> out = [] {
    std::vector<NamedFixture> v;
    int const t = threads();
    for (int s = 1; s <= kRandomDiagrams; ++s) {
      int n = 11 + 2 * (s % 3);
      auto d = spherically_reduce(random_diagram(static_cast<std::uint64_t>(s), 1 + s % kRandomMaxFaces, n), nullptr, t);
      v.push_back({"random-" + std::to_string(s), n, std::move(d)});
    }
    return v;
  }();
  return out;
}

std::vector<NamedFixture> const& suite() {
  static std::vector<NamedFixture> out = fixture_suite({11, 13, 15});
  return out;
}

std::vector<NamedFixture> all_fixtures() {
  auto out = suite();
  out.insert(out.end(), random_fixtures().begin(), random_fixtures().end());
  return out;
}

Outcome sdn_structure() {
  std::ostringstream detail;
  bool ok = true;
  for (int n : {11, 13, 15}) {
    auto t0 = std::chrono::steady_clock::now();
    auto d = build_sdn(n);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::multiset<int> degrees, want{n, n};
    for (VertexIdx v = 0; v < d.vertex_count(); ++v) degrees.insert(d.degree(v));
    for (int i = 0; i < 2 * n; ++i) want.insert(5);
    bool good = d.face_count() == 4 * n && d.vertex_count() == 2 * n + 2 && d.edge_count() == 6 * n &&
                degrees == want && secs < kSdnSeconds;
    ok &= good;
    detail << "n=" << n << " F=" << d.face_count() << " V=" << d.vertex_count() << " E=" << d.edge_count()
           << (good ? "" : " MISMATCH") << "; ";
  }
  return {ok, detail.str()};
}

Outcome oracle() {
  std::ostringstream detail;
  bool ok = true;
  auto t0 = std::chrono::steady_clock::now();
  for (int n : {11, 13}) {
    OracleOptions full;
    full.n = n;
    TermSet three;
    for (auto const& [c, list] : enumerate_angle_solutions(full)) {
      for (auto const& s : list) {
        if (s.terms.size() == 3) three.insert(s.terms);
      }
    }
    TermSet want3{{2, -1, -1}};

    OracleOptions pairs;
    pairs.n = n;
    pairs.max_outward_run = 2;
    pairs.max_inward_run = 3;
    TermSet two;
    auto pair_sols = enumerate_angle_solutions(pairs);
    for (auto const& s : pair_sols[2]) two.insert(s.terms);
    TermSet want2{canonical_terms({2, -1, -2, 1}), canonical_terms({2, 1, -2, -1}),
                  canonical_terms({2, -1, -1, -2, 1, 1}), canonical_terms({2, 1, 1, -2, -1, -1})};

    OracleOptions single;
    single.n = n;
    single.max_components = 1;
    single.max_outward_run = n;
    single.max_inward_run = n;
    std::map<int, TermSet> one;
    auto single_sols = enumerate_angle_solutions(single);
    for (auto const& s : single_sols[1]) one[s.inward].insert(s.terms);
    std::map<int, TermSet> want1{
        {2, {canonical_terms(concat({{1}, repeat(2, (n - 1) / 2)})), canonical_terms(concat({repeat(2, (n + 1) / 2), {-1}}))}},
        {3, {canonical_terms({1, 1, -2}), canonical_terms(concat({{1, 1}, repeat(2, n - 1)}))}},
        {4, {canonical_terms(concat({{1, 1, 1}, repeat(2, (n - 3) / 2)})),
             canonical_terms(concat({repeat(2, (n + 3) / 2), {-1, -1, -1}}))}},
    };

    auto compare = [&](char const* what, TermSet const& got, TermSet const& want) {
      TermSet missing, extra;
      std::ranges::set_difference(want, got, std::inserter(missing, missing.end()));
      std::ranges::set_difference(got, want, std::inserter(extra, extra.end()));
      if (missing.empty() && extra.empty()) return;
      ok = false;
      detail << "n=" << n << " " << what << ": missing " << show(missing) << ", extra " << show(extra) << "; ";
    };
    compare("3-term", three, want3);
    compare("d=2", two, want2);
    for (auto const& [inward, want] : want1) compare(("d=1 inward " + std::to_string(inward)).c_str(), one[inward], want);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= kOracleSeconds) {
    ok = false;
    detail << "too slow; ";
  }
  if (ok) detail << "all listed solutions found, no extras";
  return {ok, detail.str()};
}

Outcome colour_lemmas() {
  int checked = 0, bad = 0;
  std::string first_bad;
  auto check = [&](NamedFixture const& f) {
    ++checked;
    if (!check_color_lemmas(color_diagram(f.diagram)).ok()) {
      ++bad;
      if (first_bad.empty()) first_bad = f.name + " n=" + std::to_string(f.n);
    }
  };
  int stars = 0, disks = 0;
  for (auto const& f : suite()) {
    if (f.name.starts_with("star-")) ++stars;
    bool sdn_disk = f.name.starts_with("sdn-") && f.name != "sdn-minus-face";
    disks += sdn_disk;
    if (f.name.starts_with("star-") || sdn_disk) check(f);
  }
  for (auto const& f : random_fixtures()) check(f);

  // Every fixture in the suite, then random diagrams, up to 50 in total.
  std::vector<ColoredDiagram> sample;
  for (auto const& f : suite()) {
    if (static_cast<int>(sample.size()) < kMutationFixtures && is_spherically_reduced(f.diagram).reduced)
      sample.push_back(color_diagram(f.diagram));
  }
  for (std::uint64_t s = 1; static_cast<int>(sample.size()) < kMutationFixtures; ++s)
    sample.push_back(color_diagram(random_diagram(s, 40, 11)));
  long mutations = 0, missed = 0;
  for (auto const& cd : sample) {
    for (EdgeIdx e = 0; e < cd.base.edge_count(); ++e) {
      for (auto c : {EdgeColor::uncoloured, EdgeColor::blue, EdgeColor::green, EdgeColor::yellow}) {
        if (c == cd.color(e)) continue;
        auto m = cd;
        m.colors[e] = c;
        ++mutations;
        missed += check_color_lemmas(m).ok();
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " diagrams (" << stars << " stars, " << disks << " SDn disks, " << kRandomDiagrams
         << " random), " << bad << " with violations";
  if (!first_bad.empty()) detail << " e.g. " << first_bad;
  detail << "; " << mutations << " mutations on " << sample.size() << " fixtures, " << missed << " missed";
  return {bad == 0 && missed == 0 && stars > 0 && disks > 0, detail.str()};
}

Outcome yellow_bound() {
  int vertices = 0, bad = 0;
  for (auto const& f : all_fixtures()) {
    if (!is_spherically_reduced(f.diagram, threads()).reduced) continue;
    auto cd = color_diagram(f.diagram);
    for (VertexIdx v : long_outward_vertices(f.diagram)) {
      ++vertices;
      bad += !check_yellow_bound(cd, v).ok;
    }
  }
  auto violator = sdn_minus_face(11);
  auto cv = color_diagram(violator);
  bool broken = false;
  for (VertexIdx v : long_outward_vertices(violator)) broken |= !check_yellow_bound(cv, v).ok;
  bool flagged = !is_spherically_reduced(violator, threads()).reduced;
  std::ostringstream detail;
  detail << vertices << " long-run vertices, " << bad << " over the bound; violator breaks bound: "
         << (broken ? "yes" : "no") << ", flagged not spherically reduced: " << (flagged ? "yes" : "no");
  return {vertices > 0 && bad == 0 && broken && flagged, detail.str()};
}

Outcome replacement() {
  auto k4 = region25_fixture();
  auto k5 = spherically_reduce(k4, nullptr, threads());
  auto y4 = color_diagram(k4).count(EdgeColor::yellow), y5 = color_diagram(k5).count(EdgeColor::yellow);
  auto w4 = boundary_word(k4), w5 = boundary_word(k5);
  std::ostringstream detail;
  detail << "faces " << k4.face_count() << " -> " << k5.face_count() << ", word length " << w4.size()
         << (w4 == w5 ? " unchanged" : " CHANGED") << ", yellow " << y4 << " -> " << y5;
  bool ok = k4.face_count() == 25 && k5.face_count() == 19 && w4.size() == 13 && w4 == w5 && y4 == 6 && y5 == 2;
  return {ok, detail.str()};
}

Outcome budgets() {
  auto t0 = std::chrono::steady_clock::now();
  auto r = verify_budgets(kBudgetMin, kBudgetMax);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool big11 = std::ranges::any_of(r.equalities, [](auto const& c) { return c.name == "big" && c.n == 11; });
  std::map<std::string, int> by_name;
  for (auto const& c : r.equalities) ++by_name[c.name];
  std::ostringstream detail;
  detail << r.checked << " cases, " << r.failures.size() << " failures, " << r.equalities.size() << " equalities (";
  bool first = true;
  for (auto const& [name, count] : by_name) {
    detail << (first ? "" : ", ") << name << " " << count;
    first = false;
  }
  detail << "); expected exactly one equality, big at n=11";
  bool ok = r.ok() && big11 && r.equalities.size() == 1 && secs < kBudgetSeconds;
  return {ok, detail.str()};
}

Outcome floor_and_conservation() {
  int checked = 0, bad = 0;
  std::string first_bad;
  for (auto const& f : all_fixtures()) {
    if (!check_reduced(f.diagram).reduced || !is_spherically_reduced(f.diagram, threads()).reduced) continue;
    ++checked;
    auto r = distribute(f.diagram);
    bool good = r.pass && r.conserved() && std::ranges::all_of(r.corners, [&](auto const& c) { return c.total >= r.floor; });
    if (!good) {
      ++bad;
      if (first_bad.empty()) first_bad = f.name;
    }
  }
  std::ostringstream detail;
  detail << checked << " spherically reduced fixtures, " << bad << " failing";
  if (!first_bad.empty()) detail << " e.g. " << first_bad;
  return {checked > 0 && bad == 0, detail.str()};
}

Outcome certificates() {
  int checked = 0, bad = 0;
  for (auto const& f : all_fixtures()) {
    if (!check_reduced(f.diagram).reduced) continue;
    auto r = distribute(f.diagram);
    if (!r.pass) continue;
    ++checked;
    auto c = certificate(f.diagram, r);
    auto s = stats(f.diagram);
    std::int64_t const n = f.n;
    Rational const eps(1, 320 * n * n * n * n);
    bool corner = Rational(s.faces - 1) >= Rational(3 * (s.faces - s.boundary_faces)) * (Rational(1, 3) + eps / 3);
    bool area = s.area <= s.length * (1 + 320 * n * n * n * n) - 320 * n * n * n * n;
    bool good = c.holds && c.corner_holds && corner && area && c.epsilon == eps;
    bad += !good;
  }
  std::ostringstream detail;
  detail << checked << " passing fixtures, " << bad << " without a certificate";
  return {checked > 0 && bad == 0, detail.str()};
}

struct Proc {
  int status = -1;
  std::string out;
};

Proc run(std::string const& cmd) {
  Proc r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Outcome determinism(std::string const& cli) {
  int round_trips = 0, broken = 0;
  auto fixtures = all_fixtures();
  for (int n : {11, 13, 15}) fixtures.push_back({"sdn", n, build_sdn(n)});
  for (auto const& f : fixtures) {
    ++round_trips;
    auto text = emit_diagram_text(f.diagram);
    auto back = parse_diagram_text(text);
    broken += !isomorphic(back, f.diagram) || emit_diagram_text(back) != text;
  }

  auto dir = std::filesystem::temp_directory_path() / "vkcurve_acceptance";
  std::filesystem::create_directories(dir);
  auto file = (dir / "region25.json").string();
  std::ofstream(file, std::ios::binary) << emit_diagram_text(region25_fixture());
  int invocations = 0, differ = 0;
  for (std::string args : {"stats " + file, "color " + file, "classify " + file, "reduce " + file,
                           "curvature " + file + " --format text", "render " + file + " --color --format svg",
                           std::string("fixtures --type random --seed 3 --faces 40"), std::string("sdn --n 15"),
                           std::string("budgets --n-min 11 --n-max 31")}) {
    auto a = run(cli + " " + args), b = run("VKCURVE_THREADS=1 " + cli + " " + args);
    ++invocations;
    differ += a.status != b.status || a.out != b.out || a.out.empty();
  }
  std::ostringstream detail;
  detail << round_trips << " round trips, " << broken << " broken; " << invocations << " CLI invocations run twice, "
         << differ << " differing";
  return {broken == 0 && differ == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::string cli = VKCURVE_BIN;
  std::vector<int> expect_fail;
  app.add_option("--cli", cli, "Path to the vkcurve binary");
  app.add_option("--expect-fail", expect_fail, "Criteria known not to pass")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<char const*, std::function<Outcome()>>> criteria{
      {"SDn structure", sdn_structure},
      {"angle-sum oracle matches the listed solutions", oracle},
      {"colour lemmas and mutation detection", colour_lemmas},
      {"yellow bound on long outward runs", yellow_bound},
      {"25-face region replaced by 19 faces", replacement},
      {"budget sweep", budgets},
      {"corner floor and conservation", floor_and_conservation},
      {"isoperimetric certificate", certificates},
      {"round trips and byte-identical CLI output", [&] { return determinism(cli); }},
  };

  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  bool as_expected = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int const id = static_cast<int>(i) + 1;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s [%.2f s]\n    %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                o.detail.c_str());
    std::fflush(stdout);
    as_expected &= o.pass != expected.contains(id);
  }
  return as_expected ? 0 : 1;
}
