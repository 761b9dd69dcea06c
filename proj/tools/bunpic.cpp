#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bunpic/report.hpp"

using namespace bunpic;

namespace {

IntVector parse_int_list(const std::string& s, const char* what) {
  IntVector v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      v.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw InvalidSpec(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Picard groups, weight cokernels and Poincare bundles for moduli of G-bundles over families of curves"};
  std::string group, delta, family, lift_d, compute = "pi1", format = "text", batch;
  int genus = -1;
  long family_delta = 1;
  bool section = false, zariski = false, end_trivial = false, surjective = false, torsion_free = false;
  bool serial = false;

  app.add_option("--group", group, "group spec, e.g. \"GL(3)*T(1)\", or @datum.json");
  app.add_option("--delta", delta,
                 "class in pi_1(G) as comma-separated coordinates in the invariant-factor generators "
                 "(torsion first, then free), as echoed under delta.coords");
  app.add_option("--lift-d", lift_d, "explicit cocharacter lifting delta (comma-separated); default generic lift");
  app.add_option("--family", family, "preset:params (e.g. universal:2,1) or @family.json");
  app.add_option("--genus", genus, "raw family: genus (enables the raw flags below)");
  app.add_option("--family-delta", family_delta, "raw family: delta(C/S), 0 when not locally projective");
  app.add_flag("--section", section, "raw family: has a section");
  app.add_flag("--zariski", zariski, "raw family: Zariski locally trivial (genus 0)");
  app.add_flag("--end-trivial", end_trivial, "raw family: End(J) = Z at the geometric generic point");
  app.add_flag("--rpic-surjective", surjective, "raw family: Pic(C) -> Pic_{C/S}(S) onto");
  app.add_flag("--torsion-free", torsion_free, "raw family: RPic^0(C/S) torsion-free");
  app.add_option("--compute", compute, "comma list from pi1,forms,ns,picard,rigidified,gerbe,poincare");
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--batch", batch, "file with one run-config JSON per line; emits JSON lines");
  app.add_flag("--serial", serial, "process batch lines serially");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) {
      std::cerr << "cannot open " << batch << "\n";
      return 1;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    int worst = 0;
    for (const auto& o : run_batch(lines, serial ? Execution::Serial : Execution::Parallel)) {
      std::cout << o.report.dump() << "\n";
      worst = std::max(worst, static_cast<int>(o.code));
    }
    return worst;
  }

  RunConfig cfg;
  cfg.format = format;
  try {
    if (group.empty()) throw InvalidSpec("--group is required");
    cfg.group = group;
    if (!delta.empty()) cfg.delta = parse_int_list(delta, "--delta");
    if (!lift_d.empty()) cfg.lift_d = parse_int_list(lift_d, "--lift-d");
    if (!family.empty()) cfg.family_spec = family;
    if (genus >= 0) {
      if (!family.empty()) throw InvalidSpec("--family and raw family flags are exclusive");
      CurveFamily f;
      f.genus = genus;
      f.delta = family_delta;
      f.has_section = section;
      f.zariski_locally_trivial = zariski;
      f.end_jacobian_trivial = end_trivial;
      f.rpic_surjective = surjective;
      f.rpic0_torsion_free = torsion_free;
      f.label = "raw";
      cfg.family = f;
    }
    cfg.compute = split_list(compute);
  } catch (const InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  RunOutcome o = run_report(cfg);
  std::cout << render(o.report, cfg.format);
  if (o.code == ExitCode::InputError) std::cerr << "error: " << o.report["error"].get<std::string>() << "\n";
  return static_cast<int>(o.code);
}
