#include "bunpic/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bunpic/group_spec.hpp"

namespace bunpic {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidSpec(path + ": " + e.what());
  }
}

IntVector int_vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidSpec(std::string(what) + " must be an array of integers");
  IntVector v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.emplace_back(x.get<long>());
    else if (x.is_string())
      v.emplace_back(x.get<std::string>());
    else
      throw InvalidSpec(std::string(what) + " must be an array of integers");
  }
  return v;
}

json opt_group(const std::optional<FGAbelianGroup>& g) { return g ? group_json(*g) : json(nullptr); }
json opt_int(const std::optional<Int>& x) { return x ? int_json(*x) : json(nullptr); }

json form_lattice_json(const FormLattice& f) {
  json j;
  j["coordinate_system"] = f.coordinate_system == FormCoordinates::Sym2 ? "sym2" : "basic_forms";
  j["ambient_rank"] = f.ambient_rank;
  j["rank"] = f.rank();
  j["coordinates"] = lattice_json(f.coordinates);
  json forms = json::array();
  for (const auto& b : f.basis_forms) forms.push_back(matrix_json(b));
  j["basis_forms"] = forms;
  return j;
}

json ns_json(const NSGroup& ns) {
  json j;
  j["coordinates"] = ns.coordinates;
  j["chi_rank"] = ns.chi_rank;
  j["form_rank"] = ns.form_rank;
  j["lattice"] = lattice_json(ns.lattice);
  j["group"] = group_json(ns.group);
  return j;
}

struct ResolvedGroup {
  ReductiveGroupData data;
  json echo;
};

ResolvedGroup resolve_group(const RunConfig& cfg) {
  ResolvedGroup r;
  r.echo["spec"] = cfg.group;
  if (cfg.group_datum) {
    r.data = root_datum_from_json(*cfg.group_datum);
    r.echo["source"] = "inline_datum";
  } else if (!cfg.group.empty() && cfg.group[0] == '@') {
    r.data = root_datum_from_json(read_json_file(cfg.group.substr(1)));
    r.echo["source"] = "datum_file";
  } else {
    GroupSpec spec = parse_group_spec(cfg.group);
    r.data = build_group(spec);
    r.echo["source"] = "spec";
    r.echo["canonical"] = spec.to_string();
  }
  r.echo["label"] = r.data.label;
  r.echo["cochar_rank"] = r.data.cochar_rank;
  r.echo["semisimple_rank"] = r.data.semisimple_rank();
  json types = json::array();
  for (const auto& t : r.data.factor_types) types.push_back(t.name());
  r.echo["factors"] = types;
  r.echo["derived_simply_connected"] = derived_simply_connected(r.data);
  return r;
}

std::optional<CurveFamily> resolve_family(const RunConfig& cfg) {
  if (cfg.family) return cfg.family;
  if (!cfg.family_spec) return std::nullopt;
  const std::string& s = *cfg.family_spec;
  if (!s.empty() && s[0] == '@') return family_from_json(read_json_file(s.substr(1)));
  return family_from_string(s);
}

bool wants(const RunConfig& cfg, const std::string& name) {
  return std::find(cfg.compute.begin(), cfg.compute.end(), name) != cfg.compute.end();
}

json input_error(const std::string& msg) {
  json j;
  j["status"] = "input_error";
  j["exit_code"] = static_cast<int>(ExitCode::InputError);
  j["error"] = msg;
  return j;
}

void render_node(const json& j, const std::string& prefix, std::ostringstream& out) {
  const bool group_like = j.is_object() && j.size() == 2 && j.contains("free_rank") && j.contains("torsion");
  if (group_like) {
    IntVector t = int_vector_from_json(j["torsion"], "torsion");
    FGAbelianGroup g;
    g.free_rank = j["free_rank"].get<std::size_t>();
    g.torsion = t;
    out << prefix << ": " << g.to_string() << "\n";
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_node(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_node(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

const std::vector<std::string>& computation_names() {
  static const std::vector<std::string> names{"pi1", "forms", "ns", "picard", "rigidified", "gerbe", "poincare"};
  return names;
}

json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json vector_json(const IntVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(int_json(x));
  return j;
}

json matrix_json(const IntMatrix& m) {
  json j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_json(m.row(i)));
  return j;
}

json group_json(const FGAbelianGroup& g) {
  json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = vector_json(g.torsion);
  return j;
}

json lattice_json(const Lattice& l) {
  json j;
  j["ambient_rank"] = l.ambient_rank();
  json b = json::array();
  for (std::size_t c = 0; c < l.rank(); ++c) b.push_back(vector_json(l.basis().column(c)));
  j["basis"] = b;
  return j;
}

json hypothesis_json(const HypothesisResult& h) {
  json j;
  j["theorem"] = gate_name(h.gate);
  j["satisfied"] = h.satisfied;
  j["missing"] = h.missing;
  return j;
}

json picard_json(const PicardReport& r) {
  json j;
  j["kind"] = r.kind;
  j["hypotheses"] = r.hypotheses ? hypothesis_json(*r.hypotheses) : json(nullptr);
  json rows = json::array();
  for (const auto& row : r.rows) {
    json x;
    x["sub"] = row.sub;
    x["quotient"] = row.quotient;
    x["quotient_group"] = group_json(row.quotient_group);
    x["onto"] = row.onto;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["kernel_summand"] = r.kernel_summand;
  if (r.image) {
    json im;
    im["ambient"] = r.image->ambient;
    im["ambient_lattice"] = lattice_json(r.image->ambient_lattice);
    im["relations"] = lattice_json(Lattice::from_generators(r.image->relations.rows(), r.image->relations));
    im["ambient_group"] = group_json(r.image->ambient_group);
    im["image"] = lattice_json(r.image->image);
    im["image_group"] = group_json(r.image->image_group);
    im["cokernel"] = group_json(r.image->cokernel);
    j["image"] = im;
  } else {
    j["image"] = nullptr;
  }
  j["cokernel_of"] = r.cokernel_of;
  j["cokernel"] = group_json(r.cokernel);
  j["splitting_known"] = r.splitting_known;
  j["tautological_complete"] = r.tautological_complete ? json(*r.tautological_complete) : json(nullptr);
  json forms = json::array();
  for (const auto& f : r.generator_forms) forms.push_back(matrix_json(f));
  j["generator_forms"] = forms;
  j["notes"] = r.notes;
  return j;
}

json gerbe_json(const GerbeReport& r) {
  json j;
  j["kind"] = r.kind;
  j["hypotheses"] = r.hypotheses ? hypothesis_json(*r.hypotheses) : json(nullptr);
  j["cocharacter"] = vector_json(r.cocharacter);
  j["evaluation_cokernel"] = group_json(r.ev_cokernel);
  j["cover_evaluation_cokernel"] = group_json(r.cover_ev_cokernel);
  j["coker_gamma_bar"] = opt_group(r.coker_gamma_bar);
  j["dbar_image"] = opt_group(r.dbar_image);
  j["hom_group"] = group_json(r.hom_group);
  json wt;
  wt["exact"] = r.coker_wt_exact;
  wt["group"] = opt_group(r.coker_wt);
  json pieces;
  pieces["sub"] = group_json(r.pieces.sub);
  pieces["quotient"] = group_json(r.pieces.quotient);
  pieces["total_order"] = opt_int(r.pieces.total_order);
  wt["graded_pieces"] = pieces;
  j["coker_wt"] = wt;
  j["poincare_exists"] = r.poincare_exists ? json(*r.poincare_exists) : json(nullptr);
  json cert;
  cert["coker_gamma_bar_order"] = opt_int(r.certificate.coker_gamma_bar_order);
  cert["dbar_image_order"] = opt_int(r.certificate.dbar_image_order);
  cert["hom_order"] = opt_int(r.certificate.hom_order);
  cert["coker_wt_order"] = opt_int(r.certificate.coker_wt_order);
  cert["evaluation_cokernel_order"] = opt_int(r.certificate.ev_cokernel_order);
  cert["injective_check"] = r.certificate.injective_check;
  cert["order_check"] = r.certificate.order_check;
  j["certificate"] = cert;
  if (r.closed_form) {
    json c;
    c["divisibility"] = int_json(r.closed_form->divisibility);
    c["coker_wt_formula"] = group_json(r.closed_form->coker_wt_formula);
    c["coker_gamma_bar_formula"] = group_json(r.closed_form->coker_gamma_bar_formula);
    c["coker_wt_matches"] = r.closed_form->coker_wt_matches;
    c["coker_gamma_bar_matches"] = r.closed_form->coker_gamma_bar_matches;
    j["closed_form"] = c;
  } else {
    j["closed_form"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

RunConfig run_config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("run config must be a JSON object");
  RunConfig cfg;
  try {
    if (!j.contains("group")) throw InvalidSpec("run config needs \"group\"");
    if (j["group"].is_object()) {
      cfg.group = "inline";
      cfg.group_datum = j["group"];
    } else {
      cfg.group = j["group"].get<std::string>();
    }
    if (j.contains("delta")) cfg.delta = int_vector_from_json(j["delta"], "delta");
    if (j.contains("lift_d")) cfg.lift_d = int_vector_from_json(j["lift_d"], "lift_d");
    if (j.contains("family")) {
      if (j["family"].is_object())
        cfg.family = family_from_json(j["family"]);
      else
        cfg.family_spec = j["family"].get<std::string>();
    }
    if (j.contains("compute")) cfg.compute = j["compute"].get<std::vector<std::string>>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("run config: ") + e.what());
  }
  return cfg;
}

RunOutcome run_report(const RunConfig& cfg) {
  RunOutcome out;
  json& rep = out.report;
  try {
    for (const auto& c : cfg.compute)
      if (std::find(computation_names().begin(), computation_names().end(), c) == computation_names().end())
        throw InvalidSpec("unknown computation '" + c + "'");
    if (cfg.format != "json" && cfg.format != "text") throw InvalidSpec("unknown format '" + cfg.format + "'");

    ResolvedGroup rg = resolve_group(cfg);
    const ReductiveGroupData& g = rg.data;
    FundamentalGroup fg = fundamental_group(g);
    IntVector d;
    IntVector coords;
    json dj;
    if (cfg.lift_d) {
      if (cfg.lift_d->size() != g.cochar_rank)
        throw InvalidSpec("lift_d has " + std::to_string(cfg.lift_d->size()) + " entries, expected " +
                          std::to_string(g.cochar_rank));
      d = *cfg.lift_d;
      coords = fg.classify(d);
      if (cfg.delta && fg.reduce(*cfg.delta) != coords) throw InvalidSpec("lift_d does not lift delta");
      dj["lift"] = "explicit";
    } else {
      coords = cfg.delta ? *cfg.delta : IntVector(fg.generator_count(), Int(0));
      if (coords.size() != fg.generator_count())
        throw InvalidSpec("delta has " + std::to_string(coords.size()) + " coordinates, pi_1 has " +
                          std::to_string(fg.generator_count()) + " generators");
      coords = fg.reduce(coords);
      d = generic_lift(g, Pi1Element{coords});
      dj["lift"] = "generic";
    }
    dj["coords"] = vector_json(coords);
    dj["cocharacter"] = vector_json(d);
    dj["convention"] = "coordinates in the invariant-factor generators of pi_1(G), torsion first";

    std::optional<CurveFamily> fam = resolve_family(cfg);
    json warnings = json::array();
    json errors = json::array();
    if (fam) {
      auto v = validate_family(*fam);
      if (!v.empty()) {
        std::string msg = "family violates:";
        for (const auto& x : v) msg += " " + x.rule + " (" + x.message + ")";
        throw InvalidSpec(msg);
      }
    }
    for (const char* need : {"picard", "rigidified", "gerbe", "poincare"})
      if (wants(cfg, need) && !fam) throw InvalidSpec(std::string("computation '") + need + "' needs a family");
    if (wants(cfg, "poincare") && !(g.is_torus() && g.cochar_rank == 1))
      throw InvalidSpec("poincare is defined for G = T(1)");

    rep["status"] = "ok";
    rep["group"] = rg.echo;
    rep["delta"] = dj;
    json pi1;
    pi1["group"] = group_json(fg.group);
    pi1["generators"] = matrix_json(fg.generators.transpose());
    rep["pi1"] = pi1;
    rep["family"] = fam ? family_to_json(*fam) : json(nullptr);
    json hyps = json::object();
    if (fam)
      for (Gate gate : {Gate::TautologicalComplete, Gate::Pushout, Gate::Faltings, Gate::NsImage,
                        Gate::RigidifiedPicard, Gate::WeightCokernel, Gate::Genus0Rigidified}) {
        HypothesisResult h = hypothesis_check(*fam, g, gate);
        hyps[gate_name(gate)] = hypothesis_json(h);
      }
    rep["hypotheses"] = hyps;
    rep["compute"] = cfg.compute;

    json results = json::object();
    auto guarded = [&](const std::string& name, auto&& fn) {
      try {
        results[name] = fn();
      } catch (const HypothesisNotSatisfied& e) {
        results[name] = nullptr;
        json err;
        err["computation"] = name;
        err["kind"] = "hypothesis_failure";
        err["theorem"] = gate_name(e.result().gate);
        err["missing"] = e.result().missing;
        errors.push_back(err);
        out.code = ExitCode::HypothesisFailure;
      }
    };
    if (wants(cfg, "forms"))
      guarded("forms", [&] {
        json j;
        j["invariant_sym"] = form_lattice_json(invariant_sym_forms(g));
        j["even"] = form_lattice_json(even_invariant_forms(g));
        j["d_even"] = form_lattice_json(d_even_forms(g));
        j["conditional"] = form_lattice_json(conditional_form_lattice(g));
        j["simple_factor_count"] = g.factor_count();
        return j;
      });
    if (wants(cfg, "ns"))
      guarded("ns", [&] {
        json j;
        j["ns_bun"] = ns_json(ns_bun(g, d));
        j["ns_rigidified"] = ns_json(ns_rigidified(g, d));
        j["ns_bun_p1"] = ns_json(ns_bun_p1(g, d));
        return j;
      });
    if (wants(cfg, "picard"))
      guarded("picard", [&] {
        PicardReport r;
        if (g.is_torus())
          r = fam->genus == 0 ? torus_picard_genus0(g.cochar_rank, d, *fam) : torus_picard(g.cochar_rank, d, *fam);
        else
          r = reductive_picard(g, d, *fam);
        for (const auto& n : r.notes) warnings.push_back("picard: " + n);
        return picard_json(r);
      });
    if (wants(cfg, "rigidified")) guarded("rigidified", [&] { return picard_json(rigidified_picard(g, d, *fam)); });
    if (wants(cfg, "gerbe"))
      guarded("gerbe", [&] {
        GerbeReport r = weight_cokernel(g, d, *fam);
        if (!r.coker_wt_exact) warnings.push_back("gerbe: coker(wt) reported as graded pieces only");
        for (const auto& n : r.notes) warnings.push_back("gerbe: " + n);
        return gerbe_json(r);
      });
    if (wants(cfg, "poincare"))
      guarded("poincare", [&] {
        json j;
        j["d"] = int_json(d[0]);
        j["gcd"] = int_json(gcd(Int(fam->delta), d[0] + 1 - fam->genus));
        j["exists"] = poincare_bundle_exists(d[0], *fam);
        return j;
      });
    rep["results"] = results;
    rep["warnings"] = warnings;
    rep["errors"] = errors;
    if (out.code == ExitCode::HypothesisFailure) rep["status"] = "hypothesis_failure";
    rep["exit_code"] = static_cast<int>(out.code);
  } catch (const InvalidSpec& e) {
    out.code = ExitCode::InputError;
    rep = input_error(e.what());
  }
  return out;
}

std::vector<RunOutcome> run_batch(const std::vector<std::string>& lines, Execution exec) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].find_first_not_of(" \t\r") != std::string::npos) idx.push_back(i);
  return map_indices<RunOutcome>(
      idx.size(),
      [&](std::size_t k) {
        RunOutcome o;
        try {
          o = run_report(run_config_from_json(json::parse(lines[idx[k]])));
        } catch (const json::exception& e) {
          o.code = ExitCode::InputError;
          o.report = input_error(std::string("batch line: ") + e.what());
        } catch (const InvalidSpec& e) {
          o.code = ExitCode::InputError;
          o.report = input_error(e.what());
        }
        o.report["batch_line"] = idx[k] + 1;
        return o;
      },
      exec);
}

std::string render_text(const json& report) {
  std::ostringstream out;
  render_node(report, "", out);
  return out.str();
}

std::string render(const json& report, const std::string& format) {
  return format == "text" ? render_text(report) : report.dump(2) + "\n";
}

}  // namespace bunpic
