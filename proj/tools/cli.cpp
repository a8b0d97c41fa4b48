#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>

#include "multlab/acceptance.hpp"
#include "multlab/classify.hpp"
#include "multlab/errors.hpp"
#include "multlab/extalg.hpp"
#include "multlab/lindef.hpp"
#include "multlab/ringspec.hpp"
#include "multlab/series.hpp"

namespace multlab {

namespace {

using Json = nlohmann::ordered_json;

struct Outcome {
  Json report;
  int code = 0;
};

struct Options {
  std::string ring_path;
  std::string format = "json";
  std::optional<int> cap;
  std::optional<std::uint32_t> field;
  int hom = kDefaultHomCutoff;
  int deg = kDefaultDegCutoff;
  std::string module = "k";
  std::optional<int> power;
};

struct Ring {
  RingSpec spec;
  RingPresentation P;
  FiniteLocalAlgebra R;
};

Ring load_ring(const Options& o) {
  RingSpec s = load_ring_spec(o.ring_path);
  if (o.cap) s.cap = *o.cap;
  if (o.field) s.p = *o.field;
  RingPresentation P = s.presentation();
  FiniteLocalAlgebra R = build_finite_algebra(P, s.cap);
  return Ring{std::move(s), P, std::move(R)};
}

Json series_json(const TruncSeries& s) { return Json(s.coeffs()); }

Json ring_json(const Ring& r) {
  Json j;
  j["field"] = r.spec.p;
  j["vars"] = r.spec.vars;
  j["relations"] = r.spec.relations;
  return j;
}

// k, or m^j with j >= 1 ("m" alone means m^1).
int module_power(const std::string& m) {
  if (m == "k") return -1;
  if (m == "m") return 1;
  if (m.size() > 2 && m.rfind("m^", 0) == 0) {
    int j = 0;
    for (std::size_t i = 2; i < m.size(); ++i) {
      if (m[i] < '0' || m[i] > '9') throw Error("bad module '" + m + "'; use k or m^j");
      j = j * 10 + (m[i] - '0');
      if (j > 1000) throw Error("module power too large");
    }
    if (j >= 1) return j;
  }
  throw Error("bad module '" + m + "'; use k or m^j");
}

ResolutionTrunc resolve_for(const Ring& r, const Options& o) {
  const int p = module_power(o.module);
  return p < 0 ? resolve_residue_field(r.R, o.hom) : resolve_maximal_ideal_power(r.R, p, o.hom);
}

Json quadratic_json(const QuadraticPresentation& Q) {
  Json j;
  j["generators"] = Q.names;
  Json rels = Json::array();
  for (const auto& f : Q.relation_tensors()) rels.push_back(to_string(f, Q.names));
  j["relations"] = rels;
  return j;
}

Outcome cmd_hilbert(const Options& o) {
  Ring r = load_ring(o);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["hilbert_function"] = r.R.filtration_dims();
  out.report["length"] = r.R.dim();
  out.report["top_degree"] = r.R.top_degree();
  out.report["certified_at_degree"] = r.R.certified_at();
  out.report["graded"] = r.R.is_graded();
  return out;
}

Outcome cmd_socle(const Options& o) {
  Ring r = load_ring(o);
  Subspace S = socle(r.R);
  Json basis = Json::array();
  for (std::size_t i = 0; i < S.dim(); ++i) {
    auto row = S.basis().row(i);
    basis.push_back(to_string(r.R.to_polynomial(row), r.spec.vars));
  }
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["socle_dim"] = S.dim();
  out.report["socle_basis"] = basis;
  out.report["gorenstein"] = S.dim() == 1;
  return out;
}

Json classification_json(const ClassificationReport& c) {
  Json j;
  j["length"] = c.length;
  j["multiplicity"] = c.multiplicity;
  j["h_at_one"] = c.h_at_one;
  j["edim"] = c.edim;
  j["codim"] = c.codim;
  j["min_generators"] = c.min_generators;
  j["socle_dim"] = c.socle_dim;
  j["top_degree"] = c.top_degree;
  j["is_ci"] = c.is_ci;
  j["is_gorenstein"] = c.is_gorenstein;
  j["is_cm"] = c.is_cm;
  j["min_mult_cm"] = c.min_mult_cm;
  j["min_mult_g"] = c.min_mult_g;
  j["min_mult_ci"] = c.min_mult_ci;
  j["golod_witness"] = c.golod_witness;
  j["koszul_witness"] = c.koszul_witness;
  j["froberg"] = c.froberg;
  j["bounds_hold"] = c.bounds_hold();
  j["cutoff"] = c.cutoff;
  return j;
}

Outcome cmd_classify(const Options& o) {
  Ring r = load_ring(o);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["classification"] = classification_json(classify(r.R, o.hom));
  return out;
}

Outcome cmd_betti(const Options& o) {
  Ring r = load_ring(o);
  ResolutionTrunc T = resolve_for(r, o);
  BettiTable B = betti_table(T);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["module"] = T.module_label;
  out.report["hom_cutoff"] = T.hom_cutoff;
  out.report["graded"] = T.graded;
  out.report["betti"] = T.ranks;
  if (T.graded) {
    Json g = Json::array();
    for (const auto& [ij, v] : B.entries)
      if (ij.second <= o.deg) g.push_back(Json::array({ij.first, ij.second, v}));
    out.report["graded_betti"] = g;
    out.report["deg_cutoff"] = o.deg;
  }
  TruncSeries P = poincare_series(T);
  if (auto c = rational_candidate(P)) out.report["poincare_candidate"] = c->to_string();
  return out;
}

Outcome cmd_ext_pres(const Options& o) {
  Ring r = load_ring(o);
  SjodinPresentation S = sjodin_presentation(r.P, r.R);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["ext_algebra"] = quadratic_json(S.algebra());
  return out;
}

Outcome cmd_ext_compare(const Options& o) {
  Ring r = load_ring(o);
  ExtComparison c = ext_dual_comparison(r.P, r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["sjodin"] = quadratic_json(c.sjodin.algebra());
  out.report["dual_of_quadratic_part"] = quadratic_json(c.dual_of_quadratic_part);
  out.report["ext_hilbert"] = series_json(c.ext_hilbert);
  out.report["sjodin_hilbert"] = series_json(c.sjodin_hilbert);
  out.report["relation_spaces_equal"] = c.relation_spaces_equal;
  out.report["hilbert_match"] = c.hilbert_match;
  out.report["first_mismatch"] = c.first_mismatch;
  out.report["match"] = c.match();
  out.code = c.match() ? 0 : 1;
  return out;
}

Outcome cmd_quad_dual(const Options& o) {
  Ring r = load_ring(o);
  QuadraticPresentation A = quadratic_part(associated_graded(r.R));
  QuadraticPresentation B = quadratic_dual(A);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["quadratic_part"] = quadratic_json(A);
  out.report["quadratic_dual"] = quadratic_json(B);
  out.report["quadratic_part_hilbert"] = series_json(hilbert_series_quadratic(A, o.hom));
  out.report["quadratic_dual_hilbert"] = series_json(hilbert_series_quadratic(B, o.hom));
  return out;
}

Outcome cmd_koszul(const Options& o) {
  Ring r = load_ring(o);
  KoszulRingCertificate k = koszul_ring_check(r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["cutoff"] = k.cutoff;
  out.report["ld_zero"] = k.ld_zero;
  out.report["tangent_cone_quadratic"] = k.tangent_cone_quadratic;
  out.report["tangent_cone_diagonal"] = k.tangent_cone_diagonal;
  out.report["agree"] = k.agree();
  out.report["koszul"] = k.ld_zero && k.agree();
  out.code = k.ld_zero && k.agree() ? 0 : 1;
  return out;
}

Outcome cmd_lindef(const Options& o) {
  Ring r = load_ring(o);
  LinDefReport L = linearity_defect(r.R, resolve_for(r, o));
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["module"] = L.module_label;
  out.report["hom_cutoff"] = L.hom_cutoff;
  out.report["homology_dims"] = L.homology_dims;
  out.report["verdict"] = to_string(L.verdict);
  out.report["value"] = L.value;
  return out;
}

Json witness_json(const SeriesWitness& w) {
  Json j;
  j["cutoff"] = w.cutoff;
  j["expected"] = series_json(w.expected);
  j["computed"] = series_json(w.computed);
  j["first_mismatch"] = w.first_mismatch;
  j["holds"] = w.holds();
  return j;
}

Outcome cmd_froberg(const Options& o) {
  Ring r = load_ring(o);
  SeriesWitness w = froberg_witness(r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["froberg"] = witness_json(w);
  out.code = w.holds() ? 0 : 1;
  return out;
}

Outcome cmd_golod(const Options& o) {
  Ring r = load_ring(o);
  GolodData g = koszul_homology_dims(r.R);
  SeriesWitness w = golod_witness(r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["koszul_homology"] = g.a;
  out.report["denominator"] = poly_to_string(g.denominator());
  out.report["golod"] = witness_json(w);
  out.code = w.holds() ? 0 : 1;
  return out;
}

Outcome cmd_levin(const Options& o) {
  Ring r = load_ring(o);
  const int bound = sega_bound(r.R);
  const int m = o.power.value_or(bound);
  LevinResult L = levin_check(r.R, m, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["power"] = m;
  out.report["sega_bound"] = bound;
  out.report["zero_module"] = L.zero_module;
  out.report["levin"] = witness_json(L.witness);
  out.report["holds"] = L.holds();
  out.code = L.holds() ? 0 : 1;
  return out;
}

Outcome cmd_polreg(const Options& o) {
  Ring r = load_ring(o);
  BettiTable B = polynomial_ring_betti(r.R, o.deg);
  Json g = Json::array();
  for (const auto& [ij, v] : B.entries) g.push_back(Json::array({ij.first, ij.second, v}));
  Outcome out;
  out.report["ring"] = ring_json(r);
  out.report["polreg"] = polynomial_regularity(r.R, o.deg);
  out.report["sega_bound"] = sega_bound(r.R);
  out.report["tangent_cone_betti"] = g;
  return out;
}

Outcome cmd_theorem1(const Options& o) {
  Ring r = load_ring(o);
  Theorem1Report t = theorem1_check(r.P, r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  Json& j = out.report["theorem1"];
  j["cutoff"] = t.cutoff;
  j["edim"] = t.edim;
  j["length"] = t.length;
  j["socle_dim"] = t.socle_dim;
  j["top_degree"] = t.top_degree;
  j["ext_relations"] = t.sjodin_relations;
  j["relation_rank"] = t.relation_rank;
  j["gldim2_witness"] = t.gldim2_witness;
  j["ext_match"] = t.ext_match;
  j["stmt1"] = t.stmt1;
  j["stmt2"] = t.stmt2;
  j["stmt3"] = t.stmt3;
  j["consistent"] = t.consistent();
  out.code = t.consistent() ? 0 : 1;
  return out;
}

Outcome cmd_theorem2(const Options& o) {
  Ring r = load_ring(o);
  Theorem2Report t = theorem2_check(r.P, r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  Json& j = out.report["theorem2"];
  j["cutoff"] = t.cutoff;
  j["m"] = t.m;
  j["length"] = t.length;
  j["min_generators"] = t.min_generators;
  j["complete_intersection"] = t.complete_intersection;
  j["gldim_witness"] = t.gldim_witness;
  j["ext_match"] = t.ext_match;
  j["koszul_witness"] = t.koszul_witness;
  j["growth_witness"] = t.growth_witness;
  j["dual_frobenius"] = t.dual_frobenius;
  j["stmt1"] = t.stmt1;
  j["stmt2"] = t.stmt2;
  j["stmt2_prime"] = t.stmt2p;
  j["stmt3"] = t.stmt3;
  j["stmt3_prime"] = t.stmt3p;
  j["consistent"] = t.consistent();
  out.code = t.consistent() ? 0 : 1;
  return out;
}

Outcome cmd_theorem3(const Options& o) {
  Ring r = load_ring(o);
  Theorem3Report t = theorem3_check(r.R, o.hom);
  Outcome out;
  out.report["ring"] = ring_json(r);
  Json& j = out.report["theorem3"];
  j["case"] = to_string(t.which);
  j["cutoff"] = t.cutoff;
  j["stmt1"] = t.stmt1;
  j["stmt2"] = t.stmt2;
  j["stmt3"] = t.stmt3;
  j["stmt4"] = t.stmt4;
  j["consistent"] = t.consistent();
  try {
    Lemma33Report L = lemma33_check_d0(r.R, o.hom);
    Json& l = out.report["lemma33"];
    l["source"] = to_string(L.source);
    l["d"] = poly_to_string(L.d);
    l["q"] = L.q;
    l["g"] = poly_to_string(L.g);
    l["g_at_minus_one"] = L.g_at_minus_one;
    l["ld_zero"] = L.ld_zero;
    l["holds"] = L.holds();
  } catch (const NoCandidateD&) {
  }
  out.code = t.consistent() ? 0 : 1;
  return out;
}

Outcome cmd_corpus(const Options&) {
  Outcome out;
  Json rows = Json::array();
  bool all = true;
  for (const auto& c : run_acceptance()) {
    Json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    rows.push_back(j);
    all = all && c.pass;
  }
  out.report["criteria"] = rows;
  out.report["all_pass"] = all;
  out.code = all ? 0 : 1;
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j)
      if (v.is_structured()) flat = false;
    if (flat) {
      out << prefix << ":";
      for (const auto& v : j) out << " " << scalar_text(v);
      out << "\n";
      return;
    }
    std::size_t i = 0;
    for (const auto& v : j) {
      if (v.is_array()) {
        out << prefix << "[" << i << "]:";
        for (const auto& w : v) out << " " << scalar_text(w);
        out << "\n";
      } else {
        render_text(v, prefix + "[" + std::to_string(i) + "]", out);
      }
      ++i;
    }
    return;
  }
  out << prefix << ": " << scalar_text(j) << "\n";
}

void render_corpus_text(const Json& j, std::ostream& out) {
  for (const auto& c : j["criteria"])
    out << (c["pass"].get<bool>() ? "PASS" : "FAIL") << " " << c["id"].get<int>() << " "
        << c["title"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact GF(p) homological algebra for artinian local rings", "multlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));

  using Handler = Outcome (*)(const Options&);
  struct Cmd {
    const char* name;
    const char* help;
    Handler run;
    bool hom, deg, module, power;
  };
  const std::vector<Cmd> cmds = {
      {"hilbert", "Hilbert function of the tangent cone", cmd_hilbert, false, false, false, false},
      {"socle", "socle of R", cmd_socle, false, false, false, false},
      {"classify", "multiplicity and minimal-multiplicity flags", cmd_classify, true, false, false, false},
      {"betti", "truncated minimal free resolution", cmd_betti, true, true, true, false},
      {"ext-pres", "degree-2 presentation of the Ext-algebra", cmd_ext_pres, false, false, false, false},
      {"ext-compare", "Ext-algebra against the dual of the quadratic part", cmd_ext_compare, true, false, false, false},
      {"quad-dual", "quadratic part of the tangent cone and its dual", cmd_quad_dual, true, false, false, false},
      {"koszul", "Koszul ring certificate", cmd_koszul, true, false, false, false},
      {"lindef", "linearity defect", cmd_lindef, true, false, true, false},
      {"froberg", "Froberg relation", cmd_froberg, true, false, false, false},
      {"golod", "Koszul homology and the Golod series", cmd_golod, true, false, false, false},
      {"levin", "Levin relation for a power of m", cmd_levin, true, false, false, true},
      {"polreg", "regularity of the tangent cone over the polynomial ring", cmd_polreg, false, true, false, false},
      {"theorem1", "Gorenstein / gl.dim 2 / maximal-rank equivalence", cmd_theorem1, true, false, false, false},
      {"theorem2", "complete-intersection / AS-regular equivalence", cmd_theorem2, true, false, false, false},
      {"theorem3", "Koszul / Froberg / minimal multiplicity / ld equivalence", cmd_theorem3, true, false, false, false},
  };
  Handler chosen = nullptr;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("ring", o.ring_path, "ring-spec file")->required();
    sub->add_option("--cap", o.cap, "degree cap for the artinian check");
    sub->add_option("--field", o.field, "override the field size");
    if (c.hom) sub->add_option("--hom", o.hom, "homological cutoff")->check(CLI::Range(0, 64));
    if (c.deg) sub->add_option("--deg", o.deg, "internal degree cutoff")->check(CLI::Range(1, 64));
    if (c.module) sub->add_option("--module", o.module, "k or m^j");
    if (c.power) sub->add_option("--power", o.power, "power of m")->check(CLI::Range(0, 1000));
    sub->callback([&chosen, h = c.run] { chosen = h; });
  }
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "run the bundled acceptance suite");
  corpus_cmd->callback([&chosen] { chosen = cmd_corpus; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  try {
    Outcome r = chosen(o);
    if (o.format == "json")
      out << r.report.dump(2) << "\n";
    else if (chosen == cmd_corpus)
      render_corpus_text(r.report, out);
    else
      render_text(r.report, "", out);
    return r.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace multlab
