#include "toric/cli.hpp"

#include "toric/cohomology.hpp"
#include "toric/hypersurface.hpp"
#include "toric/io.hpp"
#include "toric/scrolls.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>

namespace toric {

namespace {

using nlohmann::json;

struct Report {
  json inputs = json::object();
  json results = json::object();
  std::vector<Check> checks;
};

struct Options {
  std::string fan_path;
  std::string degree, m, klass, poly, spec, output;
  std::size_t rho = 0, component = 0;
  std::optional<long long> bound;
  bool box = false;
};

std::vector<std::string> s_labels(std::size_t r) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back("S" + std::to_string(i + 1));
  return out;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

json triple_json(const AdmissibleTriple& t) {
  return {{"m", to_json(t.m)}, {"rho", t.rho}, {"component", t.component}};
}

json spec_json(const ScrollSpec& s) { return s.a; }

ScrollSpec parse_spec(const std::string& text) {
  ScrollSpec s;
  for (const Integer& x : parse_int_list(text)) {
    if (x > std::numeric_limits<long long>::max() / 4 || x < std::numeric_limits<long long>::min() / 4)
      throw InputError("scroll entry out of range");
    s.a.push_back(static_cast<long long>(x));
  }
  if (s.a.size() < 2) throw InputError("a scroll needs at least two entries");
  return s;
}

std::pair<long long, std::string> resolve_bound(const Options& o, const Fan& fan) {
  if (o.bound) {
    if (*o.bound < 0) throw InputError("--bound must be nonnegative");
    return {*o.bound, "flag"};
  }
  if (const char* env = std::getenv("TORIC_DEFORM_BOUND")) {
    const IntVec v = parse_int_list(env);
    if (v.size() != 1 || v[0] < 0 || v[0] > 1000)
      throw InputError("TORIC_DEFORM_BOUND must be an integer in [0, 1000]");
    return {static_cast<long long>(v[0]), "environment"};
  }
  return {default_bound(fan), "default"};
}

AdmissibleTriple select_triple(const Fan& fan, const Options& o) {
  const IntVec m = parse_int_list(o.m);
  if (m.size() != fan.dim) throw InputError("--m has wrong length");
  if (o.rho >= fan.num_rays()) throw InputError("--rho out of range");
  if (dot(m, fan.rays[o.rho]) != -1) throw InputError("m(rho) must be -1");
  const auto comps = admissible_components(marker_graph(fan, m, o.rho));
  if (comps.empty()) throw InputError("no admissible component for this degree and ray");
  if (o.component >= comps.size())
    throw InputError("--component must be below " + std::to_string(comps.size()));
  return {m, o.rho, comps[o.component]};
}

json cone_labels(const Cone& c, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t i : c) out.push_back(labels[i]);
  return out;
}

Report cmd_fan_check(const Options& o) {
  const Fan fan = parse_fan(o.fan_path);
  Report rep;
  rep.inputs = {{"fan", o.fan_path}};
  const FanReport fr = validate(fan);
  rep.results = {{"fan", fan_to_json(fan)},
                 {"smooth", fr.smooth},
                 {"complete", fr.complete},
                 {"simplicial", fr.simplicial}};
  rep.checks.push_back({"smooth", fr.smooth, fr.smooth ? "" : "some maximal cone is not unimodular"});
  rep.checks.push_back({"complete", fr.complete, fr.complete ? "" : "cones do not cover N_R"});
  if (fr.smooth && fr.complete) {
    const CoxData cox = cox_data(fan);
    rep.results["Q"] = matrix_json(cox.Q, numbered("deg", cox.Q.rows()), s_labels(fan.num_rays()));
    rep.results["class_group_rank"] = cox.cl_rank;
    rep.results["primitive_collections"] = primitive_collections(fan);
    rep.checks.push_back({"gale_duality", (cox.Q * cox.P.transpose()).is_zero(), ""});
  }
  return rep;
}

Report cmd_triples(const Options& o) {
  const Fan fan = parse_fan(o.fan_path);
  const auto [bound, source] = resolve_bound(o, fan);
  Report rep;
  rep.inputs = {{"fan", o.fan_path}, {"bound", bound}, {"bound_source", source}};
  const auto ts = enumerate_triples(fan, bound);
  json list = json::array();
  for (const AdmissibleTriple& t : ts) list.push_back(triple_json(t));
  rep.results = {{"count", ts.size()}, {"triples", list}};
  return rep;
}

Report cmd_h1(const Options& o) {
  const Fan fan = parse_fan(o.fan_path);
  Report rep;
  rep.inputs = {{"fan", o.fan_path}};
  if (o.box) {
    const auto [bound, source] = resolve_bound(o, fan);
    rep.inputs["bound"] = bound;
    rep.inputs["bound_source"] = source;
    std::size_t total = 0, triple_count = 0;
    json nonzero = json::array();
    Check span{"triples_span", true, ""};
    for (const IntVec& m : degree_box(fan, bound)) {
      const auto ts = triples_at(fan, m);
      const SpanReport sr = span_check(fan, m, ts);
      triple_count += ts.size();
      total += sr.h1_dim;
      if (sr.h1_dim) nonzero.push_back({{"degree", to_json(m)}, {"h1_dim", sr.h1_dim}});
      if (!sr.spans && span.passed) span = {span.name, false, "degree " + to_string(m)};
    }
    rep.results = {{"total_h1", total}, {"triple_count", triple_count}, {"nonzero", nonzero}};
    rep.checks.push_back(span);
    return rep;
  }
  if (o.degree.empty()) throw InputError("h1 needs --degree or --box");
  const IntVec m = parse_int_list(o.degree);
  if (m.size() != fan.dim) throw InputError("--degree has wrong length");
  rep.inputs["degree"] = to_json(m);
  const CechComplex cx = cech_complex(fan, m);
  const auto ts = triples_at(fan, m);
  const SpanReport sr = span_check(fan, m, ts);
  json tl = json::array();
  for (const AdmissibleTriple& t : ts) tl.push_back(triple_json(t));
  rep.results = {{"h1_dim", h1_dimension(cx)}, {"dim_c0", cx.dim_c0()},
                 {"dim_c1", cx.dim_c1()},      {"dim_c2", cx.dim_c2()},
                 {"triples", tl},              {"span_rank", sr.span_rank}};
  rep.checks.push_back({"d1_d0_zero", (cx.d1 * cx.d0).is_zero(), ""});
  rep.checks.push_back({"triples_span", sr.spans, sr.spans ? "" : "degree " + to_string(m)});
  return rep;
}

json deformation_json(const Fan& fan, const DeformationData& d) {
  const std::vector<std::string> labels = d.labels();
  const std::vector<std::string> ulabels(labels.begin() + 1, labels.end());
  const std::vector<std::string> S = s_labels(fan.num_rays());
  std::vector<std::string> prows{"block1", "block2"};
  for (std::size_t k = 0; k < d.split.K_basis.size(); ++k) prows.push_back("pi" + std::to_string(k + 1));
  std::vector<std::string> ptrows = prows;
  prows.push_back("base");

  json u = json::object();
  auto put = [&](const char* name, const std::vector<UColumn>& cols) {
    json a = json::array();
    for (const UColumn& c : cols) a.push_back(variable_label(c));
    u[name] = a;
  };
  put("U1", d.u.U1);
  put("U2", d.u.U2);
  put("U3", d.u.U3);
  put("U4", d.u.U4);

  json cones = json::array();
  for (std::size_t c = 0; c < d.ambient_cones.size(); ++c)
    cones.push_back({{"sigma", fan.max_cones[c]}, {"columns", cone_labels(d.ambient_cones[c], labels)}});

  json tri = json::array();
  std::vector<Term> terms;
  for (const Monomial& mono : d.trinomial) {
    json ex = json::object();
    for (std::size_t k = 0; k < mono.exponent.size(); ++k)
      if (mono.exponent[k] != 0) ex[labels[k]] = to_json(mono.exponent[k]);
    tri.push_back({{"sign", mono.sign}, {"exponents", ex}});
    terms.push_back({mono.sign, mono.exponent});
  }

  json eta = json::object();
  const auto em = eta_map(d);
  for (std::size_t k = 0; k < em.size(); ++k)
    eta[labels[k]] = em[k] ? format_polynomial({{1, *em[k]}}, S) : "0";

  const HilbertReport hb = hilbert_basis_check(d);
  json split = {{"K_basis", json::array()}, {"gamma", to_json(d.split.gamma)}};
  for (const IntVec& b : d.split.K_basis) split["K_basis"].push_back(to_json(b));

  return {{"triple", triple_json(d.triple)},
          {"ray_values", to_json(d.a)},
          {"splitting", split},
          {"U", u},
          {"P", matrix_json(d.P, prows, labels)},
          {"Ptilde", matrix_json(d.Ptilde, ptrows, ulabels)},
          {"Qtilde", matrix_json(d.Qtilde, numbered("deg", d.Qtilde.rows()), ulabels)},
          {"ambient_cones", cones},
          {"trinomial", {{"terms", tri}, {"text", format_polynomial(terms, labels)}}},
          {"psi", matrix_json(d.psi, ulabels, S)},
          {"nu", matrix_json(d.nu, S, ulabels)},
          {"eta", eta},
          {"hilbert_basis",
           {{"det_without_2rho", to_json(hb.det_without_2rho)},
            {"det_without_3rho", to_json(hb.det_without_3rho)}}}};
}

Report cmd_deform(const Options& o) {
  const Fan fan = parse_fan(o.fan_path);
  const AdmissibleTriple t = select_triple(fan, o);
  Report rep;
  rep.inputs = {{"fan", o.fan_path}, {"m", to_json(t.m)}, {"rho", o.rho}, {"component", o.component}};
  const DeformationData d = build_deformation(fan, t);
  rep.results = deformation_json(fan, d);
  rep.checks = verify_central_fiber(fan, d);
  const HilbertReport hb = hilbert_basis_check(d);
  rep.checks.push_back({"hilbert_basis", hb.passed, hb.passed ? "" : "a column-deleted minor is not unimodular"});
  return rep;
}

json move_json(const ScrollMove& mv) {
  return {{"from", spec_json(mv.from)}, {"to", spec_json(mv.to)}, {"i", mv.i},
          {"j", mv.j},                  {"step", mv.step},          {"triple", triple_json(mv.triple)}};
}

Report cmd_scroll_rigid(const Options& o) {
  const ScrollSpec s = parse_spec(o.spec);
  Report rep;
  rep.inputs = {{"spec", spec_json(s)}};
  rep.results = {{"normalized", spec_json(normalize(s))}, {"rigid", is_rigid(s)}};
  return rep;
}

Report cmd_scroll_path(const Options& o) {
  const ScrollSpec s = parse_spec(o.spec);
  Report rep;
  rep.inputs = {{"spec", spec_json(s)}};
  const auto path = path_to_rigid(s);
  json moves = json::array();
  for (const ScrollMove& mv : path) moves.push_back(move_json(mv));
  const ScrollSpec end = path.empty() ? normalize(s) : normalize(path.back().to);
  const ScrollSpec target = rigid_target(s);
  rep.results = {{"moves", moves}, {"final", spec_json(end)}, {"target", spec_json(target)}};
  rep.checks.push_back({"reaches_target", end == target, end == target ? "" : "final spec differs"});
  return rep;
}

Report cmd_scroll_fan(const Options& o) {
  const ScrollSpec s = parse_spec(o.spec);
  Report rep;
  rep.inputs = {{"spec", spec_json(s)}};
  const json fj = fan_to_json(scroll_fan(s));
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw InputError("cannot write " + o.output);
    f << fj.dump(2) << "\n";
    rep.inputs["output"] = o.output;
  }
  rep.results = {{"fan", fj}};
  return rep;
}

Report cmd_lift(const Options& o) {
  const Fan fan = parse_fan(o.fan_path);
  const AdmissibleTriple t = select_triple(fan, o);
  const DeformationData d = build_deformation(fan, t);
  const IntVec w = parse_int_list(o.klass);
  if (w.size() != d.cox.Q.rows()) throw InputError("--class has wrong length");
  const auto poly = parse_polynomial(o.poly, fan.num_rays());
  Report rep;
  rep.inputs = {{"fan", o.fan_path}, {"m", to_json(t.m)},     {"rho", o.rho},
                {"component", o.component}, {"class", to_json(w)}, {"poly", o.poly}};
  const LiftResult res = lift_polynomial({&d, w, poly});
  const std::vector<std::string> labels = d.labels(), S = s_labels(fan.num_rays());
  json monos = json::array();
  for (std::size_t k = 0; k < poly.size(); ++k) {
    json m = {{"monomial", format_polynomial({poly[k]}, S)},
              {"exponent", to_json(poly[k].exponent)},
              {"liftable", res.preimages[k].has_value()}};
    if (res.preimages[k]) m["preimage"] = to_json(*res.preimages[k]);
    monos.push_back(m);
  }
  rep.results = {{"polynomial", format_polynomial(poly, S)},
                 {"monomials", monos},
                 {"lift", res.liftable() ? json(format_polynomial(res.lifted, labels)) : json(nullptr)},
                 {"trinomial", format_polynomial({{d.trinomial[0].sign, d.trinomial[0].exponent},
                                                  {d.trinomial[1].sign, d.trinomial[1].exponent},
                                                  {d.trinomial[2].sign, d.trinomial[2].exponent}},
                                                 labels)}};
  rep.checks.push_back({"all_liftable", res.liftable(),
                        res.liftable() ? "" : "monomial " + std::to_string(*res.first_failure)});
  return rep;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric deformation toolkit", "toric-deform"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit the timing block");
  Options o;
  std::function<Report(const Options&)> handler;
  std::string name;

  auto fan_opt = [&](CLI::App* sub) { sub->add_option("--fan", o.fan_path, "Fan JSON file")->required(); };
  auto triple_opts = [&](CLI::App* sub) {
    fan_opt(sub);
    sub->add_option("--m", o.m, "Degree m, comma separated")->required()->allow_extra_args(false);
    sub->add_option("--rho", o.rho, "Ray with m(rho) = -1, 0-based")->required();
    sub->add_option("--component", o.component, "Index among the admissible components")->required();
  };
  auto bind = [&](CLI::App* sub, std::string n, Report (*f)(const Options&)) {
    sub->callback([&, n, f] {
      name = n;
      handler = f;
    });
  };

  CLI::App* fan = app.add_subcommand("fan", "Fan utilities");
  fan->require_subcommand(1);
  CLI::App* fan_check = fan->add_subcommand("check", "Validate a fan");
  fan_opt(fan_check);
  bind(fan_check, "fan check", cmd_fan_check);

  CLI::App* triples = app.add_subcommand("triples", "Enumerate admissible triples");
  fan_opt(triples);
  triples->add_option("--bound", o.bound, "Degree box bound");
  bind(triples, "triples", cmd_triples);

  CLI::App* h1 = app.add_subcommand("h1", "Graded H^1 of the tangent sheaf");
  fan_opt(h1);
  h1->add_option("--degree", o.degree, "Degree m, comma separated");
  h1->add_flag("--box", o.box, "Sum over the degree box");
  h1->add_option("--bound", o.bound, "Degree box bound");
  bind(h1, "h1", cmd_h1);

  CLI::App* deform = app.add_subcommand("deform", "Build a deformation from a triple");
  triple_opts(deform);
  bind(deform, "deform", cmd_deform);

  CLI::App* scroll = app.add_subcommand("scroll", "Rational normal scrolls");
  scroll->require_subcommand(1);
  CLI::App* rigid = scroll->add_subcommand("rigid", "Rigidity test");
  rigid->add_option("spec", o.spec, "a_1,...,a_n")->required();
  bind(rigid, "scroll rigid", cmd_scroll_rigid);
  CLI::App* path = scroll->add_subcommand("path", "Deformation path to the rigid scroll");
  path->add_option("spec", o.spec, "a_1,...,a_n")->required();
  bind(path, "scroll path", cmd_scroll_path);
  CLI::App* sfan = scroll->add_subcommand("fan", "Fan of a scroll");
  sfan->add_option("spec", o.spec, "a_1,...,a_n")->required();
  sfan->add_option("-o,--output", o.output, "Write the fan JSON here");
  bind(sfan, "scroll fan", cmd_scroll_fan);

  CLI::App* lift = app.add_subcommand("lift", "Lift a polynomial to the deformation");
  triple_opts(lift);
  lift->add_option("--class", o.klass, "Class in Cl(X), comma separated")->required();
  lift->add_option("--poly", o.poly, "Polynomial in S1..Sr")->required();
  bind(lift, "lift", cmd_lift);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = handler(o);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FanError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfiniteFiber& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json report = {{"command", name},
                 {"inputs", rep.inputs},
                 {"results", rep.results},
                 {"checks", checks_json(rep.checks)}};
  if (!no_timing) report["timing"] = {{"seconds", seconds}};
  out << report.dump(2) << "\n";
  return all_passed(rep.checks) ? 0 : 1;
}

}  // namespace toric
