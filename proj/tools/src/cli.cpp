#include "fcat_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "fcat/error.hpp"
#include "fcat/kan.hpp"
#include "fcat/limits.hpp"
#include "fcat/reflect.hpp"
#include "fcat/sketch.hpp"
#include "fcat_cli/fixtures.hpp"

namespace fcat::cli {

namespace {

constexpr const char* kBanner = "pass is not a proof: only the listed probes were tried";

struct Args {
  std::string file;
  std::string along;
  std::string kind = "ran";
  std::string adjunction = "colim";
  std::string probes;
  std::string cover;
  std::string lemma_case = "finite";
  std::size_t degree = 3;
  bool filtered = false;
};

struct Context {
  Config config;
  Args args;
  Workspace ws;
  Json report;
  int code = kOk;
};

Json bool_report(const std::string& key, bool value) {
  Json j;
  j[key] = value;
  return j;
}

SetFunctor functor_arg(Context& cx) { return read_functor(cx.args.file, "", cx.ws); }
NatTrans nat_arg(Context& cx) { return read_nat_trans(cx.args.file, "", cx.ws); }

FinFunctor along_arg(Context& cx) {
  if (cx.args.along.empty()) throw UsageError("MissingArgument", "--along is required");
  return read_fin_functor(cx.args.along, "", cx.ws);
}

AdjunctionPtr adjunction_for(Context& cx, const CategoryPtr& shape) {
  const std::string& kind = cx.args.adjunction;
  if (kind == "colim") return colim_adjunction(shape);
  if (kind == "identity") return std::make_shared<IdentityAdjunction>(shape);
  if (kind == "ran") return std::make_shared<RanAdjunction>(along_arg(cx));
  if (kind == "lan") return std::make_shared<LanAdjunction>(along_arg(cx));
  throw UsageError("UnknownAdjunction", kind);
}

InducedReflection reflection_for(Context& cx, const CategoryPtr& shape) {
  InducedReflection r(adjunction_for(cx, shape));
  if (!same_category(r.shape(), shape))
    fail(ErrorCode::ShapeMismatch, "input shape differs from the adjunction's domain");
  return r;
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) return "";
  if (j.contains("components")) return "nat";
  if (j.contains("shape")) return "functor";
  if (j.contains("elements")) return "preorder";
  if (j.contains("source")) return "fin-functor";
  if (j.contains("objects")) return "category";
  return "";
}

void do_validate(Context& cx) {
  const Json j = cx.ws.load(cx.args.file);
  const std::string kind = detect_kind(j);
  Json out;
  out["kind"] = kind;
  if (kind == "category") {
    const CategoryPtr c = read_category(j, "", cx.ws);
    out["objects"] = c->num_objects();
    out["morphisms"] = c->num_morphisms();
  } else if (kind == "functor") {
    out["sizes"] = read_functor(j, "", cx.ws).sizes();
  } else if (kind == "nat") {
    const NatTrans t = read_nat_trans(j, "", cx.ws);
    out["epi"] = is_epi(t);
    out["mono"] = is_mono(t);
  } else if (kind == "fin-functor") {
    out["objects"] = read_fin_functor(j, "", cx.ws).object_map.size();
  } else if (kind == "preorder") {
    out["elements"] = read_preorder(j, "").elements.size();
  } else {
    throw MalformedInput("", "cannot tell what kind of value this is");
  }
  out["valid"] = true;
  cx.report = std::move(out);
}

void do_limit(Context& cx) {
  const SetFunctor d = functor_arg(cx);
  cx.report = to_json(limit(d).cone, d);
}

void do_colimit(Context& cx) {
  const SetFunctor d = functor_arg(cx);
  cx.report = to_json(cx.args.filtered ? filtered_colimit(d) : colimit(d), d);
}

void do_ran(Context& cx) { cx.report = to_json(ran(along_arg(cx), functor_arg(cx)), cx.ws); }
void do_lan(Context& cx) { cx.report = to_json(lan(along_arg(cx), functor_arg(cx)), cx.ws); }
void do_restrict(Context& cx) { cx.report = to_json(restrict(along_arg(cx), functor_arg(cx)), cx.ws); }

void do_unit_counit(Context& cx, bool unit) {
  const FinFunctor k = along_arg(cx);
  const SetFunctor s = functor_arg(cx);
  const std::string& kind = cx.args.kind;
  if (kind != "ran" && kind != "lan") throw UsageError("UnknownAdjunction", kind);
  const NatTrans t = kind == "ran" ? (unit ? unit_ran(k, s) : counit_ran(k, s))
                                   : (unit ? unit_lan(k, s) : counit_lan(k, s));
  cx.report = to_json(t, cx.ws);
}

void do_reflect(Context& cx) {
  const SetFunctor c = functor_arg(cx);
  const InducedReflection r = reflection_for(cx, c.shape);
  const ReflectedObject ro = reflect_object(r, c);
  Json out;
  out["object"] = to_json(ro.object, cx.ws);
  out["eta"] = components_json(ro.eta);
  out["mu"] = components_json(ro.mu);
  out["in_subcategory"] = is_mono(ro.theta);
  cx.report = std::move(out);
}

void do_in_m(Context& cx) {
  const SetFunctor c = functor_arg(cx);
  cx.report = bool_report("in_subcategory", in_subcategory(reflection_for(cx, c.shape), c));
}

void do_in_ei(Context& cx) {
  const NatTrans f = nat_arg(cx);
  cx.report = bool_report("in_E_I", is_in_E_I(reflection_for(cx, f.source.shape), f));
}

void do_in_mi(Context& cx) {
  const NatTrans f = nat_arg(cx);
  cx.report = bool_report("in_M_I", is_in_M_I(reflection_for(cx, f.source.shape), f));
}

void do_eprime(Context& cx) {
  const NatTrans f = nat_arg(cx);
  const InducedReflection r = reflection_for(cx, f.source.shape);
  std::vector<NatTrans> probes;
  if (cx.args.probes.empty()) {
    probes = default_probes(f.target, cx.config.probe_cap);
  } else {
    const Json list = cx.ws.load(cx.args.probes);
    if (!list.is_array()) throw MalformedInput("", "expected an array of natural transformations");
    for (std::size_t i = 0; i < list.size() && probes.size() < cx.config.probe_cap; ++i)
      probes.push_back(read_nat_trans(list[i], child("", i), cx.ws));
  }
  const EPrimeResult res = is_in_E_prime_falsify(r, f, probes);
  Json out;
  out["passed"] = res.passed;
  out["probes_checked"] = res.probes_checked;
  if (res.passed) {
    out["banner"] = kBanner;
  } else {
    out["counterexample"] = {{"probe", *res.probe},
                             {"probe_map", to_json(probes[*res.probe], cx.ws)},
                             {"pulled_back", to_json(*res.pulled_back, cx.ws)}};
    cx.code = kCounterexample;
  }
  cx.report = std::move(out);
}

void do_in_mstar(Context& cx) {
  const NatTrans f = nat_arg(cx);
  const InducedReflection r = reflection_for(cx, f.source.shape);
  const NatTrans p = cx.args.cover.empty() ? canonical_presentation(f.target).p
                                           : read_nat_trans(cx.args.cover, "", cx.ws);
  cx.report = bool_report("in_M_star", is_in_M_star(r, f, p));
}

void do_present(Context& cx) {
  const SetFunctor m = functor_arg(cx);
  const Presentation pres = canonical_presentation(m);
  Json summands = Json::array();
  for (const auto& [j, x] : pres.summands) summands.push_back({m.shape->object_name(j), m.at(j).label(x)});
  Json out;
  out["cover"] = to_json(pres.cover.sum, cx.ws);
  out["summands"] = std::move(summands);
  out["p"] = components_json(pres.p);
  cx.report = std::move(out);
}

void do_nerve(Context& cx) {
  const CategoryPtr c = cx.ws.category(cx.args.file);
  cx.report = to_json(nerve(*c, cx.args.degree), cx.ws);
}

void do_denerve(Context& cx) { cx.report = to_json(*cat_from_model(functor_arg(cx))); }

void do_preorder(Context& cx) {
  const CategoryPtr c = cx.ws.category(cx.args.file);
  cx.report = to_json(preorder_reflection(*c));
}

void do_check_model(Context& cx) {
  const ModelReport rep = is_model(functor_arg(cx), cat_sketch());
  Json out;
  out["model"] = rep.model;
  out["failing_cone"] = rep.failing_cone ? Json(*rep.failing_cone) : Json(nullptr);
  cx.report = std::move(out);
}

Lemma51Case parse_case(const std::string& name) {
  for (Lemma51Case c : {Lemma51Case::Pullback, Lemma51Case::Product, Lemma51Case::Equalizer, Lemma51Case::Finite})
    if (to_string(c) == name) return c;
  throw UsageError("UnknownCase", name);
}

void do_lemma51(Context& cx) {
  const Lemma51Case which = parse_case(cx.args.lemma_case);
  const Lemma51Report rep = check_lemma51(which, nat_arg(cx));
  Json out;
  out["case"] = std::string(to_string(rep.lemma_case));
  out["lim_f"] = rep.lim_f;
  out["lim_g"] = rep.lim_g;
  out["lim_d"] = rep.lim_d;
  out["image"] = rep.image;
  out["bijection"] = rep.bijection;
  out["holds"] = rep.holds;
  if (rep.unreached) out["witness"] = *rep.unreached;
  if (!rep.holds) cx.code = kCounterexample;
  cx.report = std::move(out);
}

void do_fixtures(Context& cx) {
  const std::string& name = cx.args.file;
  std::vector<std::string> names;
  if (name == "all") names = fixture_names();
  else names.push_back(name);
  Json list = Json::array();
  bool passed = true;
  for (const auto& n : names) {
    const FixtureReport rep = run_fixture(n, cx.config, cx.ws);
    passed = passed && rep.passed();
    list.push_back(rep.to_json());
  }
  cx.report = {{"passed", passed}, {"fixtures", std::move(list)}};
  if (!passed) cx.code = kValidationFailure;
}

using Handler = std::function<void(Context&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"validate", do_validate},
      {"limit", do_limit},
      {"colimit", do_colimit},
      {"ran", do_ran},
      {"lan", do_lan},
      {"restrict", do_restrict},
      {"unit", [](Context& cx) { do_unit_counit(cx, true); }},
      {"counit", [](Context& cx) { do_unit_counit(cx, false); }},
      {"reflect", do_reflect},
      {"in-m", do_in_m},
      {"in-ei", do_in_ei},
      {"in-mi", do_in_mi},
      {"eprime-falsify", do_eprime},
      {"in-mstar", do_in_mstar},
      {"present", do_present},
      {"nerve", do_nerve},
      {"denerve", do_denerve},
      {"preorder", do_preorder},
      {"check-model", do_check_model},
      {"lemma51", do_lemma51},
      {"fixtures", do_fixtures},
  };
  return table;
}

void print(std::ostream& os, const Json& j, bool pretty) { os << (pretty ? j.dump(2) : j.dump()) << '\n'; }

int report_error(std::ostream& err, const std::string& code, const std::string& detail, bool pretty,
                 int exit_code, const std::string* pointer = nullptr) {
  Json j;
  j["error"] = code;
  j["detail"] = detail;
  if (pointer) j["pointer"] = *pointer;
  print(err, j, pretty);
  return exit_code;
}

/// The verb is the first argument that is neither an option nor the value
/// of a global option.
std::string find_verb(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {"--seed", "--probe-cap", "--workspace"};
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (std::find(valued.begin(), valued.end(), a) != valued.end()) {
      ++i;
      continue;
    }
    if (!a.empty() && a[0] == '-') continue;
    return a;
  }
  return "";
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const bool pretty_hint = std::find(args.begin(), args.end(), "--pretty") != args.end();
  const std::string verb = find_verb(args);
  const bool wants_help = std::any_of(args.begin(), args.end(), [](const std::string& a) {
    return a == "-h" || a == "--help";
  });
  if (!wants_help && !handlers().count(verb))
    return report_error(err, "UnknownVerb", verb.empty() ? "no verb given" : verb, pretty_hint,
                        kValidationFailure);

  Config config;
  Args a;
  std::string workspace = ".";
  CLI::App app{"Exact computation with finite categories and set-valued functors", "fcat"};
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", config.seed, "Seed for randomized suites")->envname("FCAT_SEED");
  app.add_option("--probe-cap", config.probe_cap, "Probe budget for falsification verbs")
      ->envname("FCAT_PROBE_CAP");
  app.add_flag("--pretty", config.pretty, "Indent JSON output")->envname("FCAT_PRETTY");
  app.add_option("--workspace", workspace, "Directory that relative paths resolve against")
      ->envname("FCAT_WORKSPACE");
  app.require_subcommand(1);
  app.fallthrough();

  auto file_verb = [&](const std::string& name, const std::string& help, const std::string& what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", a.file, what)->required();
    return sub;
  };
  auto with_adjunction = [&](CLI::App* sub) {
    sub->add_option("--adjunction", a.adjunction, "colim, ran, lan or identity");
    sub->add_option("--along", a.along, "Finite functor file for ran/lan");
  };

  file_verb("validate", "Validate a category, functor, transformation, finite functor or preorder", "JSON file");
  file_verb("limit", "Limit cone of a functor", "functor file");
  file_verb("colimit", "Colimit cocone of a functor", "functor file")
      ->add_flag("--filtered", a.filtered, "Use the pseudo-filtered formula");
  const std::pair<const char*, const char*> kan_verbs[] = {
      {"ran", "Right Kan extension along a finite functor"},
      {"lan", "Left Kan extension along a finite functor"},
      {"restrict", "Precompose with a finite functor"}};
  for (const auto& [name, help] : kan_verbs)
    file_verb(name, help, "functor file")
        ->add_option("--along", a.along, "Finite functor file")
        ->required();
  for (const char* name : {"unit", "counit"}) {
    CLI::App* sub = file_verb(name, std::string("The ") + name + " of a Kan adjunction", "functor file");
    sub->add_option("--along", a.along, "Finite functor file")->required();
    sub->add_option("--kind", a.kind, "ran or lan");
  }
  with_adjunction(file_verb("reflect", "I(C) with its unit factorization", "functor file"));
  with_adjunction(file_verb("in-m", "Membership in the reflective subcategory", "functor file"));
  with_adjunction(file_verb("in-ei", "Membership in E_I", "transformation file"));
  with_adjunction(file_verb("in-mi", "Membership in M_I", "transformation file"));
  {
    CLI::App* sub = file_verb("eprime-falsify", "Search for a pullback leaving E_I", "transformation file");
    with_adjunction(sub);
    sub->add_option("--probes", a.probes, "JSON array of probe transformations");
  }
  {
    CLI::App* sub = file_verb("in-mstar", "Membership in M_I after pulling back along a cover", "transformation file");
    with_adjunction(sub);
    sub->add_option("--cover", a.cover, "Cover transformation (default: canonical presentation)");
  }
  file_verb("present", "Canonical presentation by representables", "functor file");
  file_verb("nerve", "Truncated nerve of a category", "category reference")
      ->add_option("--degree", a.degree, "Truncation degree");
  file_verb("denerve", "Category from a model of the category sketch", "functor file");
  file_verb("preorder", "Preorder reflection of a category", "category reference");
  file_verb("check-model", "Is a functor on Δ3^op a model of the category sketch", "functor file");
  file_verb("lemma51", "Limits against factorization for one transformation", "transformation file")
      ->add_option("--case", a.lemma_case, "pullback, product, equalizer or finite");
  file_verb("fixtures", "Run a bundled fixture suite (or all)", "fixture name");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "UsageError", e.what(), pretty_hint, kValidationFailure);
  }

  Context cx{config, a, Workspace(workspace), Json(), kOk};
  try {
    handlers().at(verb)(cx);
  } catch (const MalformedInput& e) {
    return report_error(err, "MalformedInput", e.detail(), config.pretty, kValidationFailure, &e.pointer());
  } catch (const UsageError& e) {
    return report_error(err, e.code(), e.what(), config.pretty, kValidationFailure);
  } catch (const Error& e) {
    return report_error(err, std::string(to_string(e.code())), e.what(), config.pretty,
                        e.is_internal() ? kInternalInvariant : kValidationFailure);
  } catch (const std::exception& e) {
    return report_error(err, "InternalInvariant", e.what(), config.pretty, kInternalInvariant);
  }
  print(out, cx.report, config.pretty);
  return cx.code;
}

}  // namespace fcat::cli
