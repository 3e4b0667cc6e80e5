#include "fcat_cli/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fcat/error.hpp"
#include "fcat/generators.hpp"
#include "fcat/kan.hpp"
#include "fcat/limits.hpp"
#include "fcat/reflect.hpp"
#include "fcat/sketch.hpp"

namespace fcat::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string fixture) { report_.fixture = std::move(fixture); }

  /// Runs `check`; an exception counts as a failure with its message.
  void check(const std::string& name, const std::string& anchor, const std::function<bool(Json&)>& check) {
    Assertion a{name, anchor, false, Json::object()};
    try {
      a.passed = check(a.detail);
    } catch (const std::exception& e) {
      a.passed = false;
      a.detail["error"] = e.what();
    }
    report_.assertions.push_back(std::move(a));
  }

  FixtureReport take() { return std::move(report_); }

 private:
  FixtureReport report_;
};

NatTrans nat(const SetFunctor& s, const SetFunctor& t, std::vector<std::vector<Elem>> comps) {
  std::vector<FinFunction> fs;
  for (Obj o = 0; o < comps.size(); ++o) fs.emplace_back(s.size(o), t.size(o), std::move(comps[o]));
  return validate_nat_trans(s, t, std::move(fs));
}

/// Structure maps given by morphism id; identities may be omitted.
SetFunctor functor_on(const CategoryPtr& shape, std::vector<FinSet> sets,
                      const std::map<std::string, std::vector<Elem>>& maps) {
  std::vector<FinFunction> fs;
  for (Mor f = 0; f < shape->num_morphisms(); ++f) {
    const std::size_t n = sets[shape->dom(f)].size;
    auto it = maps.find(shape->morphism_id(f));
    fs.push_back(it == maps.end() ? FinFunction::identity(n)
                                  : FinFunction(n, sets[shape->cod(f)].size, it->second));
  }
  return validate_set_functor(shape, std::move(sets), std::move(fs));
}

bool all_maps_injective(const SetFunctor& m) {
  return std::all_of(m.maps.begin(), m.maps.end(), [](const FinFunction& f) { return f.is_injective(); });
}

// Colim ⊣ Δ over 2, M(0) = {x, y}, M(1) = {x}
FixtureReport examples_colimit(Workspace& ws) {
  Recorder r("examples-colimit");
  const CategoryPtr two = ws.category("chain:2");
  const Mor u = two->morphism("0<=1");
  const SetFunctor m = functor_on(two, {FinSet({"x", "y"}), FinSet({"x"})}, {{"0<=1", {0, 0}}});
  const SetFunctor q = functor_on(two, {FinSet({"y"}), FinSet({"x"})}, {{"0<=1", {0}}});
  const InducedReflection refl(colim_adjunction(two));
  const std::string anchor = "Colim ⊣ Δ on the ordinal 2: pullback-stable part of E_I";

  r.check("2 has three morphisms", anchor, [&](Json& d) {
    d["morphisms"] = two->num_morphisms();
    return two->num_morphisms() == 3 && u == two->morphism("0<=1");
  });
  r.check("2 is pseudo-filtered", anchor, [&](Json&) { return is_pseudo_filtered(*two).ok; });
  const NatTrans phi = nat(m, m, {{0, 0}, {0}});
  const NatTrans psi = nat(q, m, {{1}, {0}});
  r.check("psi is a monomorphism", anchor, [&](Json&) { return is_mono(psi); });
  r.check("colimit of M is {x}", anchor, [&](Json& d) {
    const Cocone c = colimit(m);
    d["colimit"] = to_json(c, m);
    return c.nadir.size == 1;
  });
  r.check("theta_M = (Mu, id)", anchor, [&](Json& d) {
    const NatTrans theta = refl.adjunction().unit(m);
    d["theta"] = components_json(theta);
    return theta.at(0) == m.on(u) && theta.at(1) == FinFunction::identity(1);
  });
  r.check("I(M) has singleton sets and M is not in the subcategory", anchor, [&](Json& d) {
    const auto im = reflect_object(refl, m);
    d["I(M)"] = to_json(im.object, ws);
    return im.object.sizes() == std::vector<std::size_t>{1, 1} && !in_subcategory(refl, m);
  });
  r.check("phi is in E_I", anchor, [&](Json&) { return is_in_E_I(refl, phi); });
  const FunctorPullback pb = pullback(phi, psi);
  r.check("the pullback of phi along psi has empty domain at 0", anchor, [&](Json& d) {
    d["pullback"] = to_json(pb.to_right, ws);
    return pb.apex.size(0) == 0 && pb.apex.size(1) == 1;
  });
  r.check("the pulled back morphism is not in E_I", anchor, [&](Json&) {
    return !is_in_E_I(refl, pb.to_right);
  });
  r.check("E' falsification finds psi", anchor, [&](Json& d) {
    const EPrimeResult res = is_in_E_prime_falsify(refl, phi, {psi});
    if (res.pulled_back) d["counterexample"] = to_json(*res.pulled_back, ws);
    return !res.passed && res.probe == 0u && res.pulled_back->source.size(0) == 0 &&
           res.pulled_back->target.size(0) == 1;
  });
  return r.take();
}

FixtureReport ran_power_law(const Config& config, Workspace& ws) {
  Recorder r("ran-power-law");
  const FinFunctor k = delta_op_inclusion(0, 3);
  const CategoryPtr big = ws.category("delta-op:3");
  Rng rng(config.seed);
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const SetFunctor t = random_set_functor(rng, k.source, 4);
    r.check("|Ran(T)([n])| = |T0|^(n+1), trial " + std::to_string(trial),
            "right Kan extension along [0] -> Δ3^op", [&](Json& d) {
              const SetFunctor ran_t = ran(k, t);
              bool ok = true;
              std::size_t expected = 1;
              Json sizes = Json::array();
              for (std::size_t n = 0; n <= 3; ++n) {
                expected *= t.size(0);
                const std::size_t got = ran_t.size(big->object("[" + std::to_string(n) + "]"));
                sizes.push_back(got);
                ok = ok && got == expected;
              }
              d["T0"] = t.size(0);
              d["sizes"] = std::move(sizes);
              return ok;
            });
  }
  return r.take();
}

FixtureReport lan_colim(const Config& config, Workspace&) {
  Recorder r("lan-colim");
  Rng rng(config.seed);
  for (const CategoryPtr& j : pseudo_filtered_shapes(3)) {
    const SetFunctor t = random_set_functor(rng, j, 3);
    r.check("Lan along J -> 1 is the colimit", "Lan_! = Colim", [&](Json& d) {
      const std::size_t lan_size = lan(to_terminal(j), t).size(0);
      const std::size_t colim_size = colimit(t).nadir.size;
      d["lan"] = lan_size;
      d["colimit"] = colim_size;
      return lan_size == colim_size;
    });
  }
  return r.take();
}

FixtureReport mono_colim(const Config& config, Workspace&) {
  Recorder r("mono-colim");
  Rng rng(config.seed);
  const auto shapes = pseudo_filtered_shapes(4);
  std::size_t checked = 0;
  std::size_t discrepancies = 0;
  Json first = nullptr;
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const CategoryPtr& j = shapes[trial % shapes.size()];
    const SetFunctor m = random_set_functor(rng, j, 3);
    const InducedReflection refl(colim_adjunction(j));
    ++checked;
    if (in_subcategory(refl, m) != all_maps_injective(m)) {
      ++discrepancies;
      if (first.is_null()) first = trial;
    }
  }
  r.check("M is in Mono(Colim) iff every structure map is injective",
          "colim functor on pseudo-filtered shapes, part (a)", [&](Json& d) {
            d["checked"] = checked;
            d["discrepancies"] = discrepancies;
            d["first_discrepancy"] = first;
            return discrepancies == 0;
          });
  return r.take();
}

FixtureReport triangle(const Config& config, Workspace&) {
  Recorder r("triangle");
  Rng rng(config.seed);
  for (std::size_t trial = 0; trial < 5; ++trial) {
    const CategoryPtr a = random_poset(rng, 3);
    const CategoryPtr b = random_poset(rng, 3);
    const FinFunctor k = random_functor(rng, b, a);
    std::vector<SetFunctor> on_a;
    std::vector<SetFunctor> on_b;
    for (int i = 0; i < 3; ++i) {
      on_a.push_back(random_set_functor(rng, a, 2));
      on_b.push_back(random_set_functor(rng, b, 2));
    }
    const std::string suffix = ", trial " + std::to_string(trial);
    r.check("restriction ⊣ Ran" + suffix, "triangle identities", [&](Json& d) {
      const TriangleReport rep = verify_triangle_identities(RanAdjunction(k), on_a, on_b);
      d["checked"] = rep.checked;
      d["failures"] = rep.failures.size();
      return rep.ok();
    });
    r.check("Lan ⊣ restriction" + suffix, "triangle identities", [&](Json& d) {
      const TriangleReport rep = verify_triangle_identities(LanAdjunction(k), on_b, on_a);
      d["checked"] = rep.checked;
      d["failures"] = rep.failures.size();
      return rep.ok();
    });
  }
  return r.take();
}

FixtureReport delta(Workspace& ws) {
  Recorder r("delta");
  const std::string anchor = "truncated simplicial sets and the sketch for categories";
  const CategoryPtr d3 = ws.category("delta:3");
  const CategoryPtr p = ws.category("delta-op:3");
  r.check("Δ3^op is the opposite of Δ3", anchor, [&](Json& d) {
    d["objects"] = p->num_objects();
    d["morphisms"] = p->num_morphisms();
    return same_category(opposite(d3), p) && p->num_objects() == 4;
  });
  r.check("cofaces and codegeneracies satisfy the cosimplicial identities", anchor, [&](Json& d) {
    const FinCategory& c = *d3;
    std::size_t checked = 0;
    for (std::size_t k = 0; k + 2 <= 3; ++k)
      for (std::size_t j = 0; j <= k + 2; ++j)
        for (std::size_t i = 0; i < j; ++i) {
          ++checked;
          if (c.compose(delta_coface(c, k + 1, j), delta_coface(c, k, i)) !=
              c.compose(delta_coface(c, k + 1, i), delta_coface(c, k, j - 1)))
            return false;
        }
    for (std::size_t k = 0; k + 1 <= 3; ++k)
      for (std::size_t i = 0; i <= k + 1; ++i)
        for (std::size_t j = 0; j <= k; ++j) {
          ++checked;
          const Mor sd = c.compose(delta_codegeneracy(c, k, j), delta_coface(c, k, i));
          if (i == j || i == j + 1) {
            if (sd != c.identity(k)) return false;
          } else if (k >= 1) {
            const Mor ds = i < j ? c.compose(delta_coface(c, k - 1, i), delta_codegeneracy(c, k - 1, j - 1))
                                 : c.compose(delta_coface(c, k - 1, i - 1), delta_codegeneracy(c, k - 1, j));
            if (sd != ds) return false;
          }
        }
    d["identities_checked"] = checked;
    return true;
  });
  r.check("[0] cogenerates Δ3^op", "the singleton {[0]} is a generating set in Δ", [&](Json&) {
    return is_cogenerating(delta_op_inclusion(0, 3)).cogenerating;
  });
  r.check("the category sketch lives on Δ3^op with two cospan cones", anchor, [&](Json& d) {
    const Sketch& sk = cat_sketch();
    d["carrier_objects"] = sk.carrier->num_objects();
    bool ok = sk.carrier->num_objects() == 4 && sk.cones.size() == 2;
    for (const auto& cone : sk.cones) ok = ok && find_isomorphism(cone.diagram.source, cospan_category()).has_value();
    return ok;
  });
  r.check("the nerve of 2 is a model and denerves back to 2", anchor, [&](Json& d) {
    const CategoryPtr two = chain_category(2);
    const SetFunctor n = nerve3(*two);
    d["sizes"] = n.sizes();
    return is_model(n, cat_sketch()).model && find_isomorphism(cat_from_model(n), two).has_value();
  });
  r.check("the parallel pair reflects to the preorder a <= b", anchor, [&](Json& d) {
    const Preorder pre = preorder_reflection(*parallel_pair_category());
    d["preorder"] = to_json(pre);
    return pre.leq == std::vector<std::vector<bool>>{{true, true}, {false, true}};
  });
  return r.take();
}

FixtureReport lemma51_terminal(Workspace&) {
  Recorder r("lemma51-terminal");
  const std::string anchor = "models are closed under factorization and finite limits, product case";
  r.check("the empty product factors as t = t = t", anchor, [&](Json& d) {
    const CategoryPtr empty = discrete_category(0);
    const SetFunctor f = validate_set_functor(empty, {}, {});
    const NatTrans phi = validate_nat_trans(f, f, {});
    const Lemma51Report rep = check_lemma51(Lemma51Case::Product, phi);
    d["lim_f"] = rep.lim_f;
    d["lim_g"] = rep.lim_g;
    d["lim_d"] = rep.lim_d;
    d["image"] = rep.image;
    return rep.holds && rep.lim_f == 1 && rep.lim_g == 1 && rep.lim_d == 1 && rep.image == 1;
  });
  return r.take();
}

}  // namespace

bool FixtureReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.passed; });
}

Json FixtureReport::to_json() const {
  Json j;
  j["fixture"] = fixture;
  j["passed"] = passed();
  Json list = Json::array();
  for (const auto& a : assertions)
    list.push_back({{"assertion", a.name}, {"anchor", a.anchor}, {"passed", a.passed}, {"detail", a.detail}});
  j["assertions"] = std::move(list);
  return j;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {"examples-colimit", "ran-power-law", "lan-colim",
                                                 "mono-colim",       "triangle",      "delta",
                                                 "lemma51-terminal"};
  return names;
}

FixtureReport run_fixture(const std::string& name, const Config& config, Workspace& ws) {
  if (name == "examples-colimit") return examples_colimit(ws);
  if (name == "ran-power-law") return ran_power_law(config, ws);
  if (name == "lan-colim") return lan_colim(config, ws);
  if (name == "mono-colim") return mono_colim(config, ws);
  if (name == "triangle") return triangle(config, ws);
  if (name == "delta") return delta(ws);
  if (name == "lemma51-terminal") return lemma51_terminal(ws);
  throw UsageError("UnknownFixture", name);
}

}  // namespace fcat::cli
