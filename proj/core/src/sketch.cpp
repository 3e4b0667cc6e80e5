#include "fcat/sketch.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fcat/error.hpp"
#include "fcat/kan.hpp"
#include "fcat/reflect.hpp"

namespace fcat {

Sketch validate_sketch(CategoryPtr carrier, std::vector<SketchCone> cones) {
  const FinCategory& a = *carrier;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const SketchCone& cone = cones[i];
    if (!same_category(cone.diagram.target, carrier))
      fail(ErrorCode::ShapeMismatch, "cone " + std::to_string(i) + " is not over the carrier");
    const FinCategory& j = *cone.diagram.source;
    if (cone.legs.size() != j.num_objects())
      fail(ErrorCode::NotACone, "cone " + std::to_string(i) + " has the wrong number of legs");
    for (Obj o = 0; o < j.num_objects(); ++o)
      if (a.dom(cone.legs[o]) != cone.apex || a.cod(cone.legs[o]) != cone.diagram(o))
        fail(ErrorCode::NotACone, "cone " + std::to_string(i) + " leg at " + j.object_name(o));
    for (Mor f = 0; f < j.num_morphisms(); ++f)
      if (a.compose(cone.diagram.on_morphism(f), cone.legs[j.dom(f)]) != cone.legs[j.cod(f)])
        fail(ErrorCode::NotACone, "cone " + std::to_string(i) + " triangle at " + j.morphism_id(f));
  }
  return Sketch{std::move(carrier), std::move(cones)};
}

namespace {

SetFunctor cone_diagram(const SetFunctor& m, const SketchCone& cone) {
  const FinCategory& j = *cone.diagram.source;
  std::vector<FinSet> sets;
  for (Obj o = 0; o < j.num_objects(); ++o) sets.emplace_back(m.size(cone.diagram(o)));
  std::vector<FinFunction> maps;
  for (Mor f = 0; f < j.num_morphisms(); ++f) maps.push_back(m.on(cone.diagram.on_morphism(f)));
  return SetFunctor{cone.diagram.source, std::move(sets), std::move(maps)};
}

/// Apex element -> limit tuple index when the image cone is limiting.
std::optional<std::vector<Elem>> comparison(const SetFunctor& m, const SketchCone& cone) {
  const SetFunctor d = cone_diagram(m, cone);
  const Limit lim = limit(d);
  const std::size_t n = m.size(cone.apex);
  if (lim.tuples.size() != n) return std::nullopt;
  std::vector<Elem> out;
  std::vector<bool> hit(n, false);
  for (Elem x = 0; x < n; ++x) {
    Tuple t;
    for (Mor leg : cone.legs) t.push_back(m.on(leg)(x));
    auto idx = lim.find(t);
    if (!idx || hit[*idx]) return std::nullopt;
    hit[*idx] = true;
    out.push_back(*idx);
  }
  return out;
}

}  // namespace

ModelReport is_model(const SetFunctor& m, const Sketch& sk) {
  if (!same_category(m.shape, sk.carrier)) fail(ErrorCode::ShapeMismatch, "functor is not on the carrier");
  for (std::size_t i = 0; i < sk.cones.size(); ++i)
    if (!comparison(m, sk.cones[i])) return ModelReport{false, i};
  return ModelReport{};
}

const Sketch& cat_sketch() {
  static const Sketch sketch = [] {
    auto p = delta_truncated_op(3);
    const FinCategory& c = *p;
    auto cospan = cospan_category();
    auto make = [&](std::size_t k) {
      // Apex [k+2] over the cospan [k+1] -> [k] <- [k+1]: composable pairs
      // for k = 0, composable triples for k = 1.
      std::vector<Obj> objs{k + 1, k + 1, k};
      const Mor u = delta_coface(c, k, k + 1);
      const Mor v = delta_coface(c, k, 0);
      std::vector<Mor> mors(cospan->num_morphisms());
      for (Obj o = 0; o < 3; ++o) mors[cospan->identity(o)] = c.identity(objs[o]);
      mors[cospan->morphism("u")] = u;
      mors[cospan->morphism("v")] = v;
      FinFunctor l = validate_functor(cospan, p, objs, mors);
      const Mor left = delta_coface(c, k + 1, 0);
      const Mor right = delta_coface(c, k + 1, k + 2);
      return SketchCone{std::move(l), k + 2, {left, right, c.compose(u, left)}};
    };
    return validate_sketch(p, {make(0), make(1)});
  }();
  return sketch;
}

// ---------------------------------------------------------------------------

namespace {

/// The value tuple of a morphism of the truncated simplex category, read
/// from its id "m->k:v0.v1...".
std::vector<std::size_t> delta_values(const std::string& id) {
  std::vector<std::size_t> out;
  std::size_t pos = id.find(':') + 1;
  while (pos <= id.size()) {
    std::size_t end = id.find('.', pos);
    if (end == std::string::npos) end = id.size();
    out.push_back(std::stoul(id.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

}  // namespace

SetFunctor nerve(const FinCategory& c, std::size_t n) {
  auto shape = delta_truncated_op(n);
  const FinCategory& p = *shape;
  // chains[k]: vertex lists of length k+1 together with their k edges
  struct Chain {
    std::vector<Obj> vertices;
    std::vector<Mor> edges;
  };
  std::vector<std::vector<Chain>> chains(n + 1);
  std::vector<std::map<std::vector<Mor>, Elem>> edge_index(n + 1);
  for (Obj o = 0; o < c.num_objects(); ++o) chains[0].push_back({{o}, {}});
  std::function<void(Chain&, std::size_t)> extend = [&](Chain& ch, std::size_t k) {
    if (ch.edges.size() == k) {
      edge_index[k].emplace(ch.edges, chains[k].size());
      chains[k].push_back(ch);
      return;
    }
    const Obj last = ch.vertices.back();
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
      if (c.dom(f) != last) continue;
      ch.vertices.push_back(c.cod(f));
      ch.edges.push_back(f);
      extend(ch, k);
      ch.vertices.pop_back();
      ch.edges.pop_back();
    }
  };
  for (std::size_t k = 1; k <= n; ++k)
    for (Obj o = 0; o < c.num_objects(); ++o) {
      Chain ch{{o}, {}};
      extend(ch, k);
    }

  std::vector<FinSet> sets;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::string> names;
    for (const Chain& ch : chains[k]) {
      if (k == 0) {
        names.push_back(c.object_name(ch.vertices[0]));
        continue;
      }
      std::string s;
      for (Mor f : ch.edges) s += (s.empty() ? "" : ";") + c.morphism_id(f);
      names.push_back(std::move(s));
    }
    sets.emplace_back(std::move(names));
  }

  std::vector<FinFunction> maps;
  for (Mor g = 0; g < p.num_morphisms(); ++g) {
    // g: [k] -> [m] in the opposite category is theta: [m] -> [k] in Δ.
    const std::size_t k = p.dom(g), m = p.cod(g);
    const auto theta = delta_values(p.morphism_id(g));
    std::vector<Elem> values;
    for (const Chain& ch : chains[k]) {
      if (m == 0) {
        values.push_back(ch.vertices[theta[0]]);
        continue;
      }
      std::vector<Mor> edges;
      for (std::size_t i = 0; i < m; ++i) {
        Mor e = c.identity(ch.vertices[theta[i]]);
        for (std::size_t t = theta[i]; t < theta[i + 1]; ++t) e = c.compose(ch.edges[t], e);
        edges.push_back(e);
      }
      values.push_back(edge_index[m].at(edges));
    }
    maps.emplace_back(chains[k].size(), chains[m].size(), std::move(values));
  }
  return validate_set_functor(shape, std::move(sets), std::move(maps));
}

CategoryPtr cat_from_model(const SetFunctor& m) {
  const Sketch& sk = cat_sketch();
  if (!same_category(m.shape, sk.carrier)) fail(ErrorCode::NotAModel, "functor is not on Δ₃^op");
  const auto report = is_model(m, sk);
  if (!report.model) fail(ErrorCode::NotAModel, "cone " + std::to_string(*report.failing_cone) + " is not limiting");
  const FinCategory& p = *m.shape;
  auto name = [](const FinSet& s, Elem x) { return s.has_labels() ? s.labels[x] : std::to_string(x); };

  std::vector<std::string> objects;
  for (Elem x = 0; x < m.size(0); ++x) objects.push_back(name(m.at(0), x));
  const FinFunction& source = m.on(delta_coface(p, 0, 1));
  const FinFunction& target = m.on(delta_coface(p, 0, 0));
  const FinFunction& degenerate = m.on(delta_codegeneracy(p, 0, 0));
  std::vector<FinCategory::Arrow> arrows;
  for (Elem f = 0; f < m.size(1); ++f) arrows.push_back({name(m.at(1), f), source(f), target(f)});
  std::vector<Mor> identities;
  for (Elem x = 0; x < m.size(0); ++x) identities.push_back(degenerate(x));

  const FinFunction& first = m.on(delta_coface(p, 1, 2));
  const FinFunction& second = m.on(delta_coface(p, 1, 0));
  const FinFunction& long_edge = m.on(delta_coface(p, 1, 1));
  std::vector<std::tuple<Mor, Mor, Mor>> entries;
  for (Elem t = 0; t < m.size(2); ++t) entries.emplace_back(second(t), first(t), long_edge(t));
  try {
    return share(FinCategory::from_entries(std::move(objects), std::move(arrows), std::move(identities),
                                           entries));
  } catch (const Error& e) {
    fail(ErrorCode::InternalInvariant, std::string("model does not yield a category: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

Preorder validate_preorder(std::vector<std::string> elements, std::vector<std::vector<bool>> leq) {
  const std::size_t n = elements.size();
  if (leq.size() != n) fail(ErrorCode::InvalidArgument, "relation has the wrong size");
  for (const auto& row : leq)
    if (row.size() != n) fail(ErrorCode::InvalidArgument, "relation has the wrong size");
  for (std::size_t a = 0; a < n; ++a)
    if (!leq[a][a]) fail(ErrorCode::InvalidArgument, "not reflexive at " + elements[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          fail(ErrorCode::InvalidArgument, "not transitive at " + elements[a] + " <= " + elements[b] +
                                               " <= " + elements[c]);
  return Preorder{std::move(elements), std::move(leq)};
}

Preorder preorder_of(const FinCategory& c) {
  const std::size_t n = c.num_objects();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (Obj a = 0; a < n; ++a)
    for (Obj b = 0; b < n; ++b) leq[a][b] = !c.hom(a, b).empty();
  return Preorder{c.object_names(), std::move(leq)};
}

Preorder preorder_reflection(const FinCategory& c) {
  static const InducedReflection reflection(std::make_shared<const RanAdjunction>(delta_op_inclusion(0, 3)));
  const auto reflected = reflect_object(reflection, nerve3(c));
  CategoryPtr p;
  try {
    p = cat_from_model(reflected.object);
  } catch (const Error& e) {
    fail(ErrorCode::PipelineOracleMismatch, std::string("reflected nerve is not a category: ") + e.what());
  }
  const Preorder oracle = preorder_of(c);
  // I(N)[0] is N[0] in order, since the unit is bijective in degree 0.
  if (p->num_objects() != c.num_objects() || !p->is_preorder())
    fail(ErrorCode::PipelineOracleMismatch, "reflected nerve is not a preorder on the objects of C");
  Preorder pipeline{c.object_names(), preorder_of(*p).leq};
  if (!(pipeline == oracle)) fail(ErrorCode::PipelineOracleMismatch, "pipeline and hom-nonempty preorders differ");
  return pipeline;
}

// ---------------------------------------------------------------------------

ModelFactorization factorize_model_morphism(const NatTrans& phi, const Sketch& sk) {
  if (!is_model(phi.source, sk).model) fail(ErrorCode::NotAModel, "source is not a model");
  if (!is_model(phi.target, sk).model) fail(ErrorCode::NotAModel, "target is not a model");
  ModelFactorization out{factorize(phi), {}};
  for (std::size_t i = 0; i < sk.cones.size(); ++i) {
    auto bij = comparison(out.factorization.mid, sk.cones[i]);
    if (!bij) fail(ErrorCode::MidNotModel, "image is not limiting at cone " + std::to_string(i));
    out.certificate.push_back(std::move(*bij));
  }
  return out;
}

std::string_view to_string(Lemma51Case c) {
  switch (c) {
    case Lemma51Case::Pullback: return "pullback";
    case Lemma51Case::Product: return "product";
    case Lemma51Case::Equalizer: return "equalizer";
    case Lemma51Case::Finite: return "finite";
  }
  return "finite";
}

Lemma51Report check_lemma51(Lemma51Case lemma_case, const NatTrans& phi) {
  const CategoryPtr& shape = phi.source.shape;
  switch (lemma_case) {
    case Lemma51Case::Pullback:
      if (!find_isomorphism(shape, cospan_category())) fail(ErrorCode::ShapeMismatch, "pullback case needs a cospan");
      break;
    case Lemma51Case::Equalizer:
      if (!find_isomorphism(shape, parallel_pair_category()))
        fail(ErrorCode::ShapeMismatch, "equalizer case needs a parallel pair");
      break;
    case Lemma51Case::Product:
      for (Mor f = 0; f < shape->num_morphisms(); ++f)
        if (!shape->is_identity(f)) fail(ErrorCode::ShapeMismatch, "product case needs a discrete shape");
      break;
    case Lemma51Case::Finite:
      break;
  }
  const std::size_t n = shape->num_objects();
  const auto fact = factorize(phi);
  const Limit lim_f = limit(phi.source);
  const Limit lim_g = limit(phi.target);
  const Limit lim_d = limit(fact.mid);

  // s: the image of Lim φ inside Lim G
  std::vector<bool> in_image(lim_g.tuples.size(), false);
  for (const Tuple& t : lim_f.tuples) {
    Tuple u(n);
    for (Obj o = 0; o < n; ++o) u[o] = phi.at(o)(t[o]);
    auto idx = lim_g.find(u);
    ensure(idx.has_value(), "Lim φ leaves Lim G");
    in_image[*idx] = true;
  }
  std::vector<Elem> position(lim_g.tuples.size(), kNoMorphism);
  std::size_t image = 0;
  for (std::size_t i = 0; i < in_image.size(); ++i)
    if (in_image[i]) position[i] = image++;

  Lemma51Report report;
  report.lemma_case = lemma_case;
  report.lim_f = lim_f.tuples.size();
  report.lim_g = lim_g.tuples.size();
  report.lim_d = lim_d.tuples.size();
  report.image = image;
  // Lim D -> Lim G through the mono parts; it must be injective onto s.
  std::vector<bool> hit(image, false);
  bool holds = report.lim_d == image;
  for (const Tuple& t : lim_d.tuples) {
    Tuple u(n);
    for (Obj o = 0; o < n; ++o) u[o] = fact.m.at(o)(t[o]);
    auto idx = lim_g.find(u);
    ensure(idx.has_value(), "Lim n leaves Lim G");
    const Elem pos = position[*idx];
    if (pos == kNoMorphism || hit[pos]) {
      holds = false;
      if (!report.unreached) report.unreached = t;
      report.bijection.push_back(kNoMorphism);
      continue;
    }
    hit[pos] = true;
    report.bijection.push_back(pos);
  }
  report.holds = holds;
  return report;
}

}  // namespace fcat
