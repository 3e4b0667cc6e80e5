#include "fcat/kan.hpp"

#include <algorithm>

#include "fcat/error.hpp"

namespace fcat {

namespace {

/// Results of the Kan constructions are validated; a failure here means the
/// construction itself is wrong, so it is reported as an internal error.
SetFunctor checked_functor(CategoryPtr shape, std::vector<FinSet> sets,
                           std::vector<FinFunction> maps, const char* what) {
  try {
    return validate_set_functor(std::move(shape), std::move(sets), std::move(maps));
  } catch (const Error& e) {
    fail(ErrorCode::InternalInvariant, std::string(what) + " is not a functor: " + e.what());
  }
}

NatTrans checked_nat(SetFunctor source, SetFunctor target, std::vector<FinFunction> comps,
                     const char* what) {
  try {
    return validate_nat_trans(std::move(source), std::move(target), std::move(comps));
  } catch (const Error& e) {
    fail(ErrorCode::InternalInvariant, std::string(what) + " is not natural: " + e.what());
  }
}

void require_shape(const SetFunctor& f, const CategoryPtr& shape, const char* what) {
  if (!same_category(f.shape, shape))
    fail(ErrorCode::ShapeMismatch, std::string(what) + " has the wrong shape");
}

}  // namespace

SetFunctor restrict(const FinFunctor& k, const SetFunctor& s) {
  require_shape(s, k.target, "restricted functor");
  const FinCategory& b = *k.source;
  std::vector<FinSet> sets;
  for (Obj o = 0; o < b.num_objects(); ++o) sets.push_back(s.at(k(o)));
  std::vector<FinFunction> maps;
  for (Mor f = 0; f < b.num_morphisms(); ++f) maps.push_back(s.on(k.on_morphism(f)));
  return SetFunctor{k.source, std::move(sets), std::move(maps)};
}

NatTrans restrict(const FinFunctor& k, const NatTrans& alpha) {
  std::vector<FinFunction> comps;
  for (Obj o = 0; o < k.source->num_objects(); ++o) comps.push_back(alpha.at(k(o)));
  return NatTrans{restrict(k, alpha.source), restrict(k, alpha.target), std::move(comps)};
}

// ---------------------------------------------------------------------------

CommaTable::CommaTable(FinFunctor k, Side side) : k_(std::move(k)), side_(side) {
  const std::size_t n = k_.target->num_objects();
  commas_.reserve(n);
  lookup_.resize(n);
  for (Obj a = 0; a < n; ++a) {
    commas_.push_back(side_ == Side::Under ? comma_under(a, k_) : comma_over(k_, a));
    const auto& c = commas_.back();
    for (std::size_t p = 0; p < c.base.size(); ++p) lookup_[a].emplace(std::make_pair(c.base[p], c.arrow[p]), p);
  }
}

std::optional<std::size_t> CommaTable::find(Obj a, Obj b, Mor f) const {
  auto it = lookup_[a].find({b, f});
  if (it == lookup_[a].end()) return std::nullopt;
  return it->second;
}

std::size_t CommaTable::index(Obj a, Obj b, Mor f) const {
  auto p = find(a, b, f);
  ensure(p.has_value(), "missing comma object");
  return *p;
}

SetFunctor CommaTable::diagram(Obj a, const SetFunctor& t) const {
  const CommaCategory& c = commas_[a];
  std::vector<FinSet> sets;
  for (Obj b : c.base) sets.push_back(t.at(b));
  std::vector<FinFunction> maps;
  for (Mor m = 0; m < c.category->num_morphisms(); ++m) maps.push_back(t.on(c.projection.on_morphism(m)));
  return SetFunctor{c.category, std::move(sets), std::move(maps)};
}

// ---------------------------------------------------------------------------

PointwiseRan ran_pointwise(const FinFunctor& k, const SetFunctor& t) {
  return ran_pointwise(std::make_shared<const CommaTable>(k, CommaTable::Side::Under), t);
}

PointwiseRan ran_pointwise(std::shared_ptr<const CommaTable> commas, const SetFunctor& t) {
  const FinFunctor& k = commas->functor();
  require_shape(t, k.source, "extended functor");
  const FinCategory& a_cat = *k.target;
  PointwiseRan out;
  out.commas = commas;
  std::vector<FinSet> sets;
  for (Obj a = 0; a < a_cat.num_objects(); ++a) {
    out.limits.push_back(limit(commas->diagram(a, t)));
    sets.emplace_back(out.limits.back().tuples.size());
  }
  std::vector<FinFunction> maps;
  for (Mor g = 0; g < a_cat.num_morphisms(); ++g) {
    const Obj a = a_cat.dom(g), a2 = a_cat.cod(g);
    const CommaCategory& target = commas->at(a2);
    // y at (b, f') is x at (b, f'∘g)
    std::vector<std::size_t> source_index;
    for (std::size_t q = 0; q < target.base.size(); ++q)
      source_index.push_back(commas->index(a, target.base[q], a_cat.compose(target.arrow[q], g)));
    std::vector<Elem> values;
    for (const Tuple& x : out.limits[a].tuples) {
      Tuple y;
      for (std::size_t p : source_index) y.push_back(x[p]);
      auto found = out.limits[a2].find(y);
      ensure(found.has_value(), "Ran action leaves the limit");
      values.push_back(*found);
    }
    maps.emplace_back(sets[a].size, sets[a2].size, std::move(values));
  }
  out.functor = checked_functor(k.target, std::move(sets), std::move(maps), "Ran");
  return out;
}

PointwiseLan lan_pointwise(const FinFunctor& k, const SetFunctor& t) {
  return lan_pointwise(std::make_shared<const CommaTable>(k, CommaTable::Side::Over), t);
}

PointwiseLan lan_pointwise(std::shared_ptr<const CommaTable> commas, const SetFunctor& t) {
  const FinFunctor& k = commas->functor();
  require_shape(t, k.source, "extended functor");
  const FinCategory& a_cat = *k.target;
  PointwiseLan out;
  out.commas = commas;
  std::vector<FinSet> sets;
  for (Obj a = 0; a < a_cat.num_objects(); ++a) {
    out.colimits.push_back(colimit(commas->diagram(a, t)));
    sets.push_back(out.colimits.back().nadir);
  }
  std::vector<FinFunction> maps;
  for (Mor g = 0; g < a_cat.num_morphisms(); ++g) {
    const Obj a = a_cat.dom(g), a2 = a_cat.cod(g);
    const CommaCategory& source = commas->at(a);
    const Cocone& from = out.colimits[a];
    const Cocone& to = out.colimits[a2];
    std::vector<Elem> values(from.nadir.size, kNoMorphism);
    for (std::size_t p = 0; p < source.base.size(); ++p) {
      const Obj b = source.base[p];
      const std::size_t q = commas->index(a2, b, a_cat.compose(g, source.arrow[p]));
      for (Elem x = 0; x < t.size(b); ++x) {
        Elem& v = values[from.legs[p](x)];
        const Elem image = to.legs[q](x);
        ensure(v == kNoMorphism || v == image, "Lan action is not well defined on classes");
        v = image;
      }
    }
    maps.emplace_back(from.nadir.size, to.nadir.size, std::move(values));
  }
  out.functor = checked_functor(k.target, std::move(sets), std::move(maps), "Lan");
  return out;
}

SetFunctor ran(const FinFunctor& k, const SetFunctor& t) { return ran_pointwise(k, t).functor; }
SetFunctor lan(const FinFunctor& k, const SetFunctor& t) { return lan_pointwise(k, t).functor; }

namespace {

NatTrans ran_on_morphism(const std::shared_ptr<const CommaTable>& commas, const NatTrans& alpha) {
  const auto from = ran_pointwise(commas, alpha.source);
  const auto to = ran_pointwise(commas, alpha.target);
  std::vector<FinFunction> comps;
  for (Obj a = 0; a < from.limits.size(); ++a) {
    const auto& base = commas->at(a).base;
    std::vector<Elem> values;
    for (const Tuple& x : from.limits[a].tuples) {
      Tuple y(x.size());
      for (std::size_t p = 0; p < x.size(); ++p) y[p] = alpha.at(base[p])(x[p]);
      auto found = to.limits[a].find(y);
      ensure(found.has_value(), "Ran of a transformation leaves the limit");
      values.push_back(*found);
    }
    comps.emplace_back(from.functor.size(a), to.functor.size(a), std::move(values));
  }
  return checked_nat(from.functor, to.functor, std::move(comps), "Ran of a transformation");
}

NatTrans lan_on_morphism(const std::shared_ptr<const CommaTable>& commas, const NatTrans& alpha) {
  const auto from = lan_pointwise(commas, alpha.source);
  const auto to = lan_pointwise(commas, alpha.target);
  std::vector<FinFunction> comps;
  for (Obj a = 0; a < from.colimits.size(); ++a) {
    const auto& base = commas->at(a).base;
    std::vector<Elem> values(from.functor.size(a), kNoMorphism);
    for (std::size_t p = 0; p < base.size(); ++p)
      for (Elem x = 0; x < alpha.source.size(base[p]); ++x) {
        Elem& v = values[from.colimits[a].legs[p](x)];
        const Elem image = to.colimits[a].legs[p](alpha.at(base[p])(x));
        ensure(v == kNoMorphism || v == image, "Lan of a transformation is not well defined");
        v = image;
      }
    comps.emplace_back(from.functor.size(a), to.functor.size(a), std::move(values));
  }
  return checked_nat(from.functor, to.functor, std::move(comps), "Lan of a transformation");
}

NatTrans ran_unit(const std::shared_ptr<const CommaTable>& commas, const SetFunctor& s) {
  const FinFunctor& k = commas->functor();
  require_shape(s, k.target, "unit argument");
  const auto r = ran_pointwise(commas, restrict(k, s));
  std::vector<FinFunction> comps;
  for (Obj a = 0; a < s.shape->num_objects(); ++a) {
    const auto& arrows = commas->at(a).arrow;
    std::vector<Elem> values;
    for (Elem x = 0; x < s.size(a); ++x) {
      Tuple t;
      for (Mor f : arrows) t.push_back(s.on(f)(x));
      auto found = r.limits[a].find(t);
      ensure(found.has_value(), "unit tuple is not compatible");
      values.push_back(*found);
    }
    comps.emplace_back(s.size(a), r.functor.size(a), std::move(values));
  }
  return checked_nat(s, r.functor, std::move(comps), "Ran unit");
}

NatTrans ran_counit(const std::shared_ptr<const CommaTable>& commas, const SetFunctor& t) {
  const FinFunctor& k = commas->functor();
  const auto r = ran_pointwise(commas, t);
  const FinCategory& a_cat = *k.target;
  std::vector<FinFunction> comps;
  for (Obj b = 0; b < k.source->num_objects(); ++b) {
    const Obj kb = k(b);
    const std::size_t p = commas->index(kb, b, a_cat.identity(kb));
    std::vector<Elem> values;
    for (const Tuple& x : r.limits[kb].tuples) values.push_back(x[p]);
    comps.emplace_back(r.functor.size(kb), t.size(b), std::move(values));
  }
  return checked_nat(restrict(k, r.functor), t, std::move(comps), "Ran counit");
}

NatTrans lan_unit(const std::shared_ptr<const CommaTable>& commas, const SetFunctor& t) {
  const FinFunctor& k = commas->functor();
  const auto l = lan_pointwise(commas, t);
  const FinCategory& a_cat = *k.target;
  std::vector<FinFunction> comps;
  for (Obj b = 0; b < k.source->num_objects(); ++b) {
    const Obj kb = k(b);
    const std::size_t p = commas->index(kb, b, a_cat.identity(kb));
    comps.push_back(l.colimits[kb].legs[p]);
  }
  return checked_nat(t, restrict(k, l.functor), std::move(comps), "Lan unit");
}

NatTrans lan_counit(const std::shared_ptr<const CommaTable>& commas, const SetFunctor& s) {
  const FinFunctor& k = commas->functor();
  require_shape(s, k.target, "counit argument");
  const auto l = lan_pointwise(commas, restrict(k, s));
  std::vector<FinFunction> comps;
  for (Obj a = 0; a < s.shape->num_objects(); ++a) {
    const CommaCategory& c = commas->at(a);
    std::vector<Elem> values(l.functor.size(a), kNoMorphism);
    for (std::size_t p = 0; p < c.base.size(); ++p)
      for (Elem x = 0; x < s.size(k(c.base[p])); ++x) {
        Elem& v = values[l.colimits[a].legs[p](x)];
        const Elem image = s.on(c.arrow[p])(x);
        ensure(v == kNoMorphism || v == image, "Lan counit is not well defined on classes");
        v = image;
      }
    comps.emplace_back(l.functor.size(a), s.size(a), std::move(values));
  }
  return checked_nat(l.functor, s, std::move(comps), "Lan counit");
}

}  // namespace

NatTrans unit_ran(const FinFunctor& k, const SetFunctor& s) {
  return ran_unit(std::make_shared<const CommaTable>(k, CommaTable::Side::Under), s);
}
NatTrans counit_ran(const FinFunctor& k, const SetFunctor& t) {
  return ran_counit(std::make_shared<const CommaTable>(k, CommaTable::Side::Under), t);
}
NatTrans unit_lan(const FinFunctor& k, const SetFunctor& t) {
  return lan_unit(std::make_shared<const CommaTable>(k, CommaTable::Side::Over), t);
}
NatTrans counit_lan(const FinFunctor& k, const SetFunctor& s) {
  return lan_counit(std::make_shared<const CommaTable>(k, CommaTable::Side::Over), s);
}

// ---------------------------------------------------------------------------

RanAdjunction::RanAdjunction(FinFunctor k)
    : k_(std::move(k)), commas_(std::make_shared<const CommaTable>(k_, CommaTable::Side::Under)) {}

SetFunctor RanAdjunction::left(const SetFunctor& c) const { return restrict(k_, c); }
NatTrans RanAdjunction::left(const NatTrans& f) const { return restrict(k_, f); }
SetFunctor RanAdjunction::right(const SetFunctor& d) const { return ran_pointwise(commas_, d).functor; }
NatTrans RanAdjunction::right(const NatTrans& f) const { return ran_on_morphism(commas_, f); }
NatTrans RanAdjunction::unit(const SetFunctor& c) const { return ran_unit(commas_, c); }
NatTrans RanAdjunction::counit(const SetFunctor& d) const { return ran_counit(commas_, d); }

LanAdjunction::LanAdjunction(FinFunctor k)
    : k_(std::move(k)), commas_(std::make_shared<const CommaTable>(k_, CommaTable::Side::Over)) {}

SetFunctor LanAdjunction::left(const SetFunctor& c) const { return lan_pointwise(commas_, c).functor; }
NatTrans LanAdjunction::left(const NatTrans& f) const { return lan_on_morphism(commas_, f); }
SetFunctor LanAdjunction::right(const SetFunctor& d) const { return restrict(k_, d); }
NatTrans LanAdjunction::right(const NatTrans& f) const { return restrict(k_, f); }
NatTrans LanAdjunction::unit(const SetFunctor& c) const { return lan_unit(commas_, c); }
NatTrans LanAdjunction::counit(const SetFunctor& d) const { return lan_counit(commas_, d); }

AdjunctionPtr colim_adjunction(const CategoryPtr& j) {
  return std::make_shared<const LanAdjunction>(to_terminal(j));
}

// ---------------------------------------------------------------------------

namespace {

void compare_with_identity(const NatTrans& composite, TriangleFailure::Identity which,
                           std::size_t probe, TriangleReport& report) {
  for (Obj o = 0; o < composite.components.size(); ++o) {
    const auto& f = composite.at(o);
    if (f == FinFunction::identity(f.domain())) continue;
    report.failures.push_back({which, probe, o,
                               "component at " + composite.source.shape->object_name(o) +
                                   " is not the identity"});
    return;
  }
}

}  // namespace

TriangleReport verify_triangle_identities(const Adjunction& adj,
                                          const std::vector<SetFunctor>& domain_probes,
                                          const std::vector<SetFunctor>& codomain_probes) {
  TriangleReport report;
  for (std::size_t i = 0; i < domain_probes.size(); ++i) {
    ++report.checked;
    try {
      const auto& c = domain_probes[i];
      const NatTrans f_theta = adj.left(adj.unit(c));
      const NatTrans eps_f = adj.counit(adj.left(c));
      compare_with_identity(compose(eps_f, f_theta), TriangleFailure::Identity::Left, i, report);
    } catch (const Error& e) {
      report.failures.push_back({TriangleFailure::Identity::Left, i, 0, e.what()});
    }
  }
  for (std::size_t i = 0; i < codomain_probes.size(); ++i) {
    ++report.checked;
    try {
      const auto& d = codomain_probes[i];
      const NatTrans theta_g = adj.unit(adj.right(d));
      const NatTrans g_eps = adj.right(adj.counit(d));
      compare_with_identity(compose(g_eps, theta_g), TriangleFailure::Identity::Right, i, report);
    } catch (const Error& e) {
      report.failures.push_back({TriangleFailure::Identity::Right, i, 0, e.what()});
    }
  }
  return report;
}

HomSetCounts hom_set_counts(const Adjunction& adj, const SetFunctor& c, const SetFunctor& d,
                            std::size_t cap) {
  return HomSetCounts{count_nat_trans(adj.left(c), d, cap), count_nat_trans(c, adj.right(d), cap)};
}

CogeneratingResult is_cogenerating(const FinFunctor& k) {
  const FinCategory& a = *k.target;
  std::vector<bool> in_image(a.num_objects(), false);
  for (Obj o : k.object_map) in_image[o] = true;
  for (Obj x = 0; x < a.num_objects(); ++x)
    for (Obj y = 0; y < a.num_objects(); ++y) {
      const auto& hom = a.hom(x, y);
      for (std::size_t i = 0; i < hom.size(); ++i)
        for (std::size_t j = i + 1; j < hom.size(); ++j) {
          const Mor f = hom[i], g = hom[j];
          bool separated = false;
          for (Obj z = 0; z < a.num_objects() && !separated; ++z) {
            if (!in_image[z]) continue;
            for (Mor h : a.hom(y, z))
              if (a.compose(h, f) != a.compose(h, g)) {
                separated = true;
                break;
              }
          }
          if (!separated) return CogeneratingResult{false, std::make_pair(f, g)};
        }
    }
  return CogeneratingResult{};
}

}  // namespace fcat
