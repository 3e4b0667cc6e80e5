#include "fcat/reflect.hpp"

#include "fcat/error.hpp"

namespace fcat {

InducedReflection::InducedReflection(AdjunctionPtr adjunction) : adjunction_(std::move(adjunction)) {
  if (!adjunction_) fail(ErrorCode::InvalidArgument, "null adjunction");
}

ReflectedObject reflect_object(const InducedReflection& r, const SetFunctor& c) {
  if (!same_category(c.shape, r.shape()))
    fail(ErrorCode::ShapeMismatch, "object is not on the reflection's shape");
  NatTrans theta = r.adjunction().unit(c);
  auto fact = factorize(theta);
  return ReflectedObject{std::move(fact.mid), std::move(fact.e), std::move(fact.m), std::move(theta)};
}

NatTrans reflect_morphism(const InducedReflection& r, const NatTrans& f) {
  const auto from = reflect_object(r, f.source);
  const auto to = reflect_object(r, f.target);
  const FinCategory& c = *f.source.shape;
  // η_C is surjective, so I(f) is determined by I(f)(η_C(x)) = η_C'(f(x)).
  std::vector<FinFunction> comps;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    std::vector<Elem> values(from.object.size(o), kNoMorphism);
    for (Elem x = 0; x < f.source.size(o); ++x) {
      Elem& v = values[from.eta.at(o)(x)];
      const Elem image = to.eta.at(o)(f.at(o)(x));
      ensure(v == kNoMorphism || v == image, "no diagonal through the unit factorization");
      v = image;
    }
    comps.emplace_back(from.object.size(o), to.object.size(o), std::move(values));
  }
  NatTrans out{from.object, to.object, std::move(comps)};
  const Adjunction& adj = r.adjunction();
  const NatTrans gf = adj.right(adj.left(f));
  for (Obj o = 0; o < c.num_objects(); ++o)
    ensure(compose(to.mu.at(o), out.at(o)) == compose(gf.at(o), from.mu.at(o)),
           "diagonal does not commute with the mono parts");
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    ensure(compose(to.object.on(m), out.at(c.dom(m))) == compose(out.at(c.cod(m)), from.object.on(m)),
           "reflected morphism is not natural");
  return out;
}

bool in_subcategory(const InducedReflection& r, const SetFunctor& c) {
  if (!same_category(c.shape, r.shape()))
    fail(ErrorCode::ShapeMismatch, "object is not on the reflection's shape");
  return is_mono(r.adjunction().unit(c));
}

bool is_in_E_I(const InducedReflection& r, const NatTrans& f) { return is_iso(reflect_morphism(r, f)); }

bool is_in_M_I(const InducedReflection& r, const NatTrans& f) {
  const auto from = reflect_object(r, f.source);
  const auto to = reflect_object(r, f.target);
  const NatTrans i_f = reflect_morphism(r, f);
  return is_pullback_square(from.eta, f, i_f, to.eta);
}

ReflectiveFactorization reflective_factorization(const InducedReflection& r, const NatTrans& f) {
  const auto from = reflect_object(r, f.source);
  const auto to = reflect_object(r, f.target);
  const NatTrans i_f = reflect_morphism(r, f);
  const FunctorPullback pb = pullback(to.eta, i_f);
  NatTrans e = pullback_pairing(pb, f, from.eta);
  NatTrans m = pb.to_left;
  ensure(compose(m, e) == f, "reflective factorization does not compose to f");
  if (!is_in_E_I(r, e)) fail(ErrorCode::VerificationFailed, "left factor is not in E_I");
  if (!is_in_M_I(r, m)) fail(ErrorCode::VerificationFailed, "right factor is not in M_I");
  return ReflectiveFactorization{pb.apex, std::move(e), std::move(m)};
}

StableUnitsReport check_stable_units_instance(const InducedReflection& r, const SetFunctor& c,
                                              const NatTrans& g) {
  const auto rc = reflect_object(r, c);
  if (!(g.target == rc.object)) fail(ErrorCode::ShapeMismatch, "g must land in I(C)");
  StableUnitsReport out{pullback(g, rc.eta)};
  const NatTrans& pulled = out.square.to_left;
  out.stable = is_in_E_I(r, pulled);
  out.unit_epi = is_epi(rc.eta);
  out.pulled_back_epi = is_epi(pulled);
  const Adjunction& adj = r.adjunction();
  auto gf = [&](const NatTrans& t) { return adj.right(adj.left(t)); };
  out.gf_preserves = is_pullback_square(gf(pulled), gf(out.square.to_right), gf(g), gf(rc.eta));
  return out;
}

EPrimeResult is_in_E_prime_falsify(const InducedReflection& r, const NatTrans& f,
                                   const std::vector<NatTrans>& probes) {
  if (!is_in_E_I(r, f)) fail(ErrorCode::FNotInEI, "the morphism is not in E_I");
  EPrimeResult out;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (!(probes[i].target == f.target))
      fail(ErrorCode::ShapeMismatch, "probe " + std::to_string(i) + " does not share f's codomain");
    ++out.probes_checked;
    NatTrans pulled = pullback(f, probes[i]).to_right;
    if (!is_in_E_I(r, pulled)) {
      out.passed = false;
      out.probe = i;
      out.pulled_back = std::move(pulled);
      return out;
    }
  }
  return out;
}

std::vector<NatTrans> default_probes(const SetFunctor& target, std::size_t cap) {
  std::vector<NatTrans> probes = subfunctor_inclusions(target, cap);
  if (probes.size() < cap) probes.push_back(canonical_presentation(target).p);
  return probes;
}

bool is_in_M_star(const InducedReflection& r, const NatTrans& f, const NatTrans& p) {
  if (!(p.target == f.target)) fail(ErrorCode::ShapeMismatch, "cover must share f's codomain");
  if (!is_epi(p)) fail(ErrorCode::CoverNotEpi, "cover is not componentwise surjective");
  if (!in_subcategory(r, p.source))
    fail(ErrorCode::CoverDomainNotInSubcategory, "cover domain is not in Mono(F)");
  return is_in_M_I(r, pullback(f, p).to_right);
}

NatTrans yoneda_map(const SetFunctor& m, Obj j, Elem x) {
  const FinCategory& c = *m.shape;
  SetFunctor rep = representable(m.shape, j);
  std::vector<FinFunction> comps;
  for (Obj k = 0; k < c.num_objects(); ++k) {
    std::vector<Elem> values;
    for (Mor h : c.hom(j, k)) values.push_back(m.on(h)(x));
    comps.emplace_back(values.size(), m.size(k), std::move(values));
  }
  return NatTrans{std::move(rep), m, std::move(comps)};
}

Presentation canonical_presentation(const SetFunctor& m) {
  const FinCategory& c = *m.shape;
  std::vector<SetFunctor> family;
  std::vector<std::pair<Obj, Elem>> summands;
  for (Obj j = 0; j < c.num_objects(); ++j)
    for (Elem x = 0; x < m.size(j); ++x) {
      family.push_back(representable(m.shape, j));
      summands.emplace_back(j, x);
    }
  Coproduct cover = coproduct(m.shape, family);
  std::vector<FinFunction> comps;
  for (Obj k = 0; k < c.num_objects(); ++k) {
    std::vector<Elem> values;
    for (const auto& [j, x] : summands)
      for (Mor h : c.hom(j, k)) values.push_back(m.on(h)(x));
    comps.emplace_back(values.size(), m.size(k), std::move(values));
  }
  NatTrans p{cover.sum, m, std::move(comps)};
  return Presentation{std::move(cover), std::move(summands), std::move(p)};
}

}  // namespace fcat
