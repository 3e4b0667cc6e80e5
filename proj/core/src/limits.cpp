#include "fcat/limits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fcat/error.hpp"

namespace fcat {

std::optional<Elem> Limit::find(const Tuple& t) const {
  auto it = index.find(t);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Limit limit(const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  const std::size_t n = c.num_objects();
  // For each object i, the morphisms whose later endpoint is i.
  std::vector<std::vector<Mor>> checks(n);
  std::vector<std::optional<Mor>> forcing(n);  // some m: d -> i with d < i
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    if (c.is_identity(m)) continue;
    const Obj a = c.dom(m), b = c.cod(m);
    checks[std::max(a, b)].push_back(m);
    if (a < b && !forcing[b]) forcing[b] = m;
  }

  Limit out;
  Tuple current(n, 0);
  auto consistent = [&](Obj i) {
    for (Mor m : checks[i])
      if (d.on(m)(current[c.dom(m)]) != current[c.cod(m)]) return false;
    return true;
  };
  std::function<void(Obj)> rec = [&](Obj i) {
    if (i == n) {
      out.index.emplace(current, out.tuples.size());
      out.tuples.push_back(current);
      return;
    }
    if (forcing[i]) {
      const Mor m = *forcing[i];
      current[i] = d.on(m)(current[c.dom(m)]);
      if (consistent(i)) rec(i + 1);
      return;
    }
    for (Elem x = 0; x < d.size(i); ++x) {
      current[i] = x;
      if (consistent(i)) rec(i + 1);
    }
  };
  rec(0);

  out.cone.apex = FinSet(out.tuples.size());
  for (Obj i = 0; i < n; ++i) {
    std::vector<Elem> values;
    values.reserve(out.tuples.size());
    for (const auto& t : out.tuples) values.push_back(t[i]);
    out.cone.legs.emplace_back(out.tuples.size(), d.size(i), std::move(values));
  }
  return out;
}

namespace {

std::vector<std::size_t> offsets_of(const SetFunctor& d) {
  std::vector<std::size_t> offset(d.shape->num_objects() + 1, 0);
  for (Obj o = 0; o < d.shape->num_objects(); ++o) offset[o + 1] = offset[o] + d.size(o);
  return offset;
}

/// Turns a class assignment on the disjoint union into a cocone whose
/// classes are numbered by smallest member.
Cocone cocone_from_classes(const SetFunctor& d, const std::vector<std::size_t>& offset,
                           const std::vector<std::size_t>& representative) {
  std::vector<std::size_t> number(representative.size(), kNoMorphism);
  std::size_t classes = 0;
  for (std::size_t g = 0; g < representative.size(); ++g) {
    const std::size_t r = representative[g];
    if (number[r] == kNoMorphism) number[r] = classes++;
  }
  Cocone out;
  out.nadir = FinSet(classes);
  for (Obj o = 0; o < d.shape->num_objects(); ++o) {
    std::vector<Elem> values;
    for (Elem x = 0; x < d.size(o); ++x) values.push_back(number[representative[offset[o] + x]]);
    out.legs.emplace_back(d.size(o), classes, std::move(values));
  }
  return out;
}

}  // namespace

Cocone colimit(const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  const auto offset = offsets_of(d);
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    const Obj a = c.dom(m), b = c.cod(m);
    for (Elem x = 0; x < d.size(a); ++x) {
      const auto p = find(offset[a] + x);
      const auto q = find(offset[b] + d.on(m)(x));
      if (p != q) parent[std::max(p, q)] = std::min(p, q);
    }
  }
  std::vector<std::size_t> rep(parent.size());
  for (std::size_t g = 0; g < parent.size(); ++g) rep[g] = find(g);
  return cocone_from_classes(d, offset, rep);
}

Cocone filtered_colimit(const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  const auto report = is_pseudo_filtered(c);
  if (!report.ok) fail(ErrorCode::NotPseudoFiltered, report.describe(c));

  const auto offset = offsets_of(d);
  const std::size_t total = offset.back();
  // reach[g]: every (k, D(u)(x)) for u: j -> k, where g = (j, x)
  std::vector<std::set<std::pair<Obj, Elem>>> reach(total);
  for (Obj j = 0; j < c.num_objects(); ++j)
    for (Elem x = 0; x < d.size(j); ++x)
      for (Obj k = 0; k < c.num_objects(); ++k)
        for (Mor u : c.hom(j, k)) reach[offset[j] + x].emplace(k, d.on(u)(x));
  auto related = [&](std::size_t a, std::size_t b) {
    const auto& sa = reach[a];
    const auto& sb = reach[b];
    return std::any_of(sa.begin(), sa.end(), [&](const auto& p) { return sb.count(p) > 0; });
  };

  std::vector<std::size_t> rep(total, kNoMorphism);
  for (std::size_t a = 0; a < total; ++a) {
    if (rep[a] == kNoMorphism) rep[a] = a;
    for (std::size_t b = a + 1; b < total; ++b)
      if (rep[b] == kNoMorphism && related(a, b)) rep[b] = rep[a];
  }
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b)
      ensure(related(a, b) == (rep[a] == rep[b]),
             "zigzag relation is not an equivalence on a pseudo-filtered shape");
  return cocone_from_classes(d, offset, rep);
}

SetFunctor cospan_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.codomain() != g.codomain()) fail(ErrorCode::InvalidArgument, "cospan legs need a common codomain");
  auto shape = cospan_category();
  std::vector<FinSet> sets{FinSet(f.domain()), FinSet(g.domain()), FinSet(f.codomain())};
  std::vector<FinFunction> maps(shape->num_morphisms());
  for (Obj o = 0; o < 3; ++o) maps[shape->identity(o)] = FinFunction::identity(sets[o].size);
  maps[shape->morphism("u")] = f;
  maps[shape->morphism("v")] = g;
  return validate_set_functor(shape, std::move(sets), std::move(maps));
}

SetFunctor parallel_pair_diagram(const FinFunction& f, const FinFunction& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    fail(ErrorCode::InvalidArgument, "parallel pair needs equal domains and codomains");
  auto shape = parallel_pair_category();
  std::vector<FinSet> sets{FinSet(f.domain()), FinSet(f.codomain())};
  std::vector<FinFunction> maps(shape->num_morphisms());
  for (Obj o = 0; o < 2; ++o) maps[shape->identity(o)] = FinFunction::identity(sets[o].size);
  maps[shape->morphism("a")] = f;
  maps[shape->morphism("b")] = g;
  return validate_set_functor(shape, std::move(sets), std::move(maps));
}

SetFunctor discrete_diagram(const std::vector<FinSet>& sets) {
  auto shape = discrete_category(sets.size());
  std::vector<FinFunction> maps;
  for (const auto& s : sets) maps.push_back(FinFunction::identity(s.size));
  return validate_set_functor(shape, sets, std::move(maps));
}

Cone pullback(const FinFunction& f, const FinFunction& g) { return limit(cospan_diagram(f, g)).cone; }

Cone product(const std::vector<FinSet>& factors) { return limit(discrete_diagram(factors)).cone; }

Cone equalizer(const FinFunction& f, const FinFunction& g) {
  return limit(parallel_pair_diagram(f, g)).cone;
}

Cone terminal() { return limit(discrete_diagram({})).cone; }

void check_cone(const Cone& cone, const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  if (cone.legs.size() != c.num_objects()) fail(ErrorCode::NotACone, "wrong number of legs");
  for (Obj o = 0; o < c.num_objects(); ++o)
    if (cone.legs[o].domain() != cone.apex.size || cone.legs[o].codomain() != d.size(o))
      fail(ErrorCode::NotACone, "leg at " + c.object_name(o) + " has the wrong type");
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (compose(d.on(m), cone.legs[c.dom(m)]) != cone.legs[c.cod(m)])
      fail(ErrorCode::NotACone, c.morphism_id(m));
}

void check_cocone(const Cocone& cocone, const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  if (cocone.legs.size() != c.num_objects()) fail(ErrorCode::NotACone, "wrong number of legs");
  for (Obj o = 0; o < c.num_objects(); ++o)
    if (cocone.legs[o].domain() != d.size(o) || cocone.legs[o].codomain() != cocone.nadir.size)
      fail(ErrorCode::NotACone, "leg at " + c.object_name(o) + " has the wrong type");
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (compose(cocone.legs[c.cod(m)], d.on(m)) != cocone.legs[c.dom(m)])
      fail(ErrorCode::NotACone, c.morphism_id(m));
}

bool is_limiting_cone(const Cone& cone, const SetFunctor& d) {
  check_cone(cone, d);
  const Limit lim = limit(d);
  if (lim.tuples.size() != cone.apex.size) return false;
  std::vector<bool> hit(lim.tuples.size(), false);
  for (Elem a = 0; a < cone.apex.size; ++a) {
    Tuple t(d.shape->num_objects());
    for (Obj o = 0; o < t.size(); ++o) t[o] = cone.legs[o](a);
    const auto idx = lim.find(t);
    ensure(idx.has_value(), "cone tuple missing from the limit");
    if (hit[*idx]) return false;
    hit[*idx] = true;
  }
  return true;
}

FunctorPullback pullback(const NatTrans& f, const NatTrans& g) {
  if (!(f.target == g.target)) fail(ErrorCode::ShapeMismatch, "pullback legs need a common codomain");
  const SetFunctor& x = f.source;
  const SetFunctor& y = g.source;
  const FinCategory& c = *x.shape;
  std::vector<Limit> pieces;
  std::vector<FinSet> sets;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    pieces.push_back(limit(cospan_diagram(f.at(o), g.at(o))));
    sets.emplace_back(pieces.back().tuples.size());
  }
  std::vector<FinFunction> maps;
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    const Obj a = c.dom(m), b = c.cod(m);
    std::vector<Elem> values;
    for (const auto& t : pieces[a].tuples) {
      const Elem xx = x.on(m)(t[0]);
      const Elem yy = y.on(m)(t[1]);
      const auto idx = pieces[b].find({xx, yy, f.target.on(m)(t[2])});
      ensure(idx.has_value(), "componentwise pullback is not functorial");
      values.push_back(*idx);
    }
    maps.emplace_back(sets[a].size, sets[b].size, std::move(values));
  }
  SetFunctor apex{x.shape, std::move(sets), std::move(maps)};
  std::vector<FinFunction> left, right;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    left.push_back(pieces[o].cone.legs[0]);
    right.push_back(pieces[o].cone.legs[1]);
  }
  return FunctorPullback{apex, NatTrans{apex, x, std::move(left)}, NatTrans{apex, y, std::move(right)}};
}

NatTrans pullback_pairing(const FunctorPullback& pb, const NatTrans& left, const NatTrans& right) {
  const SetFunctor& w = left.source;
  const FinCategory& c = *w.shape;
  std::vector<FinFunction> comps;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    std::map<std::pair<Elem, Elem>, Elem> index;
    for (Elem p = 0; p < pb.apex.size(o); ++p) index.emplace(std::make_pair(pb.to_left.at(o)(p), pb.to_right.at(o)(p)), p);
    std::vector<Elem> values;
    for (Elem x = 0; x < w.size(o); ++x) {
      auto it = index.find({left.at(o)(x), right.at(o)(x)});
      if (it == index.end())
        fail(ErrorCode::SquareNotCommutative, "legs disagree at " + c.object_name(o));
      values.push_back(it->second);
    }
    comps.emplace_back(w.size(o), pb.apex.size(o), std::move(values));
  }
  return NatTrans{w, pb.apex, std::move(comps)};
}

bool is_pullback_square(const NatTrans& q, const NatTrans& p, const NatTrans& f, const NatTrans& g) {
  const FinCategory& c = *q.source.shape;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    Cone cone{q.source.at(o), {q.at(o), p.at(o), compose(f.at(o), q.at(o))}};
    if (!is_limiting_cone(cone, cospan_diagram(f.at(o), g.at(o)))) return false;
  }
  return true;
}

}  // namespace fcat
