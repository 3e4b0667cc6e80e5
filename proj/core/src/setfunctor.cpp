#include "fcat/setfunctor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "fcat/error.hpp"

namespace fcat {

std::vector<std::size_t> SetFunctor::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.size);
  return out;
}

std::size_t SetFunctor::total_size() const {
  std::size_t n = 0;
  for (const auto& s : sets) n += s.size;
  return n;
}

bool operator==(const SetFunctor& a, const SetFunctor& b) {
  return same_category(a.shape, b.shape) && a.sizes() == b.sizes() && a.maps == b.maps;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.components == b.components && a.source == b.source && a.target == b.target;
}

SetFunctor validate_set_functor(CategoryPtr shape, std::vector<FinSet> sets,
                                std::vector<FinFunction> maps) {
  const FinCategory& c = *shape;
  if (sets.size() != c.num_objects())
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(c.num_objects()) + " sets");
  if (maps.size() != c.num_morphisms())
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(c.num_morphisms()) + " maps");
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    if (maps[f].domain() != sets[c.dom(f)].size || maps[f].codomain() != sets[c.cod(f)].size)
      fail(ErrorCode::NotFunction, "map for " + c.morphism_id(f) + " has the wrong domain or codomain");
  }
  for (Obj o = 0; o < c.num_objects(); ++o)
    if (maps[c.identity(o)] != FinFunction::identity(sets[o].size))
      fail(ErrorCode::IdentityViolated, c.object_name(o));
  for (Mor g = 0; g < c.num_morphisms(); ++g)
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
      const Mor gf = c.compose(g, f);
      if (gf == kNoMorphism) continue;
      if (maps[gf] != compose(maps[g], maps[f]))
        fail(ErrorCode::CompositionViolated, "(" + c.morphism_id(g) + ", " + c.morphism_id(f) + ")");
    }
  return SetFunctor{std::move(shape), std::move(sets), std::move(maps)};
}

NatTrans validate_nat_trans(SetFunctor source, SetFunctor target,
                            std::vector<FinFunction> components) {
  if (!same_category(source.shape, target.shape))
    fail(ErrorCode::ShapeMismatch, "source and target have different shapes");
  const FinCategory& c = *source.shape;
  if (components.size() != c.num_objects())
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(c.num_objects()) + " components");
  for (Obj o = 0; o < c.num_objects(); ++o)
    if (components[o].domain() != source.size(o) || components[o].codomain() != target.size(o))
      fail(ErrorCode::NotFunction, "component at " + c.object_name(o) + " has the wrong type");
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    const auto lhs = compose(target.on(f), components[c.dom(f)]);
    const auto rhs = compose(components[c.cod(f)], source.on(f));
    if (lhs != rhs) fail(ErrorCode::NaturalityViolated, c.morphism_id(f));
  }
  return NatTrans{std::move(source), std::move(target), std::move(components)};
}

SetFunctor constant_functor(const CategoryPtr& shape, const FinSet& set) {
  std::vector<FinSet> sets(shape->num_objects(), set);
  std::vector<FinFunction> maps(shape->num_morphisms(), FinFunction::identity(set.size));
  return SetFunctor{shape, std::move(sets), std::move(maps)};
}

SetFunctor representable(const CategoryPtr& shape, Obj j) {
  const FinCategory& c = *shape;
  std::vector<FinSet> sets;
  sets.reserve(c.num_objects());
  for (Obj k = 0; k < c.num_objects(); ++k) {
    std::vector<std::string> names;
    for (Mor h : c.hom(j, k)) names.push_back(c.morphism_id(h));
    sets.emplace_back(std::move(names));
  }
  std::vector<FinFunction> maps;
  maps.reserve(c.num_morphisms());
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    const auto& from = c.hom(j, c.dom(f));
    const auto& to = c.hom(j, c.cod(f));
    std::vector<Elem> values;
    values.reserve(from.size());
    for (Mor h : from) {
      const Mor fh = c.compose(f, h);
      values.push_back(static_cast<Elem>(std::find(to.begin(), to.end(), fh) - to.begin()));
    }
    maps.emplace_back(from.size(), to.size(), std::move(values));
  }
  return SetFunctor{shape, std::move(sets), std::move(maps)};
}

NatTrans identity_nat(const SetFunctor& f) {
  std::vector<FinFunction> comps;
  for (const auto& s : f.sets) comps.push_back(FinFunction::identity(s.size));
  return NatTrans{f, f, std::move(comps)};
}

NatTrans compose(const NatTrans& beta, const NatTrans& alpha) {
  if (!(alpha.target == beta.source))
    fail(ErrorCode::ShapeMismatch, "vertical composite of non-composable transformations");
  std::vector<FinFunction> comps;
  for (std::size_t o = 0; o < alpha.components.size(); ++o)
    comps.push_back(compose(beta.components[o], alpha.components[o]));
  return NatTrans{alpha.source, beta.target, std::move(comps)};
}

bool is_epi(const NatTrans& alpha) {
  return std::all_of(alpha.components.begin(), alpha.components.end(),
                     [](const FinFunction& f) { return f.is_surjective(); });
}

bool is_mono(const NatTrans& alpha) {
  return std::all_of(alpha.components.begin(), alpha.components.end(),
                     [](const FinFunction& f) { return f.is_injective(); });
}

bool is_iso(const NatTrans& alpha) {
  return std::all_of(alpha.components.begin(), alpha.components.end(),
                     [](const FinFunction& f) { return f.is_bijective(); });
}

FactorizationResult factorize(const NatTrans& alpha) {
  const FinCategory& c = *alpha.source.shape;
  const std::size_t n = c.num_objects();
  std::vector<std::vector<Elem>> image(n);
  std::vector<std::vector<Elem>> rank(n);  // codomain element -> position in image
  std::vector<FinSet> sets;
  for (Obj o = 0; o < n; ++o) {
    image[o] = alpha.at(o).image();
    rank[o].assign(alpha.target.size(o), kNoMorphism);
    for (std::size_t i = 0; i < image[o].size(); ++i) rank[o][image[o][i]] = i;
    const FinSet& cod = alpha.target.at(o);
    if (cod.has_labels()) {
      std::vector<std::string> names;
      for (Elem y : image[o]) names.push_back(cod.labels[y]);
      sets.emplace_back(std::move(names));
    } else {
      sets.emplace_back(image[o].size());
    }
  }
  std::vector<FinFunction> maps;
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    const Obj d = c.dom(f), k = c.cod(f);
    std::vector<Elem> values;
    for (Elem y : image[d]) {
      const Elem r = rank[k][alpha.target.on(f)(y)];
      ensure(r != kNoMorphism, "image of a natural transformation is not a subfunctor");
      values.push_back(r);
    }
    maps.emplace_back(image[d].size(), image[k].size(), std::move(values));
  }
  SetFunctor mid{alpha.source.shape, std::move(sets), std::move(maps)};
  std::vector<FinFunction> e, m;
  for (Obj o = 0; o < n; ++o) {
    std::vector<Elem> ev;
    for (Elem x = 0; x < alpha.source.size(o); ++x) ev.push_back(rank[o][alpha.at(o)(x)]);
    e.emplace_back(alpha.source.size(o), image[o].size(), std::move(ev));
    m.emplace_back(image[o].size(), alpha.target.size(o), image[o]);
  }
  return FactorizationResult{NatTrans{alpha.source, mid, std::move(e)}, mid,
                             NatTrans{mid, alpha.target, std::move(m)}};
}

// ---------------------------------------------------------------------------

namespace {

class NatSearch {
 public:
  NatSearch(const SetFunctor& f, const SetFunctor& g, const NatSearchOptions& options,
            const std::function<bool(const NatTrans&)>& visit)
      : f_(f), g_(g), options_(options), visit_(visit) {
    const FinCategory& c = *f.shape;
    offset_.resize(c.num_objects() + 1, 0);
    for (Obj o = 0; o < c.num_objects(); ++o) offset_[o + 1] = offset_[o] + f.size(o);
    const std::size_t vars = offset_.back();
    object_of_.resize(vars);
    for (Obj o = 0; o < c.num_objects(); ++o)
      for (std::size_t i = offset_[o]; i < offset_[o + 1]; ++i) object_of_[i] = o;
    value_.assign(vars, 0);
    // constraint: G(f)(w[a]) == w[b] with b = F(f)(a); checked when the later
    // of a, b gets assigned
    checks_.resize(vars);
    for (Mor m = 0; m < c.num_morphisms(); ++m) {
      if (c.is_identity(m)) continue;
      const Obj d = c.dom(m), k = c.cod(m);
      for (Elem x = 0; x < f.size(d); ++x) {
        const std::size_t a = offset_[d] + x;
        const std::size_t b = offset_[k] + f.on(m)(x);
        checks_[std::max(a, b)].push_back({a, b, m});
      }
    }
  }

  void run() { step(0); }

 private:
  struct Check {
    std::size_t a, b;
    Mor m;
  };

  bool step(std::size_t var) {
    if (var == value_.size()) return emit();
    const Obj o = object_of_[var];
    std::vector<Elem> candidates;
    const std::vector<Elem>* allowed = nullptr;
    if (options_.allowed) {
      const auto& per_obj = (*options_.allowed)[o];
      if (!per_obj.empty()) allowed = &per_obj[var - offset_[o]];
    }
    if (allowed) {
      candidates = *allowed;
    } else {
      candidates.resize(g_.size(o));
      std::iota(candidates.begin(), candidates.end(), Elem{0});
    }
    if (options_.shuffle) options_.shuffle(candidates);
    for (Elem y : candidates) {
      value_[var] = y;
      bool ok = true;
      for (const auto& ch : checks_[var]) {
        if (g_.on(ch.m)(value_[ch.a]) != value_[ch.b]) {
          ok = false;
          break;
        }
      }
      if (ok && !step(var + 1)) return false;
    }
    return true;
  }

  bool emit() {
    const FinCategory& c = *f_.shape;
    std::vector<FinFunction> comps;
    comps.reserve(c.num_objects());
    for (Obj o = 0; o < c.num_objects(); ++o)
      comps.emplace_back(f_.size(o), g_.size(o),
                         std::vector<Elem>(value_.begin() + static_cast<std::ptrdiff_t>(offset_[o]),
                                           value_.begin() + static_cast<std::ptrdiff_t>(offset_[o + 1])));
    return visit_(NatTrans{f_, g_, std::move(comps)});
  }

  const SetFunctor& f_;
  const SetFunctor& g_;
  const NatSearchOptions& options_;
  const std::function<bool(const NatTrans&)>& visit_;
  std::vector<std::size_t> offset_;
  std::vector<Obj> object_of_;
  std::vector<Elem> value_;
  std::vector<std::vector<Check>> checks_;
};

}  // namespace

void search_nat_trans(const SetFunctor& f, const SetFunctor& g, const NatSearchOptions& options,
                      const std::function<bool(const NatTrans&)>& visit) {
  if (!same_category(f.shape, g.shape)) fail(ErrorCode::ShapeMismatch, "search_nat_trans");
  NatSearch(f, g, options, visit).run();
}

std::size_t count_nat_trans(const SetFunctor& f, const SetFunctor& g, std::size_t cap) {
  std::size_t count = 0;
  search_nat_trans(f, g, {}, [&](const NatTrans&) { return ++count < cap; });
  return count;
}

OrthogonalityResult check_orthogonal(const NatTrans& e, const NatTrans& m, const NatTrans& u,
                                     const NatTrans& v) {
  if (!(e.source == u.source) || !(e.target == v.source) || !(m.source == u.target) ||
      !(m.target == v.target))
    fail(ErrorCode::ShapeMismatch, "square edges do not match up");
  if (!(compose(v, e) == compose(m, u))) fail(ErrorCode::SquareNotCommutative, "v·e != m·u");

  const SetFunctor& b = e.target;
  const SetFunctor& c = m.source;
  const FinCategory& shape = *b.shape;
  Candidates allowed(shape.num_objects());
  OrthogonalityResult result;
  for (Obj o = 0; o < shape.num_objects(); ++o) {
    allowed[o].resize(b.size(o));
    std::vector<std::vector<Elem>> forced(b.size(o));
    for (Elem a = 0; a < e.source.size(o); ++a) forced[e.at(o)(a)].push_back(u.at(o)(a));
    for (Elem y = 0; y < b.size(o); ++y) {
      auto& cand = allowed[o][y];
      for (Elem z = 0; z < c.size(o); ++z) {
        if (m.at(o)(z) != v.at(o)(y)) continue;
        if (std::all_of(forced[y].begin(), forced[y].end(), [z](Elem w) { return w == z; }))
          cand.push_back(z);
      }
      if (cand.empty() && result.witness.empty()) {
        result.witness = "no admissible value for element " + b.at(o).label(y) + " at object " +
                         shape.object_name(o);
      }
    }
  }
  std::vector<NatTrans> found;
  NatSearchOptions options;
  options.allowed = &allowed;
  search_nat_trans(b, c, options, [&](const NatTrans& w) {
    found.push_back(w);
    return found.size() < 2;
  });
  if (found.empty()) {
    result.status = OrthogonalityResult::Status::NoDiagonal;
    if (result.witness.empty()) result.witness = "no natural choice of diagonal";
  } else if (found.size() == 1) {
    result.status = OrthogonalityResult::Status::Unique;
    result.diagonal = std::move(found[0]);
    result.witness.clear();
  } else {
    result.status = OrthogonalityResult::Status::MultipleDiagonals;
    result.diagonal = std::move(found[0]);
    result.second = std::move(found[1]);
    for (Obj o = 0; o < shape.num_objects() && result.witness.empty(); ++o)
      if (result.diagonal->at(o) != result.second->at(o))
        result.witness = "two diagonals differ at object " + shape.object_name(o);
  }
  return result;
}

Coproduct coproduct(const CategoryPtr& shape, const std::vector<SetFunctor>& family) {
  const FinCategory& c = *shape;
  for (const auto& f : family)
    if (!same_category(f.shape, shape)) fail(ErrorCode::ShapeMismatch, "coproduct summand shape");
  const bool labelled = std::any_of(family.begin(), family.end(), [](const SetFunctor& f) {
    return std::any_of(f.sets.begin(), f.sets.end(), [](const FinSet& s) { return s.has_labels(); });
  });
  // offsets[i][o]: start of summand i inside the sum at object o
  std::vector<std::vector<std::size_t>> offsets(family.size(), std::vector<std::size_t>(c.num_objects()));
  std::vector<FinSet> sets;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    std::size_t total = 0;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < family.size(); ++i) {
      offsets[i][o] = total;
      total += family[i].size(o);
      if (labelled)
        for (Elem x = 0; x < family[i].size(o); ++x)
          names.push_back(std::to_string(i) + "." + family[i].at(o).label(x));
    }
    sets.push_back(labelled ? FinSet(std::move(names)) : FinSet(total));
  }
  std::vector<FinFunction> maps;
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    std::vector<Elem> values;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (Elem x = 0; x < family[i].size(c.dom(f)); ++x)
        values.push_back(offsets[i][c.cod(f)] + family[i].on(f)(x));
    maps.emplace_back(sets[c.dom(f)].size, sets[c.cod(f)].size, std::move(values));
  }
  SetFunctor sum{shape, std::move(sets), std::move(maps)};
  std::vector<NatTrans> injections;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<FinFunction> comps;
    for (Obj o = 0; o < c.num_objects(); ++o) {
      std::vector<Elem> values(family[i].size(o));
      std::iota(values.begin(), values.end(), offsets[i][o]);
      comps.emplace_back(family[i].size(o), sum.size(o), std::move(values));
    }
    injections.push_back(NatTrans{family[i], sum, std::move(comps)});
  }
  return Coproduct{std::move(sum), std::move(injections)};
}

NatTrans copair(const Coproduct& c, const std::vector<NatTrans>& legs) {
  if (legs.size() != c.injections.size()) fail(ErrorCode::ShapeMismatch, "copair: wrong number of legs");
  const FinCategory& shape = *c.sum.shape;
  if (legs.empty()) {
    fail(ErrorCode::InvalidArgument, "copair of an empty family needs an explicit codomain");
  }
  const SetFunctor& x = legs.front().target;
  std::vector<FinFunction> comps;
  for (Obj o = 0; o < shape.num_objects(); ++o) {
    std::vector<Elem> values;
    for (std::size_t i = 0; i < legs.size(); ++i) {
      if (!(legs[i].source == c.injections[i].source) || !(legs[i].target == x))
        fail(ErrorCode::ShapeMismatch, "copair leg " + std::to_string(i));
      for (Elem e : legs[i].at(o).values()) values.push_back(e);
    }
    comps.emplace_back(c.sum.size(o), x.size(o), std::move(values));
  }
  return NatTrans{c.sum, x, std::move(comps)};
}

std::vector<NatTrans> subfunctor_inclusions(const SetFunctor& f, std::size_t cap) {
  const FinCategory& c = *f.shape;
  const std::size_t n = c.num_objects();
  for (Obj o = 0; o < n; ++o)
    if (f.size(o) >= 63) fail(ErrorCode::InvalidArgument, "subfunctor enumeration needs sets below 63 elements");
  std::vector<std::uint64_t> mask(n, 0);
  std::vector<NatTrans> out;

  auto closed = [&](Obj upto) {
    for (Mor m = 0; m < c.num_morphisms(); ++m) {
      const Obj d = c.dom(m), k = c.cod(m);
      if (d > upto || k > upto) continue;
      for (Elem x = 0; x < f.size(d); ++x)
        if ((mask[d] >> x & 1U) && !(mask[k] >> f.on(m)(x) & 1U)) return false;
    }
    return true;
  };

  auto emit = [&] {
    std::vector<FinSet> sets;
    std::vector<std::vector<Elem>> members(n);
    std::vector<std::vector<Elem>> rank(n);
    for (Obj o = 0; o < n; ++o) {
      rank[o].assign(f.size(o), 0);
      std::vector<std::string> names;
      for (Elem x = 0; x < f.size(o); ++x)
        if (mask[o] >> x & 1U) {
          rank[o][x] = members[o].size();
          members[o].push_back(x);
          if (f.at(o).has_labels()) names.push_back(f.at(o).labels[x]);
        }
      sets.push_back(f.at(o).has_labels() ? FinSet(std::move(names)) : FinSet(members[o].size()));
    }
    std::vector<FinFunction> maps;
    for (Mor m = 0; m < c.num_morphisms(); ++m) {
      std::vector<Elem> values;
      for (Elem x : members[c.dom(m)]) values.push_back(rank[c.cod(m)][f.on(m)(x)]);
      maps.emplace_back(members[c.dom(m)].size(), members[c.cod(m)].size(), std::move(values));
    }
    SetFunctor sub{f.shape, std::move(sets), std::move(maps)};
    std::vector<FinFunction> comps;
    for (Obj o = 0; o < n; ++o) comps.emplace_back(members[o].size(), f.size(o), members[o]);
    out.push_back(NatTrans{std::move(sub), f, std::move(comps)});
  };

  std::function<void(Obj)> rec = [&](Obj o) {
    if (out.size() >= cap) return;
    if (o == n) {
      emit();
      return;
    }
    const std::uint64_t limit = std::uint64_t{1} << f.size(o);
    for (std::uint64_t bits = 0; bits < limit && out.size() < cap; ++bits) {
      mask[o] = bits;
      if (closed(o)) rec(o + 1);
    }
    mask[o] = 0;
  };
  rec(0);
  return out;
}

}  // namespace fcat
