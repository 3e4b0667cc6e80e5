#include "fcat/category.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

#include "fcat/error.hpp"

namespace fcat {

namespace {

std::string triple_name(const std::vector<FinCategory::Arrow>& arrows, Mor h, Mor g, Mor f) {
  return "(" + arrows[h].id + ", " + arrows[g].id + ", " + arrows[f].id + ")";
}

}  // namespace

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<Arrow> arrows,
                         std::vector<Mor> identities, std::vector<Mor> table) {
  const std::size_t n = objects.size();
  const std::size_t m = arrows.size();

  std::set<std::string> names;
  for (const auto& o : objects)
    if (!names.insert(o).second) fail(ErrorCode::InvalidArgument, "duplicate object id " + o);
  std::set<std::string> ids;
  for (const auto& a : arrows) {
    if (!ids.insert(a.id).second) fail(ErrorCode::InvalidArgument, "duplicate morphism id " + a.id);
    if (a.dom >= n || a.cod >= n) fail(ErrorCode::DanglingDomain, "morphism " + a.id);
  }

  if (identities.size() != n) fail(ErrorCode::MissingIdentity, "identity table has wrong size");
  for (Obj o = 0; o < n; ++o) {
    const Mor e = identities[o];
    if (e >= m || arrows[e].dom != o || arrows[e].cod != o)
      fail(ErrorCode::MissingIdentity, "object " + objects[o]);
  }

  for (Mor g = 0; g < m; ++g) {
    for (Mor f = 0; f < m; ++f) {
      const Mor gf = table[g * m + f];
      if (arrows[f].cod == arrows[g].dom) {
        if (gf == kNoMorphism)
          fail(ErrorCode::PartialCompositionTable,
               "no entry for " + arrows[g].id + " ∘ " + arrows[f].id);
        if (gf >= m || arrows[gf].dom != arrows[f].dom || arrows[gf].cod != arrows[g].cod)
          fail(ErrorCode::PartialCompositionTable,
               "entry for " + arrows[g].id + " ∘ " + arrows[f].id + " has wrong domain/codomain");
      } else if (gf != kNoMorphism) {
        fail(ErrorCode::PartialCompositionTable,
             "entry for non-composable pair " + arrows[g].id + " ∘ " + arrows[f].id);
      }
    }
  }

  for (Mor f = 0; f < m; ++f) {
    if (table[identities[arrows[f].cod] * m + f] != f || table[f * m + identities[arrows[f].dom]] != f)
      fail(ErrorCode::MissingIdentity, "identity law fails at " + arrows[f].id);
  }

  for (Mor f = 0; f < m; ++f) {
    for (Mor g = 0; g < m; ++g) {
      const Mor gf = table[g * m + f];
      if (gf == kNoMorphism) continue;
      for (Mor h = 0; h < m; ++h) {
        const Mor hg = table[h * m + g];
        if (hg == kNoMorphism) continue;
        if (table[h * m + gf] != table[hg * m + f])
          fail(ErrorCode::NonAssociative, triple_name(arrows, h, g, f));
      }
    }
  }

  // Canonical order: (dom, cod), then insertion order.
  std::vector<Mor> order(m);
  std::iota(order.begin(), order.end(), Mor{0});
  std::stable_sort(order.begin(), order.end(), [&](Mor a, Mor b) {
    return std::tie(arrows[a].dom, arrows[a].cod) < std::tie(arrows[b].dom, arrows[b].cod);
  });
  std::vector<Mor> position(m);
  for (Mor i = 0; i < m; ++i) position[order[i]] = i;

  objects_ = std::move(objects);
  arrows_.reserve(m);
  for (Mor i = 0; i < m; ++i) arrows_.push_back(arrows[order[i]]);
  identities_.resize(n);
  for (Obj o = 0; o < n; ++o) identities_[o] = position[identities[o]];
  table_.assign(m * m, kNoMorphism);
  for (Mor g = 0; g < m; ++g)
    for (Mor f = 0; f < m; ++f) {
      const Mor gf = table[order[g] * m + order[f]];
      if (gf != kNoMorphism) table_[g * m + f] = position[gf];
    }

  homs_.assign(n * n, {});
  for (Mor f = 0; f < m; ++f) homs_[arrows_[f].dom * n + arrows_[f].cod].push_back(f);
  for (Obj o = 0; o < n; ++o) object_index_.emplace(objects_[o], o);
  for (Mor f = 0; f < m; ++f) morphism_index_.emplace(arrows_[f].id, f);
}

FinCategory FinCategory::from_entries(std::vector<std::string> objects, std::vector<Arrow> arrows,
                                      std::vector<Mor> identities,
                                      const std::vector<std::tuple<Mor, Mor, Mor>>& entries) {
  const std::size_t m = arrows.size();
  std::vector<Mor> table(m * m, kNoMorphism);
  for (const auto& [g, f, gf] : entries) {
    if (g >= m || f >= m || gf >= m) fail(ErrorCode::DanglingDomain, "composition entry out of range");
    if (arrows[f].cod != arrows[g].dom)
      fail(ErrorCode::PartialCompositionTable,
           "entry for non-composable pair " + arrows[g].id + " ∘ " + arrows[f].id);
    Mor& slot = table[g * m + f];
    if (slot != kNoMorphism && slot != gf)
      fail(ErrorCode::PartialCompositionTable,
           "conflicting entries for " + arrows[g].id + " ∘ " + arrows[f].id);
    slot = gf;
  }
  return FinCategory(std::move(objects), std::move(arrows), std::move(identities), std::move(table));
}

std::optional<Obj> FinCategory::find_object(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Mor> FinCategory::find_morphism(const std::string& id) const {
  auto it = morphism_index_.find(id);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

Obj FinCategory::object(const std::string& name) const {
  auto o = find_object(name);
  if (!o) fail(ErrorCode::DanglingDomain, "unknown object " + name);
  return *o;
}

Mor FinCategory::morphism(const std::string& id) const {
  auto f = find_morphism(id);
  if (!f) fail(ErrorCode::DanglingDomain, "unknown morphism " + id);
  return *f;
}

bool FinCategory::is_preorder() const {
  return std::all_of(homs_.begin(), homs_.end(), [](const auto& h) { return h.size() <= 1; });
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.objects_ != b.objects_ || a.identities_ != b.identities_ || a.table_ != b.table_) return false;
  if (a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.id != y.id || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return true;
}

bool same_category(const CategoryPtr& a, const CategoryPtr& b) {
  return a == b || (a && b && *a == *b);
}

CategoryPtr validate_category(const RawCategory& raw) {
  std::map<std::string, Obj> obj_index;
  for (Obj o = 0; o < raw.objects.size(); ++o) {
    if (!obj_index.emplace(raw.objects[o], o).second)
      fail(ErrorCode::InvalidArgument, "duplicate object id " + raw.objects[o]);
  }
  std::vector<FinCategory::Arrow> arrows;
  std::map<std::string, Mor> mor_index;
  for (const auto& a : raw.morphisms) {
    auto d = obj_index.find(a.dom);
    auto c = obj_index.find(a.cod);
    if (d == obj_index.end() || c == obj_index.end())
      fail(ErrorCode::DanglingDomain, "morphism " + a.id + " refers to an unknown object");
    if (!mor_index.emplace(a.id, arrows.size()).second)
      fail(ErrorCode::InvalidArgument, "duplicate morphism id " + a.id);
    arrows.push_back({a.id, d->second, c->second});
  }
  auto lookup = [&](const std::string& id) {
    auto it = mor_index.find(id);
    if (it == mor_index.end()) fail(ErrorCode::DanglingDomain, "unknown morphism " + id);
    return it->second;
  };
  std::vector<Mor> identities(raw.objects.size(), kNoMorphism);
  for (Obj o = 0; o < raw.objects.size(); ++o) {
    auto it = raw.identities.find(raw.objects[o]);
    if (it == raw.identities.end()) fail(ErrorCode::MissingIdentity, "object " + raw.objects[o]);
    auto f = mor_index.find(it->second);
    if (f == mor_index.end()) fail(ErrorCode::MissingIdentity, "object " + raw.objects[o]);
    identities[o] = f->second;
  }
  for (const auto& [obj, _] : raw.identities)
    if (!obj_index.count(obj)) fail(ErrorCode::DanglingDomain, "identity for unknown object " + obj);
  std::vector<std::tuple<Mor, Mor, Mor>> entries;
  entries.reserve(raw.compose.size());
  for (const auto& [g, f, gf] : raw.compose) entries.emplace_back(lookup(g), lookup(f), lookup(gf));
  return share(FinCategory::from_entries(raw.objects, std::move(arrows), std::move(identities),
                                         entries));
}

RawCategory to_raw(const FinCategory& c) {
  RawCategory raw;
  raw.objects = c.object_names();
  for (const auto& a : c.arrows())
    raw.morphisms.push_back({a.id, c.object_name(a.dom), c.object_name(a.cod)});
  for (Obj o = 0; o < c.num_objects(); ++o)
    raw.identities.emplace(c.object_name(o), c.morphism_id(c.identity(o)));
  for (Mor g = 0; g < c.num_morphisms(); ++g)
    for (Mor f = 0; f < c.num_morphisms(); ++f) {
      const Mor gf = c.compose(g, f);
      if (gf != kNoMorphism) raw.compose.emplace_back(c.morphism_id(g), c.morphism_id(f), c.morphism_id(gf));
    }
  return raw;
}

// ---------------------------------------------------------------------------

namespace {

/// Builds a thin category from a reflexive-transitive relation given as
/// leq(i, j); morphism ids are "i<=j" on object names.
FinCategory thin_category(const std::vector<std::string>& names,
                          const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = names.size();
  std::vector<FinCategory::Arrow> arrows;
  std::vector<std::size_t> index(n * n, kNoMorphism);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j)) {
        index[i * n + j] = arrows.size();
        std::string id = i == j ? "id" + names[i] : names[i] + "<=" + names[j];
        arrows.push_back({std::move(id), i, j});
      }
  std::vector<Mor> identities(n);
  for (std::size_t i = 0; i < n; ++i) identities[i] = index[i * n + i];
  return FinCategory::build(names, arrows, identities, [&](Mor g, Mor f) {
    return index[arrows[f].dom * n + arrows[g].cod];
  });
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

std::string delta_id(std::size_t m, std::size_t k, const std::vector<std::size_t>& values) {
  std::string s = std::to_string(m) + "->" + std::to_string(k) + ":";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(values[i]);
  }
  return s;
}

FinCategory build_delta(std::size_t n) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i <= n; ++i) objects.push_back("[" + std::to_string(i) + "]");
  std::vector<FinCategory::Arrow> arrows;
  std::vector<std::vector<std::size_t>> tables;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, Mor> index;
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::size_t k = 0; k <= n; ++k) {
      // weakly monotone maps [m] -> [k] in lexicographic order
      std::vector<std::size_t> v(m + 1, 0);
      for (;;) {
        index.emplace(std::make_tuple(m, k, v), arrows.size());
        arrows.push_back({delta_id(m, k, v), m, k});
        tables.push_back(v);
        std::size_t i = m + 1;
        bool advanced = false;
        while (i > 0) {
          --i;
          if (v[i] < k) {
            ++v[i];
            for (std::size_t t = i + 1; t <= m; ++t) v[t] = v[i];
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  }
  std::vector<Mor> identities(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<std::size_t> id(m + 1);
    std::iota(id.begin(), id.end(), std::size_t{0});
    identities[m] = index.at(std::make_tuple(m, m, id));
  }
  return FinCategory::build(objects, arrows, identities, [&](Mor g, Mor f) {
    const auto& vf = tables[f];
    const auto& vg = tables[g];
    std::vector<std::size_t> v(vf.size());
    for (std::size_t i = 0; i < vf.size(); ++i) v[i] = vg[vf[i]];
    return index.at(std::make_tuple(arrows[f].dom, arrows[g].cod, v));
  });
}

template <class Make>
CategoryPtr cached(std::map<std::size_t, CategoryPtr>& cache, std::mutex& mu, std::size_t key,
                   Make&& make) {
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto c = make();
  cache.emplace(key, c);
  return c;
}

}  // namespace

CategoryPtr terminal_category() {
  static const CategoryPtr one = share(thin_category({"*"}, [](auto, auto) { return true; }));
  return one;
}

CategoryPtr chain_category(std::size_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "chain_category needs k >= 1");
  return share(thin_category(numbered(k), [](std::size_t i, std::size_t j) { return i <= j; }));
}

CategoryPtr discrete_category(std::size_t n) {
  return share(thin_category(numbered(n), [](std::size_t i, std::size_t j) { return i == j; }));
}

CategoryPtr parallel_pair_category() {
  static const CategoryPtr pp = share(FinCategory::from_entries(
      {"0", "1"}, {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}, {"b", 0, 1}}, {0, 1},
      {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {3, 0, 3}, {1, 2, 2}, {1, 3, 3}}));
  return pp;
}

CategoryPtr cospan_category() {
  static const CategoryPtr cs = share(FinCategory::from_entries(
      {"0", "1", "2"}, {{"id0", 0, 0}, {"id1", 1, 1}, {"id2", 2, 2}, {"u", 0, 2}, {"v", 1, 2}},
      {0, 1, 2},
      {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {3, 0, 3}, {2, 3, 3}, {4, 1, 4}, {2, 4, 4}}));
  return cs;
}

CategoryPtr delta_truncated(std::size_t n) {
  static std::map<std::size_t, CategoryPtr> cache;
  static std::mutex mu;
  return cached(cache, mu, n, [n] { return share(build_delta(n)); });
}

CategoryPtr delta_truncated_op(std::size_t n) {
  static std::map<std::size_t, CategoryPtr> cache;
  static std::mutex mu;
  return cached(cache, mu, n, [n] { return opposite(*delta_truncated(n)); });
}

Mor delta_morphism(const FinCategory& delta, std::size_t m, std::size_t k,
                   const std::vector<std::size_t>& values) {
  return delta.morphism(delta_id(m, k, values));
}

Mor delta_coface(const FinCategory& delta, std::size_t k, std::size_t i) {
  std::vector<std::size_t> v(k + 1);
  for (std::size_t j = 0; j <= k; ++j) v[j] = j < i ? j : j + 1;
  return delta_morphism(delta, k, k + 1, v);
}

Mor delta_codegeneracy(const FinCategory& delta, std::size_t k, std::size_t j) {
  std::vector<std::size_t> v(k + 2);
  for (std::size_t t = 0; t <= k + 1; ++t) v[t] = t <= j ? t : t - 1;
  return delta_morphism(delta, k + 1, k, v);
}

CategoryPtr opposite(const FinCategory& c) {
  std::vector<FinCategory::Arrow> arrows;
  arrows.reserve(c.num_morphisms());
  for (const auto& a : c.arrows()) arrows.push_back({a.id, a.cod, a.dom});
  std::vector<Mor> identities(c.num_objects());
  for (Obj o = 0; o < c.num_objects(); ++o) identities[o] = c.identity(o);
  return share(FinCategory::build(c.object_names(), std::move(arrows), std::move(identities),
                                  [&](Mor g, Mor f) { return c.compose(f, g); }));
}

// ---------------------------------------------------------------------------

FinFunctor validate_functor(CategoryPtr source, CategoryPtr target, std::vector<Obj> object_map,
                            std::vector<Mor> morphism_map) {
  const auto& s = *source;
  const auto& t = *target;
  if (object_map.size() != s.num_objects() || morphism_map.size() != s.num_morphisms())
    fail(ErrorCode::InvalidArgument, "functor tables do not cover the source category");
  for (Obj o : object_map)
    if (o >= t.num_objects()) fail(ErrorCode::DanglingDomain, "object image out of range");
  for (Mor f = 0; f < s.num_morphisms(); ++f) {
    const Mor kf = morphism_map[f];
    if (kf >= t.num_morphisms()) fail(ErrorCode::DanglingDomain, "morphism image out of range");
    if (t.dom(kf) != object_map[s.dom(f)] || t.cod(kf) != object_map[s.cod(f)])
      fail(ErrorCode::DanglingDomain, "morphism " + s.morphism_id(f) + " lands on the wrong hom-set");
  }
  for (Obj o = 0; o < s.num_objects(); ++o)
    if (morphism_map[s.identity(o)] != t.identity(object_map[o]))
      fail(ErrorCode::IdentityViolated, "object " + s.object_name(o));
  for (Mor g = 0; g < s.num_morphisms(); ++g)
    for (Mor f = 0; f < s.num_morphisms(); ++f) {
      const Mor gf = s.compose(g, f);
      if (gf == kNoMorphism) continue;
      if (morphism_map[gf] != t.compose(morphism_map[g], morphism_map[f]))
        fail(ErrorCode::CompositionViolated, "(" + s.morphism_id(g) + ", " + s.morphism_id(f) + ")");
    }
  return FinFunctor{std::move(source), std::move(target), std::move(object_map),
                    std::move(morphism_map)};
}

FinFunctor identity_functor(const CategoryPtr& c) {
  std::vector<Obj> objs(c->num_objects());
  std::iota(objs.begin(), objs.end(), Obj{0});
  std::vector<Mor> mors(c->num_morphisms());
  std::iota(mors.begin(), mors.end(), Mor{0});
  return FinFunctor{c, c, std::move(objs), std::move(mors)};
}

FinFunctor to_terminal(const CategoryPtr& c) {
  return FinFunctor{c, terminal_category(), std::vector<Obj>(c->num_objects(), 0),
                    std::vector<Mor>(c->num_morphisms(), 0)};
}

FinFunctor delta_op_inclusion(std::size_t m, std::size_t n) {
  if (m > n) fail(ErrorCode::InvalidArgument, "delta_op_inclusion needs m <= n");
  auto small = delta_truncated_op(m);
  auto big = delta_truncated_op(n);
  std::vector<Obj> objs(small->num_objects());
  std::iota(objs.begin(), objs.end(), Obj{0});
  std::vector<Mor> mors(small->num_morphisms());
  for (Mor f = 0; f < small->num_morphisms(); ++f) mors[f] = big->morphism(small->morphism_id(f));
  return validate_functor(small, big, std::move(objs), std::move(mors));
}

// ---------------------------------------------------------------------------

namespace {

/// Shared construction of both comma categories. `arrows_for(b)` lists the
/// morphisms that form comma objects over b; `connects(v, f, f2)` decides
/// whether v: b -> b2 is a comma morphism (b,f) -> (b2,f2).
template <class ArrowsFor, class Connects>
CommaCategory build_comma(const FinFunctor& k, ArrowsFor&& arrows_for, Connects&& connects) {
  const FinCategory& b_cat = *k.source;
  const FinCategory& a_cat = *k.target;
  std::vector<std::string> names;
  std::vector<Obj> base;
  std::vector<Mor> arrow;
  for (Obj b = 0; b < b_cat.num_objects(); ++b) {
    for (Mor f : arrows_for(b)) {
      names.push_back("(" + b_cat.object_name(b) + "," + a_cat.morphism_id(f) + ")");
      base.push_back(b);
      arrow.push_back(f);
    }
  }
  const std::size_t n = names.size();
  std::vector<FinCategory::Arrow> arrows;
  std::vector<Mor> underlying;
  std::map<std::tuple<std::size_t, std::size_t, Mor>, Mor> index;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (Mor v : b_cat.hom(base[p], base[q])) {
        if (!connects(v, arrow[p], arrow[q])) continue;
        index.emplace(std::make_tuple(p, q, v), arrows.size());
        arrows.push_back({b_cat.morphism_id(v) + "@" + std::to_string(p) + ">" + std::to_string(q), p, q});
        underlying.push_back(v);
      }
  std::vector<Mor> identities(n);
  for (std::size_t p = 0; p < n; ++p)
    identities[p] = index.at(std::make_tuple(p, p, b_cat.identity(base[p])));
  auto cat = FinCategory::build(names, arrows, identities, [&](Mor g, Mor f) {
    return index.at(std::make_tuple(arrows[f].dom, arrows[g].cod,
                                    b_cat.compose(underlying[g], underlying[f])));
  });
  auto shared = share(std::move(cat));
  std::vector<Mor> proj(shared->num_morphisms());
  for (Mor f = 0; f < shared->num_morphisms(); ++f) {
    // ids were assigned before canonical re-sorting; recover by id
    const auto& id = shared->morphism_id(f);
    const auto at = id.rfind('@');
    proj[f] = b_cat.morphism(id.substr(0, at));
  }
  FinFunctor projection{shared, k.source, base, std::move(proj)};
  return CommaCategory{std::move(shared), std::move(projection), std::move(base), std::move(arrow)};
}

}  // namespace

CommaCategory comma_under(Obj a, const FinFunctor& k) {
  const FinCategory& a_cat = *k.target;
  return build_comma(
      k, [&](Obj b) { return a_cat.hom(a, k(b)); },
      [&](Mor v, Mor f, Mor f2) { return a_cat.compose(k.on_morphism(v), f) == f2; });
}

CommaCategory comma_over(const FinFunctor& k, Obj a) {
  const FinCategory& a_cat = *k.target;
  return build_comma(
      k, [&](Obj b) { return a_cat.hom(k(b), a); },
      [&](Mor v, Mor f, Mor f2) { return a_cat.compose(f2, k.on_morphism(v)) == f; });
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> connected_components(const FinCategory& c) {
  std::vector<std::size_t> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : c.arrows()) {
    auto x = find(a.dom), y = find(a.cod);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<std::size_t> label(c.num_objects());
  std::map<std::size_t, std::size_t> numbering;
  for (Obj o = 0; o < c.num_objects(); ++o) {
    auto r = find(o);
    auto [it, _] = numbering.emplace(r, numbering.size());
    label[o] = it->second;
  }
  return label;
}

std::string PseudoFilteredReport::describe(const FinCategory& c) const {
  switch (violation) {
    case Violation::None: return "pseudo-filtered";
    case Violation::NoCospan:
      return "objects " + c.object_name(first) + " and " + c.object_name(second) +
             " share a component but have no cospan";
    case Violation::NotCoequalized:
      return "parallel morphisms " + c.morphism_id(first) + " and " + c.morphism_id(second) +
             " are not coequalized";
  }
  return {};
}

PseudoFilteredReport is_pseudo_filtered(const FinCategory& c) {
  const auto comp = connected_components(c);
  const std::size_t n = c.num_objects();
  for (Obj i = 0; i < n; ++i)
    for (Obj j = i + 1; j < n; ++j) {
      if (comp[i] != comp[j]) continue;
      bool found = false;
      for (Obj k = 0; k < n && !found; ++k) found = !c.hom(i, k).empty() && !c.hom(j, k).empty();
      if (!found) return {false, PseudoFilteredReport::Violation::NoCospan, i, j};
    }
  for (Obj i = 0; i < n; ++i)
    for (Obj j = 0; j < n; ++j) {
      const auto& h = c.hom(i, j);
      for (std::size_t x = 0; x < h.size(); ++x)
        for (std::size_t y = x + 1; y < h.size(); ++y) {
          bool found = false;
          for (Obj k = 0; k < n && !found; ++k)
            for (Mor w : c.hom(j, k))
              if (c.compose(w, h[x]) == c.compose(w, h[y])) {
                found = true;
                break;
              }
          if (!found) return {false, PseudoFilteredReport::Violation::NotCoequalized, h[x], h[y]};
        }
    }
  return {};
}

bool is_mono_in_category(const FinCategory& c, Mor u) {
  const Obj d = c.dom(u);
  for (Obj x = 0; x < c.num_objects(); ++x) {
    const auto& h = c.hom(x, d);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        if (c.compose(u, h[i]) == c.compose(u, h[j])) return false;
  }
  return true;
}

std::optional<FinFunctor> find_isomorphism(const CategoryPtr& ap, const CategoryPtr& bp) {
  const FinCategory& a = *ap;
  const FinCategory& b = *bp;
  const std::size_t n = a.num_objects();
  const std::size_t m = a.num_morphisms();
  if (n != b.num_objects() || m != b.num_morphisms()) return std::nullopt;

  std::vector<Obj> objs(n);
  std::iota(objs.begin(), objs.end(), Obj{0});
  std::vector<Mor> phi(m, kNoMorphism);
  std::vector<bool> used(m, false);

  // Checks every composition constraint that involves f and is fully assigned.
  auto consistent = [&](Mor f) {
    for (Mor g = 0; g < m; ++g) {
      if (phi[g] == kNoMorphism) continue;
      Mor gf = a.compose(g, f);
      if (gf != kNoMorphism && phi[gf] != kNoMorphism && b.compose(phi[g], phi[f]) != phi[gf])
        return false;
      Mor fg = a.compose(f, g);
      if (fg != kNoMorphism && phi[fg] != kNoMorphism && b.compose(phi[f], phi[g]) != phi[fg])
        return false;
      for (Mor h = 0; h < m; ++h) {
        if (phi[h] == kNoMorphism) continue;
        if (a.compose(g, h) == f && b.compose(phi[g], phi[h]) != phi[f]) return false;
      }
    }
    return true;
  };

  std::function<bool(Mor)> assign = [&](Mor f) -> bool {
    if (f == m) return true;
    if (a.is_identity(f)) {
      phi[f] = b.identity(objs[a.dom(f)]);
      if (consistent(f) && assign(f + 1)) return true;
      phi[f] = kNoMorphism;
      return false;
    }
    for (Mor x : b.hom(objs[a.dom(f)], objs[a.cod(f)])) {
      if (used[x] || b.is_identity(x)) continue;
      phi[f] = x;
      used[x] = true;
      if (consistent(f) && assign(f + 1)) return true;
      used[x] = false;
      phi[f] = kNoMorphism;
    }
    return false;
  };

  do {
    bool sizes_match = true;
    for (Obj i = 0; i < n && sizes_match; ++i)
      for (Obj j = 0; j < n && sizes_match; ++j)
        sizes_match = a.hom(i, j).size() == b.hom(objs[i], objs[j]).size();
    if (!sizes_match) continue;
    std::fill(phi.begin(), phi.end(), kNoMorphism);
    std::fill(used.begin(), used.end(), false);
    for (Obj o = 0; o < n; ++o) used[b.identity(objs[o])] = true;
    if (assign(0)) return FinFunctor{ap, bp, objs, phi};
  } while (std::next_permutation(objs.begin(), objs.end()));
  return std::nullopt;
}

}  // namespace fcat
