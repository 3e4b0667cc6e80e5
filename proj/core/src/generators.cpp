#include "fcat/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fcat/error.hpp"

namespace fcat {

CategoryPtr poset_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relation) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) fail(ErrorCode::InvalidArgument, "relation mentions a missing element");
    leq[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  std::vector<FinCategory::Arrow> arrows;
  std::map<std::pair<std::size_t, std::size_t>, Mor> index;
  std::vector<Mor> identities(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      if (i != j && leq[j][i]) fail(ErrorCode::InvalidArgument, "relation is not antisymmetric");
      index[{i, j}] = arrows.size();
      if (i == j) identities[i] = arrows.size();
      arrows.push_back({i == j ? "id" + std::to_string(i) : std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  return share(FinCategory::build(objects, arrows, identities, [&](Mor g, Mor f) {
    return index.at({arrows[f].dom, arrows[g].cod});
  }));
}

CategoryPtr monoid_category(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  std::vector<FinCategory::Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({"e" + std::to_string(i), 0, 0});
  return share(FinCategory::build({"*"}, arrows, {0}, [&](Mor g, Mor f) { return table[g][f]; }));
}

CategoryPtr cyclic_group_category(std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) table[g][f] = (g + f) % n;
  return monoid_category(table);
}

CategoryPtr idempotent_monoid_category() { return monoid_category({{0, 1}, {1, 1}}); }

CategoryPtr free_category(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  for (auto [a, b] : edges)
    if (a >= n || b >= n || a >= b) fail(ErrorCode::InvalidArgument, "free_category needs edges i -> j with i < j");
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  // paths as edge sequences; identities are the empty paths at each object
  std::vector<std::vector<std::size_t>> paths;
  std::vector<FinCategory::Arrow> arrows;
  std::vector<Mor> identities(n);
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, Mor> index;
  auto add = [&](std::size_t from, std::size_t to, std::vector<std::size_t> path) {
    std::string id;
    if (path.empty()) {
      id = "id" + std::to_string(from);
    } else {
      for (std::size_t e : path) id += (id.empty() ? "e" : ".e") + std::to_string(e);
    }
    index[{from, path}] = arrows.size();
    arrows.push_back({id, from, to});
    paths.push_back(std::move(path));
  };
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> walk =
      [&](std::size_t from, std::size_t at, std::vector<std::size_t>& path) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          if (edges[e].first != at) continue;
          path.push_back(e);
          add(from, edges[e].second, path);
          walk(from, edges[e].second, path);
          path.pop_back();
        }
      };
  for (std::size_t o = 0; o < n; ++o) {
    identities[o] = arrows.size();
    add(o, o, {});
    std::vector<std::size_t> path;
    walk(o, o, path);
  }
  return share(FinCategory::build(objects, arrows, identities, [&](Mor g, Mor f) {
    std::vector<std::size_t> path = paths[f];
    path.insert(path.end(), paths[g].begin(), paths[g].end());
    return index.at({arrows[f].dom, path});
  }));
}

CategoryPtr split_idempotent_category() {
  // 0 id_a, 1 id_b, 2 r: a -> b, 3 s: b -> a, 4 e = r∘s: b -> b
  std::vector<FinCategory::Arrow> arrows{{"id_a", 0, 0}, {"id_b", 1, 1}, {"r", 0, 1}, {"s", 1, 0}, {"e", 1, 1}};
  std::vector<std::tuple<Mor, Mor, Mor>> entries{
      {0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}, {3, 1, 3}, {0, 3, 3}, {4, 1, 4}, {1, 4, 4},
      {3, 2, 0}, {2, 3, 4}, {4, 4, 4}, {4, 2, 2}, {3, 4, 3}};
  return share(FinCategory::from_entries({"a", "b"}, arrows, {0, 1}, entries));
}

namespace {

void add_unique(std::vector<CategoryPtr>& out, const CategoryPtr& c) {
  for (const auto& d : out)
    if (d->num_objects() == c->num_objects() && d->num_morphisms() == c->num_morphisms() &&
        find_isomorphism(d, c))
      return;
  out.push_back(c);
}

}  // namespace

std::vector<CategoryPtr> all_posets(std::size_t max_objects) {
  std::vector<CategoryPtr> out;
  for (std::size_t n = 1; n <= max_objects; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> rel;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask >> b & 1) rel.push_back(pairs[b]);
      auto c = poset_category(n, rel);
      // only transitively closed masks, so each labelled poset is seen once
      if (c->num_morphisms() != n + rel.size()) continue;
      add_unique(out, c);
    }
  }
  return out;
}

std::vector<CategoryPtr> pseudo_filtered_shapes(std::size_t max_objects) {
  std::vector<CategoryPtr> out;
  for (const auto& c : all_posets(max_objects))
    if (is_pseudo_filtered(*c).ok) out.push_back(c);
  out.push_back(idempotent_monoid_category());
  if (max_objects >= 2) out.push_back(split_idempotent_category());
  return out;
}

std::vector<CategoryPtr> category_corpus(std::size_t max_objects, std::size_t max_morphisms) {
  std::vector<CategoryPtr> candidates = all_posets(max_objects);
  // free categories on acyclic multigraphs with up to two parallel edges
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_objects, 3); ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::size_t> mult(pairs.size(), 0);
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t k = 0; k < mult[p]; ++k) edges.push_back(pairs[p]);
      candidates.push_back(free_category(n, edges));
      std::size_t p = 0;
      while (p < mult.size() && ++mult[p] > 2) mult[p++] = 0;
      if (p == mult.size()) break;
    }
  }
  candidates.push_back(cyclic_group_category(2));
  candidates.push_back(cyclic_group_category(3));
  candidates.push_back(idempotent_monoid_category());
  candidates.push_back(monoid_category({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));  // left zeros
  candidates.push_back(monoid_category({{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}));  // right zeros
  candidates.push_back(monoid_category({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}));  // a∘a = 0
  candidates.push_back(split_idempotent_category());
  candidates.push_back(delta_truncated(1));
  candidates.push_back(delta_truncated_op(1));
  candidates.push_back(parallel_pair_category());
  std::vector<CategoryPtr> out;
  for (const auto& c : candidates)
    if (c->num_objects() <= max_objects && c->num_morphisms() <= max_morphisms) add_unique(out, c);
  return out;
}

// ---------------------------------------------------------------------------

CategoryPtr random_poset(Rng& rng, std::size_t max_objects, double edge_probability) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(max_objects, 1));
  std::bernoulli_distribution edge(edge_probability);
  const std::size_t n = size(rng);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rel.emplace_back(order[i], order[j]);
  return poset_category(n, rel);
}

CategoryPtr random_pseudo_filtered_poset(Rng& rng, std::size_t max_objects) {
  for (;;) {
    auto c = random_poset(rng, max_objects, 0.5);
    if (is_pseudo_filtered(*c).ok) return c;
  }
}

namespace {

/// Backtracking search for the structure maps of a functor with given set
/// sizes. Returns false when the budget runs out or no functor exists.
class FunctorSearch {
 public:
  FunctorSearch(Rng& rng, const FinCategory& c, const std::vector<std::size_t>& sizes, std::size_t budget)
      : rng_(rng), c_(c), sizes_(sizes), budget_(budget), values_(c.num_morphisms()) {
    for (Mor m = 0; m < c.num_morphisms(); ++m) {
      values_[m].assign(sizes[c.dom(m)], kNoMorphism);
      if (c.is_identity(m)) {
        std::iota(values_[m].begin(), values_[m].end(), Elem{0});
      } else {
        for (Elem x = 0; x < sizes[c.dom(m)]; ++x) vars_.emplace_back(m, x);
      }
    }
    factorizations_.resize(c.num_morphisms());
    for (Mor g = 0; g < c.num_morphisms(); ++g)
      for (Mor f = 0; f < c.num_morphisms(); ++f) {
        const Mor h = c.compose(g, f);
        if (h == kNoMorphism || c.is_identity(g) || c.is_identity(f)) continue;
        factorizations_[h].emplace_back(g, f);
        after_[f].emplace_back(g, h);
        before_[g].emplace_back(f, h);
      }
  }

  std::optional<std::vector<FinFunction>> run() {
    if (!solve(0)) return std::nullopt;
    std::vector<FinFunction> maps;
    for (Mor m = 0; m < c_.num_morphisms(); ++m)
      maps.emplace_back(sizes_[c_.dom(m)], sizes_[c_.cod(m)], values_[m]);
    return maps;
  }

 private:
  bool known(Mor m, Elem x) const { return values_[m][x] != kNoMorphism; }

  bool consistent(Mor m, Elem x) const {
    const Elem v = values_[m][x];
    if (auto it = after_.find(m); it != after_.end())
      for (auto [g, h] : it->second)
        if (known(g, v) && known(h, x) && values_[g][v] != values_[h][x]) return false;
    if (auto it = before_.find(m); it != before_.end())
      for (auto [f, h] : it->second)
        for (Elem y = 0; y < sizes_[c_.dom(f)]; ++y)
          if (values_[f][y] == x && known(h, y) && values_[h][y] != v) return false;
    for (auto [g, f] : factorizations_[m])
      if (known(f, x) && known(g, values_[f][x]) && values_[g][values_[f][x]] != v) return false;
    return true;
  }

  bool solve(std::size_t i) {
    if (i == vars_.size()) return true;
    if (nodes_++ > budget_) return false;
    const auto [m, x] = vars_[i];
    std::vector<Elem> candidates(sizes_[c_.cod(m)]);
    std::iota(candidates.begin(), candidates.end(), Elem{0});
    std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (Elem v : candidates) {
      values_[m][x] = v;
      if (consistent(m, x) && solve(i + 1)) return true;
    }
    values_[m][x] = kNoMorphism;
    return false;
  }

  Rng& rng_;
  const FinCategory& c_;
  const std::vector<std::size_t>& sizes_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<Elem>> values_;
  std::vector<std::pair<Mor, Elem>> vars_;
  std::vector<std::vector<std::pair<Mor, Mor>>> factorizations_;
  std::map<Mor, std::vector<std::pair<Mor, Mor>>> after_;   // f -> (g, g∘f)
  std::map<Mor, std::vector<std::pair<Mor, Mor>>> before_;  // g -> (f, g∘f)
};

}  // namespace

SetFunctor random_set_functor(Rng& rng, const CategoryPtr& shape, std::size_t max_set) {
  const FinCategory& c = *shape;
  std::uniform_int_distribution<std::size_t> size(0, max_set);
  for (;;) {
    std::vector<std::size_t> sizes(c.num_objects());
    for (auto& s : sizes) s = size(rng);
    FunctorSearch search(rng, c, sizes, 20000);
    if (auto maps = search.run()) {
      std::vector<FinSet> sets;
      for (std::size_t s : sizes) sets.emplace_back(s);
      return validate_set_functor(shape, std::move(sets), std::move(*maps));
    }
  }
}

std::optional<NatTrans> random_nat_trans(Rng& rng, const SetFunctor& f, const SetFunctor& g) {
  std::optional<NatTrans> out;
  NatSearchOptions options;
  options.shuffle = [&](std::vector<Elem>& v) { std::shuffle(v.begin(), v.end(), rng); };
  search_nat_trans(f, g, options, [&](const NatTrans& t) {
    out = t;
    return false;
  });
  return out;
}

FinFunctor random_functor(Rng& rng, const CategoryPtr& b, const CategoryPtr& a) {
  const FinCategory& src = *b;
  const FinCategory& dst = *a;
  if (dst.num_objects() == 0) {
    if (src.num_objects() == 0) return FinFunctor{b, a, {}, {}};
    fail(ErrorCode::InvalidArgument, "no functor into the empty category");
  }
  std::vector<Obj> objects(src.num_objects());
  std::vector<Mor> morphisms(src.num_morphisms(), kNoMorphism);
  std::vector<Mor> order;
  for (Mor m = 0; m < src.num_morphisms(); ++m)
    if (!src.is_identity(m)) order.push_back(m);
  std::size_t nodes = 0;
  auto consistent = [&](Mor m) {
    for (Mor g = 0; g < src.num_morphisms(); ++g)
      for (Mor f = 0; f < src.num_morphisms(); ++f) {
        if (g != m && f != m && src.compose(g, f) != m) continue;
        const Mor h = src.compose(g, f);
        if (h == kNoMorphism) continue;
        if (morphisms[g] == kNoMorphism || morphisms[f] == kNoMorphism || morphisms[h] == kNoMorphism) continue;
        if (dst.compose(morphisms[g], morphisms[f]) != morphisms[h]) return false;
      }
    return true;
  };
  std::function<bool(std::size_t)> assign_morphisms = [&](std::size_t i) {
    if (i == order.size()) return true;
    if (nodes++ > 20000) return false;
    const Mor m = order[i];
    std::vector<Mor> candidates = dst.hom(objects[src.dom(m)], objects[src.cod(m)]);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (Mor v : candidates) {
      morphisms[m] = v;
      if (consistent(m) && assign_morphisms(i + 1)) return true;
    }
    morphisms[m] = kNoMorphism;
    return false;
  };
  std::uniform_int_distribution<Obj> pick(0, dst.num_objects() - 1);
  for (int attempt = 0; attempt < 50; ++attempt) {
    for (auto& o : objects) o = pick(rng);
    std::fill(morphisms.begin(), morphisms.end(), kNoMorphism);
    for (Obj o = 0; o < src.num_objects(); ++o) morphisms[src.identity(o)] = dst.identity(objects[o]);
    nodes = 0;
    if (assign_morphisms(0)) return validate_functor(b, a, objects, morphisms);
  }
  const Obj target = pick(rng);
  std::vector<Obj> constant_objects(src.num_objects(), target);
  std::vector<Mor> constant_morphisms(src.num_morphisms(), dst.identity(target));
  return validate_functor(b, a, std::move(constant_objects), std::move(constant_morphisms));
}

}  // namespace fcat
