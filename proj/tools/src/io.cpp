#include "fcat_cli/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "fcat/error.hpp"
#include "fcat/generators.hpp"

namespace fcat::cli {

namespace {

void expect(bool ok, const std::string& at, const std::string& what) {
  if (!ok) throw MalformedInput(at, what);
}

const Json& field(const Json& j, const std::string& key, const std::string& at) {
  expect(j.is_object(), at, "expected an object");
  auto it = j.find(key);
  expect(it != j.end(), child(at, key), "missing field");
  return *it;
}

std::string read_string(const Json& j, const std::string& at) {
  expect(j.is_string(), at, "expected a string");
  return j.get<std::string>();
}

std::size_t read_index(const Json& j, const std::string& at) {
  expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), at,
         "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string scalar_label(const Json& j, const std::string& at) {
  if (j.is_string()) return j.get<std::string>();
  expect(j.is_number_integer(), at, "expected a label (string or integer)");
  return std::to_string(j.get<long long>());
}

std::size_t parse_size(const std::string& text, const std::string& ref) {
  std::size_t pos = 0;
  std::size_t n = 0;
  try {
    n = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw MalformedInput("", "bad category reference " + ref);
  return n;
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~') out += "~0";
    else if (ch == '/') out += "~1";
    else out += ch;
  }
  return out;
}

Obj object_at(const FinCategory& c, const std::string& name, const std::string& at) {
  auto o = c.find_object(name);
  expect(o.has_value(), at, "unknown object " + name);
  return *o;
}

Mor morphism_at(const FinCategory& c, const std::string& id, const std::string& at) {
  auto f = c.find_morphism(id);
  expect(f.has_value(), at, "unknown morphism " + id);
  return *f;
}

/// Inline value or a file reference resolved through the workspace.
Json deref(const Json& j, const std::string& at, const Workspace& ws) {
  if (!j.is_string()) return j;
  try {
    return ws.load(j.get<std::string>());
  } catch (const MalformedInput&) {
    throw;
  } catch (const std::exception& e) {
    throw MalformedInput(at, e.what());
  }
}

}  // namespace

std::string child(const std::string& base, const std::string& key) {
  return base + "/" + escape_pointer(key);
}

std::string child(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

Workspace::Workspace(std::filesystem::path root) : root_(std::move(root)) {
  for (const char* ref : {"one", "parallel-pair", "cospan", "delta-op:0", "delta-op:3"}) category(ref);
}

Json Workspace::load(const std::string& path) const {
  std::stringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::filesystem::path p(path);
    if (p.is_relative()) p = root_ / p;
    std::ifstream in(p);
    if (!in) throw MalformedInput("", "cannot open " + p.string());
    text << in.rdbuf();
  }
  try {
    return Json::parse(text.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput("", std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

CategoryPtr Workspace::builtin(const std::string& ref) const {
  const auto colon = ref.find(':');
  const std::string head = ref.substr(0, colon);
  const bool has_arg = colon != std::string::npos;
  auto arg = [&] { return parse_size(ref.substr(colon + 1), ref); };
  if (!has_arg) {
    if (head == "one") return terminal_category();
    if (head == "two") return chain_category(2);
    if (head == "parallel-pair") return parallel_pair_category();
    if (head == "cospan") return cospan_category();
    if (head == "split-idempotent") return split_idempotent_category();
    if (head == "idempotent") return idempotent_monoid_category();
    return nullptr;
  }
  if (head == "chain") return chain_category(arg());
  if (head == "discrete") return discrete_category(arg());
  if (head == "delta") return delta_truncated(arg());
  if (head == "delta-op") return delta_truncated_op(arg());
  if (head == "cyclic") return cyclic_group_category(arg());
  return nullptr;
}

CategoryPtr Workspace::category(const std::string& ref) {
  if (auto it = cache_.find(ref); it != cache_.end()) return it->second;
  CategoryPtr c = builtin(ref);
  if (!c) c = read_category(load(ref), "", *this);
  cache_.emplace(ref, c);
  names_.emplace(c.get(), ref);
  return c;
}

std::string Workspace::name_of(const CategoryPtr& c) const {
  auto it = names_.find(c.get());
  return it == names_.end() ? std::string() : it->second;
}

RawCategory read_raw_category(const Json& j, const std::string& at) {
  RawCategory raw;
  const Json& objects = field(j, "objects", at);
  expect(objects.is_array(), child(at, "objects"), "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i)
    raw.objects.push_back(read_string(objects[i], child(child(at, "objects"), i)));
  const Json& morphisms = field(j, "morphisms", at);
  expect(morphisms.is_array(), child(at, "morphisms"), "expected an array");
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const std::string here = child(child(at, "morphisms"), i);
    raw.morphisms.push_back({read_string(field(morphisms[i], "id", here), child(here, "id")),
                             read_string(field(morphisms[i], "dom", here), child(here, "dom")),
                             read_string(field(morphisms[i], "cod", here), child(here, "cod"))});
  }
  const Json& identities = field(j, "identities", at);
  expect(identities.is_object(), child(at, "identities"), "expected an object");
  for (const auto& [obj, id] : identities.items())
    raw.identities.emplace(obj, read_string(id, child(child(at, "identities"), obj)));
  const Json& compose = field(j, "compose", at);
  expect(compose.is_array(), child(at, "compose"), "expected an array");
  for (std::size_t i = 0; i < compose.size(); ++i) {
    const std::string here = child(child(at, "compose"), i);
    expect(compose[i].is_array() && compose[i].size() == 3, here, "expected [g, f, g∘f]");
    raw.compose.emplace_back(read_string(compose[i][0], child(here, 0)),
                             read_string(compose[i][1], child(here, 1)),
                             read_string(compose[i][2], child(here, 2)));
  }
  return raw;
}

CategoryPtr read_category(const Json& j, const std::string& at, Workspace& ws) {
  if (j.is_string()) {
    try {
      return ws.category(j.get<std::string>());
    } catch (const MalformedInput& e) {
      if (!e.pointer().empty()) throw;
      throw MalformedInput(at, e.detail());
    }
  }
  return validate_category(read_raw_category(j, at));
}

SetFunctor read_functor(const Json& input, const std::string& at, Workspace& ws) {
  const Json j = deref(input, at, ws);
  CategoryPtr shape = read_category(field(j, "shape", at), child(at, "shape"), ws);
  const FinCategory& c = *shape;
  const Json& sets = field(j, "sets", at);
  expect(sets.is_object(), child(at, "sets"), "expected an object keyed by object");
  std::vector<FinSet> out_sets(c.num_objects());
  std::vector<bool> seen(c.num_objects(), false);
  for (const auto& [name, value] : sets.items()) {
    const std::string here = child(child(at, "sets"), name);
    const Obj o = object_at(c, name, here);
    seen[o] = true;
    if (value.is_array()) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < value.size(); ++i) names.push_back(scalar_label(value[i], child(here, i)));
      try {
        out_sets[o] = FinSet(std::move(names));
      } catch (const Error& e) {
        throw MalformedInput(here, e.what());
      }
    } else {
      out_sets[o] = FinSet(read_index(value, here));
    }
  }
  for (Obj o = 0; o < c.num_objects(); ++o)
    expect(seen[o], child(at, "sets"), "no set for object " + c.object_name(o));
  const Json empty = Json::object();
  const Json& maps = j.contains("maps") ? j["maps"] : empty;
  expect(maps.is_object(), child(at, "maps"), "expected an object keyed by morphism");
  std::vector<FinFunction> out_maps(c.num_morphisms());
  std::vector<bool> given(c.num_morphisms(), false);
  for (const auto& [id, value] : maps.items()) {
    const std::string here = child(child(at, "maps"), id);
    const Mor f = morphism_at(c, id, here);
    expect(value.is_array(), here, "expected an array of indices");
    const std::size_t n = out_sets[c.dom(f)].size;
    expect(value.size() == n, here, "expected " + std::to_string(n) + " values");
    std::vector<Elem> values;
    for (std::size_t i = 0; i < value.size(); ++i) values.push_back(read_index(value[i], child(here, i)));
    try {
      out_maps[f] = FinFunction(n, out_sets[c.cod(f)].size, std::move(values));
    } catch (const Error& e) {
      throw MalformedInput(here, e.what());
    }
    given[f] = true;
  }
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    if (given[f]) continue;
    expect(c.is_identity(f), child(at, "maps"), "no map for morphism " + c.morphism_id(f));
    out_maps[f] = FinFunction::identity(out_sets[c.dom(f)].size);
  }
  return validate_set_functor(std::move(shape), std::move(out_sets), std::move(out_maps));
}

NatTrans read_nat_trans(const Json& input, const std::string& at, Workspace& ws) {
  const Json j = deref(input, at, ws);
  SetFunctor source = read_functor(field(j, "source", at), child(at, "source"), ws);
  SetFunctor target = read_functor(field(j, "target", at), child(at, "target"), ws);
  expect(same_category(source.shape, target.shape), child(at, "target"),
         "source and target have different shapes");
  const FinCategory& c = *source.shape;
  const Json& comps = field(j, "components", at);
  expect(comps.is_object(), child(at, "components"), "expected an object keyed by object");
  std::vector<FinFunction> out(c.num_objects());
  std::vector<bool> seen(c.num_objects(), false);
  for (const auto& [name, value] : comps.items()) {
    const std::string here = child(child(at, "components"), name);
    const Obj o = object_at(c, name, here);
    expect(value.is_array() && value.size() == source.size(o), here,
           "expected " + std::to_string(source.size(o)) + " values");
    std::vector<Elem> values;
    for (std::size_t i = 0; i < value.size(); ++i) values.push_back(read_index(value[i], child(here, i)));
    try {
      out[o] = FinFunction(source.size(o), target.size(o), std::move(values));
    } catch (const Error& e) {
      throw MalformedInput(here, e.what());
    }
    seen[o] = true;
  }
  for (Obj o = 0; o < c.num_objects(); ++o)
    expect(seen[o], child(at, "components"), "no component for object " + c.object_name(o));
  return validate_nat_trans(std::move(source), std::move(target), std::move(out));
}

FinFunctor read_fin_functor(const Json& input, const std::string& at, Workspace& ws) {
  const Json j = deref(input, at, ws);
  CategoryPtr source = read_category(field(j, "source", at), child(at, "source"), ws);
  CategoryPtr target = read_category(field(j, "target", at), child(at, "target"), ws);
  const Json& objects = field(j, "objects", at);
  expect(objects.is_object(), child(at, "objects"), "expected an object");
  std::vector<Obj> object_map(source->num_objects(), kNoMorphism);
  for (const auto& [b, a] : objects.items()) {
    const std::string here = child(child(at, "objects"), b);
    object_map[object_at(*source, b, here)] = object_at(*target, read_string(a, here), here);
  }
  for (Obj o = 0; o < source->num_objects(); ++o)
    expect(object_map[o] != kNoMorphism, child(at, "objects"), "no image for " + source->object_name(o));
  const Json empty = Json::object();
  const Json& morphisms = j.contains("morphisms") ? j["morphisms"] : empty;
  expect(morphisms.is_object(), child(at, "morphisms"), "expected an object");
  std::vector<Mor> morphism_map(source->num_morphisms(), kNoMorphism);
  for (const auto& [f, g] : morphisms.items()) {
    const std::string here = child(child(at, "morphisms"), f);
    morphism_map[morphism_at(*source, f, here)] = morphism_at(*target, read_string(g, here), here);
  }
  for (Mor f = 0; f < source->num_morphisms(); ++f) {
    if (morphism_map[f] != kNoMorphism) continue;
    expect(source->is_identity(f), child(at, "morphisms"), "no image for " + source->morphism_id(f));
    morphism_map[f] = target->identity(object_map[source->dom(f)]);
  }
  return validate_functor(std::move(source), std::move(target), std::move(object_map),
                          std::move(morphism_map));
}

Preorder read_preorder(const Json& j, const std::string& at) {
  const Json& elements = field(j, "elements", at);
  expect(elements.is_array(), child(at, "elements"), "expected an array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    names.push_back(read_string(elements[i], child(child(at, "elements"), i)));
    expect(index.emplace(names.back(), i).second, child(child(at, "elements"), i), "duplicate element");
  }
  std::vector<std::vector<bool>> leq(names.size(), std::vector<bool>(names.size(), false));
  const Json& pairs = field(j, "leq", at);
  expect(pairs.is_array(), child(at, "leq"), "expected an array of pairs");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string here = child(child(at, "leq"), i);
    expect(pairs[i].is_array() && pairs[i].size() == 2, here, "expected [a, b]");
    auto a = index.find(read_string(pairs[i][0], child(here, 0)));
    auto b = index.find(read_string(pairs[i][1], child(here, 1)));
    expect(a != index.end() && b != index.end(), here, "unknown element");
    leq[a->second][b->second] = true;
  }
  return validate_preorder(std::move(names), std::move(leq));
}

std::vector<std::string> labels(const FinSet& s) {
  if (s.has_labels()) return s.labels;
  std::vector<std::string> out;
  for (Elem x = 0; x < s.size; ++x) out.push_back(std::to_string(x));
  return out;
}

Json to_json(const FinCategory& c) {
  const RawCategory raw = to_raw(c);
  Json j;
  j["objects"] = raw.objects;
  Json morphisms = Json::array();
  for (const auto& a : raw.morphisms) morphisms.push_back({{"id", a.id}, {"dom", a.dom}, {"cod", a.cod}});
  j["morphisms"] = std::move(morphisms);
  Json identities = Json::object();
  for (const auto& o : raw.objects) identities[o] = raw.identities.at(o);
  j["identities"] = std::move(identities);
  Json compose = Json::array();
  for (const auto& [g, f, gf] : raw.compose) compose.push_back({g, f, gf});
  j["compose"] = std::move(compose);
  return j;
}

Json category_ref(const CategoryPtr& c, const Workspace& ws) {
  const std::string name = ws.name_of(c);
  if (!name.empty()) return name;
  return to_json(*c);
}

Json to_json(const SetFunctor& f, const Workspace& ws) {
  const FinCategory& c = *f.shape;
  Json j;
  j["shape"] = category_ref(f.shape, ws);
  Json sets = Json::object();
  for (Obj o = 0; o < c.num_objects(); ++o) sets[c.object_name(o)] = labels(f.at(o));
  j["sets"] = std::move(sets);
  Json maps = Json::object();
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (!c.is_identity(m)) maps[c.morphism_id(m)] = f.on(m).values();
  j["maps"] = std::move(maps);
  return j;
}

Json components_json(const NatTrans& t) {
  const FinCategory& c = *t.source.shape;
  Json comps = Json::object();
  for (Obj o = 0; o < c.num_objects(); ++o) comps[c.object_name(o)] = t.at(o).values();
  return comps;
}

Json to_json(const NatTrans& t, const Workspace& ws) {
  Json j;
  j["source"] = to_json(t.source, ws);
  j["target"] = to_json(t.target, ws);
  j["components"] = components_json(t);
  return j;
}

Json to_json(const FinFunctor& k, const Workspace& ws) {
  Json j;
  j["source"] = category_ref(k.source, ws);
  j["target"] = category_ref(k.target, ws);
  Json objects = Json::object();
  for (Obj o = 0; o < k.source->num_objects(); ++o)
    objects[k.source->object_name(o)] = k.target->object_name(k(o));
  j["objects"] = std::move(objects);
  Json morphisms = Json::object();
  for (Mor f = 0; f < k.source->num_morphisms(); ++f)
    morphisms[k.source->morphism_id(f)] = k.target->morphism_id(k.on_morphism(f));
  j["morphisms"] = std::move(morphisms);
  return j;
}

Json to_json(const Cone& cone, const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  Json j;
  Json apex = Json::array();
  for (Elem x = 0; x < cone.apex.size; ++x) {
    Json tuple = Json::object();
    for (Obj o = 0; o < c.num_objects(); ++o) tuple[c.object_name(o)] = d.at(o).label(cone.legs[o](x));
    apex.push_back(std::move(tuple));
  }
  j["apex"] = std::move(apex);
  Json legs = Json::object();
  for (Obj o = 0; o < c.num_objects(); ++o) legs[c.object_name(o)] = cone.legs[o].values();
  j["legs"] = std::move(legs);
  return j;
}

Json to_json(const Cocone& cocone, const SetFunctor& d) {
  const FinCategory& c = *d.shape;
  Json j;
  Json classes = Json::array();
  std::vector<Json> members(cocone.nadir.size, Json::array());
  for (Obj o = 0; o < c.num_objects(); ++o)
    for (Elem x = 0; x < d.size(o); ++x)
      members[cocone.legs[o](x)].push_back({c.object_name(o), d.at(o).label(x)});
  for (auto& m : members) classes.push_back(std::move(m));
  j["nadir"] = std::move(classes);
  Json legs = Json::object();
  for (Obj o = 0; o < c.num_objects(); ++o) legs[c.object_name(o)] = cocone.legs[o].values();
  j["legs"] = std::move(legs);
  return j;
}

Json to_json(const Preorder& p) {
  Json j;
  j["elements"] = p.elements;
  Json leq = Json::array();
  for (std::size_t a = 0; a < p.elements.size(); ++a)
    for (std::size_t b = 0; b < p.elements.size(); ++b)
      if (p.leq[a][b]) leq.push_back({p.elements[a], p.elements[b]});
  j["leq"] = std::move(leq);
  return j;
}

}  // namespace fcat::cli
