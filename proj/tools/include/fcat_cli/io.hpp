#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fcat/category.hpp"
#include "fcat/limits.hpp"
#include "fcat/reflect.hpp"
#include "fcat/setfunctor.hpp"
#include "fcat/sketch.hpp"

namespace fcat::cli {

using Json = nlohmann::ordered_json;

/// Input that does not match the expected JSON shape. `pointer` locates the
/// offending value (RFC 6901).
class MalformedInput : public std::runtime_error {
 public:
  MalformedInput(std::string pointer, const std::string& detail)
      : std::runtime_error("MalformedInput at " + (pointer.empty() ? std::string("/") : pointer) +
                           ": " + detail),
        pointer_(std::move(pointer)),
        detail_(detail) {}

  const std::string& pointer() const { return pointer_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

/// Resolves category references and remembers where every value came from,
/// so outputs can refer back to built-in shapes by name.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path root = ".");

  const std::filesystem::path& root() const { return root_; }

  /// Reads a JSON file relative to the workspace root ("-" is stdin).
  Json load(const std::string& path) const;

  /// A built-in name ("one", "chain:k", "delta:n", "delta-op:n",
  /// "parallel-pair", "cospan", "discrete:n", "split-idempotent",
  /// "idempotent") or a file.
  CategoryPtr category(const std::string& ref);

  /// The name a category was loaded under, if any.
  std::string name_of(const CategoryPtr& c) const;

 private:
  CategoryPtr builtin(const std::string& ref) const;

  std::filesystem::path root_;
  std::map<std::string, CategoryPtr> cache_;
  std::map<const FinCategory*, std::string> names_;
};

/// The pointer of a child of `base`.
std::string child(const std::string& base, const std::string& key);
std::string child(const std::string& base, std::size_t index);

RawCategory read_raw_category(const Json& j, const std::string& at);
/// Either a reference string or an inline category object.
CategoryPtr read_category(const Json& j, const std::string& at, Workspace& ws);
/// Either a file path or an inline functor object. Identity maps may be
/// omitted; every set may be a label list or a size.
SetFunctor read_functor(const Json& j, const std::string& at, Workspace& ws);
/// {"source", "target", "components"}; source and target as in read_functor.
NatTrans read_nat_trans(const Json& j, const std::string& at, Workspace& ws);
/// {"source", "target", "objects": {b: a}, "morphisms": {f: g}}; identity
/// images may be omitted.
FinFunctor read_fin_functor(const Json& j, const std::string& at, Workspace& ws);
Preorder read_preorder(const Json& j, const std::string& at);

Json to_json(const FinCategory& c);
Json category_ref(const CategoryPtr& c, const Workspace& ws);
Json to_json(const SetFunctor& f, const Workspace& ws);
/// Components only, keyed by object name.
Json components_json(const NatTrans& t);
Json to_json(const NatTrans& t, const Workspace& ws);
Json to_json(const FinFunctor& k, const Workspace& ws);
Json to_json(const Cone& c, const SetFunctor& d);
Json to_json(const Cocone& c, const SetFunctor& d);
Json to_json(const Preorder& p);

/// Element labels of a set, generated as "0", "1", ... when absent.
std::vector<std::string> labels(const FinSet& s);

}  // namespace fcat::cli
