#pragma once

#include <map>
#include <string>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/setfunctor.hpp"

namespace testing_support {

using fcat::Elem;

/// Structure maps given by morphism id; identities may be omitted.
inline fcat::SetFunctor functor_on(const fcat::CategoryPtr& shape, std::vector<fcat::FinSet> sets,
                                   const std::map<std::string, std::vector<Elem>>& maps) {
  std::vector<fcat::FinFunction> fs;
  for (fcat::Mor f = 0; f < shape->num_morphisms(); ++f) {
    const std::size_t n = sets[shape->dom(f)].size;
    auto it = maps.find(shape->morphism_id(f));
    fs.push_back(it == maps.end() ? fcat::FinFunction::identity(n)
                                  : fcat::FinFunction(n, sets[shape->cod(f)].size, it->second));
  }
  return fcat::validate_set_functor(shape, std::move(sets), std::move(fs));
}

inline fcat::NatTrans nat(const fcat::SetFunctor& s, const fcat::SetFunctor& t,
                          std::vector<std::vector<Elem>> comps) {
  std::vector<fcat::FinFunction> fs;
  for (fcat::Obj o = 0; o < comps.size(); ++o) fs.emplace_back(s.size(o), t.size(o), std::move(comps[o]));
  return fcat::validate_nat_trans(s, t, std::move(fs));
}

/// M(0) = {x, y}, M(1) = {x} on 2 with Mu constant.
struct ColimitExample {
  fcat::CategoryPtr two = fcat::chain_category(2);
  fcat::SetFunctor m = functor_on(two, {fcat::FinSet({"x", "y"}), fcat::FinSet({"x"})}, {{"0<=1", {0, 0}}});
  fcat::SetFunctor q = functor_on(two, {fcat::FinSet({"y"}), fcat::FinSet({"x"})}, {{"0<=1", {0}}});
  fcat::NatTrans phi = nat(m, m, {{0, 0}, {0}});
  fcat::NatTrans psi = nat(q, m, {{1}, {0}});
};

}  // namespace testing_support
