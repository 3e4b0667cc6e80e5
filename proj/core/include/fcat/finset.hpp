#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fcat {

/// Index of an element inside a finite set.
using Elem = std::size_t;
/// A tuple of elements, one coordinate per index object.
using Tuple = std::vector<Elem>;

/// A finite set {0, ..., size-1}. Labels are cosmetic; identity of elements
/// is positional.
struct FinSet {
  std::size_t size = 0;
  std::vector<std::string> labels;  // empty, or exactly `size` distinct names

  FinSet() = default;
  explicit FinSet(std::size_t n) : size(n) {}
  explicit FinSet(std::vector<std::string> names);

  std::string label(Elem x) const;
  bool has_labels() const { return !labels.empty(); }

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.size == b.size;
  }
};

/// A total function between finite sets, stored as its value table.
class FinFunction {
 public:
  FinFunction() = default;
  /// Throws NotFunction when a value falls outside the codomain.
  FinFunction(std::size_t domain, std::size_t codomain, std::vector<Elem> values);

  static FinFunction identity(std::size_t n);
  static FinFunction constant(std::size_t domain, std::size_t codomain, Elem value);
  static FinFunction empty(std::size_t codomain) { return FinFunction(0, codomain, {}); }

  std::size_t domain() const { return values_.size(); }
  std::size_t codomain() const { return codomain_; }
  const std::vector<Elem>& values() const { return values_; }

  Elem operator()(Elem x) const { return values_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Sorted list of elements hit by the function.
  std::vector<Elem> image() const;

  friend bool operator==(const FinFunction& a, const FinFunction& b) {
    return a.codomain_ == b.codomain_ && a.values_ == b.values_;
  }

 private:
  std::size_t codomain_ = 0;
  std::vector<Elem> values_;
};

/// g after f. Requires f.codomain() == g.domain().
FinFunction compose(const FinFunction& g, const FinFunction& f);

/// True iff the tupling x -> (f_1(x), ..., f_k(x)) is injective on a set of
/// `domain` elements. The empty family is jointly monic iff domain <= 1.
bool check_jointly_monic(std::size_t domain, const std::vector<FinFunction>& family);

/// Number of functions m -> n, saturating at `cap`.
std::size_t count_functions(std::size_t m, std::size_t n, std::size_t cap);

/// Calls `visit` with every function m -> n in lexicographic order of value
/// tables; stops early if `visit` returns false.
template <class Visit>
void for_each_function(std::size_t m, std::size_t n, Visit&& visit) {
  if (m > 0 && n == 0) return;
  std::vector<Elem> values(m, 0);
  for (;;) {
    if (!visit(FinFunction(m, n, values))) return;
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++values[i] < n) break;
      values[i] = 0;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

}  // namespace fcat
