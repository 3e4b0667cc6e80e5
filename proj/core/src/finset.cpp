#include "fcat/finset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fcat/error.hpp"

namespace fcat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingDomain: return "DanglingDomain";
    case ErrorCode::MissingIdentity: return "MissingIdentity";
    case ErrorCode::PartialCompositionTable: return "PartialCompositionTable";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFunction: return "NotFunction";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::CompositionViolated: return "CompositionViolated";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NaturalityViolated: return "NaturalityViolated";
    case ErrorCode::SquareNotCommutative: return "SquareNotCommutative";
    case ErrorCode::NotPseudoFiltered: return "NotPseudoFiltered";
    case ErrorCode::NotACone: return "NotACone";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::FNotInEI: return "FNotInEI";
    case ErrorCode::CoverNotEpi: return "CoverNotEpi";
    case ErrorCode::CoverDomainNotInSubcategory: return "CoverDomainNotInSubcategory";
    case ErrorCode::NotAModel: return "NotAModel";
    case ErrorCode::MidNotModel: return "MidNotModel";
    case ErrorCode::PipelineOracleMismatch: return "PipelineOracleMismatch";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

FinSet::FinSet(std::vector<std::string> names) : size(names.size()), labels(std::move(names)) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) fail(ErrorCode::InvalidArgument, "duplicate element labels");
}

std::string FinSet::label(Elem x) const {
  if (x < labels.size()) return labels[x];
  return std::to_string(x);
}

FinFunction::FinFunction(std::size_t domain, std::size_t codomain, std::vector<Elem> values)
    : codomain_(codomain), values_(std::move(values)) {
  if (values_.size() != domain) {
    fail(ErrorCode::NotFunction, "value table has " + std::to_string(values_.size()) +
                                     " entries, domain has " + std::to_string(domain));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= codomain_) {
      fail(ErrorCode::NotFunction, "value " + std::to_string(values_[i]) + " at " +
                                       std::to_string(i) + " outside codomain of size " +
                                       std::to_string(codomain_));
    }
  }
}

FinFunction FinFunction::identity(std::size_t n) {
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return FinFunction(n, n, std::move(v));
}

FinFunction FinFunction::constant(std::size_t domain, std::size_t codomain, Elem value) {
  return FinFunction(domain, codomain, std::vector<Elem>(domain, value));
}

bool FinFunction::is_injective() const {
  std::vector<bool> hit(codomain_, false);
  for (Elem y : values_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool FinFunction::is_surjective() const {
  std::vector<bool> hit(codomain_, false);
  std::size_t count = 0;
  for (Elem y : values_) {
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == codomain_;
}

std::vector<Elem> FinFunction::image() const {
  std::vector<bool> hit(codomain_, false);
  for (Elem y : values_) hit[y] = true;
  std::vector<Elem> out;
  for (Elem y = 0; y < codomain_; ++y)
    if (hit[y]) out.push_back(y);
  return out;
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (f.codomain() != g.domain()) {
    fail(ErrorCode::InvalidArgument, "compose: codomain " + std::to_string(f.codomain()) +
                                         " does not match domain " + std::to_string(g.domain()));
  }
  std::vector<Elem> v(f.domain());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(f(i));
  return FinFunction(f.domain(), g.codomain(), std::move(v));
}

bool check_jointly_monic(std::size_t domain, const std::vector<FinFunction>& family) {
  for (const auto& f : family) {
    if (f.domain() != domain) fail(ErrorCode::InvalidArgument, "family members must share a domain");
  }
  std::set<Tuple> seen;
  for (Elem x = 0; x < domain; ++x) {
    Tuple t;
    t.reserve(family.size());
    for (const auto& f : family) t.push_back(f(x));
    if (!seen.insert(std::move(t)).second) return false;
  }
  return true;
}

std::size_t count_functions(std::size_t m, std::size_t n, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (n == 0) return 0;
    if (total > cap / n) return cap;
    total *= n;
  }
  return std::min(total, cap);
}

}  // namespace fcat
