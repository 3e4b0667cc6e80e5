#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcat/category.hpp"
#include "fcat/limits.hpp"
#include "fcat/setfunctor.hpp"

namespace fcat {

/// A distinguished cone λ: Δ(apex) -> L in the carrier of a sketch.
struct SketchCone {
  FinFunctor diagram;     // L: J -> carrier
  Obj apex;
  std::vector<Mor> legs;  // legs[j]: apex -> L(j)
};

struct Sketch {
  CategoryPtr carrier;
  std::vector<SketchCone> cones;
};

/// Throws NotACone naming the first failing leg triangle.
Sketch validate_sketch(CategoryPtr carrier, std::vector<SketchCone> cones);

struct ModelReport {
  bool model = true;
  std::optional<std::size_t> failing_cone;
};

/// Applies M to every distinguished cone and asks whether the image is a
/// limiting cone.
ModelReport is_model(const SetFunctor& m, const Sketch& sk);

/// The sketch on Δ₃^op whose models are the categories: the squares
/// Md⁰₁·Md¹₀ = Md⁰₀·Md¹₂ and Md¹₂·Md²₀ = Md¹₀·Md²₃ are pullbacks.
const Sketch& cat_sketch();

/// The nerve of C truncated at degree n, a functor on delta_truncated_op(n).
/// Degree k holds the chains of k composable morphisms (objects for k = 0),
/// ordered lexicographically by morphism index.
SetFunctor nerve(const FinCategory& c, std::size_t n);
inline SetFunctor nerve3(const FinCategory& c) { return nerve(c, 3); }

/// Objects M[0], morphisms M[1], composition through the first distinguished
/// cone. Throws NotAModel when M is not a model of cat_sketch().
CategoryPtr cat_from_model(const SetFunctor& m);

/// A preorder on named elements.
struct Preorder {
  std::vector<std::string> elements;
  std::vector<std::vector<bool>> leq;  // leq[a][b] iff a <= b

  bool operator==(const Preorder& other) const = default;
};

/// Throws InvalidArgument unless the relation is reflexive and transitive.
Preorder validate_preorder(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);
/// a <= b iff C(a, b) is nonempty.
Preorder preorder_of(const FinCategory& c);

/// The preorder reflection of C, computed by reflecting the nerve of C
/// along Δ₀^op -> Δ₃^op and reading back the category, then compared with
/// the hom-nonempty preorder. Throws PipelineOracleMismatch if they differ.
Preorder preorder_reflection(const FinCategory& c);

/// factorize(φ) for φ between models, with the per-cone bijection between
/// the mid object's apex set and the limit of its cone diagram.
struct ModelFactorization {
  FactorizationResult factorization;
  std::vector<std::vector<Elem>> certificate;  // per cone: apex element -> limit tuple index
};

/// Throws NotAModel for non-model endpoints and MidNotModel if the image is
/// not a model.
ModelFactorization factorize_model_morphism(const NatTrans& phi, const Sketch& sk);

enum class Lemma51Case { Pullback, Product, Equalizer, Finite };

std::string_view to_string(Lemma51Case c);

/// Lim D of the image diagram of φ against the image s of Lim φ.
struct Lemma51Report {
  Lemma51Case lemma_case = Lemma51Case::Finite;
  std::size_t lim_f = 0;
  std::size_t lim_g = 0;
  std::size_t lim_d = 0;
  std::size_t image = 0;          // |s|
  std::vector<Elem> bijection;    // Lim D element -> position in s
  std::optional<Tuple> unreached; // a Lim D element outside s
  bool holds = false;
};

/// Throws ShapeMismatch when the shape of φ does not fit the case.
Lemma51Report check_lemma51(Lemma51Case lemma_case, const NatTrans& phi);

}  // namespace fcat
