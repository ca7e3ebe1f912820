#pragma once

// The rational functions X_{λ/ν} and X_{λ/ν,μ/ν} attached to (marked) skew
// shapes, their closed forms, and the content-evaluated quantities
// Δ(λ/ν), Δ(μ/ν;λ/ν) that feed the Murnaghan–Nakayama type coefficient φ.
//
// Rational functions are never represented symbolically. Each function
// is evaluated at an exact rational point, one value per standard label
// of the shape (x_1 .. x_m, labels assigned row-major).

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "genchar/partition.hpp"
#include "genchar/rational.hpp"

namespace genchar {

/// A point (x_1, ..., x_m): values[k - 1] is substituted for x_k.
struct EvaluationPoint {
  std::vector<Rational> values;

  const Rational& operator[](int label) const { return values.at(static_cast<std::size_t>(label - 1)); }
  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Box contents in standard-label order (the substitution that turns X into Δ).
EvaluationPoint content_point(const SkewShape& s);

/// Integer-valued point with entries uniform in [-bound, bound].
EvaluationPoint random_point(int size, std::mt19937_64& rng, int bound = 1000);
/// Pairwise distinct rationals p/q with |p| <= 1000 and 1 <= q <= 60, so no
/// difference x_a - x_b vanishes.
EvaluationPoint random_distinct_point(int size, std::mt19937_64& rng);

/// Raised when an evaluation divides by zero. For the definitional sums the
/// tableau and index pin down the vanishing factor x_{T⁻¹(k+1)} - x_{T⁻¹(k)}
/// (index == m for the final factor of X_{λ/ν,μ/ν}).
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& what, std::vector<int> tableau = {}, int index = 0)
      : std::domain_error(what), tableau_(std::move(tableau)), index_(index) {}
  const std::vector<int>& tableau() const noexcept { return tableau_; }
  int index() const noexcept { return index_; }

 private:
  std::vector<int> tableau_;
  int index_;
};

/// ν ⊆ μ, μ↗λ; the marked box is λ/μ.
struct MarkedSkewTriple {
  Partition outer;   // λ
  Partition middle;  // μ
  Partition inner;   // ν

  MarkedSkewTriple() = default;
  MarkedSkewTriple(Partition lam, Partition mu, Partition nu);

  SkewShape shape() const { return SkewShape(outer, inner); }        // λ/ν
  SkewShape reduced_shape() const { return SkewShape(middle, inner); }  // μ/ν
  Box marked_box() const;
  /// Standard label of λ/μ inside λ/ν.
  int marked_label() const;
};

/// Σ_{T ∈ SYT(λ/ν)} Π_k 1/(x_{T⁻¹(k+1)} - x_{T⁻¹(k)}). The empty shape gives 1.
Rational x_skew_def(const SkewShape& s, const EvaluationPoint& pt);

/// Closed form: Π_D / (Π_R · Π_C) over diagonal-, row- and column-adjacent
/// label pairs for connected shapes, 0 for disconnected ones.
Rational x_skew_closed(const SkewShape& s, const EvaluationPoint& pt);

/// Σ_{T ∈ SYT(μ/ν)} of the product ending in 1/(x_{l(λ/μ)} - x_{T⁻¹(m-1)}).
/// `pt` is indexed by the standard labelling of λ/ν.
Rational x_pair_def(const MarkedSkewTriple& t, const EvaluationPoint& pt);

/// Closed form for broken border strips λ/ν:
///   Π_j (x_{d_i} - x_{s_j}) / Π_{j≠i} (x_{d_i} - x_{d_j}) · 1/(Π_R · Π_C)
/// with d the dull-box labels, s the sharp-corner labels and d_i = l(λ/μ).
/// Throws std::domain_error if λ/ν is not a broken border strip.
Rational x_pair_closed(const MarkedSkewTriple& t, const EvaluationPoint& pt);

/// (-1)^{height} for border strips, 0 otherwise, 1 for the empty shape.
Rational delta_skew(const SkewShape& s);

/// (-1)^{⟨λ/ν⟩} Π_{s∈SC} [Ct(λ/μ) - Ct(s)] Π_{d∈DB, d≠λ/μ} [Ct(λ/μ) - Ct(d)]⁻¹
/// when λ/ν is a broken border strip, 0 otherwise.
Rational delta_pair(const MarkedSkewTriple& t);

/// The coefficient of the Murnaghan–Nakayama type rule; equal to delta_pair.
Rational phi(const MarkedSkewTriple& t);

}  // namespace genchar
