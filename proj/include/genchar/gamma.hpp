#pragma once

// Generalized characters Γ^{λ,μ↗λ} of the Gelfand pair
// (S(n)×S(n-1), Diag S(n-1)): the Murnaghan–Nakayama type rule, two
// independent oracles, the n-cycle closed form and character tables.

#include <string>
#include <vector>

#include "genchar/characters.hpp"
#include "genchar/partition.hpp"
#include "genchar/rational.hpp"

namespace genchar {

/// (λ, μ) with μ↗λ.
struct CharPair {
  Partition lam;
  Partition mu;

  CharPair() = default;
  CharPair(Partition lam_, Partition mu_);

  int n() const noexcept { return lam.size(); }

  friend bool operator==(const CharPair&, const CharPair&) = default;
  friend auto operator<=>(const CharPair& a, const CharPair& b) {
    if (auto c = a.lam <=> b.lam; c != 0) return c;
    return a.mu <=> b.mu;
  }
};

/// Marked-partition label of a pair, e.g. λ=(3,1), μ=(2,1) -> "3*,1".
std::string to_marked_string(const CharPair& p);

/// All pairs for S(n), in the same order as classes_of(n) under λ ↔ ρ∪{j},
/// μ ↔ σ.
std::vector<CharPair> pairs_of(int n);

/// Σ_{ν ⊆ μ, |ν| = n - j} φ_{μ/ν,λ/ν} χ^ν_ρ.
Rational gamma_mn(const CharPair& p, const ClassIndex& c);

/// (dim μ/(n-1)!) Σ_{y ∈ S(n-1)} χ^λ(x y⁻¹) χ^μ(y), summed element by element.
Rational gamma_def_oracle(const CharPair& p, const Permutation& x);

/// Σ over standard tableaux of shape λ with n in λ/μ of the product of
/// 1/(Ct_T(k+1) - Ct_T(k)) over positions k that do not end a cycle of the
/// standard-form representative of `c`.
Rational gamma_syt_oracle(const CharPair& p, const ClassIndex& c);

/// Value on the n-cycle: (-1)^b a/(a+b) or (-1)^b b/(a+b) for hooks
/// λ = (a+1, 1^b), 0 when λ is not a hook.
Rational gamma_ncycle(const CharPair& p);

enum class Scaling { raw, paper_scaled };

std::string to_string(Scaling s);

struct GeneralizedCharacterTable {
  int n = 0;
  Scaling scaling = Scaling::raw;
  std::vector<CharPair> rows;
  std::vector<ClassIndex> cols;
  std::vector<std::vector<Rational>> entries;  // entries[row][col]
};

/// Every Γ value for S(n). paper_scaled multiplies row (λ, μ) by
/// (n-1)!/dim μ. `threads` > 1 spreads cells across worker threads.
GeneralizedCharacterTable build_table(int n, Scaling scaling, int threads = 1);

/// Aligned plain-text layout: a "Degree n" title, "Class" and "Order" rows,
/// then one "Γ^(...)" row per pair.
std::string render_text(const GeneralizedCharacterTable& table);

/// {n, scaling, classes:[{j,rho,marked,order}], rows:[{lam,mu,values}]}.
std::string render_json(const GeneralizedCharacterTable& table, int indent = 2);

}  // namespace genchar
