#pragma once

// Symmetric functions Λ (power-sum, complete and Schur bases), the module
// Λ[t], the characteristic map Ch′ from S(n-1)-invariant class functions,
// and generalized Schur functions with their Frobenius-, Cauchy- and
// Jacobi–Trudi-type identities.
//
// The power-sum basis is canonical: products, scalar products and Ch′ are
// computed there; the other bases are converted on demand through chi.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "genchar/characters.hpp"
#include "genchar/gamma.hpp"
#include "genchar/partition.hpp"
#include "genchar/rational.hpp"

namespace genchar {

enum class Basis { powersum, complete, schur };

std::string to_string(Basis b);

/// Reverse-lexicographic order on partitions: (2) before (1,1).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// An element of Λ in one basis; zero coefficients are never stored.
struct SymPoly {
  Basis basis = Basis::powersum;
  std::map<Partition, Rational, ReverseLex> coeffs;

  SymPoly() = default;
  explicit SymPoly(Basis b) : basis(b) {}
  static SymPoly monomial(Basis b, const Partition& p, const Rational& c = 1);

  void add(const Partition& p, const Rational& c);
  bool is_zero() const noexcept { return coeffs.empty(); }
  friend bool operator==(const SymPoly&, const SymPoly&) = default;
};

SymPoly operator+(const SymPoly& a, const SymPoly& b);
SymPoly operator*(const Rational& c, const SymPoly& a);

/// Bilinear extension of p_λ · p_μ = p_{λ∪μ}. Throws std::invalid_argument
/// unless both operands are in the power-sum basis.
SymPoly p_multiply(const SymPoly& a, const SymPoly& b);

/// h_k = Σ_{ρ⊢k} z_ρ⁻¹ p_ρ; h_0 = p_∅.
SymPoly h_to_p(int k);
/// s_ν = Σ_ρ z_ρ⁻¹ χ^ν_ρ p_ρ.
SymPoly s_to_p(const Partition& nu);
/// p_ρ = Σ_λ χ^λ_ρ s_λ.
SymPoly p_to_s(const Partition& rho);

SymPoly to_powersum(const SymPoly& f);
SymPoly to_schur(const SymPoly& f);

/// Ch(f) = Σ_{λ⊢m} z_λ⁻¹ f_λ p_λ for a class function of S(m) given by its
/// values on cycle types.
SymPoly ch_classical(const std::map<Partition, Rational>& values, int m);

/// Key of a Λ[t] basis element t^k b_λ; iteration order is k ascending, then
/// λ reverse-lexicographic.
struct LtKey {
  int t_degree = 0;
  Partition part;

  friend bool operator==(const LtKey&, const LtKey&) = default;
  friend bool operator<(const LtKey& a, const LtKey& b) {
    if (a.t_degree != b.t_degree) return a.t_degree < b.t_degree;
    return b.part < a.part;
  }
};

/// An element of Λ[t] in the power-sum or Schur basis.
struct LtPoly {
  Basis basis = Basis::powersum;
  std::map<LtKey, Rational> coeffs;

  LtPoly() = default;
  explicit LtPoly(Basis b) : basis(b) {}
  /// t^k times a symmetric function (kept in that function's basis when it
  /// is powersum or schur; complete is converted to powersum).
  static LtPoly from_sym(const SymPoly& f, int t_degree = 0);
  static LtPoly monomial(Basis b, int t_degree, const Partition& p, const Rational& c = 1);

  void add(int t_degree, const Partition& p, const Rational& c);
  bool is_zero() const noexcept { return coeffs.empty(); }
  friend bool operator==(const LtPoly&, const LtPoly&) = default;
};

LtPoly operator+(const LtPoly& a, const LtPoly& b);
LtPoly operator-(const LtPoly& a, const LtPoly& b);
LtPoly operator*(const Rational& c, const LtPoly& a);
/// Product in Λ[t]; both operands are converted to the power-sum basis.
LtPoly operator*(const LtPoly& a, const LtPoly& b);

LtPoly to_powersum(const LtPoly& f);
LtPoly to_schur(const LtPoly& f);

/// "s[1] + t·s[]", "1/2·p[2] + 1/2·p[1,1]"; the zero element prints as "0".
std::string to_string(const LtPoly& f);
std::string to_string(const SymPoly& f);
/// [{t_degree, partition, coeff, basis}, ...]
std::string to_json(const LtPoly& f, int indent = -1);

/// Ch′(g) = Σ_j t^{j-1} Σ_{ρ⊢n-j} z_ρ⁻¹ g_{(j,ρ)} p_ρ. Throws
/// std::invalid_argument if a class of S(n) has no value.
LtPoly ch_prime(const std::map<ClassIndex, Rational>& values, int n);

/// Σ_{ν⊆μ} φ_{μ/ν,λ/ν} t^{|λ/ν|-1} s_ν.
LtPoly gen_schur(const CharPair& p);

/// Bilinear extension of ⟨t^k p_λ, t^j p_μ⟩ = z_λ δ_{kj} δ_{λμ}.
Rational lt_scalar_product(const LtPoly& a, const LtPoly& b);

/// h′_k = Σ_{j=1}^{k} t^{j-1} h_{k-j}, power-sum basis.
LtPoly h_prime(int k);

/// Determinant over the commutative ring Λ[t] by cofactor expansion.
LtPoly determinant(const std::vector<std::vector<LtPoly>>& m);

/// (-1)^{n-1} times the n×n determinant with rows (h_{1-i+c} ..., h′_{n-i+1});
/// equals t^{n-1}.
LtPoly t_power_determinant(int n);

/// det(h_{ν_i - i + c}) in the power-sum basis; 1 for ν = ∅.
LtPoly jacobi_trudi(const Partition& nu);

/// The generalized Schur function rebuilt from the double-determinant
/// expansion (Jacobi–Trudi type formula), power-sum basis.
LtPoly gen_schur_jt(const CharPair& p);

enum class FrobeniusWeight {
  derived,    // dim λ / (n · dim μ) per term
  unweighted  // weight 1, does not reconstruct
};

struct FrobeniusExpansion {
  ClassIndex cls;
  std::vector<std::pair<CharPair, Rational>> terms;  // coefficient of S^{λ,μ}
  bool reconstructs = false;  // Σ coefficient · S^{λ,μ} == t^{j-1} p_ρ exactly
};

/// Expands t^{j-1} p_ρ over the generalized Schur functions of S(n) with
/// coefficients weight(λ,μ) · Γ^{λ,μ}_{(j,ρ)}, and checks the expansion.
FrobeniusExpansion frobenius_expand(const ClassIndex& c, FrobeniusWeight weight = FrobeniusWeight::derived);

/// Element of Λ[t] ⊗ Λ[t] with t shared, in the p ⊗ p basis.
struct TensorLtPoly {
  std::map<std::tuple<int, Partition, Partition>, Rational> coeffs;

  void add(int t_degree, const Partition& x, const Partition& y, const Rational& c);
  friend bool operator==(const TensorLtPoly&, const TensorLtPoly&) = default;
};

/// a(x) · b(y) with t shared between the factors.
TensorLtPoly tensor(const LtPoly& a, const LtPoly& b);

struct CauchyPiece {
  int n = 0;  // generalized Schur functions of S(n), graded degree n - 1
  TensorLtPoly lhs;
  TensorLtPoly rhs;
  bool equal = false;
};

struct CauchyReport {
  std::vector<CauchyPiece> pieces;
  bool all_equal() const;
};

/// Compares Σ n⁻¹ (dim λ/dim μ) S(x) S(y) with Σ_{k,λ} t^{2k} z_λ⁻¹ p_λ(x) p_λ(y)
/// on every graded piece n = 1..max_n.
CauchyReport cauchy_check(int max_n);

}  // namespace genchar
