#pragma once

// Classical characters of S(n) and the S(n-1)-conjugacy classes of S(n).

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "genchar/partition.hpp"
#include "genchar/rational.hpp"

namespace genchar {

/// A bijection of {1..n}; images[i - 1] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// Composition applying `rhs` first: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycles (each starting at its smallest element), ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  Partition cycle_type() const;

 private:
  std::vector<int> images_;
};

/// Cycle notation, e.g. "(127)(45)(36)" (single-digit elements) or
/// "(1,2,10)(3,4)". Fixed points may be omitted; `degree` is the n of S(n),
/// or the largest element mentioned when 0.
Permutation parse_cycles(std::string_view text, int degree = 0);
/// Prints every cycle including fixed points, e.g. "(15)(2)(346)"; uses
/// commas between elements when the degree exceeds 9.
std::string to_cycle_string(const Permutation& p);

/// The S(n-1)-class of S(n) labelled by (j, rho): the cycle through n has
/// length j and rho is the cycle type of the rest.
struct ClassIndex {
  int n = 1;
  int j = 1;
  Partition rho;

  ClassIndex() = default;
  ClassIndex(int n_, int j_, Partition rho_);

  friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
  friend auto operator<=>(const ClassIndex& a, const ClassIndex& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.j <=> b.j; c != 0) return c;
    return a.rho <=> b.rho;
  }
};

/// "j=3;rho=2,2".
std::string to_string(const ClassIndex& c);
/// Marked form "3*,2,2": the lowest row of length j carries the star.
std::string to_marked_string(const ClassIndex& c);
/// Accepts either "j=3;rho=2,2" or a marked partition "3*,2,2".
ClassIndex parse_class_index(std::string_view text);

/// z_rho = prod_i i^{m_i} m_i!.
mpz_class z_factor(const Partition& rho);

ClassIndex class_of_permutation(const Permutation& p);

struct MarkedPartition {
  Partition full;   // rho ∪ {j}
  Partition sigma;  // full with one box removed from its lowest row of length j
};

MarkedPartition marked_partition(const ClassIndex& c);
/// Inverse of marked_partition; throws unless sigma↗full.
ClassIndex class_from_marked(const Partition& full, const Partition& sigma);

/// (n-1)!/z_rho.
mpz_class class_size(const ClassIndex& c);

/// All S(n-1)-classes of S(n): rho ∪ {j} in reverse-lex order, then the
/// marked row from the bottom up (j increasing).
std::vector<ClassIndex> classes_of(int n);

/// A permutation in the class, in standard form: the cycles of rho
/// (largest first) on 1, 2, ..., followed by the j-cycle ending at n.
Permutation class_representative(const ClassIndex& c);

/// Irreducible character value chi^lam at cycle type rho (classical
/// Murnaghan–Nakayama rule, memoized). Throws std::invalid_argument when
/// |lam| != |rho|.
std::int64_t chi(const Partition& lam, const Partition& rho);

}  // namespace genchar
