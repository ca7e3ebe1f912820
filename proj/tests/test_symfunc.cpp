#include "genchar/symfunc.hpp"

#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "test_support.hpp"

using namespace genchar;
using genchar::testing_support::all_permutations;
using genchar::testing_support::fixing_last;

namespace {

SymPoly p(std::initializer_list<int> parts, const Rational& c = 1) {
  return SymPoly::monomial(Basis::powersum, Partition(std::vector<int>(parts)), c);
}

LtPoly lt(int t, std::initializer_list<int> parts, const Rational& c = 1, Basis b = Basis::powersum) {
  return LtPoly::monomial(b, t, Partition(std::vector<int>(parts)), c);
}

// (f∗g)(π) = 1/(m!(k-1)!) Σ_{σ ∈ S(m+k-1)} (f×g)(σ⁻¹πσ), with S(m) on {1..m}
// and S(k) on {m+1..m+k}; f is the indicator of the ρ-class of S(m) and g
// the indicator of the class `gc` of S(k).
std::map<ClassIndex, Rational> convolve(const Partition& rho, const ClassIndex& gc) {
  const int m = rho.size();
  const int k = gc.n;
  const int n = m + k;
  auto sigmas = fixing_last(n);
  std::map<ClassIndex, Rational> out;
  for (const ClassIndex& c : classes_of(n)) {
    Permutation pi = class_representative(c);
    long hits = 0;
    for (const Permutation& s : sigmas) {
      Permutation tau = s.inverse() * pi * s;
      bool preserves = true;
      for (int i = 1; i <= m; ++i) preserves = preserves && tau(i) <= m;
      if (!preserves) continue;
      std::vector<int> left, right;
      for (int i = 1; i <= m; ++i) left.push_back(tau(i));
      for (int i = m + 1; i <= n; ++i) right.push_back(tau(i) - m);
      if (Permutation(left).cycle_type() == rho && class_of_permutation(Permutation(right)) == gc) ++hits;
    }
    out[c] = ratio(mpz_class(hits), factorial(m) * factorial(k - 1));
  }
  return out;
}

}  // namespace

TEST(SymPolyTest, PowerSumProducts) {
  EXPECT_EQ(p_multiply(p({2}), p({1})), p({2, 1}));
  SymPoly a = p({3}, 2) + p({1, 1}, Rational(1, 3));
  EXPECT_EQ(p_multiply(p({}), a), a);
  SymPoly s = p({1}) + p({2});
  EXPECT_EQ(p_multiply(s, s), p({1, 1}) + p({2, 1}, 2) + p({2, 2}));
  EXPECT_THROW(p_multiply(SymPoly::monomial(Basis::schur, Partition{1}), p({1})), std::invalid_argument);
}

TEST(SymPolyTest, CompleteToPowerSum) {
  EXPECT_EQ(h_to_p(0), p({}));
  EXPECT_EQ(h_to_p(2), p({2}, Rational(1, 2)) + p({1, 1}, Rational(1, 2)));
  EXPECT_EQ(h_to_p(3), p({3}, Rational(1, 3)) + p({2, 1}, Rational(1, 2)) + p({1, 1, 1}, Rational(1, 6)));
  EXPECT_EQ(to_powersum(SymPoly::monomial(Basis::complete, Partition{2, 1})), p_multiply(h_to_p(2), h_to_p(1)));
}

TEST(SymPolyTest, SchurPowerSumConversions) {
  EXPECT_EQ(s_to_p(Partition{1, 1}), p({1, 1}, Rational(1, 2)) + p({2}, Rational(-1, 2)));
  EXPECT_EQ(p_to_s(Partition{2}),
            SymPoly::monomial(Basis::schur, Partition{2}) + SymPoly::monomial(Basis::schur, Partition{1, 1}, -1));
  EXPECT_EQ(s_to_p(Partition{}), p({}));
  EXPECT_EQ(to_string(p_to_s(Partition{2})), "s[2] - s[1,1]");
}

TEST(SymPolyTest, BasisRoundTrips) {
  for (int n = 0; n <= 8; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      EXPECT_EQ(to_powersum(p_to_s(lam)), SymPoly::monomial(Basis::powersum, lam));
      EXPECT_EQ(to_schur(s_to_p(lam)), SymPoly::monomial(Basis::schur, lam));
    }
  }
}

TEST(SymPolyTest, SchurViaJacobiTrudi) {
  for (int n = 0; n <= 6; ++n) {
    for (const Partition& nu : partitions_of(n)) EXPECT_EQ(jacobi_trudi(nu), LtPoly::from_sym(s_to_p(nu)));
  }
}

TEST(LtPolyTest, Rendering) {
  LtPoly s = gen_schur(CharPair(Partition{2}, Partition{1}));
  EXPECT_EQ(to_string(s), "s[1] + t·s[]");
  EXPECT_EQ(to_string(to_schur(LtPoly::from_sym(h_to_p(2)))), "s[2]");
  EXPECT_EQ(to_string(LtPoly::from_sym(h_to_p(2))), "1/2·p[2] + 1/2·p[1,1]");
  EXPECT_EQ(to_string(lt(2, {1}, -3) + lt(0, {}, -1)), "-p[] - 3·t^2·p[1]");
  EXPECT_EQ(to_string(LtPoly()), "0");

  auto doc = nlohmann::json::parse(to_json(s));
  ASSERT_EQ(doc.size(), 2u);
  EXPECT_EQ(doc[0]["t_degree"], 0);
  EXPECT_EQ(doc[0]["partition"], nlohmann::json::array({1}));
  EXPECT_EQ(doc[0]["coeff"], "1");
  EXPECT_EQ(doc[0]["basis"], "schur");
  EXPECT_EQ(doc[1]["t_degree"], 1);
  EXPECT_EQ(doc[1]["partition"], nlohmann::json::array());
}

TEST(LtPolyTest, ChPrimeExamples) {
  std::map<ClassIndex, Rational> trivial{{ClassIndex(2, 1, Partition{1}), 1}, {ClassIndex(2, 2, Partition{}), 1}};
  EXPECT_EQ(ch_prime(trivial, 2), lt(0, {1}) + lt(1, {}));
  std::map<ClassIndex, Rational> sign{{ClassIndex(2, 1, Partition{1}), 1}, {ClassIndex(2, 2, Partition{}), -1}};
  EXPECT_EQ(ch_prime(sign, 2), lt(0, {1}) - lt(1, {}));
  std::map<ClassIndex, Rational> partial{{ClassIndex(2, 1, Partition{1}), 1}};
  EXPECT_THROW(ch_prime(partial, 2), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    std::map<ClassIndex, Rational> one;
    for (const ClassIndex& c : classes_of(n)) one[c] = 1;
    EXPECT_EQ(ch_prime(one, n), h_prime(n)) << "n = " << n;
  }
}

TEST(LtPolyTest, GenSchurExamples) {
  EXPECT_EQ(gen_schur(CharPair(Partition{2}, Partition{1})), lt(0, {1}, 1, Basis::schur) + lt(1, {}, 1, Basis::schur));
  EXPECT_EQ(gen_schur(CharPair(Partition{1, 1}, Partition{1})), lt(0, {1}, 1, Basis::schur) + lt(1, {}, -1, Basis::schur));
  EXPECT_EQ(gen_schur(CharPair(Partition{1}, Partition{})), lt(0, {}, 1, Basis::schur));
}

TEST(LtPolyTest, ScalarProductExamples) {
  EXPECT_EQ(lt_scalar_product(lt(1, {1}), lt(1, {1})), 1);
  EXPECT_EQ(lt_scalar_product(lt(1, {1}), lt(0, {1})), 0);
  EXPECT_EQ(lt_scalar_product(lt(0, {2, 2}), lt(0, {2, 2})), 8);
  LtPoly a = gen_schur(CharPair(Partition{2}, Partition{1}));
  LtPoly b = gen_schur(CharPair(Partition{1, 1}, Partition{1}));
  EXPECT_EQ(lt_scalar_product(a, a), 2);
  EXPECT_EQ(lt_scalar_product(a, b), 0);
}

TEST(LtPolyTest, HPrimeExamples) {
  EXPECT_EQ(h_prime(1), lt(0, {}));
  EXPECT_EQ(h_prime(2), lt(0, {1}) + lt(1, {}));
  EXPECT_EQ(h_prime(3), LtPoly::from_sym(h_to_p(2)) + lt(1, {1}) + lt(2, {}));
  EXPECT_THROW(h_prime(0), std::invalid_argument);
}

TEST(LtPolyTest, TPowerDeterminant) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(t_power_determinant(n), lt(n - 1, {})) << "n = " << n;
}

TEST(LtPolyTest, DeterminantBasics) {
  EXPECT_EQ(determinant({}), lt(0, {}));
  std::vector<std::vector<LtPoly>> m{{lt(0, {1}), lt(1, {})}, {lt(0, {}), lt(0, {2})}};
  EXPECT_EQ(determinant(m), lt(0, {2, 1}) - lt(1, {}));
}

TEST(LtPolyTest, GenSchurIdentities) {
  for (int n = 1; n <= 6; ++n) {
    for (const CharPair& pair : pairs_of(n)) {
      LtPoly s = to_powersum(gen_schur(pair));
      std::map<ClassIndex, Rational> values;
      for (const ClassIndex& c : classes_of(n)) values[c] = gamma_mn(pair, c);
      EXPECT_EQ(s, ch_prime(values, n)) << to_marked_string(pair);
      EXPECT_EQ(s, gen_schur_jt(pair)) << to_marked_string(pair);
    }
  }
}

TEST(LtPolyTest, GenSchurOrthogonality) {
  for (int n = 1; n <= 6; ++n) {
    auto pairs = pairs_of(n);
    for (const CharPair& a : pairs) {
      for (const CharPair& b : pairs) {
        Rational expected = a == b ? Rational(n) * ratio(mpz_class(static_cast<long>(dim(a.mu))), mpz_class(static_cast<long>(dim(a.lam))))
                                   : Rational(0);
        EXPECT_EQ(lt_scalar_product(gen_schur(a), gen_schur(b)), expected);
      }
    }
  }
}

TEST(LtPolyTest, Isometry) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::map<ClassIndex, Rational> f, g;
      for (const ClassIndex& c : classes_of(n)) {
        f[c] = rational(num(rng), 1 + trial);
        g[c] = rational(num(rng), 2);
      }
      Rational group_sum = 0;
      for (const ClassIndex& c : classes_of(n)) group_sum += Rational(class_size(c)) * f[c] * g[c];
      EXPECT_EQ(lt_scalar_product(ch_prime(f, n), ch_prime(g, n)), group_sum / Rational(factorial(n - 1)));
    }
  }
}

TEST(LtPolyTest, IsometryElementwiseSmall) {
  // Σ_w f(w) g(w⁻¹) over the whole group, not class-wise.
  for (int n = 1; n <= 4; ++n) {
    std::map<ClassIndex, Rational> f, g;
    long k = 1;
    for (const ClassIndex& c : classes_of(n)) {
      f[c] = k;
      g[c] = rational(1, k + 1);
      ++k;
    }
    Rational total = 0;
    for (const Permutation& w : all_permutations(n)) {
      total += f[class_of_permutation(w)] * g[class_of_permutation(w.inverse())];
    }
    EXPECT_EQ(lt_scalar_product(ch_prime(f, n), ch_prime(g, n)), total / Rational(factorial(n - 1)));
  }
}

TEST(LtPolyTest, ModuleHomomorphism) {
  for (int m = 1; m <= 5; ++m) {
    for (int k = 1; m + k <= 6; ++k) {
      for (const Partition& rho : partitions_of(m)) {
        std::map<Partition, Rational> f;
        for (const Partition& lam : partitions_of(m)) f[lam] = lam == rho ? 1 : 0;
        LtPoly chf = LtPoly::from_sym(ch_classical(f, m));
        for (const ClassIndex& gc : classes_of(k)) {
          std::map<ClassIndex, Rational> g;
          for (const ClassIndex& c : classes_of(k)) g[c] = c == gc ? 1 : 0;
          EXPECT_EQ(ch_prime(convolve(rho, gc), m + k), chf * ch_prime(g, k))
              << "rho = " << to_string(rho) << ", class " << to_string(gc);
        }
      }
    }
  }
}

TEST(FrobeniusTest, DegreeTwoExpansions) {
  auto e = frobenius_expand(ClassIndex(2, 1, Partition{1}));
  EXPECT_TRUE(e.reconstructs);
  ASSERT_EQ(e.terms.size(), 2u);
  EXPECT_EQ(e.terms[0].second, Rational(1, 2));
  EXPECT_EQ(e.terms[1].second, Rational(1, 2));

  auto cycle = frobenius_expand(ClassIndex(2, 2, Partition{}));
  EXPECT_TRUE(cycle.reconstructs);
  EXPECT_EQ(cycle.terms[0].second, Rational(1, 2));
  EXPECT_EQ(cycle.terms[1].second, Rational(-1, 2));
}

TEST(FrobeniusTest, UnweightedExpansionFailsAtDegreeTwo) {
  EXPECT_FALSE(frobenius_expand(ClassIndex(2, 1, Partition{1}), FrobeniusWeight::unweighted).reconstructs);
  EXPECT_FALSE(frobenius_expand(ClassIndex(2, 2, Partition{}), FrobeniusWeight::unweighted).reconstructs);
}

TEST(FrobeniusTest, WeightedExpansionHolds) {
  for (int n = 1; n <= 6; ++n) {
    for (const ClassIndex& c : classes_of(n)) EXPECT_TRUE(frobenius_expand(c).reconstructs) << to_string(c);
  }
}

TEST(CauchyTest, GradedPiecesAgree) {
  auto one = cauchy_check(1);
  ASSERT_EQ(one.pieces.size(), 1u);
  EXPECT_TRUE(one.pieces[0].equal);
  auto five = cauchy_check(5);
  EXPECT_TRUE(five.all_equal());
  for (const auto& piece : five.pieces) EXPECT_FALSE(piece.rhs.coeffs.empty());
}

TEST(CauchyTest, TensorShareT) {
  TensorLtPoly t = tensor(lt(1, {1}), lt(2, {}));
  ASSERT_EQ(t.coeffs.size(), 1u);
  EXPECT_EQ(std::get<0>(t.coeffs.begin()->first), 3);
}
