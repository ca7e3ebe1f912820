#include "genchar/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "genchar/characters.hpp"
#include "genchar/gamma.hpp"
#include "genchar/greene.hpp"
#include "genchar/symfunc.hpp"

namespace genchar {

namespace {

// Runs `body`, which returns an empty string on success or a counterexample.
// `cases` is bumped by the body for every instance checked.
CheckResult timed(const std::string& suite, const std::string& name,
                  const std::function<std::string(std::int64_t& cases)>& body) {
  CheckResult r;
  r.suite = suite;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body(r.cases);
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string pair_label(const CharPair& p) { return "(" + to_string(p.lam) + " | " + to_string(p.mu) + ")"; }

std::string mismatch(const std::string& where, const Rational& got, const Rational& want) {
  return where + ": " + to_string(got) + " != " + to_string(want);
}

Rational dim_ratio(const CharPair& p) {
  return ratio(mpz_class(static_cast<long>(dim(p.mu))), mpz_class(static_cast<long>(dim(p.lam))));
}

// Every (λ, μ, ν) with λ/ν among the compact shapes and ν ⊆ μ↗λ.
std::vector<MarkedSkewTriple> triples_of(const SkewShape& s) {
  std::vector<MarkedSkewTriple> out;
  for (const auto& [mu, box] : remove_box_positions(s.outer())) {
    if (mu.contains(s.inner())) out.emplace_back(s.outer(), mu, s.inner());
  }
  return out;
}

std::map<ClassIndex, Rational> gamma_values(const CharPair& p) {
  std::map<ClassIndex, Rational> values;
  for (const ClassIndex& c : classes_of(p.n())) values.emplace(c, gamma_mn(p, c));
  return values;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"oracles", "orthogonality", "greene", "frobenius", "cauchy", "all"};
  return suites;
}

CheckResult check_mn_vs_syt(int n_max) {
  return timed("oracles", "gamma_mn = gamma_syt_oracle, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      for (const CharPair& p : pairs_of(n)) {
        for (const ClassIndex& c : classes_of(n)) {
          ++cases;
          Rational a = gamma_mn(p, c);
          Rational b = gamma_syt_oracle(p, c);
          if (a != b) return mismatch(pair_label(p) + " at " + to_string(c), a, b);
        }
      }
    }
    return std::string();
  });
}

CheckResult check_mn_vs_def(int n_max) {
  return timed("oracles", "gamma_mn = gamma_def_oracle, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      for (const CharPair& p : pairs_of(n)) {
        for (const ClassIndex& c : classes_of(n)) {
          ++cases;
          Rational a = gamma_mn(p, c);
          Rational b = gamma_def_oracle(p, class_representative(c));
          if (a != b) return mismatch(pair_label(p) + " at " + to_string(c), a, b);
        }
      }
    }
    return std::string();
  });
}

CheckResult check_ncycle(int n_max) {
  return timed("oracles", "n-cycle closed form, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      ClassIndex cycle(n, n, Partition{});
      for (const CharPair& p : pairs_of(n)) {
        ++cases;
        Rational a = gamma_mn(p, cycle);
        Rational b = gamma_ncycle(p);
        if (a != b) return mismatch(pair_label(p), a, b);
      }
    }
    return std::string();
  });
}

CheckResult check_j1_reduction(int n_max) {
  return timed("oracles", "gamma_mn at j = 1 equals chi^mu, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      for (const CharPair& p : pairs_of(n)) {
        for (const Partition& rho : partitions_of(n - 1)) {
          ++cases;
          Rational a = gamma_mn(p, ClassIndex(n, 1, rho));
          Rational b = static_cast<long>(chi(p.mu, rho));
          if (a != b) return mismatch(pair_label(p) + " at rho " + to_string(rho), a, b);
        }
      }
    }
    return std::string();
  });
}

CheckResult check_class_sizes(int n_max) {
  return timed("oracles", "class sizes sum to n!, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      ++cases;
      mpz_class total = 0;
      for (const ClassIndex& c : classes_of(n)) total += class_size(c);
      if (total != factorial(n)) return "n = " + std::to_string(n) + ": " + total.get_str() + " != " + factorial(n).get_str();
    }
    return std::string();
  });
}

CheckResult check_marked_bijection(int n_max) {
  return timed("oracles", "marked partitions round-trip, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      std::set<std::pair<Partition, Partition>> seen;
      for (const ClassIndex& c : classes_of(n)) {
        ++cases;
        MarkedPartition m = marked_partition(c);
        if (!(class_from_marked(m.full, m.sigma) == c)) return "round trip fails at " + to_string(c);
        if (!seen.emplace(m.full, m.sigma).second) return "duplicate marked partition at " + to_string(c);
        if (!(parse_class_index(to_marked_string(c)) == c)) return "marked text round trip fails at " + to_string(c);
      }
      std::size_t expected = 0;
      for (const Partition& full : partitions_of(n)) expected += remove_box_positions(full).size();
      if (seen.size() != expected) return "not onto for n = " + std::to_string(n);
    }
    return std::string();
  });
}

CheckResult check_gamma_orthogonality(int n_max) {
  return timed("orthogonality", "(1/n!) sum of class size * Gamma * Gamma = delta dim mu/dim lambda, n <= " + std::to_string(n_max),
               [&](std::int64_t& cases) {
                 for (int n = 1; n <= n_max; ++n) {
                   std::vector<CharPair> pairs = pairs_of(n);
                   std::vector<ClassIndex> classes = classes_of(n);
                   std::vector<std::vector<Rational>> values;
                   for (const CharPair& p : pairs) {
                     std::vector<Rational> row;
                     for (const ClassIndex& c : classes) row.push_back(gamma_mn(p, c));
                     values.push_back(std::move(row));
                   }
                   for (std::size_t a = 0; a < pairs.size(); ++a) {
                     for (std::size_t b = 0; b < pairs.size(); ++b) {
                       ++cases;
                       Rational total = 0;
                       for (std::size_t c = 0; c < classes.size(); ++c) {
                         total += Rational(class_size(classes[c])) * values[a][c] * values[b][c];
                       }
                       total /= Rational(factorial(n));
                       Rational want = a == b ? dim_ratio(pairs[a]) : Rational(0);
                       if (total != want) return mismatch(pair_label(pairs[a]) + " x " + pair_label(pairs[b]), total, want);
                     }
                   }
                 }
                 return std::string();
               });
}

CheckResult check_schur_orthogonality(int n_max) {
  return timed("orthogonality", "<S, S'> = delta n dim mu/dim lambda, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      std::vector<CharPair> pairs = pairs_of(n);
      std::vector<LtPoly> schur;
      for (const CharPair& p : pairs) schur.push_back(to_powersum(gen_schur(p)));
      for (std::size_t a = 0; a < pairs.size(); ++a) {
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          ++cases;
          Rational got = lt_scalar_product(schur[a], schur[b]);
          Rational want = a == b ? Rational(n) * dim_ratio(pairs[a]) : Rational(0);
          if (got != want) return mismatch(pair_label(pairs[a]) + " x " + pair_label(pairs[b]), got, want);
        }
      }
    }
    return std::string();
  });
}

CheckResult check_skew_closed(int max_boxes, int points, std::uint64_t seed) {
  return timed("greene", "X skew definition = closed form, <= " + std::to_string(max_boxes) + " boxes",
               [&](std::int64_t& cases) {
                 std::mt19937_64 rng(seed);
                 for (const SkewShape& s : compact_skew_shapes(max_boxes)) {
                   for (int k = 0; k < points; ++k) {
                     ++cases;
                     EvaluationPoint pt = random_distinct_point(s.size(), rng);
                     Rational a = x_skew_def(s, pt);
                     Rational b = x_skew_closed(s, pt);
                     if (a != b) return mismatch(to_string(s), a, b);
                   }
                 }
                 return std::string();
               });
}

CheckResult check_pair_closed(int max_boxes, int points, std::uint64_t seed) {
  return timed("greene", "X pair definition = closed form on broken border strips, <= " + std::to_string(max_boxes) + " boxes",
               [&](std::int64_t& cases) {
                 std::mt19937_64 rng(seed + 1);
                 for (const SkewShape& s : compact_skew_shapes(max_boxes)) {
                   if (has_two_by_two_block(s)) continue;
                   for (const MarkedSkewTriple& t : triples_of(s)) {
                     for (int k = 0; k < points; ++k) {
                       ++cases;
                       EvaluationPoint pt = random_distinct_point(s.size(), rng);
                       Rational a = x_pair_def(t, pt);
                       Rational b = x_pair_closed(t, pt);
                       if (a != b) return mismatch(to_string(s) + " marked at " + to_string(t.marked_box()), a, b);
                     }
                   }
                 }
                 return std::string();
               });
}

CheckResult check_decomposition(int max_boxes, int points, std::uint64_t seed) {
  return timed("greene", "X skew = sum over mu of X pair, <= " + std::to_string(max_boxes) + " boxes",
               [&](std::int64_t& cases) {
                 std::mt19937_64 rng(seed + 2);
                 for (const SkewShape& s : compact_skew_shapes(max_boxes)) {
                   std::vector<MarkedSkewTriple> triples = triples_of(s);
                   for (int k = 0; k < points; ++k) {
                     ++cases;
                     EvaluationPoint pt = random_distinct_point(s.size(), rng);
                     Rational total = 0;
                     for (const MarkedSkewTriple& t : triples) total += x_pair_def(t, pt);
                     Rational want = x_skew_def(s, pt);
                     if (total != want) return mismatch(to_string(s), total, want);
                   }
                 }
                 return std::string();
               });
}

CheckResult check_recurrence(int max_boxes, int points, std::uint64_t seed) {
  return timed("greene", "X pair recurrence over gamma, <= " + std::to_string(max_boxes) + " boxes",
               [&](std::int64_t& cases) {
                 std::mt19937_64 rng(seed + 3);
                 for (const SkewShape& s : compact_skew_shapes(max_boxes)) {
                   if (s.size() < 2) continue;
                   for (const MarkedSkewTriple& t : triples_of(s)) {
                     const int marked = t.marked_label();
                     for (int k = 0; k < points; ++k) {
                       ++cases;
                       EvaluationPoint pt = random_distinct_point(s.size(), rng);
                       EvaluationPoint reduced = pt;
                       reduced.values.erase(reduced.values.begin() + (marked - 1));
                       Rational total = 0;
                       for (const auto& [gamma, box] : remove_box_positions(t.middle)) {
                         if (!gamma.contains(t.inner)) continue;
                         Rational factor = pt[marked] - pt[s.label_of(box)];
                         total += x_pair_def(MarkedSkewTriple(t.middle, gamma, t.inner), reduced) / factor;
                       }
                       Rational want = x_pair_def(t, pt);
                       if (total != want) return mismatch(to_string(s) + " marked at " + to_string(t.marked_box()), total, want);
                     }
                   }
                 }
                 return std::string();
               });
}

CheckResult check_ch_prime(int n_max) {
  return timed("frobenius", "gen_schur = Ch'(Gamma), n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      for (const CharPair& p : pairs_of(n)) {
        ++cases;
        LtPoly a = to_powersum(gen_schur(p));
        LtPoly b = ch_prime(gamma_values(p), n);
        if (a != b) return pair_label(p) + ": " + to_string(a) + " != " + to_string(b);
      }
    }
    return std::string();
  });
}

CheckResult check_jacobi_trudi(int n_max) {
  return timed("frobenius", "gen_schur = determinant formula, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      for (const CharPair& p : pairs_of(n)) {
        ++cases;
        LtPoly a = to_powersum(gen_schur(p));
        LtPoly b = gen_schur_jt(p);
        if (a != b) return pair_label(p) + ": " + to_string(a) + " != " + to_string(b);
      }
    }
    return std::string();
  });
}

CheckResult check_t_power(int n_max) {
  return timed("frobenius", "t^(n-1) as an h' determinant, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    for (int n = 1; n <= n_max; ++n) {
      ++cases;
      LtPoly got = t_power_determinant(n);
      LtPoly want = LtPoly::monomial(Basis::powersum, n - 1, Partition{});
      if (got != want) return "n = " + std::to_string(n) + ": " + to_string(got);
    }
    return std::string();
  });
}

CheckResult check_isometry(int n_max, std::uint64_t seed) {
  return timed("frobenius", "Ch' is an isometry, n <= " + std::to_string(n_max), [&](std::int64_t& cases) {
    std::mt19937_64 rng(seed + 4);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 7);
    for (int n = 1; n <= n_max; ++n) {
      for (int trial = 0; trial < 5; ++trial) {
        ++cases;
        std::map<ClassIndex, Rational> f;
        std::map<ClassIndex, Rational> g;
        Rational want = 0;
        for (const ClassIndex& c : classes_of(n)) {
          f[c] = rational(num(rng), den(rng));
          g[c] = rational(num(rng), den(rng));
          // w and w⁻¹ lie in the same class.
          want += Rational(class_size(c)) * f[c] * g[c];
        }
        want /= Rational(factorial(n - 1));
        Rational got = lt_scalar_product(ch_prime(f, n), ch_prime(g, n));
        if (got != want) return mismatch("n = " + std::to_string(n) + ", trial " + std::to_string(trial), got, want);
      }
    }
    return std::string();
  });
}

CheckResult check_frobenius_weighted(int n_max) {
  return timed("frobenius", "t^(j-1) p_rho = sum of (dim lambda/(n dim mu)) Gamma S, n <= " + std::to_string(n_max),
               [&](std::int64_t& cases) {
                 for (int n = 1; n <= n_max; ++n) {
                   for (const ClassIndex& c : classes_of(n)) {
                     ++cases;
                     if (!frobenius_expand(c, FrobeniusWeight::derived).reconstructs) {
                       return "expansion fails at " + to_string(c);
                     }
                   }
                 }
                 return std::string();
               });
}

CheckResult check_frobenius_unweighted_rejected() {
  return timed("frobenius", "unweighted expansion fails at n = 2", [&](std::int64_t& cases) {
    for (const ClassIndex& c : classes_of(2)) {
      ++cases;
      if (!frobenius_expand(c, FrobeniusWeight::unweighted).reconstructs) return std::string();
    }
    return std::string("the unweighted expansion reconstructs every class of S(2)");
  });
}

CheckResult check_cauchy(int max_n) {
  return timed("cauchy", "Cauchy-type identity through degree " + std::to_string(max_n), [&](std::int64_t& cases) {
    CauchyReport report = cauchy_check(max_n);
    for (const CauchyPiece& piece : report.pieces) {
      cases += static_cast<std::int64_t>(piece.rhs.coeffs.size());
      if (!piece.equal) return "graded piece n = " + std::to_string(piece.n) + " differs";
    }
    return std::string();
  });
}

VerifyReport run_verify(const std::string& suite, int n_max, std::uint64_t seed) {
  bool known = false;
  for (const auto& s : verify_suites()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (n_max < 1) throw std::invalid_argument("n-max must be at least 1");

  VerifyReport report;
  report.suite = suite;
  report.n_max = n_max;
  report.seed = seed;
  auto wants = [&](const char* name) { return suite == "all" || suite == name; };
  auto& out = report.checks;
  if (wants("oracles")) {
    out.push_back(check_mn_vs_syt(n_max));
    out.push_back(check_mn_vs_def(std::min(n_max, 5)));
    out.push_back(check_ncycle(n_max));
    out.push_back(check_j1_reduction(n_max));
    out.push_back(check_class_sizes(n_max));
    out.push_back(check_marked_bijection(n_max));
  }
  if (wants("orthogonality")) {
    out.push_back(check_gamma_orthogonality(n_max));
    out.push_back(check_schur_orthogonality(n_max));
  }
  if (wants("greene")) {
    const int points = 20;
    out.push_back(check_skew_closed(n_max, points, seed));
    out.push_back(check_pair_closed(n_max, points, seed));
    out.push_back(check_decomposition(n_max, points, seed));
    out.push_back(check_recurrence(n_max, points, seed));
  }
  if (wants("frobenius")) {
    out.push_back(check_ch_prime(n_max));
    out.push_back(check_jacobi_trudi(n_max));
    out.push_back(check_t_power(n_max));
    out.push_back(check_isometry(n_max, seed));
    out.push_back(check_frobenius_weighted(n_max));
    out.push_back(check_frobenius_unweighted_rejected());
  }
  if (wants("cauchy")) out.push_back(check_cauchy(n_max));
  return report;
}

std::string render_text(const VerifyReport& report) {
  std::string out;
  int failed = 0;
  for (const auto& c : report.checks) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", c.seconds);
    out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.suite + ": " + c.name + "  (" + std::to_string(c.cases) +
           " cases, " + timing + ")\n";
    if (!c.passed) {
      ++failed;
      out += "      " + c.detail + "\n";
    }
  }
  out += std::to_string(report.checks.size() - static_cast<std::size_t>(failed)) + "/" +
         std::to_string(report.checks.size()) + " checks passed\n";
  return out;
}

std::string render_json(const VerifyReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["n_max"] = report.n_max;
  doc["seed"] = report.seed;
  doc["passed"] = report.all_passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["suite"] = c.suite;
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["cases"] = c.cases;
    entry["seconds"] = c.seconds;
    if (!c.passed) entry["detail"] = c.detail;
    doc["checks"].push_back(entry);
  }
  return doc.dump(indent);
}

}  // namespace genchar
