#include "genchar/symfunc.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include <json.hpp>

#include "genchar/greene.hpp"

namespace genchar {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::powersum:
      return "powersum";
    case Basis::complete:
      return "complete";
    case Basis::schur:
      return "schur";
  }
  return "?";
}

namespace {

const char* basis_symbol(Basis b) {
  switch (b) {
    case Basis::powersum:
      return "p";
    case Basis::complete:
      return "h";
    case Basis::schur:
      return "s";
  }
  return "?";
}

template <typename Map, typename Key>
void accumulate(Map& coeffs, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

// Memo for basis changes keyed by partition; concurrent lookups share a lock.
class SymCache {
 public:
  template <typename Compute>
  SymPoly get(const Partition& key, Compute compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    SymPoly value = compute();
    std::unique_lock lock(mutex_);
    cache_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Partition, SymPoly> cache_;
};

std::string partition_brackets(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

// Joins "coefficient·monomial" terms with " + " / " - ".
std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, monomial] = terms[i];
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + "·";
    out += monomial;
  }
  return out;
}

}  // namespace

SymPoly SymPoly::monomial(Basis b, const Partition& p, const Rational& c) {
  SymPoly f(b);
  f.add(p, c);
  return f;
}

void SymPoly::add(const Partition& p, const Rational& c) { accumulate(coeffs, p, c); }

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.basis != b.basis) return to_powersum(a) + to_powersum(b);
  SymPoly out = a;
  for (const auto& [p, c] : b.coeffs) out.add(p, c);
  return out;
}

SymPoly operator*(const Rational& c, const SymPoly& a) {
  SymPoly out(a.basis);
  if (c == 0) return out;
  for (const auto& [p, v] : a.coeffs) out.coeffs.emplace(p, c * v);
  return out;
}

SymPoly p_multiply(const SymPoly& a, const SymPoly& b) {
  if (a.basis != Basis::powersum || b.basis != Basis::powersum) {
    throw std::invalid_argument("p_multiply expects both operands in the power-sum basis");
  }
  SymPoly out(Basis::powersum);
  for (const auto& [pa, ca] : a.coeffs) {
    for (const auto& [pb, cb] : b.coeffs) out.add(union_of(pa, pb), ca * cb);
  }
  return out;
}

SymPoly h_to_p(int k) {
  static SymCache cache;
  if (k < 0) return SymPoly(Basis::powersum);
  return cache.get(Partition{k == 0 ? std::vector<int>{} : std::vector<int>{k}}, [k]() {
    SymPoly out(Basis::powersum);
    for (const Partition& rho : partitions_of(k)) out.add(rho, ratio(mpz_class(1), z_factor(rho)));
    return out;
  });
}

SymPoly s_to_p(const Partition& nu) {
  static SymCache cache;
  return cache.get(nu, [&nu]() {
    SymPoly out(Basis::powersum);
    for (const Partition& rho : partitions_of(nu.size())) {
      out.add(rho, ratio(mpz_class(static_cast<long>(chi(nu, rho))), z_factor(rho)));
    }
    return out;
  });
}

SymPoly p_to_s(const Partition& rho) {
  static SymCache cache;
  return cache.get(rho, [&rho]() {
    SymPoly out(Basis::schur);
    for (const Partition& lam : partitions_of(rho.size())) out.add(lam, static_cast<long>(chi(lam, rho)));
    return out;
  });
}

SymPoly to_powersum(const SymPoly& f) {
  switch (f.basis) {
    case Basis::powersum:
      return f;
    case Basis::schur: {
      SymPoly out(Basis::powersum);
      for (const auto& [nu, c] : f.coeffs) out = out + c * s_to_p(nu);
      return out;
    }
    case Basis::complete: {
      SymPoly out(Basis::powersum);
      for (const auto& [lam, c] : f.coeffs) {
        SymPoly product = SymPoly::monomial(Basis::powersum, Partition{});
        for (int part : lam.parts()) product = p_multiply(product, h_to_p(part));
        out = out + c * product;
      }
      return out;
    }
  }
  throw std::logic_error("unknown basis");
}

SymPoly to_schur(const SymPoly& f) {
  if (f.basis == Basis::schur) return f;
  SymPoly p = to_powersum(f);
  SymPoly out(Basis::schur);
  for (const auto& [rho, c] : p.coeffs) {
    for (const auto& [lam, v] : p_to_s(rho).coeffs) out.add(lam, c * v);
  }
  return out;
}

SymPoly ch_classical(const std::map<Partition, Rational>& values, int m) {
  SymPoly out(Basis::powersum);
  for (const Partition& lam : partitions_of(m)) {
    auto it = values.find(lam);
    if (it == values.end()) throw std::invalid_argument("missing class function value at " + to_string(lam));
    out.add(lam, it->second / Rational(z_factor(lam)));
  }
  return out;
}

LtPoly LtPoly::from_sym(const SymPoly& f, int t_degree) {
  SymPoly g = f.basis == Basis::complete ? to_powersum(f) : f;
  LtPoly out(g.basis);
  for (const auto& [p, c] : g.coeffs) out.add(t_degree, p, c);
  return out;
}

LtPoly LtPoly::monomial(Basis b, int t_degree, const Partition& p, const Rational& c) {
  LtPoly out(b);
  out.add(t_degree, p, c);
  return out;
}

void LtPoly::add(int t_degree, const Partition& p, const Rational& c) { accumulate(coeffs, LtKey{t_degree, p}, c); }

LtPoly operator+(const LtPoly& a, const LtPoly& b) {
  if (a.basis != b.basis) return to_powersum(a) + to_powersum(b);
  LtPoly out = a;
  for (const auto& [key, c] : b.coeffs) out.add(key.t_degree, key.part, c);
  return out;
}

LtPoly operator-(const LtPoly& a, const LtPoly& b) { return a + Rational(-1) * b; }

LtPoly operator*(const Rational& c, const LtPoly& a) {
  LtPoly out(a.basis);
  if (c == 0) return out;
  for (const auto& [key, v] : a.coeffs) out.coeffs.emplace(key, c * v);
  return out;
}

LtPoly operator*(const LtPoly& a, const LtPoly& b) {
  LtPoly pa = to_powersum(a);
  LtPoly pb = to_powersum(b);
  LtPoly out(Basis::powersum);
  for (const auto& [ka, ca] : pa.coeffs) {
    for (const auto& [kb, cb] : pb.coeffs) out.add(ka.t_degree + kb.t_degree, union_of(ka.part, kb.part), ca * cb);
  }
  return out;
}

LtPoly to_powersum(const LtPoly& f) {
  if (f.basis == Basis::powersum) return f;
  if (f.basis == Basis::complete) throw std::invalid_argument("LtPoly does not use the complete basis");
  LtPoly out(Basis::powersum);
  for (const auto& [key, c] : f.coeffs) {
    for (const auto& [rho, v] : s_to_p(key.part).coeffs) out.add(key.t_degree, rho, c * v);
  }
  return out;
}

LtPoly to_schur(const LtPoly& f) {
  if (f.basis == Basis::schur) return f;
  LtPoly out(Basis::schur);
  for (const auto& [key, c] : f.coeffs) {
    for (const auto& [lam, v] : p_to_s(key.part).coeffs) out.add(key.t_degree, lam, c * v);
  }
  return out;
}

std::string to_string(const LtPoly& f) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [key, c] : f.coeffs) {
    std::string monomial;
    if (key.t_degree == 1) monomial = "t·";
    if (key.t_degree > 1) monomial = "t^" + std::to_string(key.t_degree) + "·";
    monomial += basis_symbol(f.basis) + partition_brackets(key.part);
    terms.emplace_back(c, monomial);
  }
  return join_terms(terms);
}

std::string to_string(const SymPoly& f) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [p, c] : f.coeffs) terms.emplace_back(c, basis_symbol(f.basis) + partition_brackets(p));
  return join_terms(terms);
}

std::string to_json(const LtPoly& f, int indent) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& [key, c] : f.coeffs) {
    nlohmann::ordered_json term;
    term["t_degree"] = key.t_degree;
    term["partition"] = key.part.parts();
    term["coeff"] = to_string(c);
    term["basis"] = to_string(f.basis);
    doc.push_back(term);
  }
  return doc.dump(indent);
}

LtPoly ch_prime(const std::map<ClassIndex, Rational>& values, int n) {
  LtPoly out(Basis::powersum);
  for (const ClassIndex& c : classes_of(n)) {
    auto it = values.find(c);
    if (it == values.end()) throw std::invalid_argument("ch_prime: no value for class " + to_string(c));
    out.add(c.j - 1, c.rho, it->second / Rational(z_factor(c.rho)));
  }
  return out;
}

LtPoly gen_schur(const CharPair& p) {
  LtPoly out(Basis::schur);
  for (int size = 0; size < p.n(); ++size) {
    for (const Partition& nu : subpartitions_of_size(p.mu, size)) {
      out.add(p.n() - size - 1, nu, phi(MarkedSkewTriple(p.lam, p.mu, nu)));
    }
  }
  return out;
}

Rational lt_scalar_product(const LtPoly& a, const LtPoly& b) {
  LtPoly pa = to_powersum(a);
  LtPoly pb = to_powersum(b);
  Rational total = 0;
  for (const auto& [key, ca] : pa.coeffs) {
    auto it = pb.coeffs.find(key);
    if (it != pb.coeffs.end()) total += ca * it->second * Rational(z_factor(key.part));
  }
  return total;
}

LtPoly h_prime(int k) {
  if (k < 1) throw std::invalid_argument("h_prime requires k >= 1");
  LtPoly out(Basis::powersum);
  for (int j = 1; j <= k; ++j) out = out + LtPoly::from_sym(h_to_p(k - j), j - 1);
  return out;
}

LtPoly determinant(const std::vector<std::vector<LtPoly>>& m) {
  const std::size_t size = m.size();
  if (size == 0) return LtPoly::monomial(Basis::powersum, 0, Partition{});
  if (size == 1) return to_powersum(m[0][0]);
  // Expand along the first column, skipping zero entries.
  LtPoly total(Basis::powersum);
  for (std::size_t r = 0; r < size; ++r) {
    if (m[r][0].is_zero()) continue;
    std::vector<std::vector<LtPoly>> minor;
    for (std::size_t i = 0; i < size; ++i) {
      if (i == r) continue;
      minor.emplace_back(m[i].begin() + 1, m[i].end());
    }
    LtPoly term = m[r][0] * determinant(minor);
    total = (r % 2 == 0) ? total + term : total - term;
  }
  return total;
}

namespace {

LtPoly h_entry(int k) {
  if (k < 0) return LtPoly(Basis::powersum);
  return LtPoly::from_sym(h_to_p(k));
}

std::vector<std::vector<LtPoly>> h_prime_matrix(int m) {
  std::vector<std::vector<LtPoly>> matrix(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (int c = 1; c <= m; ++c) {
      matrix[static_cast<std::size_t>(i - 1)].push_back(c < m ? h_entry(c - i + 1) : h_prime(m - i + 1));
    }
  }
  return matrix;
}

// det of the m×m h′ matrix, shared by every term of gen_schur_jt.
LtPoly h_prime_determinant(int m) {
  static std::shared_mutex mutex;
  static std::map<int, LtPoly> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  LtPoly value = determinant(h_prime_matrix(m));
  std::unique_lock lock(mutex);
  cache.emplace(m, value);
  return value;
}

}  // namespace

LtPoly t_power_determinant(int n) {
  LtPoly det = h_prime_determinant(n);
  return (n % 2 == 1) ? det : Rational(-1) * det;
}

LtPoly jacobi_trudi(const Partition& nu) {
  const int l = nu.length();
  std::vector<std::vector<LtPoly>> matrix(static_cast<std::size_t>(l));
  for (int i = 1; i <= l; ++i) {
    for (int c = 1; c <= l; ++c) matrix[static_cast<std::size_t>(i - 1)].push_back(h_entry(nu[i - 1] - i + c));
  }
  return determinant(matrix);
}

LtPoly gen_schur_jt(const CharPair& p) {
  LtPoly out(Basis::powersum);
  for (int size = 0; size < p.n(); ++size) {
    for (const Partition& nu : subpartitions_of_size(p.mu, size)) {
      Rational coefficient = phi(MarkedSkewTriple(p.lam, p.mu, nu));
      if (coefficient == 0) continue;
      const int m = p.n() - size;
      if (m % 2 == 0) coefficient = -coefficient;
      out = out + coefficient * (h_prime_determinant(m) * jacobi_trudi(nu));
    }
  }
  return out;
}

FrobeniusExpansion frobenius_expand(const ClassIndex& c, FrobeniusWeight weight) {
  FrobeniusExpansion out;
  out.cls = c;
  LtPoly rebuilt(Basis::powersum);
  for (const CharPair& pair : pairs_of(c.n)) {
    Rational coefficient = gamma_mn(pair, c);
    if (weight == FrobeniusWeight::derived) {
      coefficient *= ratio(mpz_class(static_cast<long>(dim(pair.lam))),
                              mpz_class(static_cast<long>(c.n)) * static_cast<long>(dim(pair.mu)));
    }
    out.terms.emplace_back(pair, coefficient);
    if (coefficient != 0) rebuilt = rebuilt + coefficient * to_powersum(gen_schur(pair));
  }
  out.reconstructs = rebuilt == LtPoly::monomial(Basis::powersum, c.j - 1, c.rho);
  return out;
}

void TensorLtPoly::add(int t_degree, const Partition& x, const Partition& y, const Rational& c) {
  accumulate(coeffs, std::make_tuple(t_degree, x, y), c);
}

TensorLtPoly tensor(const LtPoly& a, const LtPoly& b) {
  LtPoly pa = to_powersum(a);
  LtPoly pb = to_powersum(b);
  TensorLtPoly out;
  for (const auto& [ka, ca] : pa.coeffs) {
    for (const auto& [kb, cb] : pb.coeffs) out.add(ka.t_degree + kb.t_degree, ka.part, kb.part, ca * cb);
  }
  return out;
}

bool CauchyReport::all_equal() const {
  for (const auto& piece : pieces) {
    if (!piece.equal) return false;
  }
  return true;
}

CauchyReport cauchy_check(int max_n) {
  CauchyReport report;
  for (int n = 1; n <= max_n; ++n) {
    CauchyPiece piece;
    piece.n = n;
    for (const CharPair& pair : pairs_of(n)) {
      LtPoly s = to_powersum(gen_schur(pair));
      Rational w = ratio(mpz_class(static_cast<long>(dim(pair.lam))), mpz_class(n) * static_cast<long>(dim(pair.mu)));
      for (const auto& [key, c] : tensor(s, s).coeffs) {
        piece.lhs.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), w * c);
      }
    }
    for (int k = 0; k < n; ++k) {
      for (const Partition& lam : partitions_of(n - 1 - k)) {
        piece.rhs.add(2 * k, lam, lam, ratio(mpz_class(1), z_factor(lam)));
      }
    }
    piece.equal = piece.lhs == piece.rhs;
    report.pieces.push_back(std::move(piece));
  }
  return report;
}

}  // namespace genchar
