#include "genchar/gamma.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "genchar/greene.hpp"

namespace genchar {

CharPair::CharPair(Partition lam_, Partition mu_) : lam(std::move(lam_)), mu(std::move(mu_)) {
  if (lam.size() != mu.size() + 1 || !lam.contains(mu)) {
    throw std::invalid_argument("mu = " + to_string(mu) + " is not obtained from lambda = " + to_string(lam) +
                                " by removing one box");
  }
}

std::string to_marked_string(const CharPair& p) {
  return to_marked_string(class_from_marked(p.lam, p.mu));
}

std::vector<CharPair> pairs_of(int n) {
  std::vector<CharPair> out;
  for (const ClassIndex& c : classes_of(n)) {
    MarkedPartition m = marked_partition(c);
    out.emplace_back(m.full, m.sigma);
  }
  return out;
}

namespace {

void require_same_degree(const CharPair& p, int n) {
  if (p.n() != n) {
    throw std::invalid_argument("pair " + to_string(p.lam) + " has size " + std::to_string(p.n()) +
                                " but the class belongs to S(" + std::to_string(n) + ")");
  }
}

}  // namespace

Rational gamma_mn(const CharPair& p, const ClassIndex& c) {
  require_same_degree(p, c.n);
  Rational total = 0;
  for (const Partition& nu : subpartitions_of_size(p.mu, c.n - c.j)) {
    Rational coefficient = phi(MarkedSkewTriple(p.lam, p.mu, nu));
    if (coefficient == 0) continue;
    total += coefficient * chi(nu, c.rho);
  }
  return total;
}

Rational gamma_def_oracle(const CharPair& p, const Permutation& x) {
  const int n = p.n();
  if (x.degree() != n) throw std::invalid_argument("permutation degree does not match the pair");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  mpz_class sum = 0;
  // S(n-1) = permutations of {1..n-1} fixing n.
  do {
    Permutation y(images);
    Partition xy_type = (x * y.inverse()).cycle_type();
    Partition y_type = Permutation(std::vector<int>(images.begin(), images.end() - 1)).cycle_type();
    sum += mpz_class(static_cast<long>(chi(p.lam, xy_type))) * static_cast<long>(chi(p.mu, y_type));
  } while (std::next_permutation(images.begin(), images.end() - 1));
  return ratio(sum * static_cast<long>(dim(p.mu)), factorial(n - 1));
}

Rational gamma_syt_oracle(const CharPair& p, const ClassIndex& c) {
  require_same_degree(p, c.n);
  const int n = c.n;
  std::vector<bool> cycle_end(static_cast<std::size_t>(n) + 1, false);
  int position = 0;
  for (int part : c.rho.parts()) {
    position += part;
    cycle_end[static_cast<std::size_t>(position)] = true;
  }
  cycle_end[static_cast<std::size_t>(n)] = true;

  Box last{};
  for (int i = 0; i < p.lam.length(); ++i) {
    if (p.lam[i] != p.mu[i]) last = Box{i + 1, p.lam[i]};
  }
  Rational total = 0;
  for (const StandardTableau& t : enumerate_syt(SkewShape(p.mu))) {
    std::vector<int> content(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      content[static_cast<std::size_t>(t.entries[i])] = t.shape.boxes()[i].content();
    }
    content[static_cast<std::size_t>(n)] = last.content();
    Rational term = 1;
    for (int k = 1; k < n; ++k) {
      if (cycle_end[static_cast<std::size_t>(k)]) continue;
      term /= content[static_cast<std::size_t>(k + 1)] - content[static_cast<std::size_t>(k)];
    }
    total += term;
  }
  return total;
}

Rational gamma_ncycle(const CharPair& p) {
  const int n = p.n();
  if (n == 1) return 1;
  if (p.lam[1] > 1) return 0;
  const int a = p.lam[0] - 1;
  const int b = p.lam.length() - 1;
  const int sign = (b % 2 == 0) ? 1 : -1;
  // μ = (a, 1^b): box removed from the first row; otherwise from the leg.
  const bool arm_removed = p.mu[0] == a;
  return rational(sign * (arm_removed ? a : b), a + b);
}

std::string to_string(Scaling s) { return s == Scaling::raw ? "raw" : "paper"; }

GeneralizedCharacterTable build_table(int n, Scaling scaling, int threads) {
  GeneralizedCharacterTable table;
  table.n = n;
  table.scaling = scaling;
  table.rows = pairs_of(n);
  table.cols = classes_of(n);
  const std::size_t rows = table.rows.size();
  const std::size_t cols = table.cols.size();
  table.entries.assign(rows, std::vector<Rational>(cols));

  auto fill = [&](std::size_t cell) {
    std::size_t r = cell / cols;
    std::size_t c = cell % cols;
    Rational value = gamma_mn(table.rows[r], table.cols[c]);
    if (scaling == Scaling::paper_scaled) {
      value *= ratio(factorial(n - 1), mpz_class(static_cast<long>(dim(table.rows[r].mu))));
    }
    table.entries[r][c] = value;
  };

  const std::size_t cells = rows * cols;
  if (threads <= 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) fill(cell);
    return table;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&]() {
      for (std::size_t cell = next++; cell < cells; cell = next++) fill(cell);
    });
  }
  for (auto& w : workers) w.join();
  return table;
}

namespace {

// Display width of a UTF-8 string (continuation bytes take no column).
std::size_t display_width(const std::string& s) {
  std::size_t width = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++width;
  }
  return width;
}

std::string pad_left(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return std::string(width > w ? width - w : 0, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  std::size_t w = display_width(s);
  return s + std::string(width > w ? width - w : 0, ' ');
}

nlohmann::json parts_json(const Partition& p) { return nlohmann::json(p.parts()); }

}  // namespace

std::string render_text(const GeneralizedCharacterTable& table) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"Class"};
  std::vector<std::string> orders{"Order"};
  for (const ClassIndex& c : table.cols) {
    header.push_back("(" + to_marked_string(c) + ")");
    orders.push_back(class_size(c).get_str());
  }
  grid.push_back(header);
  grid.push_back(orders);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::vector<std::string> line{"Γ^(" + to_marked_string(table.rows[r]) + ")"};
    for (const Rational& v : table.entries[r]) line.push_back(to_string(v));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], display_width(line[c]));
  }
  std::string out = "Degree " + std::to_string(table.n) + " (" + to_string(table.scaling) + ")\n";
  for (const auto& line : grid) {
    std::string text = pad_right(line[0], widths[0]);
    for (std::size_t c = 1; c < line.size(); ++c) text += "  " + pad_left(line[c], widths[c]);
    out += text + "\n";
  }
  return out;
}

std::string render_json(const GeneralizedCharacterTable& table, int indent) {
  nlohmann::ordered_json doc;
  doc["n"] = table.n;
  doc["scaling"] = to_string(table.scaling);
  doc["classes"] = nlohmann::ordered_json::array();
  for (const ClassIndex& c : table.cols) {
    nlohmann::ordered_json entry;
    entry["j"] = c.j;
    entry["rho"] = parts_json(c.rho);
    entry["marked"] = to_marked_string(c);
    entry["order"] = class_size(c).get_ui();
    doc["classes"].push_back(entry);
  }
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    nlohmann::ordered_json entry;
    entry["lam"] = parts_json(table.rows[r].lam);
    entry["mu"] = parts_json(table.rows[r].mu);
    entry["marked"] = to_marked_string(table.rows[r]);
    std::vector<std::string> values;
    for (const Rational& v : table.entries[r]) values.push_back(to_string(v));
    entry["values"] = values;
    doc["rows"].push_back(entry);
  }
  return doc.dump(indent);
}

}  // namespace genchar
