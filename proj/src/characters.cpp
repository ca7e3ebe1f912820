#include "genchar/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace genchar {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of {1..n}");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<int> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.images_[static_cast<std::size_t>(b.images_[i] - 1)];
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return Partition(std::move(lengths));
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int largest = 0;
  auto skip_spaces = [&]() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_spaces();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError(pos + 1, "expected '(' at position " + std::to_string(pos + 1));
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError(pos + 1, "unterminated cycle at position " + std::to_string(pos + 1));
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    bool separated = body.find_first_of(", ") != std::string_view::npos;
    std::vector<int> cycle;
    std::size_t i = 0;
    while (i < body.size()) {
      char c = body[i];
      if (c == ',' || c == ' ') {
        ++i;
        continue;
      }
      if (c < '0' || c > '9') {
        throw ParseError(pos + 2 + i, "invalid character '" + std::string(1, c) + "' at position " + std::to_string(pos + 2 + i));
      }
      int value = 0;
      std::size_t start = i;
      if (separated) {
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') value = value * 10 + (body[i++] - '0');
      } else {
        value = c - '0';
        ++i;
      }
      if (value == 0) throw ParseError(pos + 2 + start, "element 0 at position " + std::to_string(pos + 2 + start));
      cycle.push_back(value);
      largest = std::max(largest, value);
    }
    cycles.push_back(std::move(cycle));
    pos = close + 1;
    skip_spaces();
  }
  int n = degree > 0 ? degree : largest;
  if (largest > n) throw std::invalid_argument("cycle element exceeds degree " + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      if (used[static_cast<std::size_t>(from)]) throw std::invalid_argument("element " + std::to_string(from) + " repeated in cycles");
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from - 1)] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  if (p.degree() == 0) return "()";
  bool commas = p.degree() > 9;
  std::string out;
  for (const auto& cycle : p.cycles()) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (commas && k > 0) out += ',';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out;
}

ClassIndex::ClassIndex(int n_, int j_, Partition rho_) : n(n_), j(j_), rho(std::move(rho_)) {
  if (j < 1 || j > n || rho.size() + j != n) {
    throw std::invalid_argument("invalid class index: j=" + std::to_string(j) + ", rho=" + genchar::to_string(rho) +
                                " for n=" + std::to_string(n));
  }
}

std::string to_string(const ClassIndex& c) { return "j=" + std::to_string(c.j) + ";rho=" + to_string(c.rho); }

std::string to_marked_string(const ClassIndex& c) {
  MarkedPartition m = marked_partition(c);
  int marked_row = 0;
  for (int i = 0; i < m.full.length(); ++i) {
    if (m.full[i] != m.sigma[i]) marked_row = i;
  }
  std::string out;
  for (int i = 0; i < m.full.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m.full[i]);
    if (i == marked_row) out += '*';
  }
  return out;
}

ClassIndex parse_class_index(std::string_view text) {
  if (text.rfind("j=", 0) == 0) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError(text.size() + 1, "expected ';rho=' after j");
    std::string_view jtext = text.substr(2, semi - 2);
    if (jtext.empty()) throw ParseError(3, "missing value for j at position 3");
    int j = 0;
    for (std::size_t i = 0; i < jtext.size(); ++i) {
      if (jtext[i] < '0' || jtext[i] > '9') throw ParseError(3 + i, "invalid digit in j at position " + std::to_string(3 + i));
      j = j * 10 + (jtext[i] - '0');
    }
    std::string_view rest = text.substr(semi + 1);
    if (rest.rfind("rho=", 0) != 0) throw ParseError(semi + 2, "expected 'rho=' at position " + std::to_string(semi + 2));
    Partition rho;
    try {
      if (rest.size() > 4) rho = parse_partition(rest.substr(4));
    } catch (const ParseError& e) {
      std::size_t pos = e.position() + semi + 5;
      throw ParseError(pos, std::string(e.what()) + " (offset " + std::to_string(pos) + " in class)");
    }
    if (j < 1) throw ParseError(3, "j must be at least 1");
    return ClassIndex(j + rho.size(), j, rho);
  }
  auto star = text.find('*');
  if (star == std::string_view::npos) throw ParseError(1, "class must be 'j=..;rho=..' or a marked partition like 3*,2,2");
  if (text.find('*', star + 1) != std::string_view::npos) {
    throw ParseError(text.find('*', star + 1) + 1, "more than one marked row");
  }
  std::string plain(text.substr(0, star));
  plain += text.substr(star + 1);
  Partition full = parse_partition(plain);
  std::size_t row_start = text.rfind(',', star);
  row_start = row_start == std::string_view::npos ? 0 : row_start + 1;
  int j = 0;
  for (std::size_t i = row_start; i < star; ++i) j = j * 10 + (text[i] - '0');
  if (j == 0) throw ParseError(star + 1, "marker '*' must follow a part");
  return ClassIndex(full.size(), j, remove_part(full, j));
}

mpz_class z_factor(const Partition& rho) {
  mpz_class z = 1;
  int i = 0;
  while (i < rho.length()) {
    int value = rho[i];
    int m = rho.multiplicity(value);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value), static_cast<unsigned long>(m));
    z *= power * factorial(m);
    i += m;
  }
  return z;
}

ClassIndex class_of_permutation(const Permutation& p) {
  if (p.degree() < 1) throw std::invalid_argument("empty permutation");
  const int n = p.degree();
  std::vector<int> others;
  int j = 0;
  for (const auto& cycle : p.cycles()) {
    if (std::find(cycle.begin(), cycle.end(), n) != cycle.end()) {
      j = static_cast<int>(cycle.size());
    } else {
      others.push_back(static_cast<int>(cycle.size()));
    }
  }
  std::sort(others.begin(), others.end(), std::greater<>());
  return ClassIndex(n, j, Partition(std::move(others)));
}

MarkedPartition marked_partition(const ClassIndex& c) {
  Partition full = union_of(c.rho, Partition{c.j});
  std::vector<int> parts = full.parts();
  int lowest = -1;
  for (int i = 0; i < full.length(); ++i) {
    if (full[i] == c.j) lowest = i;
  }
  --parts[static_cast<std::size_t>(lowest)];
  return MarkedPartition{full, Partition(std::move(parts))};
}

ClassIndex class_from_marked(const Partition& full, const Partition& sigma) {
  if (full.size() != sigma.size() + 1 || !full.contains(sigma)) {
    throw std::invalid_argument(to_string(sigma) + " is not obtained from " + to_string(full) + " by removing one box");
  }
  for (int i = 0; i < full.length(); ++i) {
    if (full[i] != sigma[i]) return ClassIndex(full.size(), full[i], remove_part(full, full[i]));
  }
  throw std::logic_error("unreachable");
}

mpz_class class_size(const ClassIndex& c) { return factorial(c.n - 1) / z_factor(c.rho); }

std::vector<ClassIndex> classes_of(int n) {
  std::vector<ClassIndex> out;
  for (const Partition& full : partitions_of(n)) {
    std::vector<int> values = full.parts();
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::reverse(values.begin(), values.end());
    for (int j : values) out.emplace_back(n, j, remove_part(full, j));
  }
  return out;
}

Permutation class_representative(const ClassIndex& c) {
  std::vector<int> images(static_cast<std::size_t>(c.n));
  int start = 1;
  auto place_cycle = [&](int length) {
    for (int k = 0; k < length; ++k) {
      int from = start + k;
      images[static_cast<std::size_t>(from - 1)] = (k + 1 < length) ? from + 1 : start;
    }
    start += length;
  };
  for (int part : c.rho.parts()) place_cycle(part);
  place_cycle(c.j);
  return Permutation(std::move(images));
}

namespace {

// Rim hooks of size k via beta-numbers: moving a bead from b to b - k onto a
// free position removes a rim hook whose height is the number of beads passed.
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lam, int k) {
  const int len = lam.length();
  std::vector<int> beads(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lam[i] + (len - 1 - i);
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < len; ++i) {
    int b = beads[static_cast<std::size_t>(i)];
    int target = b - k;
    if (target < 0) continue;
    if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
    int passed = 0;
    for (int other : beads) {
      if (other > target && other < b) ++passed;
    }
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int r = 0; r < len; ++r) parts[static_cast<std::size_t>(r)] = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
    out.emplace_back(Partition(std::move(parts)), passed);
  }
  return out;
}

}  // namespace

std::int64_t chi(const Partition& lam, const Partition& rho) {
  if (lam.size() != rho.size()) {
    throw std::invalid_argument("chi: |lambda| = " + std::to_string(lam.size()) + " but |rho| = " + std::to_string(rho.size()));
  }
  if (lam.size() == 0) return 1;

  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  auto key = std::make_pair(lam, rho);
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const int largest = rho[0];
  Partition rest = remove_part(rho, largest);
  std::int64_t value = 0;
  for (const auto& [smaller, height] : remove_rim_hooks(lam, largest)) {
    std::int64_t term = chi(smaller, rest);
    value += (height % 2 == 0) ? term : -term;
  }

  std::unique_lock lock(mutex);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace genchar
