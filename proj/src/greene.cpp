#include "genchar/greene.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace genchar {

namespace {

using Mask = std::uint64_t;

Mask bit(int index) { return Mask{1} << index; }

// For each box (by index in s.boxes()), the mask of its immediate
// predecessors (box above, box to the left) restricted to `members`.
std::vector<Mask> predecessor_masks(const SkewShape& s, Mask members) {
  std::vector<Mask> preds(s.boxes().size(), 0);
  for (std::size_t i = 0; i < s.boxes().size(); ++i) {
    const Box& b = s.boxes()[i];
    for (const Box& p : {Box{b.row - 1, b.col}, Box{b.row, b.col - 1}}) {
      int label = s.label_of(p);
      if (label != 0 && (members & bit(label - 1))) preds[i] |= bit(label - 1);
    }
  }
  return preds;
}

// Fills the boxes of `target` (an order ideal) greedily after those already
// numbered in `entries`, row-major-first among the available boxes.
void greedy_fill(const std::vector<Mask>& preds, Mask target, Mask& filled, std::vector<int>& entries, int& next) {
  while ((filled & target) != target) {
    for (std::size_t i = 0; i < preds.size(); ++i) {
      Mask b = bit(static_cast<int>(i));
      if ((target & b) && !(filled & b) && (preds[i] & ~filled) == 0) {
        entries[i] = next++;
        filled |= b;
        break;
      }
    }
  }
}

std::vector<int> pole_witness(const std::vector<Mask>& preds, Mask members, Mask ideal, int last, int next_box) {
  std::vector<int> entries(preds.size(), 0);
  Mask filled = 0;
  int next = 1;
  greedy_fill(preds, ideal & ~bit(last), filled, entries, next);
  entries[static_cast<std::size_t>(last)] = next++;
  filled |= bit(last);
  if (next_box >= 0) {
    entries[static_cast<std::size_t>(next_box)] = next++;
    filled |= bit(next_box);
  }
  greedy_fill(preds, members, filled, entries, next);
  return entries;
}

std::string describe(const std::vector<int>& entries) {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(entries[i]);
  }
  return out + "]";
}

// chain[i] = Σ over linear extensions of `members` that end in box i of
// Π 1/(x_next - x_prev), by dynamic programming over order ideals.
std::vector<Rational> chain_sums(const SkewShape& s, Mask members, const EvaluationPoint& pt) {
  const int m = s.size();
  std::vector<Mask> preds = predecessor_masks(s, members);
  std::vector<Rational> result(static_cast<std::size_t>(m), 0);
  if (members == 0) return result;

  using Layer = std::map<Mask, std::map<int, Rational>>;
  Layer layer;
  for (int i = 0; i < m; ++i) {
    if ((members & bit(i)) && preds[static_cast<std::size_t>(i)] == 0) layer[bit(i)][i] = 1;
  }
  const int target = std::popcount(members);
  for (int filled = 1; filled < target; ++filled) {
    Layer next;
    for (const auto& [ideal, by_last] : layer) {
      for (int b = 0; b < m; ++b) {
        if (!(members & bit(b)) || (ideal & bit(b)) || (preds[static_cast<std::size_t>(b)] & ~ideal)) continue;
        auto& slot = next[ideal | bit(b)][b];
        for (const auto& [last, weight] : by_last) {
          Rational diff = pt[b + 1] - pt[last + 1];
          if (diff == 0) {
            std::vector<int> witness = pole_witness(preds, members, ideal, last, b);
            throw PoleError("vanishing factor x_" + std::to_string(b + 1) + " - x_" + std::to_string(last + 1) +
                                " at index " + std::to_string(filled) + " of tableau " + describe(witness),
                            std::move(witness), filled);
          }
          slot += weight / diff;
        }
      }
    }
    layer = std::move(next);
  }
  for (const auto& [ideal, by_last] : layer) {
    for (const auto& [last, weight] : by_last) result[static_cast<std::size_t>(last)] += weight;
  }
  return result;
}

Mask full_mask(int m) { return m >= 64 ? ~Mask{0} : bit(m) - 1; }

void require_point_size(const SkewShape& s, const EvaluationPoint& pt) {
  if (pt.size() != s.size()) {
    throw std::invalid_argument("evaluation point has " + std::to_string(pt.size()) + " values but " + to_string(s) +
                                " has " + std::to_string(s.size()) + " boxes");
  }
  if (s.size() > 64) throw std::invalid_argument("skew shapes with more than 64 boxes are not supported");
}

// x_{larger label} - x_{smaller label} for each adjacent pair of the given kind.
Rational adjacency_product(const SkewShape& s, const EvaluationPoint& pt, int drow, int dcol, const char* kind) {
  Rational product = 1;
  for (const Box& b : s.boxes()) {
    Box other{b.row + drow, b.col + dcol};
    int hi = s.label_of(other);
    if (hi == 0) continue;
    int lo = s.label_of(b);
    Rational factor = pt[hi] - pt[lo];
    if (factor == 0) {
      throw PoleError(std::string("vanishing ") + kind + " factor x_" + std::to_string(hi) + " - x_" + std::to_string(lo));
    }
    product *= factor;
  }
  return product;
}

Rational sign_of_height(int height) { return (height % 2 == 0) ? 1 : -1; }

}  // namespace

EvaluationPoint content_point(const SkewShape& s) {
  EvaluationPoint pt;
  for (const Box& b : s.boxes()) pt.values.emplace_back(b.content());
  return pt;
}

EvaluationPoint random_point(int size, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  EvaluationPoint pt;
  for (int i = 0; i < size; ++i) pt.values.emplace_back(dist(rng));
  return pt;
}

EvaluationPoint random_distinct_point(int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 60);
  EvaluationPoint pt;
  while (static_cast<int>(pt.values.size()) < size) {
    Rational candidate = rational(num(rng), den(rng));
    if (std::find(pt.values.begin(), pt.values.end(), candidate) == pt.values.end()) pt.values.push_back(candidate);
  }
  return pt;
}

MarkedSkewTriple::MarkedSkewTriple(Partition lam, Partition mu, Partition nu)
    : outer(std::move(lam)), middle(std::move(mu)), inner(std::move(nu)) {
  if (outer.size() != middle.size() + 1 || !outer.contains(middle)) {
    throw std::invalid_argument(to_string(middle) + " is not obtained from " + to_string(outer) + " by removing one box");
  }
  if (!middle.contains(inner)) {
    throw std::invalid_argument(to_string(inner) + " is not contained in " + to_string(middle));
  }
}

Box MarkedSkewTriple::marked_box() const {
  for (int i = 0; i < outer.length(); ++i) {
    if (outer[i] != middle[i]) return Box{i + 1, outer[i]};
  }
  throw std::logic_error("triple has no marked box");
}

int MarkedSkewTriple::marked_label() const { return shape().label_of(marked_box()); }

Rational x_skew_def(const SkewShape& s, const EvaluationPoint& pt) {
  require_point_size(s, pt);
  if (s.empty()) return 1;
  Rational total = 0;
  for (const Rational& v : chain_sums(s, full_mask(s.size()), pt)) total += v;
  return total;
}

Rational x_skew_closed(const SkewShape& s, const EvaluationPoint& pt) {
  require_point_size(s, pt);
  if (s.empty()) return 1;
  if (classify_skew(s).connected_components > 1) return 0;
  Rational diagonal = adjacency_product(s, pt, 1, 1, "diagonal");
  Rational rows = adjacency_product(s, pt, 0, 1, "row");
  Rational cols = adjacency_product(s, pt, 1, 0, "column");
  return diagonal / (rows * cols);
}

Rational x_pair_def(const MarkedSkewTriple& t, const EvaluationPoint& pt) {
  SkewShape s = t.shape();
  require_point_size(s, pt);
  const int marked = t.marked_label();
  if (s.size() == 1) return 1;
  Mask members = full_mask(s.size()) & ~bit(marked - 1);
  std::vector<Rational> chain = chain_sums(s, members, pt);
  std::vector<Mask> preds = predecessor_masks(s, members);
  Rational total = 0;
  Mask has_successor = 0;
  for (int b = 0; b < s.size(); ++b) {
    if (members & bit(b)) has_successor |= preds[static_cast<std::size_t>(b)];
  }
  for (int b = 0; b < s.size(); ++b) {
    // Only maximal boxes of μ/ν can hold the entry m - 1.
    if (!(members & bit(b)) || (has_successor & bit(b))) continue;
    Rational diff = pt[marked] - pt[b + 1];
    if (diff == 0) {
      std::vector<int> witness = pole_witness(preds, members, members, b, -1);
      throw PoleError("vanishing final factor x_" + std::to_string(marked) + " - x_" + std::to_string(b + 1) +
                          " of tableau " + describe(witness),
                      std::move(witness), s.size() - 1);
    }
    total += chain[static_cast<std::size_t>(b)] / diff;
  }
  return total;
}

Rational x_pair_closed(const MarkedSkewTriple& t, const EvaluationPoint& pt) {
  SkewShape s = t.shape();
  require_point_size(s, pt);
  const int marked = t.marked_label();
  const Rational& xd = pt[marked];
  Rational numerator = 1;
  for (const Box& sc : sharp_corners(s)) numerator *= xd - pt[s.label_of(sc)];
  Rational denominator = 1;
  for (const Box& d : dull_boxes(s)) {
    int label = s.label_of(d);
    if (label == marked) continue;
    Rational factor = xd - pt[label];
    if (factor == 0) throw PoleError("vanishing dull-box factor x_" + std::to_string(marked) + " - x_" + std::to_string(label));
    denominator *= factor;
  }
  denominator *= adjacency_product(s, pt, 0, 1, "row");
  denominator *= adjacency_product(s, pt, 1, 0, "column");
  return numerator / denominator;
}

Rational delta_skew(const SkewShape& s) {
  if (s.empty()) return 1;
  SkewClassification c = classify_skew(s);
  if (!c.is_border_strip) return 0;
  return sign_of_height(*c.height);
}

Rational delta_pair(const MarkedSkewTriple& t) {
  SkewShape s = t.shape();
  SkewClassification c = classify_skew(s);
  if (!c.is_broken_border_strip) return 0;
  const Box marked = t.marked_box();
  const int content = marked.content();
  Rational value = sign_of_height(*c.height);
  for (const Box& sc : sharp_corners(s)) value *= content - sc.content();
  for (const Box& d : dull_boxes(s)) {
    if (d == marked) continue;
    // Dull boxes are distinct corners of λ, so their contents differ from Ct(λ/μ).
    value /= content - d.content();
  }
  return value;
}

Rational phi(const MarkedSkewTriple& t) { return delta_pair(t); }

}  // namespace genchar
