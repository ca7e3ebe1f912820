#include "genchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <shared_mutex>

namespace genchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other[i] > (*this)[i]) return false;
  }
  return true;
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError(1, "empty partition (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    std::size_t lead = token.find_first_not_of(' ');
    if (lead == std::string_view::npos) lead = token.size();
    pos += lead;
    token = token.substr(lead, token.find_last_not_of(' ') + 1 - lead);
    if (token.empty()) throw ParseError(pos + 1, "empty part at position " + std::to_string(pos + 1));
    int value = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
      char c = token[i];
      if (c < '0' || c > '9') {
        throw ParseError(pos + i + 1, "invalid character '" + std::string(1, c) + "' at position " +
                                          std::to_string(pos + i + 1));
      }
      value = value * 10 + (c - '0');
      if (value > 1000000) throw ParseError(pos + 1, "part too large at position " + std::to_string(pos + 1));
    }
    if (value == 0) throw ParseError(pos + 1, "zero part at position " + std::to_string(pos + 1));
    if (!parts.empty() && value > parts.back()) {
      throw ParseError(pos + 1, "parts must be weakly decreasing (position " + std::to_string(pos + 1) + ")");
    }
    parts.push_back(value);
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition remove_part(const Partition& p, int value) {
  std::vector<int> parts = p.parts();
  auto it = std::find(parts.begin(), parts.end(), value);
  if (it == parts.end()) throw std::invalid_argument("part " + std::to_string(value) + " not present");
  parts.erase(it);
  return Partition(std::move(parts));
}

std::string to_string(const Box& b) {
  return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")";
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::pair<Partition, Box>> add_box_positions(const Partition& mu) {
  std::vector<std::pair<Partition, Box>> out;
  for (int i = 0; i <= mu.length(); ++i) {
    if (i == 0 || mu[i] < mu[i - 1]) {
      std::vector<int> parts = mu.parts();
      if (i == mu.length()) {
        parts.push_back(1);
      } else {
        ++parts[static_cast<std::size_t>(i)];
      }
      out.emplace_back(Partition(std::move(parts)), Box{i + 1, mu[i] + 1});
    }
  }
  return out;
}

std::vector<std::pair<Partition, Box>> remove_box_positions(const Partition& lam) {
  std::vector<std::pair<Partition, Box>> out;
  for (int i = 0; i < lam.length(); ++i) {
    if (lam[i] > lam[i + 1]) {
      std::vector<int> parts = lam.parts();
      --parts[static_cast<std::size_t>(i)];
      out.emplace_back(Partition(std::move(parts)), Box{i + 1, lam[i]});
    }
  }
  return out;
}

std::vector<Partition> subpartitions_of_size(const Partition& mu, int size) {
  std::vector<Partition> out;
  if (size < 0 || size > mu.size()) return out;
  std::vector<int> current;
  // Suffix sums of mu bound how many boxes the remaining rows can hold.
  std::vector<int> room(static_cast<std::size_t>(mu.length()) + 1, 0);
  for (int i = mu.length() - 1; i >= 0; --i) room[static_cast<std::size_t>(i)] = room[static_cast<std::size_t>(i) + 1] + mu[i];
  std::function<void(int, int, int)> rec = [&](int row, int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (row >= mu.length()) return;
    int hi = std::min({remaining, cap, mu[row]});
    for (int part = hi; part >= 1; --part) {
      // Remaining rows are capped by both mu and this part.
      int later = 0;
      for (int r = row + 1; r < mu.length(); ++r) later += std::min(part, mu[r]);
      if (part + later < remaining) break;
      current.push_back(part);
      rec(row + 1, remaining - part, part);
      current.pop_back();
    }
  };
  rec(0, size, size);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw std::invalid_argument("inner partition " + to_string(inner_) + " is not contained in " + to_string(outer_));
  }
  for (int r = 0; r < outer_.length(); ++r) {
    for (int c = inner_[r] + 1; c <= outer_[r]; ++c) boxes_.push_back(Box{r + 1, c});
  }
}

bool SkewShape::contains(const Box& b) const noexcept {
  if (b.row < 1 || b.col < 1) return false;
  return b.col <= outer_[b.row - 1] && b.col > inner_[b.row - 1];
}

int SkewShape::label_of(const Box& b) const noexcept {
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
  if (it == boxes_.end() || !(*it == b)) return 0;
  return static_cast<int>(it - boxes_.begin()) + 1;
}

std::string to_string(const SkewShape& s) { return to_string(s.outer()) + "/" + to_string(s.inner()); }

SkewShape parse_skew_shape(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  Partition outer;
  Partition inner;
  try {
    outer = parse_partition(text.substr(0, slash));
  } catch (const ParseError& e) {
    throw ParseError(e.position(), e.what());
  }
  try {
    std::string_view rest = text.substr(slash + 1);
    if (!rest.empty()) inner = parse_partition(rest);
  } catch (const ParseError& e) {
    std::size_t pos = e.position() + slash + 1;
    throw ParseError(pos, std::string(e.what()) + " (offset " + std::to_string(pos) + " in skew shape)");
  }
  if (!outer.contains(inner)) {
    throw ParseError(slash + 2, "inner partition is not contained in the outer one");
  }
  return SkewShape(outer, inner);
}

bool has_two_by_two_block(const SkewShape& s) {
  for (const Box& b : s.boxes()) {
    if (s.contains({b.row, b.col + 1}) && s.contains({b.row + 1, b.col}) && s.contains({b.row + 1, b.col + 1})) {
      return true;
    }
  }
  return false;
}

namespace {

// Component id per box (index into s.boxes()), edge adjacency.
std::vector<int> component_ids(const SkewShape& s, int& count) {
  const auto& boxes = s.boxes();
  std::vector<int> id(boxes.size(), -1);
  count = 0;
  for (std::size_t start = 0; start < boxes.size(); ++start) {
    if (id[start] >= 0) continue;
    std::vector<std::size_t> stack{start};
    id[start] = count;
    while (!stack.empty()) {
      Box b = boxes[stack.back()];
      stack.pop_back();
      const Box neighbours[] = {{b.row - 1, b.col}, {b.row + 1, b.col}, {b.row, b.col - 1}, {b.row, b.col + 1}};
      for (const Box& nb : neighbours) {
        int label = s.label_of(nb);
        if (label == 0) continue;
        auto k = static_cast<std::size_t>(label - 1);
        if (id[k] < 0) {
          id[k] = count;
          stack.push_back(k);
        }
      }
    }
    ++count;
  }
  return id;
}

void require_broken_border_strip(const SkewShape& s) {
  if (has_two_by_two_block(s)) {
    throw std::domain_error("skew shape " + to_string(s) + " is not a broken border strip");
  }
}

}  // namespace

SkewClassification classify_skew(const SkewShape& s) {
  SkewClassification out;
  int components = 0;
  std::vector<int> id = component_ids(s, components);
  out.connected_components = components;
  bool block = has_two_by_two_block(s);
  out.is_broken_border_strip = !block;
  out.is_border_strip = !block && components == 1;
  if (out.is_broken_border_strip) {
    std::vector<std::set<int>> rows(static_cast<std::size_t>(components));
    for (std::size_t i = 0; i < s.boxes().size(); ++i) rows[static_cast<std::size_t>(id[i])].insert(s.boxes()[i].row);
    int height = 0;
    for (const auto& r : rows) height += static_cast<int>(r.size()) - 1;
    out.height = height;
  }
  return out;
}

std::vector<Box> sharp_corners(const SkewShape& s) {
  require_broken_border_strip(s);
  std::vector<Box> out;
  for (const Box& b : s.boxes()) {
    if (s.contains({b.row + 1, b.col}) && s.contains({b.row, b.col + 1})) out.push_back(b);
  }
  return out;
}

std::vector<Box> dull_boxes(const SkewShape& s) {
  require_broken_border_strip(s);
  std::vector<Box> out;
  for (const Box& b : s.boxes()) {
    if (!s.contains({b.row + 1, b.col}) && !s.contains({b.row, b.col + 1})) out.push_back(b);
  }
  return out;
}

int StandardTableau::entry_at(const Box& b) const {
  int label = shape.label_of(b);
  if (label == 0) throw std::out_of_range("box " + to_string(b) + " not in tableau shape");
  return entries[static_cast<std::size_t>(label - 1)];
}

Box StandardTableau::box_of(int k) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == k) return shape.boxes()[i];
  }
  throw std::out_of_range("entry " + std::to_string(k) + " not in tableau");
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& s) {
  std::vector<StandardTableau> out;
  const auto& boxes = s.boxes();
  const std::size_t m = boxes.size();
  std::vector<int> entries(m, 0);
  auto is_free_corner = [&](std::size_t i) {
    if (entries[i] != 0) return false;
    const Box& b = boxes[i];
    int up = s.label_of({b.row - 1, b.col});
    int left = s.label_of({b.row, b.col - 1});
    if (up != 0 && entries[static_cast<std::size_t>(up - 1)] == 0) return false;
    if (left != 0 && entries[static_cast<std::size_t>(left - 1)] == 0) return false;
    return true;
  };
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<std::size_t>(next) > m) {
      out.push_back(StandardTableau{s, entries});
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!is_free_corner(i)) continue;
      entries[i] = next;
      rec(next + 1);
      entries[i] = 0;
    }
  };
  rec(1);
  return out;
}

std::map<Box, int> standard_labelling(const SkewShape& s) {
  std::map<Box, int> out;
  int label = 0;
  for (const Box& b : s.boxes()) out.emplace(b, ++label);
  return out;
}

std::int64_t dim(const Partition& lam) {
  static std::shared_mutex mutex;
  static std::map<Partition, std::int64_t> cache;
  if (lam.size() <= 1) return 1;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  std::int64_t total = 0;
  for (const auto& [mu, box] : remove_box_positions(lam)) total += dim(mu);
  std::unique_lock lock(mutex);
  cache.emplace(lam, total);
  return total;
}

std::vector<SkewShape> compact_skew_shapes(int max_boxes) {
  std::vector<SkewShape> out;
  if (max_boxes <= 0) return out;
  std::vector<int> outer;
  std::vector<int> inner;
  auto emit_if_compact = [&]() {
    if (inner.back() != 0) return;
    int width = outer.front();
    std::vector<bool> used(static_cast<std::size_t>(width) + 1, false);
    for (std::size_t r = 0; r < outer.size(); ++r) {
      for (int c = inner[r] + 1; c <= outer[r]; ++c) used[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 1; c <= width; ++c) {
      if (!used[static_cast<std::size_t>(c)]) return;
    }
    out.emplace_back(Partition(outer), Partition(inner));
  };
  std::function<void(int)> rec = [&](int remaining) {
    emit_if_compact();
    if (remaining == 0) return;
    int max_outer = outer.back();
    int max_inner = inner.back();
    for (int in = 0; in <= max_inner; ++in) {
      for (int len = 1; len <= remaining && in + len <= max_outer; ++len) {
        outer.push_back(in + len);
        inner.push_back(in);
        rec(remaining - len);
        outer.pop_back();
        inner.pop_back();
      }
    }
  };
  for (int in = 0; in < max_boxes; ++in) {
    for (int len = 1; len <= max_boxes; ++len) {
      // Columns 1..in must be covered by the remaining boxes.
      if (len + in > max_boxes) break;
      outer = {in + len};
      inner = {in};
      rec(max_boxes - len);
    }
  }
  std::sort(out.begin(), out.end(), [](const SkewShape& a, const SkewShape& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace genchar
