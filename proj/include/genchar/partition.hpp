#pragma once

// Partitions, skew shapes, standard Young tableaux and the border-strip
// vocabulary (sharp corners, dull boxes, heights) used everywhere else.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace genchar {

/// Thrown by the text parsers. `position` is the 1-based character offset
/// of the offending token inside the parsed string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros. The default-constructed value is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero past the last row.
  int operator[](int i) const noexcept {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// True iff `other` ⊆ *this as Young diagrams.
  bool contains(const Partition& other) const noexcept;

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// "3,2,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);
Partition parse_partition(std::string_view text);

/// Multiset union of parts, re-sorted.
Partition union_of(const Partition& a, const Partition& b);
/// Removes one part equal to `value`; throws if absent.
Partition remove_part(const Partition& p, int value);

struct Box {
  int row = 1;
  int col = 1;

  int content() const noexcept { return col - row; }

  // Row-major order: the order of the standard labelling.
  friend auto operator<=>(const Box&, const Box&) = default;
};

std::string to_string(const Box& b);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// All partitions λ with μ↗λ, paired with the added box, top row first.
std::vector<std::pair<Partition, Box>> add_box_positions(const Partition& mu);
/// All partitions μ with μ↗λ, paired with the removed box, top row first.
std::vector<std::pair<Partition, Box>> remove_box_positions(const Partition& lam);

/// All ν ⊆ μ with |ν| = size, in reverse-lexicographic order.
std::vector<Partition> subpartitions_of_size(const Partition& mu, int size);

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  /// Boxes in row-major order; box i carries standard label i + 1.
  const std::vector<Box>& boxes() const noexcept { return boxes_; }
  int size() const noexcept { return static_cast<int>(boxes_.size()); }
  bool empty() const noexcept { return boxes_.empty(); }

  bool contains(const Box& b) const noexcept;
  /// Standard label (1-based, row-major) of a box, or 0 if absent.
  int label_of(const Box& b) const noexcept;

  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }
  friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
  std::vector<Box> boxes_;
};

/// "outer/inner" ("3,2,1/1,1"); a bare partition means inner = ∅.
std::string to_string(const SkewShape& s);
SkewShape parse_skew_shape(std::string_view text);

struct SkewClassification {
  bool is_border_strip = false;
  bool is_broken_border_strip = false;
  int connected_components = 0;
  /// Sum over components of (rows occupied - 1); present iff broken border strip.
  std::optional<int> height;
};

SkewClassification classify_skew(const SkewShape& s);

/// True iff the shape contains a 2×2 block of boxes.
bool has_two_by_two_block(const SkewShape& s);

/// Boxes with a box below and a box to the right. Throws std::domain_error
/// unless `s` is a broken border strip.
std::vector<Box> sharp_corners(const SkewShape& s);
/// Boxes with no box below and none to the right. Throws std::domain_error
/// unless `s` is a broken border strip.
std::vector<Box> dull_boxes(const SkewShape& s);

struct StandardTableau {
  SkewShape shape;
  /// entries[i] is the entry of shape.boxes()[i].
  std::vector<int> entries;

  int entry_at(const Box& b) const;
  /// The box holding entry k (1-based), i.e. T⁻¹(k).
  Box box_of(int k) const;
};

/// Every standard tableau of `s` exactly once, in a deterministic order
/// (entries placed 1, 2, ... into the row-major-first free corner first).
std::vector<StandardTableau> enumerate_syt(const SkewShape& s);

/// Row-major labelling of the boxes, 1..m.
std::map<Box, int> standard_labelling(const SkewShape& s);

/// Number of standard tableaux of shape λ; dim(∅) = 1. Memoized.
std::int64_t dim(const Partition& lam);

/// Every skew shape with 1..max_boxes boxes that has no empty row and no
/// empty column (each translation class of box sets appears exactly once).
std::vector<SkewShape> compact_skew_shapes(int max_boxes);

}  // namespace genchar
