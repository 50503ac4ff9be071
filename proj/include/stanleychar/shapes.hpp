#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stanleychar {

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty partition is a valid value.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and
  /// non-increasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts into non-increasing order and drops zero entries.
  static Partition from_unsorted(std::vector<int> parts);

  /// Accepts "2,1", "(2,1)", "()" or the empty string.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Row length with 1-based indexing; 0 beyond the last row.
  int row(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  /// "(11,11,8,8,8,5,5)"; the empty partition renders as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Stanley coordinates of a multirectangular diagram: rectangle i has
/// p[i] rows of width q[i]. Rectangles are listed from the widest one.
struct MultirectangularShape {
  std::vector<int> p;
  std::vector<int> q;

  int rectangles() const { return static_cast<int>(p.size()); }

  /// Equal lengths and non-negative entries.
  bool well_formed() const;
  /// well_formed() and q non-increasing, i.e. a genuine Young diagram.
  bool is_diagram() const;

  bool operator==(const MultirectangularShape&) const = default;

  std::string to_string() const;
};

/// q[0] repeated p[0] times, then q[1] repeated p[1] times, and so on.
/// Throws std::invalid_argument if the shape is not a genuine diagram.
Partition to_diagram(const MultirectangularShape& shape);

/// Canonical Stanley coordinates: distinct row lengths in decreasing order
/// with their multiplicities.
MultirectangularShape to_multirect(const Partition& lambda);

/// Scales rows and columns by s (s >= 1).
Partition dilate(const Partition& lambda, int s);

/// Conjugate partition.
Partition transpose(const Partition& lambda);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions of 0, 1, ..., n.
std::vector<Partition> partitions_up_to(int n);

/// Parses a comma-separated list of non-negative integers ("2,3,2").
std::vector<int> parse_int_list(std::string_view text);

}  // namespace stanleychar
