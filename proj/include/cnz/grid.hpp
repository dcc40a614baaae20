#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnz/ring.hpp"

namespace cnz {

/// The evaluation grid S_1 x ... x S_n. Each S_i is nonempty with pairwise
/// distinct canonical elements, kept in the order they were given.
class GridSpec {
 public:
  GridSpec(RingSpec ring, std::vector<std::vector<Int>> sets);

  /// The same set for every variable.
  static GridSpec uniform(RingSpec ring, std::size_t arity, std::vector<Int> set);

  /// One line per variable, elements separated by commas. Blank lines and
  /// lines starting with '#' are skipped.
  static GridSpec parse(std::string_view text, RingSpec ring);

  const RingSpec& ring() const { return ring_; }
  std::size_t arity() const { return sets_.size(); }
  const std::vector<Int>& set(std::size_t i) const { return sets_.at(i); }
  const std::vector<std::vector<Int>>& sets() const { return sets_; }
  std::size_t size(std::size_t i) const { return sets_.at(i).size(); }
  std::vector<std::uint64_t> sizes() const;

  /// Exact number of points.
  Int point_count() const;

  /// Decode a linear index into per-variable positions. The last variable
  /// varies fastest (odometer over S_1, ..., S_n in stored order).
  void decode(std::uint64_t index, std::span<std::size_t> digits) const;
  std::vector<Int> point(std::uint64_t index) const;

  std::string to_string() const;

 private:
  RingSpec ring_;
  std::vector<std::vector<Int>> sets_;
};

}  // namespace cnz
