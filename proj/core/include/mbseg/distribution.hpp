#pragma once

#include <array>
#include <cstdint>

#include "mbseg/types.hpp"

namespace mbseg {

// Occurrence counts per class label. Stored with every unique feature
// vector and, summed, as the global class distribution of a base.
class ClassDistribution {
 public:
  void add(Label l, std::uint64_t n = 1);
  void merge(const ClassDistribution& other);
  void clear();

  std::uint64_t count(Label l) const { return counts_[static_cast<std::size_t>(l)]; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return total_ == 0; }
  // Number of labels with a nonzero count.
  int distinct() const;
  bool single_class() const { return distinct() == 1; }

  const std::array<std::uint64_t, kLabelCount>& counts() const { return counts_; }

  bool operator==(const ClassDistribution&) const = default;

 private:
  std::array<std::uint64_t, kLabelCount> counts_{};
  std::uint64_t total_ = 0;
};

// Majority label of `dist`. Ties go to the label with the higher count in
// `class_totals`, remaining ties to the fixed label order (enum order).
Label majority_label(const ClassDistribution& dist, const ClassDistribution& class_totals);

// Majority among non-'0' labels, used to repair a '0' prediction at word
// start. Falls back to Label::neutral when no boundary label was ever seen.
Label majority_boundary_label(const ClassDistribution& dist);

}  // namespace mbseg
