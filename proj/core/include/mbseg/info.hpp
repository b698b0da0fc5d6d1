#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbseg/distribution.hpp"
#include "mbseg/instance_base.hpp"

namespace mbseg {

// Shannon entropy in bits of a count vector. Throws DataError when the
// total is zero.
double entropy_from_counts(std::span<const std::uint64_t> counts);
double entropy(const ClassDistribution& dist);

// Information gain of feature `f` over the whole base, occurrence-weighted:
// H(class) - sum_v P(f = v) * H(class | f = v).
double information_gain(const InstanceBase& base, std::size_t f);

// All per-feature gains.
std::vector<double> information_gains(const InstanceBase& base);

struct GainRatio {
  double value = 0.0;
  bool degenerate = false;  // constant feature: split information is zero
};

// Information gain divided by split information. A constant feature yields
// value 0 with the degenerate flag set; never a division fault.
GainRatio gain_ratio(const InstanceBase& base, std::size_t f);

enum class OrderMode : std::uint8_t { gain, gain_ratio };

// Feature indices sorted by descending weight, ties by ascending index.
std::vector<std::size_t> feature_order(const InstanceBase& base, OrderMode mode = OrderMode::gain);

struct GainRow {
  std::size_t feature;
  int relative_position;  // offset from the focus, e.g. -3..+3
  double gain;
  GainRatio ratio;
};

std::vector<GainRow> gain_table(const InstanceBase& base);

// TSV with one row per feature: index, position relative to focus, gain,
// gain ratio. Header line is '#'-prefixed.
std::string render_gain_table(const InstanceBase& base);

}  // namespace mbseg
