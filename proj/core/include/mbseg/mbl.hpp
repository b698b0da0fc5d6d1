#pragma once

#include <span>
#include <vector>

#include "mbseg/distribution.hpp"
#include "mbseg/instance_base.hpp"

namespace mbseg {

using FeatureWeights = std::vector<double>;

FeatureWeights uniform_weights(std::size_t n);
// Per-feature information gain as weights (the IB1-IG weighting).
FeatureWeights gain_weights(const InstanceBase& base);

// Weighted overlap distance: sum of w[i] over mismatching positions.
// Throws DataError on a length mismatch.
double distance(SymbolView x, SymbolView y, std::span<const double> weights);

struct NearestSet {
  double dist = 0.0;                // exact minimum over all stored vectors
  ClassDistribution classes;        // merged distributions of all minimizers
};

// Exhaustive nearest-neighbour retrieval. The scan abandons an entry as
// soon as its partial sum exceeds the best distance so far, which with
// non-negative weights cannot change the result; the brute-force oracle in
// the tests keeps it honest.
NearestSet nearest_set(const InstanceBase& base, SymbolView query, std::span<const double> weights);

struct Classification {
  Label label = Label::none;
  double dist = 0.0;
  ClassDistribution classes;
};

// Majority label of the nearest set; ties resolved by global class
// frequency, then the fixed label order.
Classification classify(const InstanceBase& base, SymbolView query, std::span<const double> weights);

}  // namespace mbseg
