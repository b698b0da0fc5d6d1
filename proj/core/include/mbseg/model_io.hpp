#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "mbseg/model.hpp"

namespace mbseg {

// Versioned text formats. Both kinds open with
//   mbseg-model<TAB>1<TAB><kind>
// followed by task and window lines. An mbl model stores the weight mode,
// the weight vector, and one line per unique vector with its distribution;
// an igtree model stores the feature order, the source base statistics, and
// the nodes in preorder. Loading reproduces classification bit-exactly.

inline constexpr int kModelFormatVersion = 1;

void save_model(const Model& model, std::ostream& out);
void save_model(const Model& model, const std::filesystem::path& path);

std::unique_ptr<Model> load_model(std::istream& in);
std::unique_ptr<Model> load_model(const std::filesystem::path& path);

}  // namespace mbseg
