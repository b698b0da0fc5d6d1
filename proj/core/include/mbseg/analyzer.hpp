#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mbseg/model.hpp"
#include "mbseg/types.hpp"

namespace mbseg {

// A word split at every position the model labelled as a boundary.
struct Segmentation {
  struct Piece {
    SymbolString text;
    Label tag = Label::none;  // the boundary label that opened the piece
  };

  SymbolString surface;
  std::vector<Label> labels;   // raw per-position predictions
  std::vector<Piece> pieces;   // piece texts concatenate to the surface
  bool coerced = false;        // position 0 predicted '0' and was repaired

  // `surface<TAB>seg/tag( seg/tag)*`, the lexicon grammar.
  std::string render() const;
};

// Windows the surface, classifies every position and splits at non-'0'
// labels. A '0' prediction at position 0 is replaced by the model's
// majority boundary label and flagged. Throws DataError on an empty
// surface or one containing the pad symbol.
Segmentation analyze_word(const Model& model, SymbolView surface);

struct BatchEntry {
  std::size_t index = 0;
  bool ok = false;
  Segmentation segmentation;  // valid when ok
  std::string error;          // set when !ok
};

struct BatchResult {
  std::vector<BatchEntry> entries;  // input order
  std::size_t failures = 0;
  std::size_t coercions = 0;
};

// Per-word analysis; failures are recorded and do not abort the batch.
BatchResult batch_analyze(const Model& model, std::span<const SymbolString> words);

}  // namespace mbseg
