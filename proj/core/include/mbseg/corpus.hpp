#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mbseg/types.hpp"

namespace mbseg {

// One word of an annotated lexicon: the surface form plus its ordered,
// typed morpheme segmentation. Segment texts concatenate exactly to the
// surface.
struct AnnotatedWord {
  struct Segment {
    SymbolString text;
    MorphTag tag;
  };

  SymbolString surface;
  std::vector<Segment> segments;

  // Checks the segmentation invariants; throws DataError with `context`
  // prepended on violation.
  void validate(const std::string& context = {}) const;
};

struct ParseOptions {
  bool lowercase = false;  // ASCII lowercasing at ingestion
};

// Lexicon format: one word per line, `surface<TAB>seg/tag( seg/tag)*`,
// tags in {s,1,2,i}. Lines starting with '#' and blank lines are ignored.
std::vector<AnnotatedWord> parse_lexicon(std::string_view text, const ParseOptions& opts = {});
AnnotatedWord parse_lexicon_line(std::string_view line, std::size_t line_no,
                                 const ParseOptions& opts = {});

// Renders a word back into the one-line lexicon form.
std::string render_lexicon_line(const AnnotatedWord& word);

// Per-position class labels for a task: the projected tag of the segment
// starting at a position, '0' everywhere else. Position 0 is always a
// boundary.
std::vector<Label> project_labels(const AnnotatedWord& word, const TaskSpec& task);

// A windowed snapshot of one surface position.
struct Instance {
  SymbolString features;      // length = left + 1 + right
  Label label = Label::none;
  std::uint32_t word_index = 0;  // provenance
  std::uint32_t focus = 0;
};

// Fixed-width windows over a raw surface, one per position; positions
// beyond the edges hold the pad symbol.
std::vector<SymbolString> window_surface(SymbolView surface, int left, int right);

// One labelled instance per surface position.
std::vector<Instance> window_word(const AnnotatedWord& word, const TaskSpec& task,
                                  int left, int right, std::uint32_t word_index = 0);

}  // namespace mbseg
