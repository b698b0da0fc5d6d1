#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbseg {

// A symbol is one Unicode code point. Surfaces and feature vectors are
// sequences of symbols, never raw bytes.
using Symbol = char32_t;
using SymbolString = std::u32string;
using SymbolView = std::u32string_view;

// Context positions beyond the word edges are filled with the pad symbol.
// '-' is reserved for it, so surfaces containing '-' are rejected on input.
inline constexpr Symbol kPad = U'-';

// Closed set of class labels across all three tasks. The enum order is the
// fixed tie-break order for majority decisions: 0 < s < 1 < 2 < d < i.
enum class Label : std::uint8_t {
  none = 0,      // '0' no morpheme boundary at this position
  stem,          // 's' noun or verb stem
  neutral,       // '1' stress-neutral affix; also the plain boundary mark of M1
  affecting,     // '2' stress-affecting affix
  derivational,  // 'd' derivational boundary (M2)
  inflectional,  // 'i' inflectional boundary
};
inline constexpr std::size_t kLabelCount = 6;

char label_char(Label l);
Label label_from_char(char c);  // throws DataError on an unknown label

// Morpheme tags as annotated in lexicons. Corpora carry the finest (M3)
// granularity; coarser tasks are projections.
enum class MorphTag : std::uint8_t {
  stem,          // 's'
  neutral,       // '1'
  affecting,     // '2'
  inflectional,  // 'i'
};

char tag_char(MorphTag t);
MorphTag tag_from_char(char c);  // throws DataError on an unknown tag

enum class TaskId : std::uint8_t { m1, m2, m3 };

// A task fixes the label set and the projection from morpheme tags onto it.
struct TaskSpec {
  TaskId id;
  std::vector<Label> labels;  // includes Label::none
  Label project(MorphTag t) const;
  std::string_view name() const;  // "M1", "M2", "M3"
};

const TaskSpec& task_spec(TaskId id);
TaskId task_from_name(std::string_view name);  // accepts "m1"/"M1" etc.

// Window geometry shared by a whole instance base and every model built
// from it.
struct Schema {
  TaskId task = TaskId::m3;
  int left = 3;
  int right = 3;
  int width() const { return left + 1 + right; }
};

enum class Algorithm : std::uint8_t { ib1, ib1ig, igtree };
std::string_view algorithm_name(Algorithm a);
Algorithm algorithm_from_name(std::string_view name);

// Errors caused by bad input data (corpora, model files, queries).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A DataError tied to a 1-based line of an input document.
struct ParseError : DataError {
  ParseError(std::size_t line_no, const std::string& cause);
  std::size_t line;
};

}  // namespace mbseg
