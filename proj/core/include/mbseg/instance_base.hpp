#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mbseg/corpus.hpp"
#include "mbseg/distribution.hpp"
#include "mbseg/types.hpp"

namespace mbseg {

namespace detail {
struct SymbolStringHash {
  using is_transparent = void;
  std::size_t operator()(SymbolView s) const noexcept;
  std::size_t operator()(const SymbolString& s) const noexcept {
    return operator()(SymbolView(s));
  }
};
struct SymbolStringEq {
  using is_transparent = void;
  bool operator()(SymbolView a, SymbolView b) const noexcept { return a == b; }
};
}  // namespace detail

// Deduplicated store of training instances. Identical feature vectors are
// merged into one entry whose class distribution counts every occurrence.
// Immutable once built.
class InstanceBase {
 public:
  class Builder;

  const Schema& schema() const { return schema_; }
  std::size_t width() const { return static_cast<std::size_t>(schema_.width()); }

  std::size_t size() const { return dists_.size(); }  // unique vectors
  std::uint64_t instance_count() const { return totals_.total(); }

  SymbolView vector_at(std::size_t i) const {
    return SymbolView(data_.data() + i * width(), width());
  }
  const ClassDistribution& distribution_at(std::size_t i) const { return dists_[i]; }

  // Index of an exact-matching stored vector, if any.
  std::optional<std::size_t> find(SymbolView features) const;

  // Sum of all entry distributions.
  const ClassDistribution& class_totals() const { return totals_; }

 private:
  friend class Builder;
  InstanceBase() = default;

  Schema schema_;
  SymbolString data_;  // size() * width() symbols, entry-major
  std::vector<ClassDistribution> dists_;
  std::unordered_map<SymbolString, std::uint32_t, detail::SymbolStringHash,
                     detail::SymbolStringEq>
      index_;
  ClassDistribution totals_;
};

class InstanceBase::Builder {
 public:
  explicit Builder(Schema schema);

  // Adds `n` occurrences of a (vector, label) observation. Throws DataError
  // on a width mismatch.
  void add(SymbolView features, Label label, std::uint64_t n = 1);
  void add(const Instance& instance);
  void add_distribution(SymbolView features, const ClassDistribution& dist);

  // Throws DataError when nothing was added.
  InstanceBase build() &&;

 private:
  InstanceBase base_;
  std::uint32_t ensure_entry(SymbolView features);
};

// Windows every word of a corpus and merges the instances into a base.
// Throws DataError on an empty word list.
InstanceBase build_instance_base(const std::vector<AnnotatedWord>& words, const Schema& schema);

}  // namespace mbseg
