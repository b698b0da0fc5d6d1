#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbseg/corpus.hpp"
#include "mbseg/types.hpp"

namespace mbseg {

// Assignment of every word to exactly one of k folds; sizes differ by at
// most one. Deterministic for a given (word count, k, seed).
struct FoldPlan {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<int> assignment;  // word index -> fold id

  std::vector<std::size_t> fold_members(int fold) const;
};

// Throws DataError when k < 2 or k > words.
FoldPlan make_folds(std::size_t words, int k, std::uint64_t seed);

// A word is wrong as soon as one position is wrong. Throws DataError on a
// length mismatch.
bool word_has_error(std::span<const Label> gold, std::span<const Label> predicted);

struct PairedT {
  enum class Kind {
    ok,
    degenerate,  // zero variance with a nonzero mean difference
  };
  Kind kind = Kind::ok;
  double t = 0.0;
  int df = 0;
  double p_one_tailed = 0.0;  // upper tail, P(T >= t)
};

// Paired t over per-fold differences a[i] - b[i], df = k - 1. All
// differences zero yields t = 0, p = 0.5; equal nonzero differences are
// reported as degenerate instead of a statistic.
PairedT paired_t(std::span<const double> a, std::span<const double> b);

struct FoldOutcome {
  int fold = 0;
  Algorithm algorithm = Algorithm::ib1;
  std::uint64_t instance_errors = 0;
  std::uint64_t instances = 0;
  std::uint64_t word_errors = 0;
  std::uint64_t words = 0;

  double instance_error_rate() const;
  double word_error_rate() const;
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::ib1;
  double instance_rate_mean = 0.0;
  double instance_rate_sd = 0.0;  // sample standard deviation
  double word_rate_mean = 0.0;
  double word_rate_sd = 0.0;
};

struct PairedComparison {
  Algorithm a = Algorithm::ib1;
  Algorithm b = Algorithm::ib1;
  std::string metric;  // "instance_error_rate" | "word_error_rate"
  PairedT test;
};

struct XvalParams {
  TaskId task = TaskId::m3;
  int left = 3;
  int right = 3;
  std::vector<Algorithm> algorithms;
  int k = 10;
  std::uint64_t seed = 42;
  bool parallel = true;
};

struct EvalReport {
  XvalParams params;
  FoldPlan plan;
  std::vector<FoldOutcome> folds;          // fold-major, algorithm order within
  std::vector<AlgorithmSummary> summaries;
  std::vector<PairedComparison> comparisons;

  const FoldOutcome& outcome(int fold, Algorithm a) const;
  std::vector<double> fold_rates(Algorithm a, bool word_level) const;
};

// k train/test experiments partitioned by word: for each fold the other
// folds' words form the training base, and every instance of the held-out
// words is classified. Deterministic given (words, params).
EvalReport run_xval(const std::vector<AnnotatedWord>& words, const XvalParams& params);

// TSV rendering: '#' header with the run parameters, one line per
// (fold, algorithm), a summary block, then pairwise test lines.
// Byte-stable for identical reports.
std::string render_report(const EvalReport& report);

}  // namespace mbseg
