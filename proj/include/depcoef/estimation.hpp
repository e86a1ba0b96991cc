#pragma once

// Empirical joint distributions from paired categorical observations.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "depcoef/joint_matrix.hpp"

namespace depcoef {

struct LabelIndex {
  std::unordered_map<std::string, std::size_t> x;
  std::unordered_map<std::string, std::size_t> y;
};

class SamplePairs {
 public:
  using Pair = std::pair<std::string, std::string>;

  SamplePairs() = default;
  explicit SamplePairs(std::vector<Pair> pairs);

  void add(std::string x, std::string y);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  /// Distinct labels in first-appearance order.
  const std::vector<std::string>& x_alphabet() const noexcept { return x_alphabet_; }
  const std::vector<std::string>& y_alphabet() const noexcept { return y_alphabet_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

 private:
  std::vector<Pair> pairs_;
  std::vector<std::string> x_alphabet_;
  std::vector<std::string> y_alphabet_;
  std::unordered_map<std::string, std::size_t> x_index_;
  std::unordered_map<std::string, std::size_t> y_index_;

  friend LabelIndex encode_labels(const SamplePairs&);
};

/// Label -> 0-based index maps in first-appearance order.
LabelIndex encode_labels(const SamplePairs& samples);

/// Exact integer contingency counts, rows indexed by x_alphabet.
std::vector<std::uint64_t> count_table(const SamplePairs& samples);

/// Relative frequencies as a normalized JointMatrix. Throws EmptyInput.
JointMatrix tabulate(const SamplePairs& samples);

}  // namespace depcoef
