#include "depcoef/estimation.hpp"

#include <cstdint>

namespace depcoef {

namespace {

std::size_t intern(std::unordered_map<std::string, std::size_t>& index,
                   std::vector<std::string>& alphabet, const std::string& label) {
  const auto [it, inserted] = index.try_emplace(label, alphabet.size());
  if (inserted) alphabet.push_back(label);
  return it->second;
}

}  // namespace

SamplePairs::SamplePairs(std::vector<Pair> pairs) {
  pairs_.reserve(pairs.size());
  for (auto& [x, y] : pairs) add(std::move(x), std::move(y));
}

void SamplePairs::add(std::string x, std::string y) {
  intern(x_index_, x_alphabet_, x);
  intern(y_index_, y_alphabet_, y);
  pairs_.emplace_back(std::move(x), std::move(y));
}

LabelIndex encode_labels(const SamplePairs& samples) {
  return {samples.x_index_, samples.y_index_};
}

std::vector<std::uint64_t> count_table(const SamplePairs& samples) {
  const LabelIndex index = encode_labels(samples);
  const std::size_t m = samples.y_alphabet().size();
  std::vector<std::uint64_t> counts(samples.x_alphabet().size() * m, 0);
  for (const auto& [x, y] : samples.pairs()) ++counts[index.x.at(x) * m + index.y.at(y)];
  return counts;
}

JointMatrix tabulate(const SamplePairs& samples) {
  if (samples.empty()) throw Error(Errc::EmptyInput, "no sample pairs");
  const std::vector<std::uint64_t> counts = count_table(samples);
  const double total = static_cast<double>(samples.size());
  std::vector<double> freq;
  freq.reserve(counts.size());
  for (std::uint64_t c : counts) freq.push_back(static_cast<double>(c) / total);
  return validate(samples.x_alphabet().size(), samples.y_alphabet().size(), std::move(freq),
                  ValidationMode::probabilities, 1e-9);
}

}  // namespace depcoef
