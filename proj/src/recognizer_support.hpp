#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "metrec/recognizers.hpp"

namespace metrec::detail {

/// reconstruct_and_verify with a precomputed classification.
WeightedGraph reconstruct(const DistanceMatrix& d, const EntryClassification& c, Family family,
                          const Embedding& embedding,
                          const std::optional<Rational>& extra_edge_weight);

/// Builds the certificate (labels included) and records it as accepted.
void accept(Verdict& v, const DistanceMatrix& d, const EntryClassification& c,
            const Embedding& embedding, const std::optional<Rational>& extra_edge_weight = {});

void pass(Verdict& v, std::string condition);

Verdict& reject(Verdict& v, std::string condition, std::vector<std::size_t> witness,
                std::vector<std::string> values = {}, std::string detail = {});

template <class T>
std::vector<std::string> numbers(std::initializer_list<T> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, Rational>)
      out.push_back(to_string(x));
    else
      out.push_back(std::to_string(x));
  }
  return out;
}

}  // namespace metrec::detail
