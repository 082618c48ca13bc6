#pragma once

// Relation-level knowledge derived by running the solver on two- and
// three-variable networks: converses and weak composition.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cdc/direction_matrix.hpp"

namespace cdc {

/// True iff {v1 delta v2, v2 delta_back v1} is consistent.
bool pairwise_consistent(DirectionMatrix delta, DirectionMatrix delta_back, Model model = Model::Cdc);

class ConverseTable {
 public:
  ConverseTable() = default;
  ConverseTable(Model model, std::map<DirectionMatrix, std::vector<DirectionMatrix>> entries)
      : model_(model), entries_(std::move(entries)) {}

  Model model() const { return model_; }
  const std::map<DirectionMatrix, std::vector<DirectionMatrix>>& entries() const { return entries_; }

  /// Converses of delta in ascending bit order. Throws std::out_of_range for
  /// a matrix outside the model.
  const std::vector<DirectionMatrix>& converses(DirectionMatrix delta) const;
  bool consistent(DirectionMatrix delta, DirectionMatrix delta_back) const;

  /// Number of ordered consistent pairs.
  std::size_t pair_count() const;
  /// converse-set size -> number of relations with that many converses.
  std::map<std::size_t, std::size_t> size_distribution() const;

 private:
  Model model_ = Model::Cdc;
  std::map<DirectionMatrix, std::vector<DirectionMatrix>> entries_;
};

/// Sweeps every ordered pair of basic relations. threads = 0 picks the
/// hardware concurrency.
ConverseTable build_converse_table(Model model = Model::Cdc, unsigned threads = 0);

/// Built once per model on first use; safe to call concurrently.
const ConverseTable& converse_table(Model model = Model::Cdc);

struct CompositionResult {
  DirectionMatrix alpha;
  DirectionMatrix beta;
  /// Ascending bit order.
  std::vector<DirectionMatrix> gammas;

  bool contains(DirectionMatrix gamma) const;
};

/// All basic gamma such that {v1 alpha v2, v2 beta v3, v1 gamma v3} extends,
/// by converses drawn from the table, to a consistent complete network.
CompositionResult weak_composition(DirectionMatrix alpha, DirectionMatrix beta,
                                   const ConverseTable& table);

/// Same, memoised in a process-wide cache keyed by (model, alpha, beta).
CompositionResult weak_composition(DirectionMatrix alpha, DirectionMatrix beta,
                                   Model model = Model::Cdc);

/// Computes many compositions in parallel against one table.
std::vector<CompositionResult> weak_composition_batch(
    const std::vector<std::pair<DirectionMatrix, DirectionMatrix>>& pairs,
    const ConverseTable& table, unsigned threads = 0);

/// One single-tile matrix per nonzero entry, in tile order.
std::vector<DirectionMatrix> single_tile_components(DirectionMatrix delta);

/// True iff gamma is the entrywise OR of matrices gamma_s, one for each
/// single-tile component alpha_s of alpha, with gamma_s in alpha_s o_w beta.
bool is_decomposable(DirectionMatrix gamma, DirectionMatrix alpha, DirectionMatrix beta,
                     Model model = Model::Cdc);

}  // namespace cdc
