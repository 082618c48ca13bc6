#include "cdc/relation_ops.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "cdc/solver.hpp"

namespace cdc {

namespace {

unsigned pick_threads(unsigned requested, std::size_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Runs body(index) for index in [0, count) across worker threads, handing out
// indices round-robin.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  const unsigned t = pick_threads(threads, count);
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += t) body(i);
    });
  for (auto& th : pool) th.join();
}

bool triangle_consistent(DirectionMatrix a, DirectionMatrix a_back, DirectionMatrix b,
                         DirectionMatrix b_back, DirectionMatrix g, DirectionMatrix g_back,
                         Model model) {
  CdcBasicNetwork net(3);
  net.set(0, 1, a);
  net.set(1, 0, a_back);
  net.set(1, 2, b);
  net.set(2, 1, b_back);
  net.set(0, 2, g);
  net.set(2, 0, g_back);
  return solve_basic(net, model).consistent;
}

}  // namespace

bool pairwise_consistent(DirectionMatrix delta, DirectionMatrix delta_back, Model model) {
  CdcBasicNetwork net(2);
  net.set(0, 1, delta);
  net.set(1, 0, delta_back);
  return solve_basic(net, model).consistent;
}

const std::vector<DirectionMatrix>& ConverseTable::converses(DirectionMatrix delta) const {
  auto it = entries_.find(delta);
  if (it == entries_.end())
    throw std::out_of_range("no converse entry for " + delta.to_string());
  return it->second;
}

bool ConverseTable::consistent(DirectionMatrix delta, DirectionMatrix delta_back) const {
  const auto& c = converses(delta);
  return std::binary_search(c.begin(), c.end(), delta_back);
}

std::size_t ConverseTable::pair_count() const {
  std::size_t total = 0;
  for (const auto& [d, c] : entries_) total += c.size();
  return total;
}

std::map<std::size_t, std::size_t> ConverseTable::size_distribution() const {
  std::map<std::size_t, std::size_t> dist;
  for (const auto& [d, c] : entries_) ++dist[c.size()];
  return dist;
}

ConverseTable build_converse_table(Model model, unsigned threads) {
  const auto basics = enumerate_basic(model);
  std::vector<std::vector<DirectionMatrix>> rows(basics.size());
  parallel_for(basics.size(), threads, [&](std::size_t r) {
    for (auto back : basics)
      if (pairwise_consistent(basics[r], back, model)) rows[r].push_back(back);
  });
  std::map<DirectionMatrix, std::vector<DirectionMatrix>> entries;
  for (std::size_t r = 0; r < basics.size(); ++r) entries.emplace(basics[r], std::move(rows[r]));
  return ConverseTable(model, std::move(entries));
}

const ConverseTable& converse_table(Model model) {
  static std::array<std::once_flag, 3> once;
  static std::array<ConverseTable, 3> tables;
  const auto slot = static_cast<std::size_t>(model);
  std::call_once(once[slot], [&] { tables[slot] = build_converse_table(model); });
  return tables[slot];
}

bool CompositionResult::contains(DirectionMatrix gamma) const {
  return std::binary_search(gammas.begin(), gammas.end(), gamma);
}

CompositionResult weak_composition(DirectionMatrix alpha, DirectionMatrix beta,
                                   const ConverseTable& table) {
  const Model model = table.model();
  if (!is_valid_matrix(alpha, model) || !is_valid_matrix(beta, model))
    throw std::invalid_argument("composition operands must be valid basic relations");
  CompositionResult out{alpha, beta, {}};
  const auto& alpha_back = table.converses(alpha);
  const auto& beta_back = table.converses(beta);
  for (const auto& [gamma, gamma_back] : table.entries()) {
    bool found = false;
    for (auto a : alpha_back) {
      for (auto b : beta_back) {
        for (auto g : gamma_back) {
          if (triangle_consistent(alpha, a, beta, b, gamma, g, model)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) out.gammas.push_back(gamma);
  }
  return out;
}

CompositionResult weak_composition(DirectionMatrix alpha, DirectionMatrix beta, Model model) {
  using Key = std::tuple<int, std::uint16_t, std::uint16_t>;
  static std::mutex mu;
  static std::map<Key, CompositionResult> cache;
  const Key key{static_cast<int>(model), alpha.bits(), beta.bits()};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  CompositionResult r = weak_composition(alpha, beta, converse_table(model));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(r)).first->second;
}

std::vector<CompositionResult> weak_composition_batch(
    const std::vector<std::pair<DirectionMatrix, DirectionMatrix>>& pairs,
    const ConverseTable& table, unsigned threads) {
  std::vector<CompositionResult> out(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    out[i] = weak_composition(pairs[i].first, pairs[i].second, table);
  });
  return out;
}

std::vector<DirectionMatrix> single_tile_components(DirectionMatrix delta) {
  std::vector<DirectionMatrix> out;
  for (int phi = 1; phi <= 9; ++phi)
    if (delta.tile(phi)) out.push_back(DirectionMatrix::single_tile(phi));
  return out;
}

bool is_decomposable(DirectionMatrix gamma, DirectionMatrix alpha, DirectionMatrix beta,
                     Model model) {
  std::bitset<512> reach;
  reach.set(0);
  for (auto part : single_tile_components(alpha)) {
    const auto comp = weak_composition(part, beta, model);
    std::bitset<512> next;
    for (std::size_t r = 0; r < 512; ++r) {
      if (!reach.test(r)) continue;
      for (auto g : comp.gammas)
        if (g.subset_of(gamma)) next.set(r | g.bits());
    }
    reach = next;
  }
  return reach.test(gamma.bits());
}

}  // namespace cdc
