#include <algorithm>
#include <atomic>
#include <thread>

#include "lensattack/attack_model.hpp"

namespace lensattack {

namespace {

SweepRow evaluate_point(const SweepGrid& grid, std::size_t index) {
  const std::size_t n_do = grid.object_distances.size();
  const std::size_t n_db = grid.gaps.size();
  SweepRow row;
  row.focal_length = grid.focal_lengths[index / (n_db * n_do)];
  row.gap = grid.gaps[(index / n_do) % n_db];
  row.object_distance = grid.object_distances[index % n_do];
  try {
    const OpticalStack stack =
        make_stack(row.focal_length, row.gap, row.object_distance, grid.camera_focal_length);
    row.outcome = evaluate(stack);
  } catch (const Error& e) {
    row.error = std::string(error_name(e.kind()));
  }
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepGrid& grid, unsigned threads) {
  const std::size_t total =
      grid.focal_lengths.size() * grid.gaps.size() * grid.object_distances.size();
  std::vector<SweepRow> rows(total);
  if (total == 0) return rows;

  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(total));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) rows[i] = evaluate_point(grid, i);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total; i = next++) rows[i] = evaluate_point(grid, i);
      });
    }
  }
  return rows;
}

}  // namespace lensattack
