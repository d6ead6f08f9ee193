#include "barternet/preference.hpp"

#include <stdexcept>

namespace barternet {

PreferenceOrder::PreferenceOrder(std::vector<GoodId> ranked)
    : ranked_(std::move(ranked)) {
  GoodId max_good = 0;
  for (GoodId g : ranked_) {
    if (g <= 0)
      throw std::invalid_argument("preference order: good ids must be positive, got " +
                                  std::to_string(g));
    max_good = std::max(max_good, g);
  }
  rank_by_good_.assign(max_good + 1, -1);
  for (std::size_t k = 0; k < ranked_.size(); ++k) {
    GoodId g = ranked_[k];
    if (rank_by_good_[g] != -1)
      throw std::invalid_argument("preference order: good g" + std::to_string(g) +
                                  " listed twice");
    rank_by_good_[g] = static_cast<int>(k);
  }
}

bool PreferenceOrder::ranks(GoodId g) const {
  return g > 0 && g < static_cast<GoodId>(rank_by_good_.size()) &&
         rank_by_good_[g] != -1;
}

int PreferenceOrder::rank_of(GoodId g) const {
  if (!ranks(g))
    throw std::invalid_argument("preference order: unknown good g" +
                                std::to_string(g));
  return rank_by_good_[g];
}

PreferenceOrder PreferenceOrder::restricted_to(
    const std::vector<GoodId>& subset) const {
  std::vector<char> keep(rank_by_good_.size(), 0);
  for (GoodId g : subset) {
    if (!ranks(g))
      throw std::invalid_argument(
          "preference order restriction: unknown good g" + std::to_string(g));
    keep[g] = 1;
  }
  std::vector<GoodId> kept;
  kept.reserve(subset.size());
  for (GoodId g : ranked_)
    if (keep[g]) kept.push_back(g);
  return PreferenceOrder(std::move(kept));
}

GoodId PreferenceOrder::top_choice(const std::vector<GoodId>& menu) const {
  if (menu.empty())
    throw std::invalid_argument("top choice of an empty menu");
  GoodId best = menu.front();
  int best_rank = rank_of(best);
  for (std::size_t k = 1; k < menu.size(); ++k) {
    int r = rank_of(menu[k]);
    if (r < best_rank) {
      best = menu[k];
      best_rank = r;
    }
  }
  return best;
}

}  // namespace barternet
