#pragma once

#include <vector>

#include "barternet/types.hpp"

namespace barternet {

/// A strict total order over a set of goods, most preferred first.
///
/// Master orders rank every good in the market; restrictions of a master
/// order to a subset (an agent's visible or available goods) are themselves
/// PreferenceOrders. Goods the order does not rank are "unknown" to it, and
/// comparison queries about them throw rather than guess.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;

  /// `ranked` lists distinct positive good ids, most preferred first.
  explicit PreferenceOrder(std::vector<GoodId> ranked);

  const std::vector<GoodId>& goods() const { return ranked_; }
  std::size_t size() const { return ranked_.size(); }
  bool empty() const { return ranked_.empty(); }

  bool ranks(GoodId g) const;

  /// 0-based position of g (0 = most preferred); throws on unknown goods.
  int rank_of(GoodId g) const;

  /// Strict preference a over b; throws if either good is unknown.
  bool prefers(GoodId a, GoodId b) const { return rank_of(a) < rank_of(b); }

  bool weakly_prefers(GoodId a, GoodId b) const {
    return rank_of(a) <= rank_of(b);
  }

  /// The order induced on `subset`: same relative ranking, other goods
  /// dropped. Every member of `subset` must be ranked here.
  PreferenceOrder restricted_to(const std::vector<GoodId>& subset) const;

  /// Most preferred good among `menu` (all must be ranked); throws on an
  /// empty menu.
  GoodId top_choice(const std::vector<GoodId>& menu) const;

  bool operator==(const PreferenceOrder& other) const {
    return ranked_ == other.ranked_;
  }
  bool operator!=(const PreferenceOrder& other) const {
    return !(*this == other);
  }

 private:
  std::vector<GoodId> ranked_;
  std::vector<int> rank_by_good_;  // indexed by good id; -1 = unranked
};

}  // namespace barternet
