#pragma once

#include <span>
#include <vector>

namespace outpost {

// Per-edge flow in trips/year, indexed by edge id.
using FlowVector = std::vector<double>;

// Set of outpost nodes (the y indicator). Ids are kept sorted and unique.
class OutpostSet {
 public:
  OutpostSet() = default;
  OutpostSet(std::vector<int> ids, int node_count);

  static OutpostSet from_indicator(std::span<const char> indicator);
  static OutpostSet all(int node_count);

  int size() const { return static_cast<int>(ids_.size()); }
  int node_count() const { return node_count_; }
  std::span<const int> ids() const { return ids_; }
  bool contains(int v) const;
  std::vector<char> indicator() const;

  friend bool operator==(const OutpostSet&, const OutpostSet&) = default;
  friend auto operator<=>(const OutpostSet& a, const OutpostSet& b) { return a.ids_ <=> b.ids_; }

 private:
  std::vector<int> ids_;
  int node_count_ = 0;
};

}  // namespace outpost
