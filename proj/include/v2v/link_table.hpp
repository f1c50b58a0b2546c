#pragma once

#include <span>
#include <vector>

#include "v2v/radio.hpp"
#include "v2v/scenario.hpp"
#include "v2v/shadowing.hpp"

namespace v2v {

/// Received power (mW, shadowed) between every ordered pair of vehicles of
/// one snapshot. Links are reciprocal, so the table is symmetric.
class LinkTable {
 public:
  LinkTable() = default;

  /// `odometers[i]` is the distance travelled so far by vehicle i of the
  /// snapshot; empty means a static snapshot, whose
  /// shadowing is drawn without being tracked in `shadow`.
  LinkTable(const Scenario& s, const RadioConfig& radio, ShadowField& shadow,
            std::span<const double> odometers = {});

  std::size_t size() const { return n_; }
  float power(std::size_t tx, std::size_t rx) const { return p_[tx * n_ + rx]; }

 private:
  std::size_t n_ = 0;
  std::vector<float> p_;
};

}  // namespace v2v
