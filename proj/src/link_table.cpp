#include "v2v/link_table.hpp"

#include <algorithm>
#include <cmath>

namespace v2v {

LinkTable::LinkTable(const Scenario& s, const RadioConfig& radio, ShadowField& shadow,
                     std::span<const double> odometers)
    : n_(s.size()), p_(s.size() * s.size(), 0.0f) {
  // Coincident vehicles are treated as 1 m apart; the path-loss law is not
  // defined at zero distance.
  constexpr double kMinDistance = 1.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = std::max(kMinDistance, s.distance_between(i, j));
      const double shadow_db = odometers.empty()
                                   ? shadow.initial_db(s.ids[i], s.ids[j])
                                   : shadow.sample_db(s.ids[i], s.ids[j], odometers[i] + odometers[j]);
      const auto p = static_cast<float>(rx_power(radio, d, db_to_linear(shadow_db)));
      p_[i * n_ + j] = p;
      p_[j * n_ + i] = p;
    }
  }
}

}  // namespace v2v
