#pragma once

namespace v2v {

/// The CAM-R grid of one beacon period: `r_time` subframes by `r_freq`
/// frequency slots. Resources are numbered 1..r_total with
/// r = (f - 1) * r_time + t.
struct ResourceGrid {
  int r_total = 100;
  int r_time = 100;
  int r_freq = 1;

  static ResourceGrid make(int r_time, int r_freq = 1);
  void validate() const;
};

struct CamConfig {
  double beacon_frequency_hz = 10.0;
  int beacon_size_bytes = 300;
  /// Resource blocks needed by one CAM, counted per 0.5 ms slot; a CAM
  /// therefore occupies ceil(rbs_per_cam / 2) RB pairs of a subframe.
  int rbs_per_cam = 68;
  int rb_pairs_per_subframe = 40;

  void validate() const;
  double beacon_period_s() const { return 1.0 / beacon_frequency_hz; }
  int rb_pairs_per_cam() const { return (rbs_per_cam + 1) / 2; }
};

/// R_t = floor(1000 / f_CAM) one-millisecond subframes per beacon period and
/// R_f = floor(rb_pairs_per_subframe / rb_pairs_per_cam) CAMs per subframe.
ResourceGrid grid_from_cam(const CamConfig& cfg);

int time_slot(const ResourceGrid& grid, int r);
int freq_slot(const ResourceGrid& grid, int r);
bool same_subframe(const ResourceGrid& grid, int r_a, int r_b);

}  // namespace v2v
