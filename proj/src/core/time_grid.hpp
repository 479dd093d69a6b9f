#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace maxloc {

// Uniform grid on [t_start, t_end] with n_steps intervals. Node i sits at
// t_start + i*dt; every consumer uses time(i) so node coordinates are
// bit-identical across the codebase.
class TimeGrid {
 public:
  TimeGrid(double t_start, double t_end, std::int64_t n_steps)
      : t_start_(t_start), t_end_(t_end), n_steps_(n_steps) {
    if (!(t_start < t_end)) throw std::invalid_argument("TimeGrid: t_start must be < t_end");
    if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps must be >= 1");
    dt_ = (t_end - t_start) / static_cast<double>(n_steps);
  }

  double t_start() const { return t_start_; }
  double t_end() const { return t_end_; }
  std::int64_t n_steps() const { return n_steps_; }
  std::int64_t size() const { return n_steps_ + 1; }
  double dt() const { return dt_; }
  double span() const { return t_end_ - t_start_; }
  double time(std::int64_t i) const { return t_start_ + dt_ * static_cast<double>(i); }

  bool contains_origin() const {
    if (t_start_ > 0.0 || t_end_ < 0.0) return false;
    const std::int64_t k = origin_candidate();
    return k >= 0 && k <= n_steps_ && std::abs(time(k)) <= 1e-12 * span();
  }

  // Index of the node at time 0 (two-sided processes anchor there).
  std::int64_t origin_index() const {
    if (!contains_origin()) throw std::invalid_argument("TimeGrid: 0 is not a grid node");
    return origin_candidate();
  }

  // Same interval, halved spacing: the nesting used by bridge refinement.
  TimeGrid refined() const { return TimeGrid(t_start_, t_end_, 2 * n_steps_); }

  bool operator==(const TimeGrid& o) const {
    return t_start_ == o.t_start_ && t_end_ == o.t_end_ && n_steps_ == o.n_steps_;
  }

 private:
  std::int64_t origin_candidate() const {
    return static_cast<std::int64_t>(std::llround(-t_start_ / dt_));
  }

  double t_start_, t_end_;
  std::int64_t n_steps_;
  double dt_;
};

}  // namespace maxloc
