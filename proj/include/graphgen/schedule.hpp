#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphgen {

// Probabilities of the three event types at one step: p grows a vertex,
// r grows a wedge between existing vertices, q drops in a fresh component.
struct EventMix {
  double p = 1.0;
  double r = 0.0;
  double q = 0.0;
};

// Event mix as a function of the 1-based step index. The time-varying kinds
// are driven by a node weight y(t) in [0, 3] that is split as
//   p = min(y, (3 - y) / 2),  q = max(0, (y - 1) / 2),  r = 1 - p - q.
class Schedule {
 public:
  enum class Kind { constant, target, table };

  static Schedule constant(double p, double r, double q);

  // Picks y(t) so that the degree exponent steers toward x:
  //   x > 5/3   constant y = 3 - 2 / (x - 1)
  //   x = 5/3   y(t) = 1 / log(t + 2)
  //   x < 5/3   y(t) = t^{(3/2)(x - 5/3)}
  // Requires x > 1.
  static Schedule target_exponent(double x);

  // Explicit per-step rows; steps beyond the last row reuse it.
  static Schedule table(std::vector<EventMix> rows);

  EventMix at(uint64_t t) const;
  double y(uint64_t t) const;  // NaN unless kind() == target

  Kind kind() const { return kind_; }
  double target_x() const { return x_; }
  EventMix limit_mix() const;

  // Long-run attachment strength; 1 except in the decaying-y regime,
  // where it is (3/2)(x - 1).
  double gamma_limit() const;

  // Exponent the growth process actually produces:
  // 1 + 2 gamma / (p + 2 r) at the limit mix, infinite when p = r = 0.
  double oracle_beta() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::constant;
  EventMix mix_{};
  double x_ = 0.0;
  std::vector<EventMix> rows_;
};

EventMix mix_from_y(double y);

}  // namespace graphgen
