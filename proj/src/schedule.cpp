#include "graphgen/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace graphgen {

namespace {

void check_mix(const EventMix& m) {
  auto bad = [](double v) { return !(v >= 0.0) || !(v <= 1.0); };
  if (bad(m.p) || bad(m.r) || bad(m.q))
    throw std::invalid_argument("schedule: event weights must lie in [0,1]");
  if (std::abs(m.p + m.r + m.q - 1.0) > 1e-12)
    throw std::invalid_argument("schedule: event weights must sum to 1");
}

constexpr double kTargetKnee = 5.0 / 3.0;

}  // namespace

EventMix mix_from_y(double y) {
  if (!(y >= 0.0) || y > 3.0) throw std::invalid_argument("schedule: y must lie in [0,3]");
  EventMix m;
  m.p = std::min(y, (3.0 - y) / 2.0);
  m.q = std::max(0.0, (y - 1.0) / 2.0);
  m.r = 1.0 - m.p - m.q;
  if (m.r < 0.0 && m.r > -1e-15) m.r = 0.0;
  return m;
}

Schedule Schedule::constant(double p, double r, double q) {
  Schedule s;
  s.kind_ = Kind::constant;
  s.mix_ = {p, r, q};
  check_mix(s.mix_);
  return s;
}

Schedule Schedule::target_exponent(double x) {
  if (!(x > 1.0)) throw std::invalid_argument("schedule: target exponent must exceed 1");
  Schedule s;
  s.kind_ = Kind::target;
  s.x_ = x;
  return s;
}

Schedule Schedule::table(std::vector<EventMix> rows) {
  if (rows.empty()) throw std::invalid_argument("schedule: table needs at least one row");
  for (const auto& m : rows) check_mix(m);
  Schedule s;
  s.kind_ = Kind::table;
  s.rows_ = std::move(rows);
  return s;
}

double Schedule::y(uint64_t t) const {
  if (kind_ != Kind::target) return std::numeric_limits<double>::quiet_NaN();
  if (x_ > kTargetKnee) return 3.0 - 2.0 / (x_ - 1.0);
  if (x_ == kTargetKnee) return 1.0 / std::log(double(t) + 2.0);
  return std::pow(double(t), 1.5 * (x_ - kTargetKnee));
}

EventMix Schedule::at(uint64_t t) const {
  switch (kind_) {
    case Kind::constant:
      return mix_;
    case Kind::target:
      return mix_from_y(y(t));
    case Kind::table:
      return rows_[std::min<uint64_t>(t ? t - 1 : 0, rows_.size() - 1)];
  }
  return mix_;
}

EventMix Schedule::limit_mix() const {
  switch (kind_) {
    case Kind::constant:
      return mix_;
    case Kind::target:
      if (x_ > kTargetKnee) return mix_from_y(3.0 - 2.0 / (x_ - 1.0));
      return mix_from_y(0.0);  // decaying y
    case Kind::table:
      return rows_.back();
  }
  return mix_;
}

double Schedule::gamma_limit() const {
  if (kind_ == Kind::target && x_ < kTargetKnee) return 1.5 * (x_ - 1.0);
  return 1.0;
}

double Schedule::oracle_beta() const {
  EventMix m = limit_mix();
  double denom = m.p + 2.0 * m.r;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 + 2.0 * gamma_limit() / denom;
}

std::string Schedule::describe() const {
  char buf[96];
  switch (kind_) {
    case Kind::constant:
      std::snprintf(buf, sizeof buf, "constant:%.6g,%.6g,%.6g", mix_.p, mix_.r, mix_.q);
      return buf;
    case Kind::target:
      std::snprintf(buf, sizeof buf, "target:%.6g", x_);
      return buf;
    case Kind::table:
      std::snprintf(buf, sizeof buf, "table:%zu", rows_.size());
      return buf;
  }
  return "";
}

}  // namespace graphgen
