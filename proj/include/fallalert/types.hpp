#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "fallalert/error.hpp"

namespace fallalert {

// MPU6050-class sensor full-scale limits at the widest configuration.
constexpr double kGravity = 9.8;                    // m/s^2, the value used throughout
constexpr double kMaxAccel = 16.0 * kGravity;       // +/-16 g
constexpr double kMaxGyro = 2000.0;                 // +/-2000 deg/s
constexpr double kDefaultSampleRateHz = 50.0;

/// One timestamped 6-axis IMU reading: acceleration in m/s^2, angular
/// velocity in deg/s.
struct Sample {
  double t = 0;
  double ax = 0, ay = 0, az = 0;
  double gx = 0, gy = 0, gz = 0;

  bool operator==(const Sample&) const = default;
};

inline bool sample_in_range(const Sample& s) {
  return std::abs(s.ax) <= kMaxAccel && std::abs(s.ay) <= kMaxAccel &&
         std::abs(s.az) <= kMaxAccel && std::abs(s.gx) <= kMaxGyro &&
         std::abs(s.gy) <= kMaxGyro && std::abs(s.gz) <= kMaxGyro;
}

enum class ActivityLabel {
  WALK,
  WALK_UP,
  WALK_DOWN,
  JUMPING_JACK,
  JUMP,
  RUN,
  SIT,
  SIT_UP,
  STAND,
  UP,
  DOWN
};

constexpr size_t kActivityLabelCount = 11;

constexpr std::array<ActivityLabel, kActivityLabelCount> kAllActivityLabels = {
    ActivityLabel::WALK,   ActivityLabel::WALK_UP, ActivityLabel::WALK_DOWN,
    ActivityLabel::JUMPING_JACK, ActivityLabel::JUMP, ActivityLabel::RUN,
    ActivityLabel::SIT,    ActivityLabel::SIT_UP,  ActivityLabel::STAND,
    ActivityLabel::UP,     ActivityLabel::DOWN};

inline const char* to_string(ActivityLabel l) {
  switch (l) {
    case ActivityLabel::WALK: return "WALK";
    case ActivityLabel::WALK_UP: return "WALK_UP";
    case ActivityLabel::WALK_DOWN: return "WALK_DOWN";
    case ActivityLabel::JUMPING_JACK: return "JUMPING_JACK";
    case ActivityLabel::JUMP: return "JUMP";
    case ActivityLabel::RUN: return "RUN";
    case ActivityLabel::SIT: return "SIT";
    case ActivityLabel::SIT_UP: return "SIT_UP";
    case ActivityLabel::STAND: return "STAND";
    case ActivityLabel::UP: return "UP";
    case ActivityLabel::DOWN: return "DOWN";
  }
  return "?";
}

inline ActivityLabel parse_activity_label(const std::string& s) {
  for (ActivityLabel l : kAllActivityLabels)
    if (s == to_string(l)) return l;
  fail(Errc::parse, "unknown activity label '" + s + "'");
}

enum class BodyLocation { RIGHT_ARM, LEFT_CHEST, LEFT_WRIST, LEFT_FOOT };

constexpr std::array<BodyLocation, 4> kAllBodyLocations = {
    BodyLocation::RIGHT_ARM, BodyLocation::LEFT_CHEST, BodyLocation::LEFT_WRIST,
    BodyLocation::LEFT_FOOT};

inline const char* to_string(BodyLocation l) {
  switch (l) {
    case BodyLocation::RIGHT_ARM: return "RIGHT_ARM";
    case BodyLocation::LEFT_CHEST: return "LEFT_CHEST";
    case BodyLocation::LEFT_WRIST: return "LEFT_WRIST";
    case BodyLocation::LEFT_FOOT: return "LEFT_FOOT";
  }
  return "?";
}

inline BodyLocation parse_body_location(const std::string& s) {
  for (BodyLocation l : kAllBodyLocations)
    if (s == to_string(l)) return l;
  fail(Errc::parse, "unknown body location '" + s + "'");
}

enum class FallKind { FALL, FALL_KNEES_FIRST };

constexpr std::array<FallKind, 2> kAllFallKinds = {FallKind::FALL, FallKind::FALL_KNEES_FIRST};

inline const char* to_string(FallKind k) {
  switch (k) {
    case FallKind::FALL: return "FALL";
    case FallKind::FALL_KNEES_FIRST: return "FALL_KNEES_FIRST";
  }
  return "?";
}

inline FallKind parse_fall_kind(const std::string& s) {
  for (FallKind k : kAllFallKinds)
    if (s == to_string(k)) return k;
  fail(Errc::parse, "unknown fall kind '" + s + "'");
}

/// A recording is tagged either with the activity performed or with the kind
/// of fall it captures.
using RecordingLabel = std::variant<ActivityLabel, FallKind>;

inline std::string to_string(const RecordingLabel& l) {
  if (std::holds_alternative<ActivityLabel>(l)) return to_string(std::get<ActivityLabel>(l));
  return to_string(std::get<FallKind>(l));
}

inline RecordingLabel parse_recording_label(const std::string& s) {
  for (ActivityLabel l : kAllActivityLabels)
    if (s == to_string(l)) return l;
  for (FallKind k : kAllFallKinds)
    if (s == to_string(k)) return k;
  fail(Errc::parse, "unknown label '" + s + "'");
}

inline bool is_fall(const RecordingLabel& l) { return std::holds_alternative<FallKind>(l); }

struct Recording {
  std::string subject_id;
  BodyLocation location = BodyLocation::LEFT_CHEST;
  RecordingLabel label = ActivityLabel::STAND;
  std::string session = "0";
  double sample_rate_hz = kDefaultSampleRateHz;
  std::vector<Sample> samples;

  std::string label_string() const { return to_string(label); }

  std::string id() const {
    return subject_id + "/" + to_string(location) + "/" + label_string() + "/" + session;
  }
};

// Recording invariants: at least one sample, in-range values, non-decreasing
// time, and a declared rate within 10% of the median inter-sample spacing.
inline void validate_recording(const Recording& r) {
  require(!r.samples.empty(), Errc::validation, "recording " + r.id() + " has no samples");
  require(r.sample_rate_hz > 0, Errc::validation, "recording " + r.id() + ": rate must be > 0");
  for (size_t i = 0; i < r.samples.size(); ++i) {
    const Sample& s = r.samples[i];
    if (!sample_in_range(s))
      fail(Errc::validation, "recording " + r.id() + " sample " + std::to_string(i) +
                                 " exceeds sensor range");
    if (i > 0 && s.t < r.samples[i - 1].t)
      fail(Errc::validation, "recording " + r.id() + ": time goes backwards at sample " +
                                 std::to_string(i));
  }
  if (r.samples.size() >= 2) {
    std::vector<double> gaps;
    gaps.reserve(r.samples.size() - 1);
    for (size_t i = 1; i < r.samples.size(); ++i)
      gaps.push_back(r.samples[i].t - r.samples[i - 1].t);
    std::nth_element(gaps.begin(), gaps.begin() + gaps.size() / 2, gaps.end());
    double median_dt = gaps[gaps.size() / 2];
    if (median_dt > 0) {
      double rate = 1.0 / median_dt;
      if (std::abs(rate - r.sample_rate_hz) > 0.10 * r.sample_rate_hz)
        fail(Errc::validation, "recording " + r.id() + ": declared rate " +
                                   std::to_string(r.sample_rate_hz) +
                                   " Hz does not match median spacing (" + std::to_string(rate) +
                                   " Hz)");
    }
  }
}

struct Dataset {
  std::vector<Recording> recordings;
  std::string provenance;  // source path or generator seed
};

}  // namespace fallalert
