// Copyright 2026 The IFCTP Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IFCTP_INTERVAL_H_
#define IFCTP_INTERVAL_H_

#include <ostream>
#include <stdexcept>
#include <string>

namespace ifctp {

// Raised when an interval would have its left limit above its right limit,
// or when a center/width pair carries a negative width.
class InvalidInterval : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An interval in center/width form <c, w>. The width is the half-width.
struct CenterWidth {
  double center = 0.0;
  double width = 0.0;

  friend bool operator==(const CenterWidth&, const CenterWidth&) = default;
};

// A closed real interval [lo, hi]. Construction rejects lo > hi instead of
// swapping the limits; lo == hi is a crisp value.
class Interval {
 public:
  Interval() = default;
  Interval(double lo, double hi);

  static Interval Point(double value) { return Interval(value, value); }
  static Interval FromCenterWidth(const CenterWidth& cw);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double center() const { return (hi_ + lo_) / 2.0; }
  double width() const { return (hi_ - lo_) / 2.0; }
  bool is_degenerate() const { return lo_ == hi_; }

  CenterWidth ToCenterWidth() const { return {center(), width()}; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval Add(const Interval& a, const Interval& b);

// gamma * a, swapping the limits when gamma < 0.
Interval Scale(double gamma, const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) {
  return Add(a, b);
}
inline Interval operator*(double gamma, const Interval& a) {
  return Scale(gamma, a);
}

CenterWidth Add(const CenterWidth& a, const CenterWidth& b);
CenterWidth Scale(double gamma, const CenterWidth& a);

// Euclidean distance between two intervals in the (center, width) plane.
double DistanceToIdeal(const CenterWidth& p, const CenterWidth& ideal);

enum class Preference { kFirstPreferred, kSecondPreferred, kTie };

inline constexpr double kPreferenceTieTolerance = 1e-9;

// Distance-based order: the interval closer to `ideal` is preferred. Distances
// within `tie_tolerance` of each other compare as a tie.
Preference Prefer(const CenterWidth& p, const CenterWidth& q,
                  const CenterWidth& ideal,
                  double tie_tolerance = kPreferenceTieTolerance);

std::string ToString(const Interval& a);
std::string ToString(const CenterWidth& cw);
std::ostream& operator<<(std::ostream& os, const Interval& a);
std::ostream& operator<<(std::ostream& os, const CenterWidth& cw);

}  // namespace ifctp

#endif  // IFCTP_INTERVAL_H_
