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

#include "ifctp/interval.h"

#include <cmath>
#include <sstream>

namespace ifctp {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw InvalidInterval("interval limit is NaN");
  }
  if (lo > hi) {
    std::ostringstream msg;
    msg << "interval lo > hi: [" << lo << "," << hi << "]";
    throw InvalidInterval(msg.str());
  }
}

Interval Interval::FromCenterWidth(const CenterWidth& cw) {
  if (!(cw.width >= 0.0)) {
    std::ostringstream msg;
    msg << "negative interval width " << cw.width;
    throw InvalidInterval(msg.str());
  }
  return Interval(cw.center - cw.width, cw.center + cw.width);
}

Interval Add(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval Scale(double gamma, const Interval& a) {
  if (gamma >= 0.0) return Interval(gamma * a.lo(), gamma * a.hi());
  return Interval(gamma * a.hi(), gamma * a.lo());
}

CenterWidth Add(const CenterWidth& a, const CenterWidth& b) {
  return {a.center + b.center, a.width + b.width};
}

CenterWidth Scale(double gamma, const CenterWidth& a) {
  return {gamma * a.center, std::fabs(gamma) * a.width};
}

double DistanceToIdeal(const CenterWidth& p, const CenterWidth& ideal) {
  return std::hypot(p.center - ideal.center, p.width - ideal.width);
}

Preference Prefer(const CenterWidth& p, const CenterWidth& q,
                  const CenterWidth& ideal, double tie_tolerance) {
  const double dp = DistanceToIdeal(p, ideal);
  const double dq = DistanceToIdeal(q, ideal);
  if (std::fabs(dp - dq) <= tie_tolerance) return Preference::kTie;
  return dp < dq ? Preference::kFirstPreferred : Preference::kSecondPreferred;
}

std::string ToString(const Interval& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

std::string ToString(const CenterWidth& cw) {
  std::ostringstream os;
  os << cw;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << "[" << a.lo() << "," << a.hi() << "]";
}

std::ostream& operator<<(std::ostream& os, const CenterWidth& cw) {
  return os << "<" << cw.center << "," << cw.width << ">";
}

}  // namespace ifctp
