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

#include "ifctp/problem_file.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ifctp {
namespace {

class LineReader {
 public:
  LineReader(std::string_view text, int line) : text_(text), line_(line) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  std::string_view Word() {
    SkipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '-')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::size_t Index(const char* what) {
    SkipSpace();
    std::size_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      Fail(ParseErrorKind::kSyntax, std::string("expected ") + what);
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  double Number() {
    SkipSpace();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      Fail(ParseErrorKind::kSyntax, "expected a number");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(ParseErrorKind::kSyntax, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  void ExpectWord(std::string_view word) {
    if (Word() != word) {
      Fail(ParseErrorKind::kSyntax, "expected '" + std::string(word) + "'");
    }
  }

  // Reads "[lo,hi]"; `where` names the entry for the lo > hi message.
  Interval ReadInterval(const std::string& where) {
    Expect('[');
    const double lo = Number();
    Expect(',');
    const double hi = Number();
    Expect(']');
    if (lo > hi) {
      Fail(ParseErrorKind::kMalformedInterval,
           "interval lo > hi at " + where);
    }
    return Interval(lo, hi);
  }

  void ExpectEnd() {
    if (!AtEnd()) {
      Fail(ParseErrorKind::kSyntax,
           "unexpected trailing text '" + std::string(text_.substr(pos_)) +
               "'");
    }
  }

  [[noreturn]] void Fail(ParseErrorKind kind, const std::string& message) {
    throw ParseError(kind, line_, message);
  }

 private:
  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

struct PartialInstance {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::optional<Interval>> cost;
  std::vector<std::optional<Interval>> fixed;
  std::vector<std::optional<Interval>> supply;
  std::vector<std::optional<Interval>> demand;
};

std::string Plural(std::size_t count, const char* noun) {
  return std::to_string(count) + " " + noun + " entries";
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line,
                       const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " +
                                        message
                                  : message),
      kind_(kind),
      line_(line),
      detail_(message) {}

IfctpInstance ParseInstance(std::string_view text) {
  std::optional<PartialInstance> partial;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_number;
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    LineReader reader(line, line_number);
    if (reader.AtEnd()) continue;
    const std::string keyword(reader.Word());

    if (keyword == "dims") {
      if (partial) reader.Fail(ParseErrorKind::kSyntax, "duplicate dims");
      const std::size_t m = reader.Index("source count");
      const std::size_t n = reader.Index("destination count");
      reader.ExpectEnd();
      if (m < 1 || n < 1) {
        reader.Fail(ParseErrorKind::kDimensionMismatch,
                    "dims must be at least 1 x 1");
      }
      partial = PartialInstance{m, n, std::vector<std::optional<Interval>>(m * n),
                                std::vector<std::optional<Interval>>(m * n),
                                std::vector<std::optional<Interval>>(m),
                                std::vector<std::optional<Interval>>(n)};
      continue;
    }
    if (keyword != "cost" && keyword != "supply" && keyword != "demand") {
      reader.Fail(ParseErrorKind::kSyntax,
                  "unknown statement '" + keyword + "'");
    }
    if (!partial) {
      reader.Fail(ParseErrorKind::kSyntax, "'" + keyword + "' before dims");
    }
    PartialInstance& p = *partial;

    if (keyword == "cost") {
      const std::size_t i = reader.Index("source index");
      const std::size_t j = reader.Index("destination index");
      if (i < 1 || i > p.m || j < 1 || j > p.n) {
        reader.Fail(ParseErrorKind::kDimensionMismatch,
                    "cost index (" + std::to_string(i) + "," +
                        std::to_string(j) + ") outside " +
                        std::to_string(p.m) + "x" + std::to_string(p.n));
      }
      reader.Expect('=');
      const Interval t = reader.ReadInterval(CellLabel("t", i - 1, j - 1));
      reader.ExpectWord("fixed");
      const Interval l = reader.ReadInterval(CellLabel("l", i - 1, j - 1));
      reader.ExpectEnd();
      const std::size_t k = (i - 1) * p.n + (j - 1);
      if (p.cost[k]) {
        reader.Fail(ParseErrorKind::kSyntax,
                    "duplicate cost entry " + CellLabel("", i - 1, j - 1));
      }
      p.cost[k] = t;
      p.fixed[k] = l;
      continue;
    }

    const bool is_supply = keyword == "supply";
    auto& slots = is_supply ? p.supply : p.demand;
    const std::size_t index = reader.Index(is_supply ? "source index"
                                                     : "destination index");
    if (index < 1 || index > slots.size()) {
      reader.Fail(ParseErrorKind::kDimensionMismatch,
                  keyword + " index " + std::to_string(index) +
                      " outside 1.." + std::to_string(slots.size()));
    }
    reader.Expect('=');
    const Interval value =
        reader.ReadInterval(keyword + "(" + std::to_string(index) + ")");
    reader.ExpectEnd();
    if (slots[index - 1]) {
      reader.Fail(ParseErrorKind::kSyntax, "duplicate " + keyword + " entry " +
                                               std::to_string(index));
    }
    slots[index - 1] = value;
  }

  if (!partial) throw ParseError(ParseErrorKind::kSyntax, 0, "missing dims");
  const PartialInstance& p = *partial;
  auto count = [](const std::vector<std::optional<Interval>>& v) {
    std::size_t c = 0;
    for (const auto& e : v) c += e.has_value();
    return c;
  };
  auto require = [&](const std::vector<std::optional<Interval>>& v,
                     const char* noun) {
    const std::size_t found = count(v);
    if (found != v.size()) {
      throw ParseError(ParseErrorKind::kDimensionMismatch, 0,
                       "expected " + Plural(v.size(), noun) + ", found " +
                           std::to_string(found));
    }
  };
  require(p.cost, "cost");
  require(p.supply, "supply");
  require(p.demand, "demand");

  IfctpInstance instance;
  instance.sources = p.m;
  instance.destinations = p.n;
  instance.unit_cost = Matrix<Interval>(p.m, p.n);
  instance.fixed_charge = Matrix<Interval>(p.m, p.n);
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      instance.unit_cost(i, j) = *p.cost[i * p.n + j];
      instance.fixed_charge(i, j) = *p.fixed[i * p.n + j];
    }
  }
  for (const auto& s : p.supply) instance.supply.push_back(*s);
  for (const auto& d : p.demand) instance.demand.push_back(*d);

  const std::vector<Violation> violations = Validate(instance);
  if (!violations.empty()) {
    std::string message = "invalid instance:";
    for (const Violation& v : violations) message += " " + v.ToString() + ";";
    message.pop_back();
    throw ParseError(ParseErrorKind::kValidation, 0, message);
  }
  return instance;
}

IfctpInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(ParseErrorKind::kSyntax, 0, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string FormatNumber(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, ptr);
}

Interval ParseInterval(std::string_view text) {
  LineReader reader(text, 0);
  const Interval value = reader.ReadInterval("'" + std::string(text) + "'");
  reader.ExpectEnd();
  return value;
}

std::string RenderInstance(const IfctpInstance& instance) {
  auto interval = [](const Interval& a) {
    return "[" + FormatNumber(a.lo()) + "," + FormatNumber(a.hi()) + "]";
  };
  std::ostringstream os;
  os << "dims " << instance.sources << " " << instance.destinations << "\n";
  for (std::size_t i = 0; i < instance.sources; ++i) {
    for (std::size_t j = 0; j < instance.destinations; ++j) {
      os << "cost " << i + 1 << " " << j + 1 << " = "
         << interval(instance.unit_cost(i, j)) << " fixed "
         << interval(instance.fixed_charge(i, j)) << "\n";
    }
  }
  for (std::size_t i = 0; i < instance.supply.size(); ++i) {
    os << "supply " << i + 1 << " = " << interval(instance.supply[i]) << "\n";
  }
  for (std::size_t j = 0; j < instance.demand.size(); ++j) {
    os << "demand " << j + 1 << " = " << interval(instance.demand[j]) << "\n";
  }
  return os.str();
}

}  // namespace ifctp
