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

#include <random>

#include "gtest/gtest.h"
#include "test_support.h"

namespace ifctp {
namespace {

using ::ifctp::testing::RandomInstance;
using ::ifctp::testing::Example3x4;

constexpr const char* kSmall = R"(# tiny
dims 1 2
cost 1 1 = [1,2] fixed [3,4]
cost 1 2 = [ 2 , 3 ] fixed [5,5]   # trailing comment
supply 1 = [10,12]
demand 1 = [4,5]
demand 2 = [3,6]
)";

ParseError ParseFailure(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError(ParseErrorKind::kSyntax, 0, "");
}

std::string Replace(std::string text, const std::string& from,
                    const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(ParseInstanceTest, ShippedExample3x4File) {
  const IfctpInstance inst = Example3x4();
  EXPECT_EQ(inst.sources, 3u);
  EXPECT_EQ(inst.destinations, 4u);
  EXPECT_EQ(inst.unit_cost(0, 0), Interval(4, 8));
  EXPECT_EQ(inst.fixed_charge(1, 3), Interval(38, 40));
  EXPECT_EQ(inst.supply[2], Interval(22, 25));
  EXPECT_EQ(inst.demand[1], Interval(19, 24));
}

TEST(ParseInstanceTest, WhitespaceAndComments) {
  const IfctpInstance inst = ParseInstance(kSmall);
  EXPECT_EQ(inst.unit_cost(0, 1), Interval(2, 3));
  EXPECT_EQ(inst.fixed_charge(0, 1), Interval(5, 5));
}

TEST(ParseInstanceTest, MalformedInterval) {
  const ParseError e =
      ParseFailure(Replace(kSmall, "cost 1 1 = [1,2]", "cost 1 1 = [8,4]"));
  EXPECT_EQ(e.kind(), ParseErrorKind::kMalformedInterval);
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.detail(), "interval lo > hi at t(1,1)");
}

TEST(ParseInstanceTest, MissingDemand) {
  const std::string text = Replace(
      RenderInstance(Example3x4()), "demand 4 = [20,22]\n", "");
  const ParseError e = ParseFailure(text);
  EXPECT_EQ(e.kind(), ParseErrorKind::kDimensionMismatch);
  EXPECT_EQ(e.detail(), "expected 4 demand entries, found 3");
}

TEST(ParseInstanceTest, SyntaxErrors) {
  EXPECT_EQ(ParseFailure("cost 1 1 = [1,2] fixed [1,2]\n").kind(),
            ParseErrorKind::kSyntax);
  EXPECT_EQ(ParseFailure("dims 1 1\nroute 1 1\n").detail(),
            "unknown statement 'route'");
  EXPECT_EQ(ParseFailure(Replace(kSmall, "fixed [3,4]", "fixed [3,4] extra"))
                .kind(),
            ParseErrorKind::kSyntax);
  EXPECT_EQ(ParseFailure(Replace(kSmall, "fixed [3,4]", "[3,4]")).kind(),
            ParseErrorKind::kSyntax);
  EXPECT_EQ(ParseFailure(std::string(kSmall) + "demand 1 = [4,5]\n").kind(),
            ParseErrorKind::kSyntax);
  EXPECT_EQ(ParseFailure("").detail(), "missing dims");
}

TEST(ParseInstanceTest, IndexOutsideDims) {
  const ParseError e =
      ParseFailure(Replace(kSmall, "cost 1 2", "cost 1 3"));
  EXPECT_EQ(e.kind(), ParseErrorKind::kDimensionMismatch);
  EXPECT_EQ(e.line(), 4);
}

TEST(ParseInstanceTest, ValidationFailure) {
  const ParseError e =
      ParseFailure(Replace(kSmall, "supply 1 = [10,12]", "supply 1 = [1,2]"));
  EXPECT_EQ(e.kind(), ParseErrorKind::kValidation);
  EXPECT_NE(e.detail().find("aggregate supply < aggregate demand"),
            std::string::npos);
}

TEST(RenderInstanceTest, RoundTrips) {
  std::mt19937 rng(23);
  for (int k = 0; k < 100; ++k) {
    IfctpInstance inst = RandomInstance(rng);
    inst.unit_cost(0, 0) = Interval(0.1, 1.0 / 3.0);
    const std::string text = RenderInstance(inst);
    EXPECT_EQ(ParseInstance(text), inst);
    EXPECT_EQ(RenderInstance(ParseInstance(text)), text);
  }
}

TEST(ParseIntervalTest, Basics) {
  EXPECT_EQ(ParseInterval("[734,770]"), Interval(734, 770));
  EXPECT_EQ(ParseInterval(" [ -1.5 , 2e1 ] "), Interval(-1.5, 20));
  EXPECT_THROW(ParseInterval("[770,734]"), ParseError);
  EXPECT_THROW(ParseInterval("734,770"), ParseError);
  EXPECT_THROW(ParseInterval("[1,2]x"), ParseError);
}

TEST(FormatNumberTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(4), "4");
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(std::stod(FormatNumber(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace ifctp
