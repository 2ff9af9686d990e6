#include <gtest/gtest.h>

#include "milnor/report.hpp"

using namespace milnor;
using namespace milnor::report;

TEST(Report, MachineAndTextRendering) {
  Report rep("gr");
  rep.add("p", "2");
  rep.add("order.log_p", "1");
  EXPECT_EQ(rep.render(Format::Machine), "milnor-gr-report v1\ncommand: gr\np: 2\norder.log_p: 1\n");
  EXPECT_EQ(rep.render(Format::Text), "command      gr\np            2\norder.log_p  1\n");
  EXPECT_EQ(rep.get("p"), "2");
  EXPECT_EQ(rep.get("missing"), "");
}

TEST(Report, PowerStrings) {
  EXPECT_EQ(power_string(2, 0), "1");
  EXPECT_EQ(power_string(3, 3), "27");
  EXPECT_EQ(power_string(2, 70), "2^70");
}

TEST(Report, GrSections) {
  auto k = ResidueField::make(2, 1, 0);
  const CDVFParams P(k, 2, 2, 1, LaurentPoly::constant(k, Fq{1}));
  Report rep("gr");
  add_params(rep, P);
  const GradedQuotient Q(P, 4);
  add_descriptor(rep, P, Q.descriptor());
  add_size(rep, Q.size(0), 0);
  EXPECT_EQ(rep.get("thresholds"), "c_0=0 c_1=4 c_2=6");
  EXPECT_EQ(rep.get("case"), "II");
  EXPECT_EQ(rep.get("shape"), "mod-(1+aC)Z");
  EXPECT_EQ(rep.get("order"), "2");
}

TEST(Report, PropertyLines) {
  props::PropertyResult ok{"forms", "a", 5, 0, ""};
  props::PropertyResult bad{"graded", "b", 5, 2, "first"};
  Report rep("selftest");
  add_properties(rep, {ok, bad});
  EXPECT_EQ(rep.get("property.forms.a"), "pass cases=5");
  EXPECT_EQ(rep.get("property.graded.b"), "FAIL cases=5 failures=2 first: first");
  EXPECT_EQ(rep.get("properties.failed"), "1");
}
