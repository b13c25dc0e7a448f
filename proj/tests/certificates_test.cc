#include "twistcert/certificates.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"
#include "twistcert/error.h"

namespace twistcert {
namespace {

SurfaceSpec S(const char* s) { return SurfaceSpec::parse(s); }
CurveClass C(const char* c) { return CurveClass::parse(c); }

IntMatrix matrix_power(const IntMatrix& m, long n) {
  IntMatrix base = n < 0 ? m.inverse() : m;
  IntMatrix out = IntMatrix::identity(m.dim());
  for (long i = 0; i < (n < 0 ? -n : n); ++i) out = testing::naive_product(out, base);
  return out;
}

TEST(Rel1Test, Examples) {
  const Rel1 one = build_rel1(1);
  EXPECT_EQ(one.lhs, parse_word("c1"));
  EXPECT_EQ(one.rhs, parse_word("b a2 a3 b a1 a2 c2^-1 c3^-1 b a2 a3 b a1 a2"));
  EXPECT_TRUE(verify_script(one.script).ok);

  const Rel1 zero = build_rel1(0);
  EXPECT_TRUE(zero.lhs.empty());
  EXPECT_TRUE(zero.rhs.empty());
  EXPECT_TRUE(verify_script(zero.script).ok);

  const HomologyAssignment ha = genus3_assignment();
  const Rel1 minus_two = build_rel1(-2);
  EXPECT_EQ(evaluate_rep(minus_two.rhs, ha), evaluate_rep(minus_two.lhs, ha));
}

TEST(Rel1Test, ScriptsVerifyAndMatchTheFactors) {
  for (long n = -10; n <= 10; ++n) {
    const Rel1 rel = build_rel1(n);
    EXPECT_EQ(rel.lhs, power(parse_word("c1"), n));
    EXPECT_EQ(rel.rhs, power(rel1_left_factor(), n) * power(rel1_right_factor(), n));
    EXPECT_EQ(rel.script.start, rel.lhs);
    EXPECT_EQ(rel.script.end, rel.rhs);
    EXPECT_TRUE(verify_script(rel.script).ok) << n;
  }
}

// The rewrite ignores the meaning of letters, so the identities must also
// hold in a representation where every generator acts nontrivially.
TEST(Rel1Test, RepresentationOracle) {
  const HomologyAssignment ha = genus3_extended_assignment();
  const IntMatrix c1 = evaluate_rep(parse_word("c1"), ha);
  for (long n = -10; n <= 10; ++n) {
    const Certificate cert = build_theorem1_certificate(S("o:3"), C("nonsep:oc"), n);
    EXPECT_EQ(evaluate_rep(build_rel1(n).rhs, ha), matrix_power(c1, n));
    EXPECT_EQ(evaluate_rep(commutator(cert.x, cert.y), ha), matrix_power(c1, n));
  }
}

TEST(ExtendedGroupCertTest, Examples) {
  const Certificate cert = build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 1);
  EXPECT_EQ(cert.y, parse_word("a1^-1 r"));
  EXPECT_EQ(cert.x, rel1_left_factor());
  EXPECT_TRUE(verify_certificate(cert).ok);

  const Certificate five = build_theorem1_certificate(S("n:7"), C("sep:o1,n5"), 5);
  EXPECT_TRUE(verify_script(five.script).ok);
  EXPECT_TRUE(verify_certificate(five).ok);
  EXPECT_EQ(five.x, power(rel1_left_factor(), 5));

  EXPECT_THROW(build_theorem1_certificate(S("o:2"), C("nonsep:oc"), 1), NotCovered);
  EXPECT_THROW(build_theorem1_certificate(S("o:2"), C("sep:o1,o1"), 1), NotCovered);
  EXPECT_THROW(build_theorem1_certificate(S("o:3"), C("nonsep:nc"), 1), Unrealizable);
}

TEST(TwistSubgroupCertTest, Examples) {
  const Certificate sep = build_theorem2_certificate(S("n:7"), C("sep:o1,n5"), 3);
  EXPECT_TRUE(sep.tcase.forced_rh);
  EXPECT_EQ(sep.y, parse_word("a1^-1 r h"));
  ASSERT_TRUE(sep.y_alt);
  EXPECT_EQ(*sep.y_alt, parse_word("a1^-1 r"));
  EXPECT_TRUE(verify_certificate(sep).ok);

  const Certificate oc = build_theorem2_certificate(S("n:6"), C("nonsep:oc"), 2);
  EXPECT_EQ(oc.y, parse_word("a1^-1 r"));
  EXPECT_FALSE(oc.y_alt);
  EXPECT_TRUE(verify_certificate(oc).ok);
  ASSERT_TRUE(oc.membership);
  EXPECT_TRUE(oc.membership->pass);

  EXPECT_THROW(build_theorem2_certificate(S("n:8"), C("nonsep:oc"), 1), OutOfScope);
  EXPECT_THROW(build_theorem2_certificate(S("n:7"), C("nonsep:nc"), 1), OutOfScope);
  EXPECT_THROW(build_theorem2_certificate(S("o:5"), C("nonsep:oc"), 1), NotCovered);
}

TEST(EvenPowerTest, Examples) {
  const Certificate one =
      build_even_power_certificate(S("o:3"), C("nonsep:oc"), 1, CertFlavor::kEvenPowerExtended);
  EXPECT_EQ(one.target, parse_word("c c"));
  EXPECT_EQ(one.x, parse_word("c"));
  EXPECT_EQ(one.y, parse_word("s"));
  EXPECT_TRUE(verify_certificate(one).ok);

  const Certificate twist =
      build_even_power_certificate(S("n:7"), C("nonsep:nc"), 3, CertFlavor::kEvenPowerTwist);
  EXPECT_TRUE(verify_certificate(twist).ok);
  EXPECT_EQ(twist.target, power(parse_word("c"), 6));

  const Certificate zero =
      build_even_power_certificate(S("n:7"), C("nonsep:nc"), 0, CertFlavor::kEvenPowerTwist);
  EXPECT_TRUE(zero.target.empty());
  EXPECT_TRUE(commutator(zero.x, zero.y).empty());
  EXPECT_TRUE(verify_certificate(zero).ok);

  EXPECT_THROW(
      build_even_power_certificate(S("o:3"), C("nonsep:oc"), 1, CertFlavor::kEvenPowerTwist),
      NotCovered);
}

TEST(BuildTest, PowerLimit) {
  EXPECT_THROW(build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 33), std::out_of_range);
  EXPECT_THROW(build_theorem1_certificate(S("o:3"), C("nonsep:oc"), -33), std::out_of_range);
  EXPECT_NO_THROW(build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 32));
  EXPECT_THROW(build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 5, {4}), std::out_of_range);
}

TEST(VerifyTest, DeletingTheReflectionFromYFails) {
  Certificate cert = build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 2);
  cert.y = parse_word("a1^-1");
  const CertificateReport report = verify_certificate(cert);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.script_ok);
  // The stored derivation still ends at [X, a1^-1 r]; the script must be rebuilt to match.
  cert.script.end = commutator(cert.x, cert.y);
  const VerificationReport vr = verify_script(cert.script);
  EXPECT_FALSE(vr.ok);
}

TEST(VerifyTest, ReflectionWithOddKFailsMembership) {
  Certificate cert = build_theorem2_certificate(S("n:6"), C("nonsep:oc"), 1);
  cert.surface = S("n:8");  // k = 1: det r = -1
  const CertificateReport report = verify_certificate(cert);
  EXPECT_FALSE(report.ok);
  EXPECT_FALSE(report.membership_ok);
  EXPECT_TRUE(report.script_ok);
}

TEST(VerifyTest, TamperingIsDetected) {
  const Certificate base = build_theorem2_certificate(S("n:7"), C("sep:o1,n5"), 2);
  ASSERT_TRUE(verify_certificate(base).ok);

  Certificate c = base;
  c.n = 3;
  EXPECT_FALSE(verify_certificate(c).ok);

  c = base;
  c.script.steps[c.script.steps.size() / 2].position += 1;
  EXPECT_FALSE(verify_certificate(c).script_ok);

  c = base;
  c.alt_script.reset();
  EXPECT_FALSE(verify_certificate(c).ok);

  c = base;
  c.y_alt = parse_word("a1^-1 r h");  // same det as Y: the disjunction no longer holds
  c.alt_script = c.script;
  EXPECT_FALSE(verify_certificate(c).membership_ok);

  c = base;
  c.curve = C("nonsep:nc");
  EXPECT_FALSE(verify_certificate(c).ok);
}

struct MatrixCase {
  CertFlavor flavor;
  const char* surface;
  const char* curve;
};

TEST(BuildProperty, EveryAdmissibleCaseVerifies) {
  const MatrixCase cases[] = {
      {CertFlavor::kExtendedGroup, "o:3", "nonsep:oc"},
      {CertFlavor::kExtendedGroup, "o:4", "sep:o1,o3"},
      {CertFlavor::kExtendedGroup, "n:7", "nonsep:nc"},
      {CertFlavor::kExtendedGroup, "n:8", "nonsep:oc"},
      {CertFlavor::kTwistSubgroup, "n:7", "sep:o1,n5"},
      {CertFlavor::kTwistSubgroup, "n:8", "nonsep:nc"},
      {CertFlavor::kTwistSubgroup, "n:6", "nonsep:oc"},
      {CertFlavor::kTwistSubgroup, "n:10", "nonsep:oc"},
      {CertFlavor::kEvenPowerExtended, "o:1", "nonsep:oc"},
      {CertFlavor::kEvenPowerTwist, "n:4", "nonsep:nc"},
  };
  for (const MatrixCase& mc : cases) {
    for (long n : {-4L, -1L, 0L, 1L, 4L}) {
      const Certificate cert = build_certificate(mc.flavor, S(mc.surface), C(mc.curve), n);
      const CertificateReport report = verify_certificate(cert);
      EXPECT_TRUE(report.ok) << mc.surface << ' ' << mc.curve << " n=" << n;
      EXPECT_EQ(cert.homology.pass, report.homology_ok);
    }
  }
}

// A conjugate of a commutator is a commutator: g [X, Y] g^-1 = [gXg^-1, gYg^-1].
TEST(BuildProperty, CommutatorsAreClosedUnderConjugation) {
  const Certificate cert = build_theorem1_certificate(S("o:3"), C("nonsep:oc"), 2);
  const HomologyAssignment ha = genus3_extended_assignment();
  std::mt19937 rng(1618);
  for (int trial = 0; trial < 200; ++trial) {
    const Word g = testing::random_word(rng, testing::all_names(), 6);
    const Word lhs = conjugate(commutator(cert.x, cert.y), g);
    const Word rhs = commutator(conjugate(cert.x, g), conjugate(cert.y, g));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(evaluate_rep(rhs, ha), evaluate_rep(conjugate(cert.target, g), ha));
  }
}

}  // namespace
}  // namespace twistcert
