#include <gtest/gtest.h>

#include "duha/errors.hpp"
#include "duha/presets.hpp"
#include "duha/verify.hpp"
#include "printers.hpp"

using namespace duha;

namespace {

std::vector<long> totals(const DimensionTable& t, int i) {
  std::vector<long> out;
  const LaurentSeries s = t.series(i);
  for (int e = s.lo(); e <= s.hi(); ++e) out.push_back(s[e].convert_to<long>());
  return out;
}

const Certificate& find(const std::vector<Certificate>& certs, const std::string& prefix) {
  for (const auto& c : certs) {
    if (c.claim.rfind(prefix, 0) == 0) return c;
  }
  throw std::runtime_error("no certificate " + prefix);
}

}  // namespace

TEST(Verify, F1Homology) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  const DimensionTable hh = compute_hh_dims(A, {0, 8});
  EXPECT_EQ(totals(hh, 0), (std::vector<long>{1, 2, 3, 2, 3, 2, 3, 2, 3}));
  EXPECT_EQ(totals(hh, 2), std::vector<long>(9, 0));
  EXPECT_EQ(totals(hh, 3), std::vector<long>(9, 0));
  EXPECT_TRUE(compare_homology_with_catalog(A.spec(), hh).ok());
}

TEST(Verify, F1CohomologyZeroIsTheGroundField) {
  const DownUpAlgebra A(resolve_preset("f1-rational"));
  const DimensionTable hh = compute_hh_cohomology_dims(A, {-6, 8});
  for (const auto& row : hh.rows) {
    if (row.i == 0) EXPECT_EQ(row.dim, (row.deg == 0 && row.sdeg == 0) ? 1 : 0);
  }
  EXPECT_TRUE(compare_cohomology_with_catalog(A.spec(), hh).ok());
}

TEST(Verify, F2NonRootTopClasses) {
  const DownUpAlgebra A(resolve_preset("f2-generic"));
  const DimensionTable hh = compute_hh_dims(A, {0, 12});
  for (const auto& row : hh.rows) {
    if (row.i != 3) continue;
    // One central class w1^j w2^j per degree 4 + 4j.
    const bool expected = row.sdeg == 0 && row.deg >= 4 && row.deg % 4 == 0;
    EXPECT_EQ(row.dim, expected ? 1 : 0) << row.deg << "," << row.sdeg;
  }
}

TEST(Verify, ParallelRunsAreDeterministic) {
  const DownUpAlgebra A(resolve_preset("f2-root-6"));
  const auto serial = to_json(compute_hh_dims(A, {0, 10}, 1));
  const auto parallel = to_json(compute_hh_dims(A, {0, 10}, 4));
  EXPECT_EQ(serial.dump(), parallel.dump());
}

TEST(Verify, RootCasesKeepBothPrintedReadings) {
  for (const std::string name : {"f2-root-1", "f2-root-2"}) {
    const DownUpAlgebra A(resolve_preset(name));
    const VerificationReport r = compare_homology_with_catalog(A.spec(), compute_hh_dims(A, {0, 10}));
    EXPECT_TRUE(r.comparisons.empty());
    EXPECT_EQ(r.advisory_comparisons.size(), 2u * 4u * 11u);
    ASSERT_EQ(r.notes.size(), 1u);
    EXPECT_NE(r.notes[0].find("erratum"), std::string::npos);
    EXPECT_TRUE(r.ok());
  }
}

TEST(Verify, Certificates) {
  const DownUpAlgebra f1(resolve_preset("f1-rational"));
  EXPECT_TRUE(certify_hh0_basis(f1, {0, 10}).certified);
  EXPECT_TRUE(certify_hh3_basis(f1, {0, 10}).certified);
  const auto co = certify_cohomology_bases(f1, {-6, 8});
  for (const auto& c : co) EXPECT_TRUE(c.certified) << c.claim;
  EXPECT_TRUE(find(co, "D^2U^2|w^2").certified);
  EXPECT_FALSE(find(co, "D^2U^2|w^2").witness["preimage"].empty());

  for (const std::string name : {"f2-root-1", "f2-root-2", "f2-root-3", "f2-root-4"}) {
    const DownUpAlgebra A(resolve_preset(name));
    EXPECT_TRUE(certify_hh0_basis(A, {0, 10}).certified) << name;
    EXPECT_TRUE(certify_hh3_basis(A, {0, 10}).certified) << name;
  }
  EXPECT_THROW(certify_cohomology_bases(DownUpAlgebra(resolve_preset("f2-generic")), {-4, 4}),
               UnsupportedCase);
}

TEST(Verify, NonRootHH3BasisMissesTheCentralClassInDegreeEight) {
  const DownUpAlgebra A(resolve_preset("f2-generic"));
  EXPECT_TRUE(certify_hh3_basis(A, {0, 7}).certified);
  const Certificate c = certify_hh3_basis(A, {8, 8});
  EXPECT_FALSE(c.certified);
  ASSERT_EQ(c.witness["bidegrees"].size(), 1u);
  EXPECT_EQ(c.witness["bidegrees"][0]["computed"], 1);
  EXPECT_EQ(c.witness["bidegrees"][0]["claimed"], 0);
}

TEST(Verify, CyclicAndEulerCharacteristic) {
  for (const auto& name : preset_names()) {
    const DownUpAlgebra A(resolve_preset(name));
    const DimensionTable hh = compute_hh_dims(A, {0, 10});
    const CyclicResult cyc = verify_cyclic(A.spec(), hh);
    EXPECT_TRUE(cyc.report.ok()) << name;
    EXPECT_EQ(cyc.hc.series(2), hh.series(3)) << name;
    const LaurentSeries chi = cyc.hc.series(0) - cyc.hc.series(1) + cyc.hc.series(2);
    EXPECT_EQ(chi.restrict(1, 10), s1().expand(1, 10)) << name;
  }
}

TEST(Verify, CalabiYauDuality) {
  const DownUpAlgebra n1(resolve_preset("f2-root-1"));
  const DimensionTable hom = compute_hh_dims(n1, {0, 12});
  const DimensionTable coh = compute_hh_cohomology_dims(n1, {-6, 8});
  EXPECT_EQ(coh.series(0)[2], hom.series(3)[6]);
  EXPECT_TRUE(verify_cy_duality(n1.spec(), hom, coh, {-6, 8}).ok());

  const DownUpAlgebra f2(resolve_preset("f2-generic"));
  EXPECT_EQ(compute_hh_cohomology_dims(f2, {0, 0}).series(0)[0], 1);
  EXPECT_EQ(compute_hh_dims(f2, {0, 4}).series(3)[4], 1);

  const DownUpAlgebra f1(resolve_preset("f1-rational"));
  EXPECT_THROW(verify_cy_duality(f1.spec(), hom, coh, {-6, 8}), UnsupportedCase);
}

TEST(Verify, AlgebraDimensions) {
  for (const auto& name : preset_names()) {
    const VerificationReport r = verify_algebra_dims(resolve_preset(name), 16);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.comparisons.size(), 17u);
  }
}

TEST(Verify, ReportJsonIsStable) {
  const DownUpAlgebra A(resolve_preset("f2-root-3"));
  const auto a = to_json(verify_against_catalog(A, {0, 6}, {-4, 4})).dump();
  const auto b = to_json(verify_against_catalog(A, {0, 6}, {-4, 4}, 3)).dump();
  EXPECT_EQ(a, b);
}
