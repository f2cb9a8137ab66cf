#include "horikawa/certificate.hpp"

#include <gtest/gtest.h>

#include "horikawa/serialize.hpp"

using namespace horikawa;

TEST(SerializeSurface, RoundTripsBitExactly) {
  SurfacePtr f3 = Surface::hirzebruch(3);
  PointSpec p = point_on({divisor(f3, {0, 2}), divisor(f3, {6, 20})});
  p.multiplicities = {{2, 1}, {3, 3}};
  SurfacePtr once = Surface::blow_up_of(f3, p);
  PointSpec p2 = infinitely_near(p, {divisor(once, {1, 0, -1})});
  SurfacePtr twice = Surface::blow_up_of(once, p2);

  for (const SurfacePtr& s :
       {Surface::projective_plane(), Surface::quadric(), Surface::hirzebruch(0),
        f3, once, twice}) {
    Json j = surface_to_json(*s);
    SurfacePtr back = surface_from_json(j);
    EXPECT_TRUE(*back == *s);
    EXPECT_EQ(surface_to_json(*back).dump(), j.dump());
    EXPECT_EQ(Json::parse(j.dump()).dump(), j.dump());
  }
}

TEST(SerializeSurface, QuadricAndF0StayDistinct) {
  Json q = surface_to_json(*Surface::quadric());
  Json f0 = surface_to_json(*Surface::hirzebruch(0));
  EXPECT_NE(q.dump(), f0.dump());
  EXPECT_FALSE(*surface_from_json(q) == *surface_from_json(f0));
}

TEST(SerializeDivisor, RoundTrip) {
  BlowUpMap q = blow_up(Surface::hirzebruch(2));
  DivisorClass d = q.pullback(divisor(q.parent, {2, 4})) - q.exceptional_class();
  Json j = divisor_to_json(d);
  DivisorClass back = divisor_from_json(j);
  EXPECT_EQ(back, d);
  EXPECT_EQ(divisor_to_json(back).dump(), j.dump());
}

TEST(SerializePointSpec, IntersectionAndChain) {
  SurfacePtr f1 = Surface::hirzebruch(1);
  PointSpec p =
      intersection_point(1, 2, divisor(f1, {1, 0}), divisor(f1, {1, 2}));
  Json j = point_spec_to_json(p);
  PointSpec back = point_spec_from_json(j, f1);
  EXPECT_TRUE(back == p);
  EXPECT_EQ(point_spec_to_json(back).dump(), j.dump());
}

TEST(Certificate, BoundaryRecordFields) {
  Certificate c =
      make_certificate(construct(LineTag::L6, 4, ComponentTag::Only));
  EXPECT_EQ(c.doc.at("schema_version").get<std::string>(), "1");
  EXPECT_EQ(c.line(), "2chi-6");
  EXPECT_EQ(c.chi(), 4);
  EXPECT_EQ(c.k2(), 2);
  EXPECT_EQ(c.component(), "only");
  EXPECT_FALSE(c.doc.at("canonical").at("is_canonical_model").get<bool>());
  EXPECT_FALSE(c.doc.at("canonical").at("contraction_note").is_null());
  EXPECT_EQ(c.doc.at("canonical").at("genus2").at("contribution_sum").get<Int>(),
            0);
  EXPECT_EQ(c.doc.at("invariants").at("pg").get<Int>(), 3);
  EXPECT_TRUE(c.doc.at("z22_action").get<bool>());
  EXPECT_TRUE(c.doc.at("singular").is_null());
}

TEST(Certificate, SingularStageExposed) {
  Certificate c = make_certificate(construct(LineTag::L5, 6, ComponentTag::II));
  const Json& s = c.doc.at("singular");
  ASSERT_FALSE(s.is_null());
  EXPECT_EQ(s.at("invariants").at("chi").get<Int>(), 7);
  EXPECT_EQ(s.at("invariants").at("K2").get<Int>(), 8);
  EXPECT_EQ(s.at("resolution_drop").at("dchi").get<Int>(), -1);
  EXPECT_EQ(s.at("resolution_drop").at("dK2").get<Int>(), -1);
  // The resolved record computes p_g through chi (blow-up base).
  EXPECT_TRUE(c.doc.at("invariants").at("pg").is_null());
  EXPECT_EQ(c.doc.at("canonical")
                .at("image_h0_check")
                .at("expected_pg")
                .get<Int>(),
            5);
}

TEST(Certificate, ParseEmitIdentityAndUnknownFields) {
  Certificate c = make_certificate(construct(LineTag::L5, 7, ComponentTag::I));
  std::string emitted = c.dump();
  Certificate back = certificate_from_string(emitted);
  EXPECT_EQ(back.dump(), emitted);

  Json extended = back.doc;
  extended["future_field"] = {{"nested", true}};
  Certificate kept = certificate_from_json(extended);
  EXPECT_NE(kept.dump().find("future_field"), std::string::npos);
  EXPECT_EQ(certificate_from_string(kept.dump()).dump(), kept.dump());
}

TEST(Certificate, MissingSchemaVersionRejected) {
  EXPECT_THROW(certificate_from_json(Json{{"chi", 4}}), std::invalid_argument);
}

TEST(Scan, CountsMatchComponentMultiplicity) {
  ScanResult l6 = scan_line(LineTag::L6, 4, 7);
  EXPECT_TRUE(l6.failures.empty());
  ASSERT_EQ(l6.certificates.size(), 5u);  // (4),(5),(6),(7)x2
  ScanResult l5 = scan_line(LineTag::L5, 3, 7);
  EXPECT_TRUE(l5.failures.empty());
  ASSERT_EQ(l5.certificates.size(), 7u);  // (3),(4),(5),(6)x2,(7)x2

  // ordered by (chi, component)
  std::vector<std::pair<Int, std::string>> order;
  for (const Certificate& c : l5.certificates)
    order.emplace_back(c.chi(), c.component());
  std::vector<std::pair<Int, std::string>> expected = {
      {3, "only"}, {4, "only"}, {5, "only"}, {6, "I"},
      {6, "II"},   {7, "I"},    {7, "II"}};
  EXPECT_EQ(order, expected);
}

TEST(Scan, RangeErrors) {
  EXPECT_THROW(scan_line(LineTag::L6, 7, 4), std::invalid_argument);
  EXPECT_THROW(scan_line(LineTag::L6, 3, 10), std::invalid_argument);
}

TEST(Scan, DeterministicAndRoundTrippable) {
  ScanResult a = scan_line(LineTag::L6, 4, 30);
  ScanResult b = scan_line(LineTag::L6, 4, 30);
  ASSERT_EQ(a.certificates.size(), b.certificates.size());
  for (size_t i = 0; i < a.certificates.size(); ++i) {
    const std::string ai = a.certificates[i].dump();
    ASSERT_EQ(ai, b.certificates[i].dump());
    ASSERT_EQ(certificate_from_string(ai).dump(), ai);
  }
}

TEST(Csv, HeaderAndRowArity) {
  ScanResult l5 = scan_line(LineTag::L5, 3, 10);
  size_t columns = 1;
  for (char ch : csv_header())
    if (ch == ',') ++columns;
  for (const Certificate& c : l5.certificates) {
    std::string row = csv_row(c);
    size_t fields = 1;
    for (char ch : row)
      if (ch == ',') ++fields;
    ASSERT_EQ(fields, columns) << row;
  }
}

TEST(Csv, OracleColumnStates) {
  Certificate applicable =
      make_certificate(construct(LineTag::L6, 5, ComponentTag::Only), true);
  EXPECT_NE(csv_row(applicable).find("pass"), std::string::npos);
  Certificate off =
      make_certificate(construct(LineTag::L6, 5, ComponentTag::Only), false);
  EXPECT_NE(csv_row(off).find("off"), std::string::npos);
  Certificate na =
      make_certificate(construct(LineTag::L6, 4, ComponentTag::Only), true);
  EXPECT_NE(csv_row(na).find("n/a"), std::string::npos);
}

TEST(Text, TableHasOneRowPerCertificate) {
  ScanResult l6 = scan_line(LineTag::L6, 4, 9);
  std::string table = text_table(l6.certificates);
  size_t lines = 0;
  for (char ch : table)
    if (ch == '\n') ++lines;
  EXPECT_EQ(lines, l6.certificates.size() + 1);  // header + rows
}

TEST(VerifyReport, JsonShape) {
  Json j = report_to_json(verify_theorem(7));
  EXPECT_TRUE(j.at("ok").get<bool>());
  EXPECT_EQ(j.at("failures").get<int>(), 0);
  ASSERT_EQ(j.at("pairs").size(), 9u);
  EXPECT_EQ(j.at("pairs").at(0).at("chi").get<Int>(), 4);
  EXPECT_EQ(j.at("pairs").at(0).at("line").get<std::string>(), "2chi-6");
}
