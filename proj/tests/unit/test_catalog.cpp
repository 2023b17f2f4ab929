#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "oracle.hpp"
#include "wsdual/catalog.hpp"

using namespace wsdual;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_catalog();
  return c;
}

std::string catalog_text() {
  std::ifstream in(WSDUAL_CATALOG_FILE);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Catalog, Counts) {
  EXPECT_EQ(catalog().count(Table::T1), 3u);
  EXPECT_EQ(catalog().count(Table::T2), 44u);
  EXPECT_EQ(catalog().count(Table::T3), 47u);
  EXPECT_EQ(catalog().count(Table::T4), 16u);
  EXPECT_EQ(catalog().count(Table::NonMirror), 2u);
  EXPECT_EQ(catalog().size(), 112u);
}

TEST(Catalog, EmbeddedMatchesFile) {
  EXPECT_EQ(std::string(embedded_catalog_json()), catalog_text());
  EXPECT_EQ(Catalog::load_file(WSDUAL_CATALOG_FILE).size(), catalog().size());
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(catalog().by_id("T2-01").label(), "E_{12}");
  EXPECT_EQ(catalog().lookup("E12").front()->id, "T2-01");
  EXPECT_EQ(catalog().lookup("Q_{17}").front()->id, "T3-24");
  EXPECT_EQ(catalog().lookup("T3-21").front()->id, "T3-21");
  EXPECT_FALSE(catalog().lookup("68").empty());
  EXPECT_EQ(catalog().partner(catalog().by_id("T3-21")).id, "T3-24");
  EXPECT_THROW(catalog().lookup("no such row"), NotFoundError);
  EXPECT_THROW(catalog().by_id("T9-99"), NotFoundError);
}

TEST(Catalog, PartnersAreSymmetric) {
  for (const auto& e : catalog().entries()) {
    EXPECT_EQ(catalog().partner(catalog().partner(e)).id, e.id) << e.id;
  }
}

TEST(Catalog, SchemaErrors) {
  using nlohmann::json;
  const json good = json::parse(catalog_text());
  auto broken = [&](auto&& edit) {
    json doc = good;
    edit(doc);
    return doc.dump();
  };
  EXPECT_THROW(Catalog::parse("not json"), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["schema_version"] = 2; })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][0].erase("monomials"); })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][0]["a0"] = 5; })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][0]["partner"] = "T9-01"; })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][1]["id"] = "T1-01"; })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][0]["flags"] = {"shiny"}; })), InputError);
  EXPECT_THROW(Catalog::parse(broken([](json& d) { d["entries"][0]["table"] = "T7"; })), InputError);
  EXPECT_THROW(Catalog::load_file("/nonexistent/catalog.json"), Error);
}

TEST(Catalog, EveryEntryValidates) {
  for (const auto& e : catalog().entries()) {
    EXPECT_NO_THROW(entry_square(catalog(), e)) << e.id;
  }
}

TEST(Catalog, DeterminantsMatchOracle) {
  for (const auto& e : catalog().entries()) {
    const auto ms = entry_square(catalog(), e);
    EXPECT_EQ(classify(ms).determinant, oracle::leibniz_det(ms.entries().rows())) << e.id;
  }
}

TEST(Catalog, ZetaMatchesMilnorOrlik) {
  std::size_t checked = 0;
  for (const auto& e : catalog().entries()) {
    if (e.zero_weight) continue;
    const auto ms = entry_square(catalog(), e);
    if (!oracle::invertible_shape(ms.entries().rows())) continue;
    std::vector<Int> a(e.weights.weights().begin(), e.weights.weights().end());
    const auto expected = oracle::milnor_orlik_factors(a, e.weights.degree());
    ASSERT_TRUE(expected.has_value()) << e.id;
    std::map<Int, Int> want;
    for (const auto& [l, x] : *expected)
      if (x != 0) want[l] = x;
    EXPECT_EQ(characteristic_polynomial(ms).exponents(), want) << e.id;
    EXPECT_EQ(lattice_invariants(ms).mu, oracle::milnor_number(a, e.weights.degree())) << e.id;
    ++checked;
  }
  EXPECT_EQ(checked, 79u);
}

TEST(Catalog, VerifyAllButU12) {
  for (const auto& e : catalog().entries()) {
    const auto r = verify_entry(catalog(), e);
    if (e.id == "T2-44") {
      ASSERT_NE(r.find("classification"), nullptr);
      EXPECT_FALSE(r.find("classification")->ok);
      continue;
    }
    EXPECT_TRUE(r.passed()) << e.id;
  }
}

TEST(Catalog, RequiredClassification) {
  EXPECT_EQ(required_classification(catalog(), catalog().by_id("T2-01")), Coupling::primitive);
  EXPECT_EQ(required_classification(catalog(), catalog().by_id("T3-21")), Coupling::almost_primitive);
  EXPECT_EQ(required_classification(catalog(), catalog().by_id("T4-01")), Coupling::primitive);
}

TEST(Catalog, ZeroWeightEntrySkipsZeta) {
  const auto& e = catalog().by_id("T4-16");
  EXPECT_TRUE(e.zero_weight);
  const auto r = verify_entry(catalog(), e);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.zeta.has_value());
}

TEST(FuchsianReport, AllRowsReproduce) {
  const auto rows = fuchsian_report(catalog());
  ASSERT_EQ(rows.size(), 8u);
  const std::vector<Int> abs_d{6, 12, 25, 10, 10, 6, 14, 12};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].row, static_cast<int>(i + 1));
    EXPECT_TRUE(rows[i].passed()) << rows[i].left_id << " " << rows[i].error;
    EXPECT_EQ(rows[i].abs_d_star, abs_d[i]);
    EXPECT_EQ(rows[i].nu_star + rows[i].mu_star + 1, rows[i].b0 * (rows[i].rho + 3));
  }
  EXPECT_EQ(rows[0].mu, 21);
  EXPECT_EQ(rows[0].mu_star, 17);
}
