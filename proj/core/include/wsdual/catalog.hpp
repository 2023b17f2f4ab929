#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wsdual/magic.hpp"
#include "wsdual/zeta.hpp"

namespace wsdual {

inline constexpr int kCatalogSchemaVersion = 1;

enum class Table { T1, T2, T3, T4, NonMirror };

std::string to_string(Table t);
Table parse_table(std::string_view text);

/// Printed invariants of one row of the Fuchsian-partner table, attached to
/// the left-hand entry. Starred values belong to the partner.
struct ExpectedInvariants {
  int row = 0;
  Int mu = 0;
  Int mu0 = 0;
  Int rho = 0;
  Int d = 0;  ///< stored only; needs mu0 = 0 to be recomputed
  Int b0 = 0;
  Int d_star = 0;
  Int mu0_star = 0;
  Int mu_star = 0;
  Int nu_star = 0;
};

struct CatalogEntry {
  std::string id;
  Table table = Table::T1;
  std::optional<int> index;          ///< Yonemura number
  std::optional<std::string> name;   ///< singularity name as printed
  Int a0 = 0;                        ///< printed virtual weight
  WeightSystem weights{{1, 1}, 3};
  std::string monomials;
  std::string partner;               ///< id of the partner row
  std::string partner_label;         ///< partner as printed
  std::optional<ExpectedInvariants> expected;
  bool zero_weight = false;
  bool non_mirror_example = false;
  /// The square violates the zero-in-every-row-and-column condition although
  /// the pair is listed as strongly dual.
  bool strongness_discrepancy = false;

  /// Name, else "No. <index>", else the id.
  std::string label() const;
};

class Catalog {
 public:
  /// Parses and schema-checks a catalog document. Throws InputError.
  static Catalog parse(std::string_view json_text);
  static Catalog load_file(const std::filesystem::path& path);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t count(Table t) const;

  const CatalogEntry& by_id(std::string_view id) const;
  std::vector<const CatalogEntry*> by_index(int index) const;
  /// Names compare with braces and spaces removed ("Q_17" finds "Q_{17}").
  std::vector<const CatalogEntry*> by_name(std::string_view name) const;
  const CatalogEntry& partner(const CatalogEntry& e) const;

  /// Resolves an id, a Yonemura index or a name. Throws NotFoundError.
  std::vector<const CatalogEntry*> lookup(std::string_view key) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// The catalog compiled into the library.
Catalog load_catalog();
Catalog load_catalog(const std::filesystem::path& path);
std::string_view embedded_catalog_json() noexcept;

/// The entry's square bound to (own weights, partner weights). Partner weights
/// are permuted, identity first, until the column relation holds.
/// Throws ValidationError when no permutation fits.
MagicSquare entry_square(const Catalog& catalog, const CatalogEntry& e);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerificationReport {
  std::string entry_id;
  bool valid = false;
  std::string validation_error;
  std::optional<MagicSquare> square;
  std::optional<CouplingReport> coupling;
  std::optional<Coupling> required_classification;
  std::optional<bool> duality_identity;
  std::optional<bool> saito_corollary;
  std::optional<CyclotomicProduct> zeta;
  std::optional<LatticeInvariants> invariants;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const;
  const Check* find(std::string_view name) const;
};

/// Recomputes everything the catalog claims about one entry. Never throws for
/// data problems; they show up as failed checks.
VerificationReport verify_entry(const Catalog& catalog, const CatalogEntry& e);

/// Classification the tables claim for an entry.
Coupling required_classification(const Catalog& catalog, const CatalogEntry& e);

struct FuchsianRow {
  int row = 0;
  std::string left_id;
  std::string right_id;
  std::string left_name;
  std::string right_name;
  Int mu = 0, mu0 = 0, rho = 0;
  Int b0 = 0;
  Int mu_star = 0, mu0_star = 0;
  Int nu_star = 0;     ///< b0 (rho + 3) - mu* - 1
  Int abs_d_star = 0;  ///< zeta of the partner at t = 1
  std::optional<Int> d_star_formula;  ///< (-1)^(rho* - 1) zeta(1) with the partner's own rho
  ExpectedInvariants expected;
  std::vector<Check> checks;
  std::string error;

  bool passed() const;
};

/// One row per entry carrying Fuchsian-table expectations, ordered by row.
std::vector<FuchsianRow> fuchsian_report(const Catalog& catalog);

}  // namespace wsdual
