#include "wsdual/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wsdual/monomial.hpp"
#include "wsdual/polytope.hpp"

namespace wsdual {

namespace {

using json = nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw InputError("catalog schema violation at " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

Int int_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) schema_error(where, std::string("field '") + key + "' must be an integer");
  return v.get<Int>();
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char c : name)
    if (c != '{' && c != '}' && c != ' ' && c != '_') out += c;
  return out;
}

ExpectedInvariants parse_expected(const json& e, const std::string& where) {
  if (!e.is_object()) schema_error(where, "'expected' must be an object");
  ExpectedInvariants x;
  x.row = static_cast<int>(int_field(e, "row", where));
  x.mu = int_field(e, "mu", where);
  x.mu0 = int_field(e, "mu0", where);
  x.rho = int_field(e, "rho", where);
  x.d = int_field(e, "d", where);
  x.b0 = int_field(e, "b0", where);
  x.d_star = int_field(e, "d_star", where);
  x.mu0_star = int_field(e, "mu0_star", where);
  x.mu_star = int_field(e, "mu_star", where);
  x.nu_star = int_field(e, "nu_star", where);
  return x;
}

CatalogEntry parse_entry(const json& e, std::size_t position) {
  std::string where = "entry #" + std::to_string(position + 1);
  if (!e.is_object()) schema_error(where, "entry must be an object");
  CatalogEntry out;
  out.id = string_field(e, "id", where);
  where = "entry '" + out.id + "'";
  try {
    out.table = parse_table(string_field(e, "table", where));
  } catch (const InputError& err) {
    schema_error(where, err.what());
  }
  if (const json& idx = field(e, "index", where); !idx.is_null()) {
    if (!idx.is_number_integer()) schema_error(where, "'index' must be an integer or null");
    out.index = idx.get<int>();
  }
  if (const json& name = field(e, "name", where); !name.is_null()) {
    if (!name.is_string()) schema_error(where, "'name' must be a string or null");
    out.name = name.get<std::string>();
  }
  out.a0 = int_field(e, "a0", where);

  const json& weights = field(e, "weights", where);
  if (!weights.is_array()) schema_error(where, "'weights' must be an array");
  std::vector<Int> w;
  for (const auto& a : weights) {
    if (!a.is_number_integer()) schema_error(where, "weights must be integers");
    w.push_back(a.get<Int>());
  }

  const json& flags = field(e, "flags", where);
  if (!flags.is_array()) schema_error(where, "'flags' must be an array");
  for (const auto& f : flags) {
    if (!f.is_string()) schema_error(where, "flags must be strings");
    const auto flag = f.get<std::string>();
    if (flag == "zero_weight") {
      out.zero_weight = true;
    } else if (flag == "non_mirror_example") {
      out.non_mirror_example = true;
    } else if (flag == "strongness_discrepancy") {
      out.strongness_discrepancy = true;
    } else {
      schema_error(where, "unknown flag '" + flag + "'");
    }
  }

  try {
    out.weights = WeightSystem(std::move(w), int_field(e, "degree", where), out.zero_weight);
  } catch (const InputError& err) {
    schema_error(where, err.what());
  }
  if (out.weights.virtual_weight() != out.a0) {
    schema_error(where, "a0 = " + std::to_string(out.a0) + " but h - sum(a_i) = " +
                            std::to_string(out.weights.virtual_weight()));
  }
  if (out.zero_weight != out.weights.has_zero_weight()) {
    schema_error(where, "zero_weight flag does not match the weights");
  }
  out.monomials = string_field(e, "monomials", where);
  out.partner = string_field(e, "partner", where);
  out.partner_label = string_field(e, "partner_label", where);
  if (auto it = e.find("expected"); it != e.end() && !it->is_null()) out.expected = parse_expected(*it, where);
  return out;
}

Check make_check(std::string name, bool ok, std::string detail = {}) {
  return Check{std::move(name), ok, std::move(detail)};
}

std::string complement_string(const std::vector<std::size_t>& j, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(j.begin(), j.end(), i) != j.end()) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(Table t) {
  switch (t) {
    case Table::T1:
      return "T1";
    case Table::T2:
      return "T2";
    case Table::T3:
      return "T3";
    case Table::T4:
      return "T4";
    case Table::NonMirror:
      return "NonMirror";
  }
  return "?";
}

Table parse_table(std::string_view text) {
  if (text == "T1") return Table::T1;
  if (text == "T2") return Table::T2;
  if (text == "T3") return Table::T3;
  if (text == "T4") return Table::T4;
  if (text == "NonMirror") return Table::NonMirror;
  throw InputError("unknown table '" + std::string(text) + "'");
}

std::string CatalogEntry::label() const {
  if (name) return *name;
  if (index) return "No. " + std::to_string(*index);
  return id;
}

Catalog Catalog::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& err) {
    throw InputError(std::string("catalog is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) schema_error("top level", "document must be an object");
  const Int version = int_field(doc, "schema_version", "top level");
  if (version != kCatalogSchemaVersion) {
    schema_error("top level", "schema_version " + std::to_string(version) + " is not supported (expected " +
                                  std::to_string(kCatalogSchemaVersion) + ")");
  }
  const json& entries = field(doc, "entries", "top level");
  if (!entries.is_array()) schema_error("top level", "'entries' must be an array");

  Catalog c;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    c.entries_.push_back(parse_entry(entries[i], i));
    if (!ids.insert(c.entries_.back().id).second) schema_error("entry '" + c.entries_.back().id + "'", "duplicate id");
  }
  for (const auto& e : c.entries_) {
    if (!ids.count(e.partner)) schema_error("entry '" + e.id + "'", "dangling partner reference '" + e.partner + "'");
  }
  return c;
}

Catalog Catalog::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open catalog file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::size_t Catalog::count(Table t) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [t](const CatalogEntry& e) { return e.table == t; }));
}

const CatalogEntry& Catalog::by_id(std::string_view id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw NotFoundError("no catalog entry with id '" + std::string(id) + "'");
}

std::vector<const CatalogEntry*> Catalog::by_index(int index) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.index == index) out.push_back(&e);
  return out;
}

std::vector<const CatalogEntry*> Catalog::by_name(std::string_view name) const {
  const std::string key = normalize_name(name);
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.name && normalize_name(*e.name) == key) out.push_back(&e);
  return out;
}

const CatalogEntry& Catalog::partner(const CatalogEntry& e) const { return by_id(e.partner); }

std::vector<const CatalogEntry*> Catalog::lookup(std::string_view key) const {
  for (const auto& e : entries_)
    if (e.id == key) return {&e};
  int index = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
  if (ec == std::errc{} && ptr == key.data() + key.size()) {
    auto hits = by_index(index);
    if (hits.empty()) throw NotFoundError("no catalog entry with index " + std::string(key));
    return hits;
  }
  auto hits = by_name(key);
  if (hits.empty()) throw NotFoundError("no catalog entry matching '" + std::string(key) + "'");
  return hits;
}

Catalog load_catalog() { return Catalog::parse(embedded_catalog_json()); }

Catalog load_catalog(const std::filesystem::path& path) { return Catalog::load_file(path); }

MagicSquare entry_square(const Catalog& catalog, const CatalogEntry& e) {
  IntMatrix c = parse_monomials(e.monomials);
  const WeightSystem& pw = catalog.partner(e).weights;
  const std::size_t n = pw.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::optional<ValidationError> first_error;
  do {
    std::vector<Int> bound;
    for (std::size_t i : perm) bound.push_back(pw.weight(i));
    try {
      return validate(c, e.weights, WeightSystem(std::move(bound), pw.degree(), pw.allows_zero_weight()));
    } catch (const ValidationError& err) {
      if (!first_error) first_error = err;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw ValidationError(std::string(first_error->what()) + " (no ordering of the partner weights fits)");
}

Coupling required_classification(const Catalog& catalog, const CatalogEntry& e) {
  const CatalogEntry& p = catalog.partner(e);
  switch (e.table) {
    case Table::T2:
      return (e.a0 == 1 && p.a0 == 1) ? Coupling::primitive : Coupling::almost_primitive;
    case Table::T3:
      return Coupling::almost_primitive;
    case Table::T1:
    case Table::T4:
    case Table::NonMirror:
      return Coupling::primitive;
  }
  return Coupling::plain;
}

bool VerificationReport::passed() const {
  return valid && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport verify_entry(const Catalog& catalog, const CatalogEntry& e) {
  VerificationReport r;
  r.entry_id = e.id;
  const CatalogEntry& partner = catalog.partner(e);

  try {
    r.square = entry_square(catalog, e);
    r.valid = true;
  } catch (const Error& err) {
    r.validation_error = err.what();
    r.checks.push_back(make_check("valid", false, err.what()));
    return r;
  }
  r.checks.push_back(make_check("valid", true));
  const MagicSquare& ms = *r.square;
  const std::size_t n = ms.size();

  r.coupling = classify(ms);
  const CouplingReport& cr = *r.coupling;
  r.required_classification = required_classification(catalog, e);
  {
    const bool ok = *r.required_classification == Coupling::primitive ? cr.primitive : cr.almost_primitive;
    const Int h = ms.row_weights().degree();
    const Int k = ms.column_weights().degree();
    r.checks.push_back(make_check(
        "classification", ok,
        "required " + to_string(*r.required_classification) + ", |det C| = " + std::to_string(std::abs(cr.determinant)) +
            ", h = " + std::to_string(h) + ", k = " + std::to_string(k) + ", h*b0 = " +
            std::to_string(h * ms.column_weights().virtual_weight()) + ", k*a0 = " +
            std::to_string(k * ms.row_weights().virtual_weight())));
  }

  if (e.table != Table::T1) {
    const bool expect_strong = !e.strongness_discrepancy;
    r.checks.push_back(make_check("strong", cr.strong == expect_strong,
                                  std::string(cr.strong ? "strong" : "not strong") +
                                      (expect_strong ? "" : " (listed as strongly dual; known discrepancy)")));
  }

  {
    MagicSquare t = transpose(ms);
    const bool ok = equivalent(t.row_weights(), partner.weights) && equivalent(t.column_weights(), e.weights);
    r.checks.push_back(make_check("transpose_matches_partner", ok, "partner " + partner.id));
  }

  const Int det_b = determinant(shifted_matrix(ms.entries()));
  if (det_b == 0) {
    r.notes.push_back("B = (c_ij - 1) is singular; weight recovery and the duality identity do not apply");
  } else {
    try {
      auto inv = inverse_data(ms);
      r.checks.push_back(make_check("weight_recovery", true,
                                    inv.recovered_wa.to_string() + " / " + inv.recovered_wb.to_string()));
      r.duality_identity = verify_duality_identity(ms);
      r.checks.push_back(make_check("duality_identity", *r.duality_identity));
    } catch (const Error& err) {
      r.checks.push_back(make_check("weight_recovery", false, err.what()));
    }
  }

  if (ms.row_weights().has_zero_weight() || ms.column_weights().has_zero_weight()) {
    r.notes.push_back("zero weight: zeta-level checks skipped");
    return r;
  }

  try {
    r.zeta = reduced_zeta(ms);
    r.invariants = lattice_invariants(ms);
    const Int sign = (n % 2 == 1) ? 1 : -1;
    r.checks.push_back(make_check("zeta_degree_identity", r.zeta->degree() == sign * r.invariants->mu,
                                  "deg = " + std::to_string(r.zeta->degree()) + ", mu = " +
                                      std::to_string(r.invariants->mu)));
    r.checks.push_back(make_check("zeta_exponent_sum_identity", r.zeta->exponent_sum() == sign * r.invariants->mu0,
                                  "sum = " + std::to_string(r.zeta->exponent_sum()) + ", mu0 = " +
                                      std::to_string(r.invariants->mu0)));

    MagicSquare t = transpose(ms);
    const CyclotomicProduct zeta_t = reduced_zeta(t);
    if (cr.primitive && ms.row_weights().virtual_weight() == 1 && ms.column_weights().virtual_weight() == 1 &&
        n == 3) {
      r.saito_corollary = zeta_t == saito_dual(*r.zeta, ms.row_weights().degree());
      r.checks.push_back(make_check("saito_corollary", *r.saito_corollary,
                                    "zeta(C^t) = " + zeta_t.to_string() + ", zeta*(C) = " +
                                        saito_dual(*r.zeta, ms.row_weights().degree()).to_string()));
    }

    bool complement_ok = true;
    std::string bad;
    for (const auto& s : special_subsets(ms)) {
      std::vector<std::size_t> comp;
      for (std::size_t i = 0; i < n; ++i)
        if (std::find(s.rows.begin(), s.rows.end(), i) == s.rows.end()) comp.push_back(i);
      if (!is_special(t, comp)) {
        complement_ok = false;
        bad = complement_string(s.rows, n);
      }
    }
    r.checks.push_back(make_check("transpose_complement_special", complement_ok, bad));
    const CyclotomicProduct from_c = transpose_zeta_from_special(ms);
    r.checks.push_back(make_check("transpose_zeta_formula", from_c == zeta_t,
                                  "from C: " + from_c.to_string() + ", direct: " + zeta_t.to_string()));

    if (e.table == Table::T4) {
      const bool unit = std::all_of(r.zeta->exponents().begin(), r.zeta->exponents().end(),
                                    [](const auto& kv) { return kv.second >= -1 && kv.second <= 1; });
      r.checks.push_back(make_check("unit_exponents", unit, r.zeta->to_string()));
    }
  } catch (const Error& err) {
    r.checks.push_back(make_check("zeta", false, err.what()));
  }

  if (e.expected && r.invariants) {
    const auto& x = *e.expected;
    const auto& inv = *r.invariants;
    r.checks.push_back(make_check("mu", inv.mu == x.mu, std::to_string(inv.mu) + " vs " + std::to_string(x.mu)));
    r.checks.push_back(make_check("mu0", inv.mu0 == x.mu0, std::to_string(inv.mu0) + " vs " + std::to_string(x.mu0)));
    r.checks.push_back(make_check("rho", inv.rho == x.rho,
                                  (inv.rho ? std::to_string(*inv.rho) : "n/a") + " vs " + std::to_string(x.rho)));
    if (x.mu0 != 0) r.notes.push_back("d = " + std::to_string(x.d) + " stored; not recomputable since mu0 != 0");
  }
  return r;
}

bool FuchsianRow::passed() const {
  return error.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

std::vector<FuchsianRow> fuchsian_report(const Catalog& catalog) {
  std::vector<FuchsianRow> rows;
  for (const auto& e : catalog.entries()) {
    if (!e.expected) continue;
    const CatalogEntry& p = catalog.partner(e);
    FuchsianRow row;
    row.row = e.expected->row;
    row.left_id = e.id;
    row.right_id = p.id;
    row.left_name = e.label();
    row.right_name = p.label();
    row.expected = *e.expected;
    try {
      const MagicSquare left = entry_square(catalog, e);
      const MagicSquare right = entry_square(catalog, p);
      const auto li = lattice_invariants(left);
      const auto ri = lattice_invariants(right);
      if (!li.rho) throw DataError("left weight system is not Calabi-Yau; rho undefined");
      row.mu = li.mu;
      row.mu0 = li.mu0;
      row.rho = *li.rho;
      row.b0 = p.weights.virtual_weight();
      row.mu_star = ri.mu;
      row.mu0_star = ri.mu0;
      row.nu_star = row.b0 * (row.rho + 3) - row.mu_star - 1;
      const auto at_one = evaluate_at_one(reduced_zeta(right), ri.rho);
      if (at_one.value.denominator() != 1) throw DataError("partner zeta(1) is not an integer");
      row.abs_d_star = std::abs(at_one.value.numerator());
      row.d_star_formula = at_one.discriminant;

      const auto& x = row.expected;
      auto cmp = [&](const char* name, Int got, Int want) {
        row.checks.push_back(make_check(name, got == want, std::to_string(got) + " vs " + std::to_string(want)));
      };
      cmp("mu", row.mu, x.mu);
      cmp("mu0", row.mu0, x.mu0);
      cmp("rho", row.rho, x.rho);
      cmp("b0", row.b0, x.b0);
      cmp("mu_star", row.mu_star, x.mu_star);
      cmp("mu0_star", row.mu0_star, x.mu0_star);
      cmp("nu_star", row.nu_star, x.nu_star);
      cmp("abs_d_star", row.abs_d_star, std::abs(x.d_star));
    } catch (const Error& err) {
      row.error = err.what();
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const FuchsianRow& l, const FuchsianRow& r) { return l.row < r.row; });
  return rows;
}

}  // namespace wsdual
