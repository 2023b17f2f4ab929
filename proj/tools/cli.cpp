#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsdual/catalog.hpp"
#include "wsdual/monomial.hpp"
#include "wsdual/polytope.hpp"
#include "wsdual/search.hpp"
#include "wsdual/weights.hpp"
#include "wsdual/zeta.hpp"

namespace wsdual::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string format = "human";
  std::string wa;
  std::string wb;
  std::string matrix;
  std::string filter = "any";
  bool strong = false;
  bool saito = false;
  std::size_t cap = 1'000'000;
  std::optional<std::size_t> expand;
  std::string catalog_path;
  std::string weight_text;
  std::string show_key;
  bool allow_zero = false;
};

bool structured(const Options& o) { return o.format == "json"; }

json to_json(const CyclotomicProduct& p) {
  json factors = json::array();
  for (const auto& [order, e] : p.exponents()) factors.push_back({order, e});
  return {{"text", p.to_string()}, {"factors", factors}, {"degree", p.degree()}, {"exponent_sum", p.exponent_sum()}};
}

json to_json(const MagicSquare& ms) {
  return {{"rows", ms.entries().rows()},
          {"monomials", format_monomials(ms.entries())},
          {"wa", ms.row_weights().to_string()},
          {"wb", ms.column_weights().to_string()}};
}

json to_json(const CouplingReport& r) {
  return {{"determinant", r.determinant},
          {"classification", to_string(r.classification)},
          {"primitive", r.primitive},
          {"almost_primitive", r.almost_primitive},
          {"strong", r.strong},
          {"row_has_zero", r.row_has_zero},
          {"column_has_zero", r.column_has_zero}};
}

json to_json(const RationalSimplex& s) {
  json vertices = json::array();
  for (const auto& v : s.vertices()) {
    json point = json::array();
    for (const auto& x : v) point.push_back(wsdual::to_string(x));
    vertices.push_back(point);
  }
  return vertices;
}

std::string zeros_string(const std::vector<bool>& flags) {
  std::string s;
  for (bool f : flags) s += f ? '0' : '-';
  return s;
}

WeightSystem need_weights(const std::string& text, const char* flag, bool allow_zero = false) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  return parse_weight_system(text, allow_zero);
}

// Column weights from 1^t A when --wb is omitted.
WeightSystem recover_column_weights(const IntMatrix& c) {
  const IntMatrix b = shifted_matrix(c);
  if (determinant(b) == 0) throw InputError("--wb omitted and B = (c_ij - 1) is singular; cannot recover it");
  const RationalMatrix a = inverse(b);
  std::vector<Rational> sums(c.size(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) sums[j] += a(i, j);
  Int lcm = 1;
  for (const auto& s : sums) lcm = std::lcm(lcm, s.denominator());
  Rational total(1);
  for (const auto& s : sums) total += s;
  const Int sign = total < Rational(0) ? -1 : 1;
  std::vector<Int> w;
  for (const auto& s : sums) w.push_back((s * Rational(lcm * sign)).numerator());
  Int degree = (total * Rational(lcm * sign)).numerator();
  const Int g = std::gcd(gcd_of(w), degree);
  for (Int& x : w) x /= g;
  return WeightSystem(std::move(w), degree / g, true);
}

struct BoundSquare {
  MagicSquare square;
  bool recovered_wb;
};

BoundSquare bind_square(const Options& o) {
  if (o.matrix.empty()) throw InputError("missing --matrix");
  const WeightSystem wa = need_weights(o.wa, "--wa", true);
  IntMatrix c = parse_matrix(o.matrix);
  if (o.wb.empty()) {
    WeightSystem wb = recover_column_weights(c);
    return {validate(std::move(c), wa, std::move(wb)), true};
  }
  return {validate(std::move(c), wa, parse_weight_system(o.wb, true)), false};
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Reduction r = parse_and_reduce(o.weight_text, o.allow_zero);
  const WeightSystem given = parse_weight_system(o.weight_text, o.allow_zero);
  if (structured(o)) {
    out << json{{"input", given.to_string()},
                {"reduced", r.canonical.to_string()},
                {"a0", r.canonical.virtual_weight()},
                {"permutation", r.permutation},
                {"divisor", r.divisor},
                {"calabi_yau", is_calabi_yau(r.canonical)}}
               .dump(2)
        << "\n";
  } else {
    out << "reduced:     " << r.canonical.to_string() << "\n"
        << "a0:          " << r.canonical.virtual_weight() << "\n"
        << "divisor:     " << r.divisor << "\n"
        << "calabi-yau:  " << (is_calabi_yau(r.canonical) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const BoundSquare bound = bind_square(o);
  const MagicSquare& ms = bound.square;
  const CouplingReport report = classify(ms);
  const Int det_b = determinant(shifted_matrix(ms.entries()));
  std::optional<bool> identity;
  if (det_b != 0) identity = verify_duality_identity(ms);

  if (structured(o)) {
    json doc{{"square", to_json(ms)},
             {"wb_recovered", bound.recovered_wb},
             {"coupling", to_json(report)},
             {"det_b", det_b}};
    doc["duality_identity"] = identity ? json(*identity) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "square:          " << format_monomials(ms.entries()) << "\n"
        << "wa:              " << ms.row_weights().to_string() << " (a0 = " << ms.row_weights().virtual_weight() << ")\n"
        << "wb:              " << ms.column_weights().to_string() << " (b0 = " << ms.column_weights().virtual_weight()
        << ")" << (bound.recovered_wb ? " [recovered]" : "") << "\n"
        << "det C:           " << report.determinant << "\n"
        << "det B:           " << det_b << "\n"
        << "classification:  " << to_string(report.classification) << "\n"
        << "strong:          " << (report.strong ? "yes" : "no") << "  rows " << zeros_string(report.row_has_zero)
        << "  columns " << zeros_string(report.column_has_zero) << "\n";
    if (identity) out << "A C = E + A 1:   " << (*identity ? "holds" : "FAILS") << "\n";
  }
  return identity.value_or(true) ? kOk : kVerificationFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchQuery q{need_weights(o.wa, "--wa"), need_weights(o.wb, "--wb"), parse_coupling_filter(o.filter), o.strong,
                o.cap};
  const SearchResult result = find_magic_squares(q);
  if (structured(o)) {
    json squares = json::array();
    for (const auto& ms : result.squares) {
      json item = to_json(ms);
      item["coupling"] = to_json(classify(ms));
      squares.push_back(item);
    }
    out << json{{"count", result.squares.size()}, {"truncated", result.truncated}, {"squares", squares}}.dump(2)
        << "\n";
  } else {
    for (const auto& ms : result.squares) {
      const auto r = classify(ms);
      out << format_monomials(ms.entries()) << "  wb=" << ms.column_weights().to_string() << "  det=" << r.determinant
          << "  " << to_string(r.classification) << (r.strong ? "  strong" : "") << "\n";
    }
    out << result.squares.size() << " square(s)" << (result.truncated ? " (truncated at cap)" : "") << "\n";
  }
  return kOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const MagicSquare ms = bind_square(o).square;
  const auto subsets = special_subsets(ms);
  const CyclotomicProduct zeta = reduced_zeta(ms);
  const CyclotomicProduct phi = characteristic_polynomial(ms);
  std::optional<CyclotomicProduct> dual;
  if (o.saito) dual = saito_dual(zeta, ms.row_weights().degree());
  std::optional<std::vector<Int>> series;
  if (o.expand) series = expand_series(zeta, *o.expand);

  if (structured(o)) {
    json subs = json::array();
    for (const auto& s : subsets) {
      std::vector<std::size_t> cols, rows;
      for (auto j : s.columns) cols.push_back(j + 1);
      for (auto i : s.rows) rows.push_back(i + 1);
      subs.push_back({{"J", cols}, {"I", rows}, {"a_J", s.gcd_weight}, {"minor", s.minor}, {"order", s.order},
                      {"exponent", s.exponent}});
    }
    json doc{{"square", to_json(ms)}, {"special_subsets", subs}, {"zeta", to_json(zeta)},
             {"characteristic_polynomial", to_json(phi)}};
    if (dual) doc["saito_dual"] = to_json(*dual);
    if (series) doc["series"] = *series;
    out << doc.dump(2) << "\n";
  } else {
    out << "special subsets:\n";
    for (const auto& s : subsets) {
      std::string j = "{", i = "{";
      for (std::size_t x = 0; x < s.columns.size(); ++x) j += (x ? "," : "") + std::to_string(s.columns[x] + 1);
      for (std::size_t x = 0; x < s.rows.size(); ++x) i += (x ? "," : "") + std::to_string(s.rows[x] + 1);
      out << "  J=" << j << "} I=" << i << "} a_J=" << s.gcd_weight << " |det C_IJ|=" << s.minor
          << " factor (1-t^" << s.order << ")^" << s.exponent << "\n";
    }
    out << "zeta:        " << zeta.to_string() << "\n"
        << "phi:         " << phi.to_string() << "\n";
    if (dual) out << "saito dual:  " << dual->to_string() << "\n";
    if (series) {
      out << "series:     ";
      for (Int c : *series) out << " " << c;
      out << "\n";
    }
  }
  return kOk;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const MagicSquare ms = bind_square(o).square;
  const LatticeInvariants inv = lattice_invariants(ms);
  const CyclotomicProduct zeta = reduced_zeta(ms);
  std::optional<ValueAtOne> at_one;
  if (zeta.exponent_sum() == 0) at_one = evaluate_at_one(zeta, inv.rho);

  if (structured(o)) {
    json doc{{"square", to_json(ms)}, {"mu", inv.mu}, {"mu0", inv.mu0}};
    doc["rho"] = inv.rho ? json(*inv.rho) : json(nullptr);
    doc["zeta_at_one"] = at_one ? json(wsdual::to_string(at_one->value)) : json(nullptr);
    doc["discriminant"] = (at_one && at_one->discriminant) ? json(*at_one->discriminant) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "mu:          " << inv.mu << "\n"
        << "mu0:         " << inv.mu0 << "\n"
        << "rho:         " << (inv.rho ? std::to_string(*inv.rho) : "n/a") << "\n";
    if (at_one) {
      out << "zeta(1):     " << wsdual::to_string(at_one->value) << "\n";
      if (at_one->discriminant) out << "d:           " << *at_one->discriminant << "\n";
    } else {
      out << "zeta(1):     n/a (mu0 != 0)\n";
    }
  }
  return kOk;
}

int cmd_polar(const Options& o, std::ostream& out) {
  const WeightSystem wa = need_weights(o.wa, "--wa");
  const RationalSimplex diagram = extended_diagram(wa);
  const RationalSimplex dual = polar_dual(diagram);
  std::optional<bool> identity;
  if (!o.matrix.empty()) identity = verify_duality_identity(bind_square(o).square);
  if (structured(o)) {
    json doc{{"extended_diagram", to_json(diagram)}, {"polar_dual", to_json(dual)}};
    doc["duality_identity"] = identity ? json(*identity) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "extended diagram: " << diagram.to_string() << "\n"
        << "polar dual:       " << dual.to_string() << "\n";
    if (identity) out << "A C = E + A 1:    " << (*identity ? "holds" : "FAILS") << "\n";
  }
  return identity.value_or(true) ? kOk : kVerificationFailed;
}

Catalog open_catalog(const Options& o) {
  return o.catalog_path.empty() ? load_catalog() : load_catalog(std::filesystem::path(o.catalog_path));
}

json entry_json(const CatalogEntry& e) {
  json doc{{"id", e.id},
           {"table", to_string(e.table)},
           {"a0", e.a0},
           {"weights", e.weights.to_string()},
           {"monomials", e.monomials},
           {"partner", e.partner},
           {"partner_label", e.partner_label}};
  doc["index"] = e.index ? json(*e.index) : json(nullptr);
  doc["name"] = e.name ? json(*e.name) : json(nullptr);
  return doc;
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  json doc{{"id", r.entry_id}, {"passed", r.passed()}, {"valid", r.valid}, {"checks", checks}, {"notes", r.notes}};
  if (r.square) doc["square"] = to_json(*r.square);
  if (r.coupling) doc["coupling"] = to_json(*r.coupling);
  if (r.zeta) doc["zeta"] = to_json(*r.zeta);
  if (r.invariants) {
    doc["mu"] = r.invariants->mu;
    doc["mu0"] = r.invariants->mu0;
    doc["rho"] = r.invariants->rho ? json(*r.invariants->rho) : json(nullptr);
  }
  return doc;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  const Catalog catalog = open_catalog(o);
  if (structured(o)) {
    json entries = json::array();
    for (const auto& e : catalog.entries()) entries.push_back(entry_json(e));
    out << json{{"entries", entries}}.dump(2) << "\n";
    return kOk;
  }
  for (const auto& e : catalog.entries()) {
    out << e.id << "  " << (e.index ? std::to_string(*e.index) : "-") << "  " << e.label() << "  " << e.a0 << ","
        << e.weights.to_string() << "  " << e.monomials << "  -> " << e.partner << "\n";
  }
  return kOk;
}

int cmd_catalog_show(const Options& o, std::ostream& out) {
  const Catalog catalog = open_catalog(o);
  const auto hits = catalog.lookup(o.show_key);
  bool ok = true;
  json docs = json::array();
  for (const auto* e : hits) {
    const auto r = verify_entry(catalog, *e);
    ok = ok && r.passed();
    if (structured(o)) {
      json doc = entry_json(*e);
      doc["verification"] = report_json(r);
      docs.push_back(doc);
      continue;
    }
    out << e->id << " (" << to_string(e->table) << ")  " << e->label() << "\n"
        << "  weights:  " << e->a0 << "," << e->weights.to_string() << "\n"
        << "  square:   " << e->monomials << "\n"
        << "  partner:  " << e->partner << " (" << e->partner_label << ")\n";
    if (r.coupling) {
      out << "  det C:    " << r.coupling->determinant << "  " << to_string(r.coupling->classification)
          << (r.coupling->strong ? ", strong" : ", not strong") << "\n";
    }
    if (r.zeta) out << "  zeta:     " << r.zeta->to_string() << "\n";
    if (r.invariants) {
      out << "  mu, mu0:  " << r.invariants->mu << ", " << r.invariants->mu0;
      if (r.invariants->rho) out << "  rho: " << *r.invariants->rho;
      out << "\n";
    }
    for (const auto& c : r.checks) {
      out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  if (structured(o)) out << json{{"entries", docs}}.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_catalog_verify(const Options& o, std::ostream& out) {
  const Catalog catalog = open_catalog(o);
  std::map<std::string, std::pair<int, int>> per_table;  // passed, total
  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& e : catalog.entries()) {
    reports.push_back(verify_entry(catalog, e));
    auto& [pass, total] = per_table[to_string(e.table)];
    ++total;
    if (reports.back().passed()) {
      ++pass;
    } else {
      ok = false;
    }
  }
  const auto fuchs = fuchsian_report(catalog);
  for (const auto& row : fuchs) ok = ok && row.passed();

  if (structured(o)) {
    json tables = json::object();
    for (const auto& [t, c] : per_table) tables[t] = {{"passed", c.first}, {"total", c.second}};
    json entries = json::array();
    for (const auto& r : reports) entries.push_back(report_json(r));
    json rows = json::array();
    for (const auto& row : fuchs) {
      json checks = json::array();
      for (const auto& c : row.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      rows.push_back({{"row", row.row}, {"left", row.left_id}, {"right", row.right_id}, {"mu", row.mu},
                      {"mu0", row.mu0}, {"rho", row.rho}, {"b0", row.b0}, {"mu_star", row.mu_star},
                      {"mu0_star", row.mu0_star}, {"nu_star", row.nu_star}, {"abs_d_star", row.abs_d_star},
                      {"passed", row.passed()}, {"error", row.error}, {"checks", checks}});
    }
    out << json{{"passed", ok}, {"tables", tables}, {"entries", entries}, {"fuchsian", rows}}.dump(2) << "\n";
    return ok ? kOk : kVerificationFailed;
  }

  for (const auto& [t, c] : per_table) out << t << ": " << c.first << "/" << c.second << " entries verified\n";
  int fuchs_pass = 0;
  for (const auto& row : fuchs) fuchs_pass += row.passed() ? 1 : 0;
  out << "Fuchsian partners: " << fuchs_pass << "/" << fuchs.size() << " rows verified\n";
  for (const auto& r : reports) {
    if (r.passed()) continue;
    out << "FAILED " << r.entry_id << " (" << catalog.by_id(r.entry_id).label() << ")\n";
    for (const auto& c : r.checks)
      if (!c.ok) out << "  " << c.name << ": " << c.detail << "\n";
  }
  for (const auto& row : fuchs) {
    if (row.passed()) continue;
    out << "FAILED Fuchsian row " << row.row << " " << row.error << "\n";
    for (const auto& c : row.checks)
      if (!c.ok) out << "  " << c.name << ": " << c.detail << "\n";
  }
  out << (ok ? "all catalog claims verified" : "verification FAILED") << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weighted magic squares, reduced monodromy zeta functions and Saito duality", "wsdual"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  };
  auto add_square = [&](CLI::App* sub, bool wb_required) {
    sub->add_option("--wa", o.wa, "Row weight system a1,...,an;h")->required();
    auto* wb = sub->add_option("--wb", o.wb, "Column weight system b1,...,bn;k");
    if (wb_required) wb->required();
    sub->add_option("--matrix", o.matrix, "Monomials \"x^5z, xy^3, z^2\" or rows \"5,0,1;1,3,0;0,0,2\"")->required();
    add_format(sub);
  };

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a weight system to canonical form");
  reduce_cmd->add_option("weights", o.weight_text, "a1,...,an;h")->required();
  reduce_cmd->add_flag("--allow-zero", o.allow_zero, "Accept a single zero weight");
  add_format(reduce_cmd);

  auto* check_cmd = app.add_subcommand("check", "Validate and classify a weighted magic square");
  add_square(check_cmd, false);

  auto* search_cmd = app.add_subcommand("search", "Enumerate weighted magic squares for a weight pair");
  search_cmd->add_option("--wa", o.wa)->required();
  search_cmd->add_option("--wb", o.wb)->required();
  search_cmd->add_option("--filter", o.filter)->check(CLI::IsMember({"any", "almost", "primitive"}));
  search_cmd->add_flag("--strong", o.strong, "Only squares with a zero in every row and column");
  search_cmd->add_option("--cap", o.cap, "Maximum number of results");
  add_format(search_cmd);

  auto* zeta_cmd = app.add_subcommand("zeta", "Reduced zeta function of the monodromy");
  add_square(zeta_cmd, false);
  zeta_cmd->add_flag("--saito-dual", o.saito, "Also print the Saito dual");
  zeta_cmd->add_option("--expand", o.expand, "Print the power series through t^N");

  auto* inv_cmd = app.add_subcommand("invariants", "Milnor number, radical rank and Picard number");
  add_square(inv_cmd, false);

  auto* polar_cmd = app.add_subcommand("polar", "Extended Newton simplex and its polar dual");
  polar_cmd->add_option("--wa", o.wa)->required();
  polar_cmd->add_option("--wb", o.wb);
  polar_cmd->add_option("--matrix", o.matrix, "Also check A C = E + A 1 for this square");
  add_format(polar_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Embedded table catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_option("--catalog-path", o.catalog_path, "Read the catalog from FILE instead");
  add_format(catalog_cmd);
  auto* verify_cmd = catalog_cmd->add_subcommand("verify", "Recompute every claim in the catalog");
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List all entries");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Show and verify entries by id, index or name");
  show_cmd->add_option("key", o.show_key, "Entry id, index or name")->required();
  for (auto* sub : {verify_cmd, list_cmd, show_cmd}) {
    sub->add_option("--catalog-path", o.catalog_path, "Read the catalog from FILE instead");
    add_format(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(o, out);
    if (*check_cmd) return cmd_check(o, out);
    if (*search_cmd) return cmd_search(o, out);
    if (*zeta_cmd) return cmd_zeta(o, out);
    if (*inv_cmd) return cmd_invariants(o, out);
    if (*polar_cmd) return cmd_polar(o, out);
    if (*verify_cmd) return cmd_catalog_verify(o, out);
    if (*list_cmd) return cmd_catalog_list(o, out);
    if (*show_cmd) return cmd_catalog_show(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace wsdual::cli
