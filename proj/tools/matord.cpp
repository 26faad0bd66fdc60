#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "matord/equivalence.hpp"
#include "matord/families.hpp"
#include "matord/induced.hpp"
#include "matord/matrix_io.hpp"
#include "matord/order.hpp"

namespace {

using matord::Comparison;
using matord::Matrix;
using matord::Monomial;
using matord::MonomialOrder;
using matord::Rational;
using json = nlohmann::ordered_json;

// Exit codes are part of the contract: 0 success/true, 1 distinct/false,
// 2 usage or parse error, 3 invalid order matrix, 4 undetermined.
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidOrder = 3;
constexpr int kExitUndetermined = 4;

// An order matrix that failed validation, in a context that needs one.
struct InvalidOrder {
  matord::ValidationError error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Matrix load_matrix(const std::string& path) { return matord::parse_matrix(read_file(path)); }

MonomialOrder load_order(const std::string& path) {
  auto v = MonomialOrder::validate(load_matrix(path));
  if (auto* err = std::get_if<matord::ValidationError>(&v)) throw InvalidOrder{*err};
  return std::get<MonomialOrder>(std::move(v));
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json products_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(r.to_string());
  return out;
}

std::string products_text(const std::vector<Rational>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + ")";
}

json verdict_json(const matord::EquivalenceVerdict& v) {
  json out;
  if (const auto* eq = std::get_if<matord::Equivalent>(&v)) {
    out["verdict"] = "EQUIVALENT";
    out["certificate"] = matrix_json(eq->certificate);
  } else if (const auto* di = std::get_if<matord::Distinct>(&v)) {
    out["verdict"] = "DISTINCT";
    out["witness"] = {di->a.to_string(), di->b.to_string()};
  } else {
    out["verdict"] = "UNDETERMINED";
    out["degree"] = std::get<matord::UndeterminedUpTo>(v).degree;
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_validate(const std::string& path, bool as_json) {
  Matrix m = load_matrix(path);
  auto v = MonomialOrder::validate(m);
  const auto* err = std::get_if<matord::ValidationError>(&v);
  if (as_json) {
    json doc;
    doc["command"] = "validate";
    doc["rows"] = m.rows();
    doc["cols"] = m.cols();
    doc["valid"] = err == nullptr;
    if (err) {
      doc["error"] = err->message();
      if (err->kind == matord::ValidationError::Kind::BadColumnSign)
        doc["column"] = err->column;
    }
    emit(doc);
  } else {
    std::cout << (err ? err->message() : "VALID") << '\n';
  }
  return err ? kExitInvalidOrder : 0;
}

int cmd_compare(const std::string& path, const std::string& lit_a,
                const std::string& lit_b, bool as_json) {
  MonomialOrder o = load_order(path);
  Monomial a = matord::parse_monomial(lit_a);
  Monomial b = matord::parse_monomial(lit_b);
  if (a.nvars() != o.nvars() || b.nvars() != o.nvars())
    throw std::invalid_argument("monomial arity does not match the matrix");
  const char* token = matord::to_token(o.compare(a, b));
  if (as_json) {
    json doc;
    doc["command"] = "compare";
    doc["result"] = token;
    emit(doc);
  } else {
    std::cout << token << '\n';
  }
  return 0;
}

int cmd_classic(const std::string& kind, int n, bool as_json) {
  matord::ClassicKind k = kind == "lex"      ? matord::ClassicKind::Lex
                          : kind == "deglex" ? matord::ClassicKind::Deglex
                                             : matord::ClassicKind::Revlex;
  MonomialOrder o = matord::classic_order(k, n);
  if (as_json) {
    json doc;
    doc["command"] = "classic";
    doc["kind"] = kind;
    doc["n"] = n;
    doc["matrix"] = matrix_json(o.matrix());
    emit(doc);
  } else {
    std::cout << matord::render_matrix(o.matrix());
  }
  return 0;
}

int cmd_sort(const std::string& path, int d, bool exact, bool as_json) {
  MonomialOrder o = load_order(path);
  auto ms = matord::enumerate_monomials(
      o.nvars(), d, exact ? matord::DegreeMode::Exactly : matord::DegreeMode::UpTo);
  ms = matord::sort_monomials(o, std::move(ms));
  if (as_json) {
    json doc;
    doc["command"] = "sort";
    doc["n"] = o.nvars();
    doc["degree"] = d;
    doc["exact"] = exact;
    json list = json::array();
    for (const Monomial& m : ms) list.push_back(m.to_string());
    doc["monomials"] = std::move(list);
    emit(doc);
  } else {
    for (const Monomial& m : ms) std::cout << m.to_string() << '\n';
  }
  return 0;
}

int cmd_induce(const std::string& path, int i, bool as_json) {
  MonomialOrder o = load_order(path);
  matord::InducedResult r = matord::induced_matrix(o, i);
  if (as_json) {
    json doc;
    doc["command"] = "induce";
    doc["removed_variable"] = r.removed_variable;
    doc["deleted_row"] = r.deleted_row;
    doc["matrix"] = matrix_json(r.order.matrix());
    emit(doc);
  } else {
    std::cout << "# deleted row " << r.deleted_row << '\n'
              << matord::render_matrix(r.order.matrix());
  }
  return 0;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, int d, bool as_json) {
  MonomialOrder a = load_order(path_a);
  MonomialOrder b = load_order(path_b);
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("the two matrices have different column counts");
  if (d < 0) d = matord::default_equivalence_bound(a.nvars());
  matord::EquivalenceVerdict v = matord::equivalent(a, b, d);
  if (as_json) {
    json doc;
    doc["command"] = "equiv";
    doc["bound"] = d;
    json vj = verdict_json(v);
    for (auto& [key, value] : vj.items()) doc[key] = value;
    emit(doc);
  } else if (const auto* di = std::get_if<matord::Distinct>(&v)) {
    std::cout << "DISTINCT\nwitness: " << di->a.to_string() << ' ' << di->b.to_string() << '\n';
  } else if (std::holds_alternative<matord::Equivalent>(v)) {
    std::cout << "EQUIVALENT\n";
  } else {
    std::cout << "UNDETERMINED\n";
  }
  if (std::holds_alternative<matord::Distinct>(v)) return kExitFalse;
  if (std::holds_alternative<matord::UndeterminedUpTo>(v)) return kExitUndetermined;
  return 0;
}

int cmd_family(const std::string& fam, int n, bool as_json) {
  matord::Family f = fam == "C" ? matord::Family::C : matord::Family::D;
  Matrix m = matord::family_matrix(f, n);
  if (as_json) {
    json doc;
    doc["command"] = "family";
    doc["family"] = fam;
    doc["n"] = n;
    doc["matrix"] = matrix_json(m);
    emit(doc);
  } else {
    std::cout << matord::render_matrix(m);
  }
  return 0;
}

int cmd_verify_main(int n, int d, bool as_json) {
  if (d < 0) d = matord::default_equivalence_bound(n);
  matord::FamilyVerification v = matord::verify_families(n, d);
  if (as_json) {
    json doc;
    doc["command"] = "verify-main";
    doc["n"] = v.n;
    doc["requested_bound"] = v.requested_bound;
    doc["witness_bound"] = v.witness_bound;
    doc["valid"] = {{"C", v.valid_c}, {"D", v.valid_d}};
    doc["det"] = {{"C", v.det_c.to_string()}, {"D", v.det_d.to_string()}};
    doc["expected_det"] = {{"C", v.expected_det_c.to_string()}, {"D", v.expected_det_d.to_string()}};
    doc["det_match"] = {{"C", v.det_c_match}, {"D", v.det_d_match}};
    if (v.witness) {
      json w;
      w["first"] = v.witness->first.to_string();
      w["second"] = v.witness->second.to_string();
      w["products"] = {{"C", {products_json(v.products_c_first), products_json(v.products_c_second)}},
                       {"D", {products_json(v.products_d_first), products_json(v.products_d_second)}}};
      doc["witness"] = std::move(w);
    } else {
      doc["witness"] = nullptr;
    }
    doc["distinct"] = v.distinct_confirmed;
    json ind = json::array();
    for (const auto& chk : v.induced) {
      json e;
      e["variable"] = chk.variable;
      e["deleted_row"] = {{"C", chk.deleted_row_c}, {"D", chk.deleted_row_d}};
      json vj = verdict_json(chk.verdict);
      for (auto& [key, value] : vj.items()) e[key] = value;
      e["det"] = {{"C", chk.det_c.to_string()}, {"D", chk.det_d.to_string()}};
      e["expected"] = {{"C", chk.expected_c.to_string()}, {"D", chk.expected_d.to_string()}};
      e["match"] = {{"C", chk.match_c}, {"D", chk.match_d}};
      ind.push_back(std::move(e));
    }
    doc["induced"] = std::move(ind);
    doc["all_induced_equivalent"] = v.all_induced_equivalent;
    doc["ok"] = v.ok;
    emit(doc);
  } else {
    std::cout << "n=" << v.n << " requested_bound=" << v.requested_bound
              << " witness_bound=" << v.witness_bound << '\n';
    std::cout << "C: valid=" << yesno(v.valid_c) << " det=" << v.det_c.to_string()
              << " expected=" << v.expected_det_c.to_string()
              << " match=" << yesno(v.det_c_match) << '\n';
    std::cout << "D: valid=" << yesno(v.valid_d) << " det=" << v.det_d.to_string()
              << " expected=" << v.expected_det_d.to_string()
              << " match=" << yesno(v.det_d_match) << '\n';
    if (v.witness) {
      std::cout << "witness: " << v.witness->first.to_string() << ' '
                << v.witness->second.to_string() << '\n';
      std::cout << "C products: " << products_text(v.products_c_first) << ' '
                << products_text(v.products_c_second) << '\n';
      std::cout << "D products: " << products_text(v.products_d_first) << ' '
                << products_text(v.products_d_second) << '\n';
    } else {
      std::cout << "witness: none up to degree " << v.witness_bound << '\n';
    }
    std::cout << "distinct=" << yesno(v.distinct_confirmed) << '\n';
    for (const auto& chk : v.induced) {
      const char* verdict = std::holds_alternative<matord::Equivalent>(chk.verdict)
                                ? "EQUIVALENT"
                            : std::holds_alternative<matord::Distinct>(chk.verdict)
                                ? "DISTINCT"
                                : "UNDETERMINED";
      std::cout << "i=" << chk.variable << ' ' << verdict << " deleted_rows="
                << chk.deleted_row_c << ',' << chk.deleted_row_d
                << " detC=" << chk.det_c.to_string() << " detD=" << chk.det_d.to_string()
                << " expectedC=" << chk.expected_c.to_string()
                << " expectedD=" << chk.expected_d.to_string()
                << " matchC=" << yesno(chk.match_c) << " matchD=" << yesno(chk.match_d)
                << '\n';
    }
    std::cout << "result " << (v.ok ? "PASS" : "FAIL") << '\n';
  }
  return v.ok ? 0 : kExitFalse;
}

int cmd_det_report(int from, int to, bool as_json) {
  std::vector<matord::DetRow> rows = matord::determinant_report(from, to);
  bool all_nonzero = true;
  for (const auto& row : rows) all_nonzero = all_nonzero && row.all_nonzero;
  if (as_json) {
    json doc;
    doc["command"] = "det-report";
    doc["from"] = from;
    doc["to"] = to;
    json jr = json::array();
    for (const auto& row : rows) {
      json r;
      r["n"] = row.n;
      json entries = json::array();
      for (const auto& e : row.entries) {
        json je;
        je["label"] = e.label;
        je["indices"] = e.indices;
        json comp = json::array(), exp = json::array();
        for (const Rational& x : e.computed) comp.push_back(x.to_string());
        for (const Rational& x : e.expected) exp.push_back(x.to_string());
        je["computed"] = std::move(comp);
        je["expected"] = std::move(exp);
        je["match"] = e.matches;
        je["nonzero"] = e.nonzero;
        entries.push_back(std::move(je));
      }
      r["entries"] = std::move(entries);
      r["all_nonzero"] = row.all_nonzero;
      r["all_match"] = row.all_match;
      jr.push_back(std::move(r));
    }
    doc["rows"] = std::move(jr);
    doc["all_nonzero"] = all_nonzero;
    emit(doc);
  } else {
    for (const auto& row : rows) {
      std::cout << "n=" << row.n << '\n';
      for (const auto& e : row.entries) {
        std::cout << "  " << e.label << ": computed";
        for (const Rational& x : e.computed) std::cout << ' ' << x.to_string();
        std::cout << ", expected";
        for (const Rational& x : e.expected) std::cout << ' ' << x.to_string();
        std::cout << ", " << (e.matches ? "match" : "MISMATCH") << ", "
                  << (e.nonzero ? "nonzero" : "ZERO") << '\n';
      }
    }
    std::cout << "all_nonzero=" << yesno(all_nonzero) << '\n';
  }
  return all_nonzero ? 0 : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for matrix-defined monomial orders"};
  app.require_subcommand(1);

  std::string path, path_b, lit_a, lit_b, kind, fam;
  int n = 0, d = -1, i = 0, from = 4, to = 4;
  bool as_json = false, exact = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "structured output"); };

  CLI::App* validate = app.add_subcommand("validate", "check that a matrix defines a monomial order");
  validate->add_option("file", path, "matrix file")->required();
  add_json(validate);

  CLI::App* compare = app.add_subcommand("compare", "compare two monomials under an order");
  compare->add_option("file", path, "matrix file")->required();
  compare->add_option("a", lit_a, "first monomial, e.g. 2,3,0")->required();
  compare->add_option("b", lit_b, "second monomial")->required();
  add_json(compare);

  CLI::App* classic = app.add_subcommand("classic", "print a classic order matrix");
  classic->add_option("kind", kind, "lex, deglex, or revlex")
      ->required()
      ->check(CLI::IsMember({"lex", "deglex", "revlex"}));
  classic->add_option("-n", n, "variable count")->required()->check(CLI::PositiveNumber);
  add_json(classic);

  CLI::App* sort = app.add_subcommand("sort", "list monomials ascending under an order");
  sort->add_option("file", path, "matrix file")->required();
  sort->add_option("-d", d, "degree bound")->required()->check(CLI::NonNegativeNumber);
  sort->add_flag("--exact", exact, "exactly degree d instead of at most d");
  add_json(sort);

  CLI::App* induce = app.add_subcommand("induce", "restrict an order to the ring without one variable");
  induce->add_option("file", path, "matrix file")->required();
  induce->add_option("-i", i, "variable to remove, 1-based")->required()->check(CLI::PositiveNumber);
  add_json(induce);

  CLI::App* equiv = app.add_subcommand("equiv", "decide whether two matrices define the same order");
  equiv->add_option("file-a", path, "first matrix file")->required();
  equiv->add_option("file-b", path_b, "second matrix file")->required();
  equiv->add_option("-d", d, "search bound for the distinctness fallback")->check(CLI::NonNegativeNumber);
  add_json(equiv);

  CLI::App* family = app.add_subcommand("family", "print a C or D family matrix");
  family->add_option("family", fam, "C or D")->required()->check(CLI::IsMember({"C", "D"}));
  family->add_option("-n", n, "variable count, at least 4")->required()->check(CLI::Range(4, 1 << 20));
  add_json(family);

  CLI::App* verify = app.add_subcommand("verify-main", "full check of the two-family construction");
  verify->add_option("-n", n, "variable count, at least 4")->required()->check(CLI::Range(4, 1 << 20));
  verify->add_option("-d", d, "degree bound")->check(CLI::NonNegativeNumber);
  add_json(verify);

  CLI::App* detrep = app.add_subcommand("det-report", "determinant table for the two families");
  detrep->add_option("--from", from, "first n")->required()->check(CLI::Range(4, 1 << 20));
  detrep->add_option("--to", to, "last n")->required()->check(CLI::Range(4, 1 << 20));
  add_json(detrep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path, as_json);
    if (compare->parsed()) return cmd_compare(path, lit_a, lit_b, as_json);
    if (classic->parsed()) return cmd_classic(kind, n, as_json);
    if (sort->parsed()) return cmd_sort(path, d, exact, as_json);
    if (induce->parsed()) return cmd_induce(path, i, as_json);
    if (equiv->parsed()) return cmd_equiv(path, path_b, d, as_json);
    if (family->parsed()) return cmd_family(fam, n, as_json);
    if (verify->parsed()) return cmd_verify_main(n, d, as_json);
    if (detrep->parsed()) return cmd_det_report(from, to, as_json);
    return kExitUsage;
  } catch (const matord::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidOrder& e) {
    std::cerr << "invalid order matrix: " << e.error.message() << '\n';
    return kExitInvalidOrder;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
