// Command-line front end for the nijenhuis library.
//
// Exit status: 0 success or true verdict, 1 false verdict, 2 input error,
// 3 internal invariant breach.

#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nijenhuis/catalog.hpp"
#include "nijenhuis/equivalence.hpp"
#include "nijenhuis/json_io.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"
#include "nijenhuis/quadric.hpp"
#include "nijenhuis/reproduce.hpp"

namespace {

using namespace nijenhuis;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct Globals {
  bool json_out = false;
  std::size_t height = 5;
  std::string param;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

std::optional<Scalar> parameter(const Globals& g) {
  if (g.param.empty()) return std::nullopt;
  return Scalar::parse(g.param);
}

/// A path to an algebra JSON document, or a catalog id.
struct LoadedAlgebra {
  LieAlgebra algebra;
  std::string label;
};

LoadedAlgebra load_algebra(const std::string& algebra_arg, const Globals& g) {
  if (std::filesystem::is_regular_file(algebra_arg)) return {json_io::algebra_from_json(read_json_file(algebra_arg)), algebra_arg};
  const auto id = catalog::CatalogId::parse(algebra_arg, parameter(g));
  return {catalog::algebra(id), id.label()};
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].str();
  return out + ")";
}

void print_brackets(std::ostream& os, const LieAlgebra& alg) {
  bool any = false;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const Vector b = alg.basis_bracket(i, j);
      if (is_zero(b)) continue;
      any = true;
      os << "  [e" << i + 1 << ", e" << j + 1 << "] = " << vector_text(b) << "\n";
    }
  if (!any) os << "  (abelian)\n";
}

void print_matrix(std::ostream& os, const Matrix& m, const char* indent = "  ") {
  for (std::size_t r = 0; r < m.rows(); ++r) os << indent << vector_text(m.row(r)) << "\n";
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------------------

int cmd_catalog_list(const Globals& g) {
  json entries = json::array();
  std::ostringstream os;
  for (const auto& fi : catalog::kFamilyInfo) {
    entries.push_back({{"id", fi.name},
                       {"bianchi", fi.bianchi},
                       {"field", to_string(fi.field)},
                       {"parametric", fi.parametric}});
    os << fi.name << "  " << to_string(fi.field) << "  Bianchi " << fi.bianchi << (fi.parametric ? "  (--param)" : "")
       << "\n";
  }
  emit(g, {{"command", "catalog list"}, {"entries", entries}}, os.str());
  return kOk;
}

int cmd_catalog_show(const Globals& g, const std::string& name) {
  const auto id = catalog::CatalogId::parse(name, parameter(g));
  const LieAlgebra alg = catalog::algebra(id);
  std::ostringstream os;
  os << id.label() << " (Bianchi " << id.bianchi() << ", field " << to_string(alg.field()) << ")\n";
  print_brackets(os, alg);
  emit(g, {{"command", "catalog show"}, {"id", id.label()}, {"bianchi", id.bianchi()}, {"algebra", json_io::to_json(alg)}},
       os.str());
  return kOk;
}

int cmd_check(const Globals& g, const std::string& algebra_path, const std::string& operator_path) {
  const LieAlgebra alg = std::filesystem::is_regular_file(algebra_path)
                             ? json_io::algebra_from_json(read_json_file(algebra_path), false)
                             : load_algebra(algebra_path, g).algebra;
  json out{{"command", "check"}, {"algebra", algebra_path}};
  std::ostringstream os;
  const auto jac = check_jacobi(alg);
  out["jacobi"] = jac.ok;
  os << "jacobi: " << (jac.ok ? "true" : "false") << "\n";
  if (!jac.ok) {
    const auto& t = *jac.failing;
    out["jacobi_failing_triple"] = {t[0] + 1, t[1] + 1, t[2] + 1};
    os << "  fails on (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")\n";
    emit(g, out, os.str());
    return kFalse;
  }
  if (operator_path.empty()) {
    emit(g, out, os.str());
    return kOk;
  }
  const LinearOperator op = json_io::operator_from_json(read_json_file(operator_path));
  require_conforming(alg, op);
  const TorsionTensor t = torsion(alg, op);
  const bool nijenhuis = t.is_zero();
  const bool regular = is_regular_semisimple(alg, op);
  out["nijenhuis"] = nijenhuis;
  out["regular_semisimple"] = regular;
  out["char_poly"] = char_poly(op.matrix()).str();
  os << "nijenhuis: " << (nijenhuis ? "true" : "false") << "\n";
  if (auto nz = t.first_nonzero()) {
    const auto [k, i, j] = *nz;
    out["torsion_nonzero"] = {{"k", k + 1}, {"i", i + 1}, {"j", j + 1}, {"value", t(k, i, j).str()}};
    os << "  torsion N^" << k + 1 << "_" << i + 1 << j + 1 << " = " << t(k, i, j) << "\n";
  }
  os << "regular-semisimple: " << (regular ? "true" : "false") << "\n";
  os << "char poly: " << char_poly(op.matrix()).str() << "\n";
  emit(g, out, os.str());
  return nijenhuis ? kOk : kFalse;
}

std::string classification_text(const QuadricClassification& c) {
  std::ostringstream os;
  os << "rank " << c.rank;
  if (c.signature) os << ", signature (" << c.signature->positive << "," << c.signature->negative << ")";
  os << ", " << to_string(c.reason);
  return os.str();
}

int cmd_admits(const Globals& g, const std::string& algebra_arg, bool want_basis, const std::string& command) {
  const auto loaded = load_algebra(algebra_arg, g);
  const FindResult r = find_eigenbasis(loaded.algebra, g.height);
  json out = json_io::classification_report(r);
  out["command"] = command;
  out["algebra"] = loaded.label;
  std::ostringstream os;
  os << loaded.label << ": admits: " << (r.classification.admits ? "true" : "false") << " ("
     << classification_text(r.classification) << ")\n";
  os << "form:\n";
  print_matrix(os, r.form.q);
  if (r.status == FindStatus::NoWitness) os << "no rational witness up to height " << g.height << "\n";
  if (r.witness) {
    os << "isotropic witness:\n";
    for (const auto& v : *r.witness) os << "  " << vector_text(v) << "\n";
  }
  if (r.certificate && want_basis) {
    os << "eigenbasis (columns), verified:\n";
    print_matrix(os, r.certificate->basis);
    for (const auto& p : r.certificate->pairs)
      os << "  [z" << p.i + 1 << ", z" << p.j + 1 << "] = " << p.alpha << " z" << p.i + 1 << " + " << p.beta << " z"
         << p.j + 1 << "\n";
  } else if (r.certificate) {
    os << "witness basis verified\n";
  }
  emit(g, out, os.str());
  if (!r.classification.admits) return kFalse;
  return r.status == FindStatus::Certified || !want_basis ? kOk : kFalse;
}

int cmd_pattern(const Globals& g, const std::string& algebra_arg, const std::string& basis_path, const std::string& target) {
  const auto loaded = load_algebra(algebra_arg, g);
  const Matrix z = json_io::basis_from_json(read_json_file(basis_path));
  json out{{"command", "pattern"}, {"algebra", loaded.label}};
  std::ostringstream os;
  auto check = verify_nijenhuis_eigenbasis(loaded.algebra, z);
  if (!check) {
    const auto [i, j] = *check.failing_pair;
    out["eigenbasis"] = false;
    out["failing_pair"] = {i + 1, j + 1};
    os << "not a Nijenhuis eigenbasis: [z" << i + 1 << ", z" << j + 1 << "] leaves their span\n";
    emit(g, out, os.str());
    return kFalse;
  }
  out["eigenbasis"] = true;
  const PairPattern p = eigenbasis_pattern(loaded.algebra, z);
  out["pattern"] = json_io::to_json(p);
  static constexpr std::array<const char*, 3> names{"[z1,z2]", "[z2,z3]", "[z3,z1]"};
  static constexpr std::array<std::array<const char*, 2>, 3> vecs{{{"z1", "z2"}, {"z2", "z3"}, {"z3", "z1"}}};
  for (std::size_t k = 0; k < 3; ++k)
    os << names[k] << " = " << p.coeffs[k].first << " " << vecs[k][0] << " + " << p.coeffs[k].second << " "
       << vecs[k][1] << "\n";
  const auto sl2 = sl2_pattern(loaded.algebra, z);
  if (sl2) {
    const auto& t = *sl2.triple;
    out["sl2"] = {t.a.str(), t.b.str(), t.c.str()};
    os << "sl(2) shape: (A,B,C) = (" << t.a << ", " << t.b << ", " << t.c << ")\n";
    if (!target.empty()) {
      std::vector<Scalar> parts;
      std::stringstream ss(target);
      for (std::string item; std::getline(ss, item, ',');) parts.push_back(Scalar::parse(item));
      if (parts.size() != 3) throw ParseError("--rescale-to needs A,B,C");
      const auto mu = sl2_rescale_to(t, {parts[0], parts[1], parts[2]});
      out["mu"] = {mu[0].str(), mu[1].str(), mu[2].str()};
      os << "rescale by mu = (" << mu[0] << ", " << mu[1] << ", " << mu[2] << ")\n";
    }
  } else {
    out["sl2"] = nullptr;
    out["sl2_violation"] = sl2.violation;
    os << "sl(2) shape violated: " << sl2.violation << "\n";
  }
  emit(g, out, os.str());
  return kOk;
}

int cmd_equiv_check(const Globals& g, const std::string& algebra_arg, const std::string& cert_path) {
  const auto loaded = load_algebra(algebra_arg, g);
  const auto cert = json_io::equivalence_from_json(read_json_file(cert_path));
  const bool automorphism = is_automorphism(loaded.algebra, cert.phi);
  const bool ok = check_equivalence_certificate(loaded.algebra, cert.z, cert.z_prime, cert.phi, cert.mu);
  json out{{"command", "equiv-check"}, {"algebra", loaded.label}, {"automorphism", automorphism}, {"equivalent", ok}};
  std::ostringstream os;
  os << "Phi is an automorphism: " << (automorphism ? "true" : "false") << "\n";
  os << "certificate holds: " << (ok ? "true" : "false") << "\n";
  emit(g, out, os.str());
  return ok ? kOk : kFalse;
}

int cmd_reproduce(const Globals& g, const std::string& corrupt) {
  reproduce::Options opts;
  opts.height = g.height;
  if (!corrupt.empty()) {
    catalog::CatalogId::parse(corrupt, std::nullopt).name();  // validates the id
    opts.corrupt = corrupt;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto report = reproduce::run(opts);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::ostringstream os;
  for (const auto& c : report.checks)
    os << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return "{" + s + "}";
  };
  os << "real algebras admitting: " << join(report.real_admitting) << "\n";
  os << "complex algebras admitting: " << join(report.complex_admitting) << "\n";
  os << report.contrast << "\n";
  os << (report.passed() ? "PASS" : "FAIL") << " (" << ms.count() << " ms)\n";
  emit(g, reproduce::to_json(report), os.str());
  return report.passed() ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular semisimple algebraic Nijenhuis operators on Lie algebras, in exact arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--height", g.height, "Coordinate bound for isotropic witness search")->check(CLI::PositiveNumber);
  app.add_option("--param", g.param, "Parameter of a3.7, a3.8, b3.6 (e.g. 1/2, 1+1i)");

  auto* catalog_cmd = app.add_subcommand("catalog", "List or show catalog algebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "All catalog entries");
  std::string show_id;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Structure constants of one entry");
  show_cmd->add_option("id", show_id, "Catalog id, e.g. a3.4")->required();

  std::string algebra_arg, operator_path, basis_path, cert_path, target, corrupt;

  auto* check_cmd = app.add_subcommand("check", "Jacobi check and, with an operator, the Nijenhuis tests");
  check_cmd->add_option("algebra", algebra_arg, "Algebra JSON file or catalog id")->required();
  check_cmd->add_option("--operator", operator_path, "Operator JSON file");

  auto* admits_cmd = app.add_subcommand("admits", "Existence criterion with a verified witness");
  admits_cmd->add_option("algebra", algebra_arg, "Algebra JSON file or catalog id")->required();

  auto* find_cmd = app.add_subcommand("find-eigenbasis", "Construct and certify a Nijenhuis eigenbasis");
  find_cmd->add_option("algebra", algebra_arg, "Algebra JSON file or catalog id")->required();

  auto* pattern_cmd = app.add_subcommand("pattern", "Pair coefficients of an eigenbasis and the sl(2) shape");
  pattern_cmd->add_option("algebra", algebra_arg, "Algebra JSON file or catalog id")->required();
  pattern_cmd->add_option("--basis", basis_path, "Basis JSON file {\"Z\": [[...]]}")->required();
  pattern_cmd->add_option("--rescale-to", target, "Target (A,B,C) as A,B,C");

  auto* equiv_cmd = app.add_subcommand("equiv-check", "Verify an equivalence certificate");
  equiv_cmd->add_option("algebra", algebra_arg, "Algebra JSON file or catalog id")->required();
  equiv_cmd->add_option("certificate", cert_path, "Certificate JSON file")->required();

  auto* repro_cmd = app.add_subcommand("reproduce", "Sweep both catalogs and all fixtures");
  repro_cmd->add_option("--corrupt", corrupt, "Test mode: perturb one catalog family");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (list_cmd->parsed()) return cmd_catalog_list(g);
    if (show_cmd->parsed()) return cmd_catalog_show(g, show_id);
    if (check_cmd->parsed()) return cmd_check(g, algebra_arg, operator_path);
    if (admits_cmd->parsed()) return cmd_admits(g, algebra_arg, false, "admits");
    if (find_cmd->parsed()) return cmd_admits(g, algebra_arg, true, "find-eigenbasis");
    if (pattern_cmd->parsed()) return cmd_pattern(g, algebra_arg, basis_path, target);
    if (equiv_cmd->parsed()) return cmd_equiv_check(g, algebra_arg, cert_path);
    if (repro_cmd->parsed()) return cmd_reproduce(g, corrupt);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}
