#pragma once

// JSON documents for algebras, operators, bases, classification reports, and
// equivalence certificates. Scalars are always strings in the canonical text
// format; matrices are arrays of rows; bracket indices are 1-based.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nijenhuis/equivalence.hpp"
#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"
#include "nijenhuis/quadric.hpp"

namespace nijenhuis::json_io {

using nlohmann::json;

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

inline json to_json(const Scalar& s) { return s.str(); }

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

inline Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector must be an array");
  Vector v;
  for (const auto& e : j) v.push_back(scalar_from_json(e));
  return v;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != rows.front().size()) throw ParseError("matrix rows have unequal length");
  }
  return Matrix::from_rows(rows);
}

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

// ---------------------------------------------------------------------------
// Algebra: {"dim": 3, "field": "R"|"C", "brackets": [{"i": 1, "j": 2, "out": [...]}]}

inline Field field_from_json(const json& j) {
  if (j == "R") return Field::Real;
  if (j == "C") return Field::Complex;
  throw ParseError("field must be \"R\" or \"C\", got " + j.dump());
}

inline LieAlgebra algebra_from_json(const json& j, bool verify_jacobi = true) {
  const json& dim_j = member(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() <= 0) throw ParseError("dim must be a positive integer");
  const auto dim = static_cast<std::size_t>(dim_j.get<long long>());
  const Field field = j.contains("field") ? field_from_json(j.at("field")) : Field::Real;
  std::vector<BracketRelation> rels;
  if (j.contains("brackets")) {
    const json& list = j.at("brackets");
    if (!list.is_array()) throw ParseError("brackets must be an array");
    for (const auto& b : list) {
      const json& ij = member(b, "i");
      const json& jj = member(b, "j");
      if (!ij.is_number_integer() || !jj.is_number_integer()) throw ParseError("bracket indices must be integers");
      const long long i = ij.get<long long>(), k = jj.get<long long>();
      if (i < 1 || k < 1 || i >= k || static_cast<std::size_t>(k) > dim)
        throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
      Vector out = vector_from_json(member(b, "out"));
      if (out.size() != dim) throw ParseError("bracket output length must equal dim");
      rels.push_back({static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1), std::move(out)});
    }
  }
  return LieAlgebra::from_brackets(dim, field, rels, verify_jacobi);
}

inline json to_json(const LieAlgebra& alg) {
  json brackets = json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const Vector out = alg.basis_bracket(i, j);
      if (is_zero(out)) continue;
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"out", to_json(out)}});
    }
  return {{"dim", alg.dim()}, {"field", to_string(alg.field())}, {"brackets", brackets}};
}

// ---------------------------------------------------------------------------
// Operator: {"matrix": [[...]]}

inline LinearOperator operator_from_json(const json& j) {
  Matrix m = matrix_from_json(member(j, "matrix"));
  if (!m.is_square()) throw ParseError("operator matrix must be square");
  return LinearOperator(std::move(m));
}

inline json to_json(const LinearOperator& op) { return {{"matrix", to_json(op.matrix())}}; }

// ---------------------------------------------------------------------------
// Basis: {"Z": [[...]]}, columns are the basis vectors.

inline Matrix basis_from_json(const json& j) { return matrix_from_json(member(j, "Z")); }

inline json to_json(const EigenbasisCertificate& cert) {
  json pairs = json::array();
  for (const auto& p : cert.pairs)
    pairs.push_back({{"i", p.i + 1}, {"j", p.j + 1}, {"alpha", p.alpha.str()}, {"beta", p.beta.str()}});
  return {{"Z", to_json(cert.basis)}, {"pairs", pairs}};
}

inline json to_json(const PairPattern& p) {
  static constexpr std::array<const char*, 3> names{"12", "23", "31"};
  json out = json::object();
  for (std::size_t k = 0; k < 3; ++k) out[names[k]] = {p.coeffs[k].first.str(), p.coeffs[k].second.str()};
  return out;
}

// ---------------------------------------------------------------------------
// Classification report:
// {"form": [[...]], "rank": 3, "signature": [2,1] | null, "admits": true,
//  "reason": "cone", "witness": [[...],[...],[...]] | null}

inline json to_json(const QuadricClassification& c) {
  json sig = nullptr;
  if (c.signature) sig = {c.signature->positive, c.signature->negative};
  return {{"rank", c.rank}, {"signature", sig}, {"admits", c.admits}, {"reason", to_string(c.reason)}};
}

inline json classification_report(const FindResult& r) {
  json out = to_json(r.classification);
  out["form"] = to_json(r.form.q);
  out["status"] = to_string(r.status);
  out["height"] = r.height;
  if (r.witness) {
    json w = json::array();
    for (const auto& v : *r.witness) w.push_back(to_json(v));
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["eigenbasis"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  return out;
}

struct ClassificationReport {
  Matrix form;
  std::size_t rank = 0;
  std::optional<std::array<std::size_t, 2>> signature;
  bool admits = false;
  std::string reason;
  std::optional<std::vector<Vector>> witness;
};

/// Reads back a classification report, validating its schema.
inline ClassificationReport classification_report_from_json(const json& j) {
  ClassificationReport r;
  r.form = matrix_from_json(member(j, "form"));
  if (r.form.rows() != 3 || r.form.cols() != 3) throw ParseError("form must be 3x3");
  const json& rank_j = member(j, "rank");
  if (!rank_j.is_number_unsigned() || rank_j.get<std::size_t>() > 3) throw ParseError("rank must be 0..3");
  r.rank = rank_j.get<std::size_t>();
  const json& sig = member(j, "signature");
  if (!sig.is_null()) {
    if (!sig.is_array() || sig.size() != 2) throw ParseError("signature must be [p, n] or null");
    r.signature = std::array<std::size_t, 2>{sig[0].get<std::size_t>(), sig[1].get<std::size_t>()};
    if ((*r.signature)[0] + (*r.signature)[1] != r.rank) throw ParseError("signature does not add up to rank");
  }
  const json& admits = member(j, "admits");
  if (!admits.is_boolean()) throw ParseError("admits must be a boolean");
  r.admits = admits.get<bool>();
  const json& reason = member(j, "reason");
  if (!reason.is_string()) throw ParseError("reason must be a string");
  r.reason = reason.get<std::string>();
  const json& w = member(j, "witness");
  if (!w.is_null()) {
    if (!w.is_array() || w.size() != 3) throw ParseError("witness must hold three vectors or be null");
    std::vector<Vector> vs;
    for (const auto& v : w) vs.push_back(vector_from_json(v));
    r.witness = std::move(vs);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Equivalence certificate: {"Z": [[...]], "Zprime": [[...]], "Phi": [[...]], "mu": [...]}

struct EquivalenceCertificate {
  Matrix z;
  Matrix z_prime;
  Matrix phi;
  std::array<Scalar, 3> mu;
};

inline EquivalenceCertificate equivalence_from_json(const json& j) {
  EquivalenceCertificate c{matrix_from_json(member(j, "Z")), matrix_from_json(member(j, "Zprime")),
                           matrix_from_json(member(j, "Phi")), {}};
  const Vector mu = vector_from_json(member(j, "mu"));
  if (mu.size() != 3) throw ParseError("mu must have three entries");
  for (std::size_t k = 0; k < 3; ++k) c.mu[k] = mu[k];
  return c;
}

inline json to_json(const EquivalenceCertificate& c) {
  return {{"Z", to_json(c.z)},
          {"Zprime", to_json(c.z_prime)},
          {"Phi", to_json(c.phi)},
          {"mu", to_json(Vector(c.mu.begin(), c.mu.end()))}};
}

}  // namespace nijenhuis::json_io
