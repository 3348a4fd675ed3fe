#pragma once

// End-to-end sweep over both catalogs: admit sets, subalgebra forms,
// reference eigenbases and their structure constants, pipeline witnesses,
// and the gl(n), central-extension and nilpotent fixtures.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nijenhuis/catalog.hpp"
#include "nijenhuis/equivalence.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"
#include "nijenhuis/quadric.hpp"

namespace nijenhuis::reproduce {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;

  void note(const std::string& text) {
    passed = false;
    detail += (detail.empty() ? "" : "; ") + text;
  }
};

struct Report {
  std::vector<CheckOutcome> checks;
  std::vector<std::string> real_admitting;
  std::vector<std::string> complex_admitting;
  std::string contrast;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
  }
};

struct Options {
  /// Test mode: replace the named catalog family (e.g. "a3.4") by a perturbed tensor.
  std::optional<std::string> corrupt;
  std::size_t height = 5;
};

inline std::vector<Scalar> real_samples() { return {-1, 0, 1, 2}; }
inline std::vector<Scalar> complex_samples() { return {0, 1, Scalar::i(), Scalar(1) + Scalar::i()}; }

/// Every catalog entry at the sampled parameters, in catalog order.
inline std::vector<catalog::CatalogId> sampled_catalog() {
  using catalog::CatalogId;
  std::vector<CatalogId> out;
  for (auto f : catalog::kRealFamilies) {
    if (!catalog::info(f).parametric) {
      out.emplace_back(f);
      continue;
    }
    for (const auto& p : real_samples()) out.emplace_back(f, p);
  }
  for (auto f : catalog::kComplexFamilies) {
    if (!catalog::info(f).parametric) {
      out.emplace_back(f);
      continue;
    }
    for (const auto& p : complex_samples()) out.emplace_back(f, p);
  }
  return out;
}

inline const std::set<std::string>& expected_real_admitting() {
  static const std::set<std::string> s{"a3.1", "a3.4", "a3.5", "a3.8"};
  return s;
}
inline const std::set<std::string>& expected_complex_admitting() {
  static const std::set<std::string> s{"b3.1", "b3.3", "b3.4", "b3.6"};
  return s;
}

/// The subalgebra form each family must produce (independent of parameter).
inline Matrix expected_form(catalog::Family f) {
  using catalog::Family;
  switch (f) {
    case Family::A32:
    case Family::B32: return Matrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    case Family::A33:
    case Family::B33: return Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case Family::A34: return Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    case Family::A36:
    case Family::B35: return Matrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}};
    case Family::A37:
    case Family::B36: return Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case Family::A38: return Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}};
    default: return Matrix(3, 3);
  }
}

/// Structure constants of the example bases: [z1,z2], [z2,z3], [z3,z1] in z-coordinates.
inline std::array<Vector, 3> expected_sl2_example_brackets() {
  return {Vector{1, -1, 0}, Vector{0, -2, 1}, Vector{-2, 0, -1}};
}
inline std::array<Vector, 3> expected_type_vi_example_brackets(const Scalar& b) {
  const Scalar s = Scalar(1) + b;
  return {Vector{-s, s, 0}, Vector{0, 0, b - Scalar(1)}, Vector{0, 0, Scalar(1) - b}};
}

inline std::array<Vector, 3> cyclic_brackets(const LieAlgebra& alg) {
  return {alg.basis_bracket(0, 1), alg.basis_bracket(1, 2), alg.basis_bracket(2, 0)};
}

/// Negates the tensor; an abelian algebra gains [e2,e3] = e1 instead.
inline LieAlgebra corrupted(const LieAlgebra& alg) {
  if (is_abelian(alg))
    return LieAlgebra::from_brackets(alg.dim(), alg.field(), {{1, 2, unit_vector(alg.dim(), 0)}});
  std::vector<Scalar> c = alg.constants();
  for (auto& s : c) s = -s;
  return LieAlgebra(alg.dim(), alg.field(), std::move(c));
}

/// Involution pairs on gl(2) and gl(3).
inline std::vector<std::pair<Matrix, Matrix>> involution_fixtures() {
  const Matrix flip2{{1, 0}, {0, -1}};
  const Matrix swap2{{0, 1}, {1, 0}};
  const Matrix shear2{{1, 1}, {0, -1}};
  const Matrix lower2{{1, 0}, {2, -1}};
  const Matrix flip3{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  const Matrix swap3{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const Matrix shear3{{1, 0, 1}, {0, 1, 0}, {0, 0, -1}};
  return {{flip2, swap2},   {flip2, flip2},  {swap2, shear2}, {shear2, lower2},
          {lower2, flip2},  {flip3, swap3},  {swap3, shear3}, {shear3, flip3}};
}

/// Nilpotent 3-dimensional fixtures: the abelian and Heisenberg algebras in several bases.
inline std::vector<LieAlgebra> nilpotent_fixtures() {
  using catalog::CatalogId;
  using catalog::Family;
  std::vector<LieAlgebra> out;
  const std::array<Matrix, 3> bases{Matrix::identity(3), Matrix{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}},
                                    Matrix{{2, 0, 1}, {1, 1, 0}, {0, -1, 1}}};
  for (auto f : {Family::A31, Family::A32, Family::B31, Family::B32})
    for (const auto& z : bases) out.push_back(change_basis(catalog::algebra(CatalogId(f)), z));
  return out;
}

inline Report run(const Options& opts = {}) {
  using catalog::CatalogId;
  using catalog::Family;
  Report report;

  auto load = [&](const CatalogId& id) {
    LieAlgebra alg = catalog::algebra(id);
    if (opts.corrupt && *opts.corrupt == id.name()) return corrupted(alg);
    return alg;
  };
  const auto entries = sampled_catalog();

  // Admit sets, per field. Every sampled parameter must agree with its family.
  {
    CheckOutcome real{"real-admit-set", true, {}};
    CheckOutcome complex{"complex-admit-set", true, {}};
    for (const auto& id : entries) {
      const bool admits = admits_regular_semisimple(load(id)).admits;
      const bool is_real = id.field() == Field::Real;
      const auto& expected = is_real ? expected_real_admitting() : expected_complex_admitting();
      auto& list = is_real ? report.real_admitting : report.complex_admitting;
      if (admits && std::find(list.begin(), list.end(), id.name()) == list.end()) list.push_back(id.name());
      if (admits != (expected.count(id.name()) > 0)) {
        auto& check = is_real ? real : complex;
        check.note(id.label() + (admits ? " admits unexpectedly" : " should admit"));
      }
    }
    report.checks.push_back(real);
    report.checks.push_back(complex);
  }

  {
    CheckOutcome forms{"subalgebra-forms", true, {}};
    for (const auto& id : entries) {
      if (!(subalgebra_form(load(id)).q == expected_form(id.family()))) {
        forms.note(id.label() + " form differs");
      }
    }
    report.checks.push_back(forms);
  }

  {
    CheckOutcome bases{"reference-eigenbases", true, {}};
    auto fail = [&](const std::string& what) {
      bases.note(what);
    };
    auto check_brackets = [&](const std::string& label, const LieAlgebra& alg, const Matrix& z,
                              const std::array<Vector, 3>& expected) {
      if (!verify_nijenhuis_eigenbasis(alg, z)) return fail(label + " basis is not a Nijenhuis eigenbasis");
      if (cyclic_brackets(change_basis(alg, z)) != expected) fail(label + " structure constants differ");
    };
    for (const auto& id : entries) {
      const LieAlgebra alg = load(id);
      switch (id.family()) {
        case Family::A34:
        case Family::B33:
          check_brackets(id.label(), alg, catalog::reference_eigenbasis(id), expected_sl2_example_brackets());
          break;
        case Family::A38:
          check_brackets(id.label(), alg, catalog::reference_eigenbasis(id),
                         expected_type_vi_example_brackets(*id.parameter()));
          break;
        case Family::B36: {
          const Scalar b = catalog::type_vi_parameter_for_b36(*id.parameter());
          check_brackets(id.label(), alg, catalog::reference_eigenbasis(id), expected_type_vi_example_brackets(b));
          check_brackets(id.label() + " split form", catalog::type_vi_presentation(*id.parameter(), Field::Complex),
                         catalog::type_vi_example_basis(), expected_type_vi_example_brackets(*id.parameter()));
          break;
        }
        case Family::A35:
        case Family::B34:
          if (!verify_nijenhuis_eigenbasis(alg, catalog::reference_eigenbasis(id)))
            fail(id.label() + " identity basis rejected");
          break;
        default: break;
      }
    }
    check_brackets("sl(2) split form over C", catalog::sl2_split_presentation(Field::Complex),
                   catalog::sl2_example_basis(), expected_sl2_example_brackets());
    report.checks.push_back(bases);
  }

  {
    CheckOutcome pipeline{"pipeline-witnesses", true, {}};
    const std::vector<Scalar> lambda{0, 1, 2};
    for (const auto& id : entries) {
      const LieAlgebra alg = load(id);
      const FindResult r = find_eigenbasis(alg, opts.height);
      if (r.status == FindStatus::DoesNotAdmit) continue;
      if (r.status != FindStatus::Certified) {
        pipeline.note(id.label() + " admits but no witness up to height " + std::to_string(opts.height));
        continue;
      }
      const LinearOperator op = operator_from_eigenbasis(r.certificate->basis, lambda);
      if (!is_algebraic_nijenhuis(alg, op) || !is_regular_semisimple(alg, op)) {
        pipeline.note(id.label() + " witness operator fails");
      }
    }
    report.checks.push_back(pipeline);
  }

  {
    CheckOutcome ex1{"gl-involution-operators", true, {}};
    for (const auto& [a, b] : involution_fixtures()) {
      const auto fx = catalog::gl_n_example_operator(a, b);
      if (!is_algebraic_nijenhuis(fx.algebra, fx.op)) {
        ex1.note("gl(" + std::to_string(a.rows()) + ") fixture has nonzero torsion");
      }
    }
    report.checks.push_back(ex1);
  }

  {
    CheckOutcome ex2{"central-extension-operators", true, {}};
    const std::vector<Vector> covectors{{1, 0, 0}, {0, 1, -1}, {2, -3, Scalar::fraction(1, 2)}};
    for (auto f : {Family::A32, Family::A34, Family::A35}) {
      const LieAlgebra base = load(CatalogId(f));
      for (const auto& a : covectors) {
        const auto fx = catalog::central_extension_operator(base, a, 1);
        const bool square_zero = (fx.op * fx.op).matrix().is_zero();
        if (!square_zero || !is_algebraic_nijenhuis(fx.algebra, fx.op) || !check_jacobi(fx.algebra)) {
          ex2.note(catalog::info(f).name + std::string(" extension fails"));
        }
      }
    }
    report.checks.push_back(ex2);
  }

  {
    CheckOutcome ex3{"nilpotent-implies-abelian", true, {}};
    for (const auto& alg : nilpotent_fixtures()) {
      if (!is_nilpotent(alg)) {
        ex3.note("fixture is not nilpotent");
      } else if (admits_regular_semisimple(alg).admits && !is_abelian(alg)) {
        ex3.note("non-abelian nilpotent fixture admits");
      }
    }
    report.checks.push_back(ex3);
  }

  {
    CheckOutcome sl2{"sl2-pattern", true, {}};
    const auto p = sl2_pattern(load(CatalogId(Family::A34)), catalog::sl2_example_basis());
    if (!p || !(*p.triple == Sl2Triple{-1, 1, -2})) {
      sl2.note(p ? "a3.4 reference basis gives (A,B,C) = (" + p.triple->a.str() + "," + p.triple->b.str() + "," +
                       p.triple->c.str() + ")"
                 : "a3.4 reference basis: " + p.violation);
    }
    report.checks.push_back(sl2);
  }

  {
    const bool real_so3 = admits_regular_semisimple(load(CatalogId(Family::A33))).admits;
    const bool complex_so3 = admits_regular_semisimple(load(CatalogId(Family::B33))).admits;
    report.contrast = std::string("so(3): a3.3 over R admits=") + (real_so3 ? "true" : "false") +
                      ", b3.3 over C admits=" + (complex_so3 ? "true" : "false");
    report.checks.push_back({"so3-real-complex-contrast", !real_so3 && complex_so3, report.contrast});
  }
  return report;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"command", "reproduce"},
          {"passed", r.passed()},
          {"real_admitting", r.real_admitting},
          {"complex_admitting", r.complex_admitting},
          {"contrast", r.contrast},
          {"checks", checks}};
}

}  // namespace nijenhuis::reproduce
