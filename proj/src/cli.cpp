#include "quadraform/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "quadraform/constructions.hpp"
#include "quadraform/errors.hpp"
#include "quadraform/reverse.hpp"

namespace quadraform::cli {

namespace {

constexpr const char* kIndexConvention = "(i,a) -> i*m+a";

Json base_certificate(const std::string& operation) {
  Json cert;
  cert["tool"] = "quadraform";
  cert["operation"] = operation;
  cert["index_convention"] = kIndexConvention;
  return cert;
}

Json violation_to_json(const LieViolation& v) {
  Json j;
  j["axiom"] = v.kind == LieViolation::Kind::Antisymmetry ? "antisymmetry" : "jacobi";
  j["index"] = {v.index[0], v.index[1], v.index[2], v.index[3]};
  j["residue"] = rational_to_string(v.residue);
  return j;
}

Json violation_to_json(const AssocViolation& v) {
  Json j;
  switch (v.kind) {
    case AssocViolation::Kind::Commutativity: j["axiom"] = "commutativity"; break;
    case AssocViolation::Kind::Associativity: j["axiom"] = "associativity"; break;
    case AssocViolation::Kind::Unit: j["axiom"] = "unit"; break;
  }
  j["index"] = {v.index[0], v.index[1], v.index[2], v.index[3]};
  j["residue"] = rational_to_string(v.residue);
  return j;
}

Json report_to_json(const MetricReport& r) {
  Json j;
  j["symmetric"] = r.symmetric;
  j["invariant"] = r.invariant;
  j["nondegenerate"] = r.nondegenerate;
  if (r.symmetry_witness) j["symmetry_witness"] = {(*r.symmetry_witness)[0], (*r.symmetry_witness)[1]};
  if (r.invariance_witness)
    j["invariance_witness"] = {(*r.invariance_witness)[0], (*r.invariance_witness)[1],
                               (*r.invariance_witness)[2]};
  if (r.degeneracy_witness) j["degeneracy_witness"] = vec_to_json(*r.degeneracy_witness);
  return j;
}

Json subspace_to_json(const Subspace& s) {
  Json j = Json::array();
  for (const auto& v : s.basis()) j.push_back(vec_to_json(v));
  return j;
}

void check_dim_cap(std::size_t dim, const Options& opt) {
  if (dim > opt.max_dim)
    throw Error(ErrorCode::LimitExceeded,
                "dimension " + std::to_string(dim) + " exceeds QUADRAFORM_MAX_DIM = " +
                    std::to_string(opt.max_dim));
}

const LieAlgebra& require_lie(const AlgebraFile& file) {
  if (!file.lie) throw Error(ErrorCode::ParseError, "input file has no 'lie' part");
  return *file.lie;
}

const AssocAlgebra& require_assoc(const AlgebraFile& file) {
  if (!file.assoc) throw Error(ErrorCode::ParseError, "input file has no 'assoc' part");
  return *file.assoc;
}

/// Candidate metric on g: the supplied form when present (verified), else a
/// nondegenerate combination of the invariant symmetric forms. Returns
/// nullopt (with the solution-space basis in *certificate) when g admits
/// none within the proven bound.
std::optional<BilinearForm> candidate_metric(const LieAlgebra& g,
                                             const std::optional<BilinearForm>& supplied,
                                             std::optional<long> kmax, Json* certificate) {
  if (supplied) {
    MetricReport report = verify_invariant_metric(g, *supplied);
    (*certificate)["supplied_form_check"] = report_to_json(report);
    if (!report.all_ok()) return std::nullopt;
    return supplied;
  }
  std::vector<BilinearForm> basis = invariant_symmetric_forms(g);
  Json basis_json = Json::array();
  for (const auto& b : basis) basis_json.push_back(matrix_to_json(b.matrix()));
  (*certificate)["invariant_form_space"] = std::move(basis_json);
  long bound = kmax.value_or(nondegeneracy_search_bound(g.dim()));
  (*certificate)["search_bound"] = bound;
  (*certificate)["search_bound_is_proof"] = bound >= nondegeneracy_search_bound(g.dim());
  return find_nondegenerate(basis, bound);
}

}  // namespace

std::size_t max_dim_from_env() {
  if (const char* env = std::getenv("QUADRAFORM_MAX_DIM")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
    throw Error(ErrorCode::ParseError, "QUADRAFORM_MAX_DIM is not a positive integer");
  }
  return 128;
}

CommandResult cmd_validate(const Json& input) {
  AlgebraFile file = parse_algebra_file(input);
  Json cert = base_certificate("validate");
  cert["inputs_digest"] = digest(input.dump());
  std::ostringstream out;
  bool ok = true, any = false;
  if (file.lie) {
    any = true;
    auto violation = validate(*file.lie);
    cert["lie"] = Json{{"dim", file.lie->dim()}, {"ok", !violation}};
    if (violation) {
      ok = false;
      cert["lie"]["violation"] = violation_to_json(*violation);
      out << "lie: FAIL (" << cert["lie"]["violation"]["axiom"].get<std::string>() << ")\n";
    } else {
      out << "lie: ok (dim " << file.lie->dim() << ")\n";
    }
  }
  if (file.assoc) {
    any = true;
    auto violation = validate(*file.assoc);
    cert["assoc"] = Json{{"dim", file.assoc->dim()}, {"ok", !violation}};
    if (violation) {
      ok = false;
      cert["assoc"]["violation"] = violation_to_json(*violation);
      out << "assoc: FAIL (" << cert["assoc"]["violation"]["axiom"].get<std::string>() << ")\n";
    } else {
      out << "assoc: ok (dim " << file.assoc->dim() << ")\n";
    }
  }
  if (!any) throw Error(ErrorCode::ParseError, "nothing to validate: no 'lie' or 'assoc' part");
  cert["verdict"] = ok ? "ok" : "violation";
  return {ok ? 0 : 2, std::move(cert), out.str()};
}

CommandResult cmd_invariants(const Json& input) {
  AlgebraFile file = parse_algebra_file(input);
  Json cert = base_certificate("invariants");
  cert["inputs_digest"] = digest(input.dump());
  std::ostringstream out;
  bool ok = true, any = false;
  if (file.lie) {
    any = true;
    const LieAlgebra& g = *file.lie;
    if (auto violation = validate(g)) {
      cert["lie"] = Json{{"ok", false}, {"violation", violation_to_json(*violation)}};
      return {2, std::move(cert), "lie algebra fails validation\n"};
    }
    Json lie;
    lie["ok"] = true;
    lie["dim"] = g.dim();
    lie["center"] = subspace_to_json(center(g));
    lie["derived_subalgebra"] = subspace_to_json(derived_subalgebra(g));
    Json centroid = Json::array();
    for (const auto& t : centroid_basis(g)) centroid.push_back(matrix_to_json(t));
    lie["centroid_basis"] = std::move(centroid);
    Json forms = Json::array();
    std::vector<BilinearForm> basis = invariant_symmetric_forms(g);
    for (const auto& f : basis) forms.push_back(matrix_to_json(f.matrix()));
    lie["invariant_symmetric_forms"] = std::move(forms);
    if (auto metric = find_nondegenerate(basis)) {
      lie["nondegenerate_form"] = matrix_to_json(metric->matrix());
      lie["quadratic"] = true;
    } else {
      lie["quadratic"] = false;
      lie["search_bound"] = nondegeneracy_search_bound(g.dim());
    }
    lie["nilpotent"] = is_nilpotent(g);
    lie["perfect"] = is_perfect(g);
    out << "lie: dim " << g.dim() << ", center dim " << center(g).dim() << ", centroid dim "
        << lie["centroid_basis"].size() << ", quadratic " << (lie["quadratic"].get<bool>() ? "yes" : "no")
        << "\n";
    cert["lie"] = std::move(lie);
  }
  if (file.assoc) {
    any = true;
    const AssocAlgebra& S = *file.assoc;
    if (auto violation = validate(S)) {
      cert["assoc"] = Json{{"ok", false}, {"violation", violation_to_json(*violation)}};
      return {2, std::move(cert), "assoc algebra fails validation\n"};
    }
    Json assoc;
    assoc["ok"] = true;
    assoc["dim"] = S.dim();
    Json forms = Json::array();
    std::vector<BilinearForm> basis = frobenius_forms(S);
    for (const auto& f : basis) forms.push_back(matrix_to_json(f.matrix()));
    assoc["frobenius_forms"] = std::move(forms);
    if (auto gamma = find_nondegenerate(basis)) {
      assoc["nondegenerate_form"] = matrix_to_json(gamma->matrix());
      assoc["frobenius"] = true;
    } else {
      assoc["frobenius"] = false;
      assoc["search_bound"] = nondegeneracy_search_bound(S.dim());
    }
    out << "assoc: dim " << S.dim() << ", frobenius "
        << (assoc["frobenius"].get<bool>() ? "yes" : "no") << "\n";
    cert["assoc"] = std::move(assoc);
  }
  if (!any) throw Error(ErrorCode::ParseError, "nothing to analyze: no 'lie' or 'assoc' part");
  cert["verdict"] = ok ? "ok" : "violation";
  return {0, std::move(cert), out.str()};
}

CommandResult cmd_current_metric(const Json& g_input, const Json& s_input, const Options& opt) {
  AlgebraFile g_file = parse_algebra_file(g_input);
  AlgebraFile s_file = parse_algebra_file(s_input);
  const LieAlgebra& g = require_lie(g_file);
  const AssocAlgebra& S = s_file.assoc ? *s_file.assoc : require_assoc(g_file);
  check_dim_cap(g.dim() * S.dim(), opt);

  Json cert = base_certificate("current-metric");
  cert["inputs_digest"] = Json{{"g", digest(g_input.dump())}, {"S", digest(s_input.dump())}};
  std::ostringstream out;

  if (auto violation = validate(g)) {
    cert["verdict"] = "invalid-lie-input";
    cert["violation"] = violation_to_json(*violation);
    return {2, std::move(cert), "g fails the Lie axioms\n"};
  }
  if (auto violation = validate(S)) {
    cert["verdict"] = "invalid-assoc-input";
    cert["violation"] = violation_to_json(*violation);
    return {2, std::move(cert), "S fails the algebra axioms\n"};
  }

  CurrentAlgebra current = build_current(g, S);

  if (opt.verify_only) {
    const std::optional<BilinearForm>& supplied =
        g_file.current_form ? g_file.current_form : s_file.current_form;
    if (!supplied)
      throw Error(ErrorCode::ParseError, "--verify-only needs a 'current_form' in the input");
    MetricReport report = verify_invariant_metric(current.as_lie, *supplied);
    cert["checks"] = report_to_json(report);
    cert["verdict"] = report.all_ok() ? "metric-verified" : "not-a-metric";
    out << "verify-only: " << cert["verdict"].get<std::string>() << "\n";
    return {report.all_ok() ? 0 : 2, std::move(cert), out.str()};
  }

  std::optional<BilinearForm> base = candidate_metric(g, g_file.form, opt.max_box, &cert);
  if (!base) {
    cert["verdict"] = "g-not-quadratic";
    out << "no invariant metric on g\n";
    return {2, std::move(cert), out.str()};
  }
  cert["base_metric"] = matrix_to_json(base->matrix());

  std::vector<RationalMatrix> centroid = centroid_basis(g);
  Json centroid_json = Json::array();
  for (const auto& t : centroid) centroid_json.push_back(matrix_to_json(t));
  cert["centroid_basis"] = std::move(centroid_json);

  auto solution = solve_current_metric(g, *base, S, opt.max_box);
  if (!solution) {
    std::vector<AlphaMap> space = alpha_condition_space(g, *base, S);
    Json space_json = Json::array();
    for (const auto& alpha : space) {
      if (auto coords = alpha.coords_over(centroid)) {
        Json alpha_json = Json::array();
        for (const auto& c : *coords) alpha_json.push_back(vec_to_json(c));
        space_json.push_back(std::move(alpha_json));
      }
    }
    long bound = opt.max_box.value_or(nondegeneracy_search_bound(g.dim() * S.dim()));
    cert["verdict"] = "no-invariant-metric";
    cert["alpha_condition_space"] = std::move(space_json);
    cert["search_bound"] = bound;
    cert["search_bound_is_proof"] =
        bound >= nondegeneracy_search_bound(g.dim() * S.dim());
    cert["note"] =
        "every alpha in the condition space induces a degenerate form on the exhausted grid; "
        "by the degree bound this certifies the whole space when search_bound_is_proof";
    out << "no invariant metric on g (x) S in the characterized family\n";
    return {2, std::move(cert), out.str()};
  }

  Json alpha_json = Json::array();
  if (auto coords = solution->alpha.coords_over(centroid)) {
    for (const auto& c : *coords) alpha_json.push_back(vec_to_json(c));
  } else {
    throw Error(ErrorCode::InternalInconsistency, "solved alpha is not centroid-valued");
  }
  MetricReport report = verify_invariant_metric(current.as_lie, solution->metric);
  cert["verdict"] = "metric-found";
  cert["alpha_over_centroid"] = std::move(alpha_json);
  cert["current_metric"] = matrix_to_json(solution->metric.matrix());
  cert["checks"] = report_to_json(report);
  cert["kernel_intersection_dim"] = solution->f_kernel.size();
  out << "invariant metric found on g (x) S (dim " << g.dim() * S.dim() << ")\n";
  return {0, std::move(cert), out.str()};
}

CommandResult cmd_double_extend(const Json& input, const Options& opt) {
  AlgebraFile file = parse_algebra_file(input);
  const LieAlgebra& h = require_lie(file);
  if (!file.form) throw Error(ErrorCode::ParseError, "double-extend needs a 'form' (B_h)");
  if (!file.derivation) throw Error(ErrorCode::ParseError, "double-extend needs a 'D' matrix");
  check_dim_cap(h.dim() + 2, opt);

  Json cert = base_certificate("double-extend");
  cert["inputs_digest"] = digest(input.dump());
  DoubleExtensionData ext = double_extension(h, *file.form, *file.derivation);
  cert["verdict"] = "extended";
  cert["result"] = lie_to_json(ext.result);
  cert["result_metric"] = matrix_to_json(ext.B_ext.matrix());
  cert["c_in_derived"] = ext.c_in_derived;
  std::ostringstream out;
  out << "double extension built: dim " << ext.result.dim() << "\n";

  if (opt.round_trip) {
    Vec c = unit_vec(ext.result.dim(), ext.result.dim() - 1);
    WittSplitData split = witt_split(ext.result, ext.B_ext, c);
    DoubleExtensionData again = double_extension(split.h, split.B_h, split.D);
    LieAlgebra renamed = change_of_basis(ext.result, split.to_witt_basis);
    bool identical = true;
    for (std::size_t i = 0; i < renamed.dim() && identical; ++i)
      for (std::size_t j = 0; j < renamed.dim() && identical; ++j)
        for (std::size_t k = 0; k < renamed.dim(); ++k)
          if (renamed.c(i, j, k) != again.result.c(i, j, k)) {
            identical = false;
            break;
          }
    RationalMatrix form_in_witt = split.to_witt_basis.transposed() *
                                  ext.B_ext.matrix() * split.to_witt_basis;
    if (form_in_witt != again.B_ext.matrix()) identical = false;
    cert["round_trip_identical"] = identical;
    if (!identical)
      throw Error(ErrorCode::InternalInconsistency, "double-extend round trip mismatch");
    out << "round trip with witt-split: identical tensors\n";
  }
  return {0, std::move(cert), out.str()};
}

CommandResult cmd_witt_split(const Json& input, const Options& opt) {
  AlgebraFile file = parse_algebra_file(input);
  const LieAlgebra& g = require_lie(file);
  if (!file.form) throw Error(ErrorCode::ParseError, "witt-split needs a 'form' (B)");
  if (!file.center_vector) throw Error(ErrorCode::ParseError, "witt-split needs a 'c' vector");
  check_dim_cap(g.dim(), opt);

  Json cert = base_certificate("witt-split");
  cert["inputs_digest"] = digest(input.dump());
  WittSplitData split = witt_split(g, *file.form, *file.center_vector);
  cert["verdict"] = "split";
  cert["c_in_derived"] = split.c_in_derived;
  cert["d"] = vec_to_json(split.d);
  Json h_basis = Json::array();
  for (const auto& v : split.h_basis) h_basis.push_back(vec_to_json(v));
  cert["h_basis"] = std::move(h_basis);
  cert["h"] = lie_to_json(split.h);
  cert["B_h"] = matrix_to_json(split.B_h.matrix());
  cert["D"] = matrix_to_json(split.D);
  std::ostringstream out;
  out << "witt split: h has dim " << split.h.dim() << "\n";

  if (opt.round_trip) {
    DoubleExtensionData rebuilt = double_extension(split.h, split.B_h, split.D);
    LieAlgebra renamed = change_of_basis(g, split.to_witt_basis);
    bool identical = true;
    for (std::size_t i = 0; i < renamed.dim() && identical; ++i)
      for (std::size_t j = 0; j < renamed.dim() && identical; ++j)
        for (std::size_t k = 0; k < renamed.dim(); ++k)
          if (renamed.c(i, j, k) != rebuilt.result.c(i, j, k)) {
            identical = false;
            break;
          }
    RationalMatrix form_in_witt =
        split.to_witt_basis.transposed() * file.form->matrix() * split.to_witt_basis;
    if (form_in_witt != rebuilt.B_ext.matrix()) identical = false;
    cert["round_trip_identical"] = identical;
    if (!identical)
      throw Error(ErrorCode::InternalInconsistency, "witt-split round trip mismatch");
    out << "round trip with double-extend: identical tensors\n";
  }
  return {0, std::move(cert), out.str()};
}

CommandResult cmd_reverse(const Json& input, const Options& opt) {
  AlgebraFile file = parse_algebra_file(input);
  const LieAlgebra& g = require_lie(file);
  const AssocAlgebra& S = require_assoc(file);
  if (!file.current_form) throw Error(ErrorCode::ParseError, "reverse needs a 'current_form'");
  check_dim_cap(g.dim() * S.dim(), opt);

  Json cert = base_certificate("reverse");
  cert["inputs_digest"] = digest(input.dump());
  std::ostringstream out;

  if (auto violation = validate(g)) {
    cert["verdict"] = "invalid-lie-input";
    cert["violation"] = violation_to_json(*violation);
    return {2, std::move(cert), "g fails the Lie axioms\n"};
  }
  if (auto violation = validate(S)) {
    cert["verdict"] = "invalid-assoc-input";
    cert["violation"] = violation_to_json(*violation);
    return {2, std::move(cert), "S fails the algebra axioms\n"};
  }

  CurrentAlgebra current = build_current(g, S);
  MetricReport current_check = verify_invariant_metric(current.as_lie, *file.current_form);
  cert["current_form_check"] = report_to_json(current_check);
  if (!current_check.all_ok()) {
    cert["verdict"] = "current-form-not-a-metric";
    return {2, std::move(cert), "the supplied current form is not an invariant metric\n"};
  }

  std::size_t m = S.dim();
  Vec s = opt.s_index ? unit_vec(m, *opt.s_index) : S.unit();
  if (opt.s_index && *opt.s_index >= m)
    throw Error(ErrorCode::ParseError, "--s-index out of range");
  cert["s"] = vec_to_json(s);

  // Shortcut for perfect g with a full-nil-index s.
  if (is_perfect(g)) {
    auto index = nil_index(S, s);
    if (!vec_is_zero(s) && index && *index == m) {
      BilinearForm recovered = metric_from_nilpotent(current, *file.current_form, s);
      cert["verdict"] = "metric-recovered";
      cert["method"] = "nilpotent-transfer";
      cert["recovered_metric"] = matrix_to_json(recovered.matrix());
      cert["checks"] = report_to_json(verify_invariant_metric(g, recovered));
      out << "metric recovered through B_{s^{m-1}}\n";
      return {0, std::move(cert), out.str()};
    }
  }

  std::optional<BilinearForm> base = candidate_metric(g, file.form, opt.max_box, &cert);
  if (base) {
    RationalMatrix f = canonical_F(current, *base, *file.current_form);
    RationalMatrix h = canonical_H(current, *base, *file.current_form);
    RecoverOutcome outcome = recover_metric(current, *file.current_form, s, f, h);
    if (outcome.failed == RecoverOutcome::Failed::None) {
      cert["verdict"] = "metric-recovered";
      cert["method"] = "canonical-transfer";
      cert["F"] = matrix_to_json(f);
      cert["H"] = matrix_to_json(h);
      cert["recovered_metric"] = matrix_to_json(outcome.metric->matrix());
      cert["checks"] = report_to_json(verify_invariant_metric(g, *outcome.metric));
      out << "metric recovered through the canonical (F, H) pair\n";
      return {0, std::move(cert), out.str()};
    }
    cert["verdict"] = "condition-failed";
    cert["failed_condition"] = outcome.failed == RecoverOutcome::Failed::DiagramI      ? "i"
                               : outcome.failed == RecoverOutcome::Failed::SymmetryII ? "ii"
                                                                                       : "iii";
    cert["witness"] = outcome.witness;
    return {2, std::move(cert), "canonical transfer failed: " + outcome.witness + "\n"};
  }

  // No candidate metric on g: bounded search over (s, F, H) in the
  // equivariant F space, s over the unit then the S basis vectors, F over
  // the integer boxes, H the canonical right inverse of F.
  std::vector<RationalMatrix> f_space = equivariant_f_space(current);
  long bound = opt.max_box.value_or(1);
  cert["equivariant_space_dim"] = f_space.size();
  cert["search_bound"] = bound;
  std::vector<Vec> s_candidates{S.unit()};
  for (std::size_t a = 0; a < m; ++a) {
    Vec e = unit_vec(m, a);
    if (e != S.unit()) s_candidates.push_back(std::move(e));
  }
  std::size_t n = g.dim();
  std::optional<BilinearForm> recovered;
  Json found;
  enumerate_integer_boxes(f_space.size(), bound, [&](const std::vector<long>& coeffs) {
    RationalMatrix f(n, n * m);
    for (std::size_t t = 0; t < f_space.size(); ++t) {
      if (coeffs[t] == 0) continue;
      f = f + f_space[t].scaled(Rational(coeffs[t]));
    }
    if (f.rank() != n) return false;
    RationalMatrix h(n * m, n);
    for (std::size_t col = 0; col < n; ++col) {
      auto x = f.solve(unit_vec(n, col));
      if (!x) return false;
      h.set_col(col, *x);
    }
    for (const auto& s_cand : s_candidates) {
      RecoverOutcome outcome = recover_metric(current, *file.current_form, s_cand, f, h);
      if (outcome.failed == RecoverOutcome::Failed::None) {
        recovered = std::move(outcome.metric);
        found["F"] = matrix_to_json(f);
        found["H"] = matrix_to_json(h);
        found["s"] = vec_to_json(s_cand);
        return true;
      }
    }
    return false;
  });
  if (recovered) {
    cert["verdict"] = "metric-recovered";
    cert["method"] = "bounded-search";
    cert["F"] = found["F"];
    cert["H"] = found["H"];
    cert["s"] = found["s"];
    cert["recovered_metric"] = matrix_to_json(recovered->matrix());
    cert["checks"] = report_to_json(verify_invariant_metric(g, *recovered));
    out << "metric recovered by bounded search over (s, F, H)\n";
    return {0, std::move(cert), out.str()};
  }
  cert["verdict"] = "no-pair-found";
  cert["note"] = "bounded search over the equivariant F space exhausted without a valid (s, F, H)";
  return {2, std::move(cert), "no valid (s, F, H) found in the bounded search\n"};
}

CommandResult cmd_heisenberg(std::size_t n, bool extended) {
  Json cert = base_certificate(extended ? "heisenberg-extended" : "heisenberg");
  if (extended) {
    ExtendedHeisenberg ext = heisenberg_extended(n);
    cert["lie"] = lie_to_json(ext.algebra);
    cert["form"] = matrix_to_json(ext.metric.matrix());
  } else {
    cert["lie"] = lie_to_json(heisenberg(n));
  }
  cert["verdict"] = "built";
  return {0, std::move(cert),
          std::string(extended ? "h_n(D)" : "h_n") + " built for n = " + std::to_string(n) + "\n"};
}

CommandResult cmd_frobenius(const Json& input) {
  AlgebraFile file = parse_algebra_file(input);
  const AssocAlgebra& S = require_assoc(file);
  Json cert = base_certificate("frobenius");
  cert["inputs_digest"] = digest(input.dump());
  if (auto violation = validate(S)) {
    cert["verdict"] = "invalid-assoc-input";
    cert["violation"] = violation_to_json(*violation);
    return {2, std::move(cert), "S fails the algebra axioms\n"};
  }
  std::vector<BilinearForm> basis = frobenius_forms(S);
  Json forms = Json::array();
  for (const auto& f : basis) forms.push_back(matrix_to_json(f.matrix()));
  cert["frobenius_forms"] = std::move(forms);
  cert["search_bound"] = nondegeneracy_search_bound(S.dim());
  if (auto gamma = find_nondegenerate(basis)) {
    cert["verdict"] = "frobenius";
    cert["nondegenerate_form"] = matrix_to_json(gamma->matrix());
    return {0, std::move(cert), "S admits a nondegenerate invariant form\n"};
  }
  cert["verdict"] = "no-frobenius-form";
  cert["note"] = "the whole invariant-form space is degenerate (certified by the grid bound)";
  return {2, std::move(cert), "S admits no nondegenerate invariant form\n"};
}

}  // namespace quadraform::cli
