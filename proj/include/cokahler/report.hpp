#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/exterior.hpp"
#include "cokahler/group_action.hpp"
#include "cokahler/input.hpp"
#include "cokahler/kahler.hpp"
#include "cokahler/lefschetz.hpp"
#include "cokahler/mapping_torus.hpp"
#include "cokahler/pi1.hpp"

namespace cokahler {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "fail";
}

/// One verification outcome, together with the mathematical statement it
/// instantiates and structured per-check details.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string statement;
  Json detail = Json::object();

  friend bool operator==(const CheckResult& a, const CheckResult& b) {
    return a.name == b.name && a.status == b.status && a.statement == b.statement &&
           a.detail == b.detail;
  }
};

inline std::string check_statement(const std::string& name) {
  if (name == "monotonicity")
    return "Betti numbers of a compact co-Kahler (2n+1)-manifold increase up to the middle "
           "dimension: b_1 <= b_2 <= ... <= b_n = b_{n+1}.";
  if (name == "b1_parity")
    return "The first Betti number of a compact co-Kahler manifold is odd.";
  if (name == "poincare_duality")
    return "Poincare duality of a closed orientable (2n+1)-manifold: b_s = b_{2n+1-s}.";
  if (name == "hard_lefschetz")
    return "Hard Lefschetz property: for every j <= n, multiplication by omega^{n-j} maps "
           "degree j isomorphically onto degree 2n-j.";
  if (name == "omega_injectivity")
    return "Multiplication by the invariant Kahler class is injective on invariant cohomology "
           "below the middle dimension, forcing the invariant Betti numbers to grow.";
  if (name == "eigenvalue_parity")
    return "The monodromy acts on degree-1 cohomology as a symplectic transformation, whose "
           "eigenvalue +1 occurs with even multiplicity.";
  if (name == "oracle_agreement")
    return "The invariant-cohomology Betti formula b_s = b'_s + b'_{s-1} agrees with the "
           "Wang-sequence computation, and fixed-subspace dimensions agree with the Molien "
           "trace average and the averaging-projector rank in every degree.";
  throw ValidationError("unknown check name '" + name + "'");
}

/// Full analysis result for one input. Fields that need the finite cyclic
/// cover stay empty for infinite-order monodromy and the report is marked
/// partial.
struct Report {
  InputSpec input;
  Matrix effective_omega;  // the form actually used (user override or standard)
  OrderResult order;
  bool partial = false;

  GroupPresentation presentation_data;
  StructureGroup structure;
  bool bundle_trivial = false;
  FirstHomology h1;
  std::optional<BettiVector> wang;

  std::optional<std::vector<std::int64_t>> invariant_dims;
  std::optional<std::vector<std::vector<std::string>>> invariant_bases;
  std::optional<Matrix> omega_bar;
  std::optional<BettiVector> betti;
  std::optional<CoverData> cover;
  std::optional<ProductSubgroup> subgroup;
  std::optional<Certificate> certificate;

  std::vector<CheckResult> checks;

  friend bool operator==(const Report& a, const Report& b) {
    return a.input == b.input && a.effective_omega == b.effective_omega && a.order == b.order &&
           a.partial == b.partial && a.presentation_data == b.presentation_data &&
           a.structure == b.structure && a.bundle_trivial == b.bundle_trivial && a.h1 == b.h1 &&
           a.wang == b.wang && a.invariant_dims == b.invariant_dims &&
           a.invariant_bases == b.invariant_bases && a.omega_bar == b.omega_bar &&
           a.betti == b.betti && a.cover == b.cover && a.subgroup == b.subgroup &&
           a.certificate == b.certificate && a.checks == b.checks;
  }
};

namespace detail {

inline std::vector<std::string> basis_strings(const FixedSubspace& f, int k, int dim) {
  std::vector<std::string> out;
  out.reserve(f.basis_vectors.size());
  for (const std::vector<Rat>& v : f.basis_vectors)
    out.push_back(ExteriorElement::from_coefficient_vector(k, dim, v).to_string());
  return out;
}

}  // namespace detail

inline Report run_pipeline(const InputSpec& spec) {
  const Matrix& a = spec.matrix;
  const int n = spec.n;
  const KahlerForm omega = spec.omega ? KahlerForm(n, *spec.omega) : standard_omega(n);
  if (spec.omega && !omega.is_nondegenerate())
    throw ValidationError("the supplied omega is degenerate (det = 0)");

  Report r;
  r.input = spec;
  r.effective_omega = omega.matrix();
  r.order = matrix_order(a);
  r.presentation_data = presentation(a);
  r.structure = structure_group(a);
  r.bundle_trivial = bundle_triviality(a);
  r.h1 = first_homology(a);
  r.wang = wang_betti_oracle(a);

  const std::vector<std::string> requested = spec.checks ? *spec.checks : known_check_names();

  if (!r.order.finite) {
    r.partial = true;
    for (const std::string& name : requested)
      r.checks.push_back(CheckResult{name, CheckStatus::NotApplicable, check_statement(name),
                                     Json::object()});
    return r;
  }

  const KahlerForm omega_bar = invariant_kahler_class(a, omega);
  r.omega_bar = omega_bar.matrix();

  const InvariantSummary summary = invariant_summary(a);
  std::vector<std::int64_t> dims;
  std::vector<std::vector<std::string>> bases;
  for (int k = 0; k <= 2 * n; ++k) {
    const FixedSubspace& f = summary.by_degree[static_cast<std::size_t>(k)];
    dims.push_back(static_cast<std::int64_t>(f.dimension));
    bases.push_back(detail::basis_strings(f, k, 2 * n));
  }
  r.invariant_dims = std::move(dims);
  r.invariant_bases = std::move(bases);

  r.betti = betti_numbers(a, omega_bar);
  r.cover = cover_data(a);
  r.subgroup = product_subgroup(a);
  r.certificate = non_product_certificate(a, *r.betti);

  for (const std::string& name : requested) {
    CheckResult result;
    result.name = name;
    result.statement = check_statement(name);
    if (name == "monotonicity") {
      result.status = monotonicity_check(*r.betti, n) ? CheckStatus::Pass : CheckStatus::Fail;
    } else if (name == "b1_parity") {
      result.status = b1_parity_check(*r.betti) ? CheckStatus::Pass : CheckStatus::Fail;
      result.detail["b1"] = (*r.betti)[1];
    } else if (name == "poincare_duality") {
      result.status = poincare_duality_check(*r.betti) ? CheckStatus::Pass : CheckStatus::Fail;
    } else if (name == "hard_lefschetz") {
      const HardLefschetzReport hl = hard_lefschetz_check(omega_bar, n);
      result.status = hl.ok ? CheckStatus::Pass : CheckStatus::Fail;
      Json degrees = Json::array();
      for (const auto& d : hl.degrees)
        degrees.push_back(Json{{"j", d.j},
                               {"dimension", d.dimension},
                               {"rank", d.rank},
                               {"isomorphism", d.isomorphism}});
      result.detail["degrees"] = std::move(degrees);
    } else if (name == "omega_injectivity") {
      const InjectivityReport inj = omega_injectivity_check(a, omega_bar, n);
      result.status = inj.ok ? CheckStatus::Pass : CheckStatus::Fail;
      Json degrees = Json::array();
      for (const auto& d : inj.degrees)
        degrees.push_back(Json{{"s", d.s},
                               {"lower_dim", d.lower_dim},
                               {"upper_dim", d.upper_dim},
                               {"injective", d.injective}});
      result.detail["degrees"] = std::move(degrees);
    } else if (name == "eigenvalue_parity") {
      const Matrix pairing = symplectic_pairing(omega_bar, n);
      const EigenvalueParityResult ev = eigenvalue_one_parity_check(a, pairing);
      result.status = ev.pairing_preserved && ev.multiplicity_even ? CheckStatus::Pass
                                                                   : CheckStatus::Fail;
      result.detail["pairing_preserved"] = ev.pairing_preserved;
      result.detail["multiplicity"] = ev.multiplicity;
      result.detail["multiplicity_even"] = ev.multiplicity_even;
    } else if (name == "oracle_agreement") {
      bool ok = *r.betti == *r.wang;
      result.detail["betti_equals_wang"] = ok;
      Json table = Json::array();
      for (int k = 0; k <= 2 * n; ++k) {
        const std::size_t dim = summary.by_degree[static_cast<std::size_t>(k)].dimension;
        const std::size_t molien = molien_invariant_dim(a, k);
        const std::size_t projector_rank = rank(averaging_projector(a, k));
        const bool row_ok = molien == dim && projector_rank == dim;
        ok = ok && row_ok;
        table.push_back(Json{{"degree", k},
                             {"fixed_dim", dim},
                             {"molien", molien},
                             {"projector_rank", projector_rank}});
      }
      result.detail["degrees"] = std::move(table);
      result.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    } else {
      throw ValidationError("unknown check name '" + name + "'");
    }
    r.checks.push_back(std::move(result));
  }
  return r;
}

inline bool all_checks_pass(const Report& r) {
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

namespace detail {

inline Json rational_matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix rational_matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = Rat(j[i][k].get<std::string>());
  return m;
}

inline Json torsion_to_json(const std::vector<Int>& torsion) {
  Json arr = Json::array();
  for (const Int& t : torsion) arr.push_back(to_int64(t));
  return arr;
}

inline std::vector<Int> torsion_from_json(const Json& arr) {
  std::vector<Int> out;
  for (const Json& t : arr) out.emplace_back(t.get<std::int64_t>());
  return out;
}

inline const char* certificate_kind_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::TrivialProduct: return "trivial-product";
    case CertificateKind::NotAProduct: return "not-a-product";
    case CertificateKind::Unknown: return "unknown";
  }
  return "unknown";
}

inline CertificateKind certificate_kind_from_string(const std::string& s) {
  if (s == "trivial-product") return CertificateKind::TrivialProduct;
  if (s == "not-a-product") return CertificateKind::NotAProduct;
  if (s == "unknown") return CertificateKind::Unknown;
  throw ParseError("unknown certificate kind '" + s + "'");
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "not-applicable") return CheckStatus::NotApplicable;
  throw ParseError("unknown check status '" + s + "'");
}

}  // namespace detail

inline Json report_to_json(const Report& r) {
  Json j;
  j["schema"] = "cokahler-report-v1";
  j["input"] = input_to_json(r.input);
  j["effective_omega"] = detail::integer_matrix_to_json(r.effective_omega);
  j["order"] = Json{{"finite", r.order.finite},
                    {"m", r.order.finite ? Json(r.order.value) : Json(nullptr)}};
  j["partial"] = r.partial;
  j["structure_group"] = Json{{"finite", r.structure.finite},
                              {"order", r.structure.finite ? Json(r.structure.order) : Json(nullptr)},
                              {"description", r.structure.description}};
  j["bundle_trivial"] = r.bundle_trivial;
  j["first_homology"] =
      Json{{"rank", r.h1.rank}, {"torsion", detail::torsion_to_json(r.h1.torsion)}};
  j["wang_betti"] = r.wang ? Json(r.wang->values()) : Json(nullptr);
  j["presentation"] = Json{{"generators", r.presentation_data.generators},
                           {"relations", r.presentation_data.relations}};

  if (r.invariant_dims) {
    Json inv;
    inv["dims"] = *r.invariant_dims;
    inv["bases"] = *r.invariant_bases;
    j["invariant_cohomology"] = std::move(inv);
  } else {
    j["invariant_cohomology"] = nullptr;
  }
  j["invariant_kahler_class"] =
      r.omega_bar ? detail::rational_matrix_to_json(*r.omega_bar) : Json(nullptr);
  j["betti"] = r.betti ? Json(r.betti->values()) : Json(nullptr);
  j["cover"] = r.cover ? Json{{"degree", r.cover->degree},
                              {"total_space", r.cover->total_space},
                              {"deck_group", r.cover->deck_group},
                              {"deck_action", r.cover->deck_action},
                              {"winding", r.cover->winding}}
                       : Json(nullptr);
  j["product_subgroup"] = r.subgroup ? Json{{"index", r.subgroup->index},
                                            {"subgroup", r.subgroup->subgroup},
                                            {"quotient", r.subgroup->quotient}}
                                     : Json(nullptr);
  j["certificate"] =
      r.certificate ? Json{{"kind", detail::certificate_kind_string(r.certificate->kind)},
                           {"rule", r.certificate->rule},
                           {"detail", r.certificate->detail},
                           {"h1_torsion", detail::torsion_to_json(r.certificate->h1_torsion)}}
                    : Json(nullptr);

  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(Json{{"name", c.name},
                          {"result", to_string(c.status)},
                          {"statement", c.statement},
                          {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

inline Report report_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != "cokahler-report-v1")
    throw ParseError("not a cokahler-report-v1 document");
  Report r;
  r.input = input_from_json(j["input"]);
  r.effective_omega = detail::integer_matrix_from_json(j["effective_omega"], "effective_omega");
  r.order = j["order"]["finite"].get<bool>()
                ? OrderResult::of(j["order"]["m"].get<std::uint64_t>())
                : OrderResult::infinite();
  r.partial = j["partial"].get<bool>();
  r.structure.finite = j["structure_group"]["finite"].get<bool>();
  r.structure.order = r.structure.finite ? j["structure_group"]["order"].get<std::uint64_t>() : 0;
  r.structure.description = j["structure_group"]["description"].get<std::string>();
  r.bundle_trivial = j["bundle_trivial"].get<bool>();
  r.h1.rank = j["first_homology"]["rank"].get<std::size_t>();
  r.h1.torsion = detail::torsion_from_json(j["first_homology"]["torsion"]);
  const int n = r.input.n;
  if (!j["wang_betti"].is_null())
    r.wang = BettiVector(n, j["wang_betti"].get<std::vector<std::int64_t>>());
  r.presentation_data.generators = j["presentation"]["generators"].get<std::vector<std::string>>();
  r.presentation_data.relations = j["presentation"]["relations"].get<std::vector<std::string>>();
  r.presentation_data.conjugation = r.input.matrix;

  if (!j["invariant_cohomology"].is_null()) {
    r.invariant_dims = j["invariant_cohomology"]["dims"].get<std::vector<std::int64_t>>();
    r.invariant_bases =
        j["invariant_cohomology"]["bases"].get<std::vector<std::vector<std::string>>>();
  }
  if (!j["invariant_kahler_class"].is_null())
    r.omega_bar = detail::rational_matrix_from_json(j["invariant_kahler_class"]);
  if (!j["betti"].is_null()) r.betti = BettiVector(n, j["betti"].get<std::vector<std::int64_t>>());
  if (!j["cover"].is_null()) {
    CoverData c;
    c.degree = j["cover"]["degree"].get<std::uint64_t>();
    c.total_space = j["cover"]["total_space"].get<std::string>();
    c.deck_group = j["cover"]["deck_group"].get<std::string>();
    c.deck_action = j["cover"]["deck_action"].get<std::string>();
    c.winding = j["cover"]["winding"].get<std::uint64_t>();
    r.cover = std::move(c);
  }
  if (!j["product_subgroup"].is_null()) {
    ProductSubgroup s;
    s.index = j["product_subgroup"]["index"].get<std::uint64_t>();
    s.subgroup = j["product_subgroup"]["subgroup"].get<std::string>();
    s.quotient = j["product_subgroup"]["quotient"].get<std::string>();
    r.subgroup = std::move(s);
  }
  if (!j["certificate"].is_null()) {
    Certificate c;
    c.kind = detail::certificate_kind_from_string(j["certificate"]["kind"].get<std::string>());
    c.rule = j["certificate"]["rule"].get<std::string>();
    c.detail = j["certificate"]["detail"].get<std::string>();
    c.h1_torsion = detail::torsion_from_json(j["certificate"]["h1_torsion"]);
    r.certificate = std::move(c);
  }
  for (const Json& cj : j["checks"]) {
    CheckResult c;
    c.name = cj["name"].get<std::string>();
    c.status = detail::check_status_from_string(cj["result"].get<std::string>());
    c.statement = cj["statement"].get<std::string>();
    c.detail = cj["detail"];
    r.checks.push_back(std::move(c));
  }
  return r;
}

inline Report report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return report_from_json(j);
}

namespace detail {

inline std::string certificate_text(const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::TrivialProduct:
      return "trivial product T^{2n} x S^1";
    case CertificateKind::NotAProduct: {
      std::string rule = c.rule == "dim3-aspherical" ? "dim-3 rule" : c.rule + " rule";
      return "NOT a global product (" + rule + ")";
    }
    case CertificateKind::Unknown:
      return "product status unknown (no applicable rule)";
  }
  return "product status unknown";
}

}  // namespace detail

/// Plain-text summary. Every check line names its verdict and the theorem it
/// instantiates; the JSON form is the machine-readable companion.
inline std::string render_text(const Report& r) {
  std::string out;
  const int n = r.input.n;
  out += "co-Kahler mapping torus analysis\n";
  out += "input: n = " + std::to_string(n) + ", dim M = " + std::to_string(2 * n + 1) + "\n";
  out += "matrix A:\n" + r.input.matrix.to_string() + "\n";
  if (r.order.finite)
    out += "order m = " + std::to_string(r.order.value) + "\n";
  else
    out += "order m = infinite (partial report: the co-Kahler checks need a finite order)\n";
  out += "structure group: " + r.structure.description + "\n";
  out += std::string("bundle trivial over S^1: ") + (r.bundle_trivial ? "yes" : "no") + "\n";
  out += "H_1(M;Z) = " + r.h1.to_string() + "\n";
  if (r.wang) out += "Wang-sequence Betti numbers: " + r.wang->to_string() + "\n";
  if (r.invariant_dims) {
    out += "invariant cohomology dims b'_k: ";
    for (std::size_t k = 0; k < r.invariant_dims->size(); ++k)
      out += (k ? " " : "") + std::to_string((*r.invariant_dims)[k]);
    out += "\n";
  }
  if (r.betti) out += "b = " + r.betti->to_string() + "\n";
  if (r.cover)
    out += "cover: degree " + std::to_string(r.cover->degree) + " by " + r.cover->total_space +
           ", central circle winds " + std::to_string(r.cover->winding) + " times\n";
  if (r.subgroup)
    out += "product subgroup: " + r.subgroup->subgroup + ", index " +
           std::to_string(r.subgroup->index) + ", quotient " + r.subgroup->quotient + "\n";
  if (r.certificate) out += "certificate: " + detail::certificate_text(*r.certificate) + "\n";
  if (!r.checks.empty()) {
    out += "checks:\n";
    for (const CheckResult& c : r.checks) {
      std::string status = to_string(c.status);
      for (char& ch : status) ch = static_cast<char>(ch >= 'a' && ch <= 'z' ? ch - 32 : ch);
      out += "  " + c.name + ": " + status + " -- " + c.statement + "\n";
    }
  }
  return out;
}

/// Deterministic rendering: identical reports give byte-identical output.
inline std::string render(const Report& r, const std::string& format) {
  if (format == "json") return report_to_json(r).dump(2) + "\n";
  if (format == "text") return render_text(r);
  throw ValidationError("unknown format '" + format + "' (expected json or text)");
}

}  // namespace cokahler
