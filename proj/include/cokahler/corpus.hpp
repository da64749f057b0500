#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cokahler/errors.hpp"
#include "cokahler/report.hpp"

namespace cokahler {

/// Known values a corpus entry must reproduce exactly. Any mismatch fails the
/// whole corpus command with a diff.
struct ExpectedHighlights {
  std::optional<std::uint64_t> order;  // empty = infinite order expected
  std::optional<std::vector<std::int64_t>> betti;
  std::optional<std::int64_t> b1;
  std::optional<FirstHomology> h1;
  std::optional<std::uint64_t> cover_degree;
  std::optional<std::uint64_t> subgroup_index;
  std::optional<CertificateKind> certificate;
  std::optional<std::string> certificate_rule;
  std::optional<std::vector<std::int64_t>> wang;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  InputSpec spec;
  ExpectedHighlights expected;
};

namespace detail {

inline Matrix block_diagonal(const Matrix& block, int copies) {
  const std::size_t b = block.rows();
  Matrix m(b * static_cast<std::size_t>(copies), b * static_cast<std::size_t>(copies));
  for (int c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j)
        m(static_cast<std::size_t>(c) * b + i, static_cast<std::size_t>(c) * b + j) = block(i, j);
  return m;
}

/// Parses "name(k)" recipes; returns k or nullopt when the name has no
/// argument part.
inline std::optional<int> recipe_argument(const std::string& name, const std::string& stem) {
  if (name.size() < stem.size() + 3 || name.compare(0, stem.size(), stem) != 0) return {};
  if (name[stem.size()] != '(' || name.back() != ')') return {};
  const std::string arg = name.substr(stem.size() + 1, name.size() - stem.size() - 2);
  if (arg.empty()) return {};
  for (char c : arg)
    if (c < '0' || c > '9') return {};
  return std::stoi(arg);
}

inline std::vector<std::int64_t> binomial_row(int n) {
  std::vector<std::int64_t> row;
  for (int s = 0; s <= 2 * n + 1; ++s) row.push_back(to_int64(binomial(2 * n + 1, s)));
  return row;
}

}  // namespace detail

/// Built-in corpus. Recipes are reproducible bit-for-bit:
///   cdm          order-4 rotation of T^2
///   mp(n)        block-diagonal companion matrices of x^2 - x + 1 (order 6),
///                one block per complex coordinate; the lattice Z[zeta] with
///                basis (1, zeta) makes [[0,-1],[1,1]] the matrix of
///                multiplication by zeta = e^{2 pi i / 6}
///   identity(n)  trivial monodromy
///   catmap       [[2,1],[1,1]], an infinite-order symplectomorphism
inline CorpusEntry corpus_entry(const std::string& name) {
  CorpusEntry e;
  e.name = name;
  if (name == "cdm") {
    e.description = "order-4 rotation of the 2-torus; the 3-dimensional non-product example";
    e.spec.n = 1;
    e.spec.matrix = Matrix{{0, 1}, {-1, 0}};
    e.expected.order = 4;
    e.expected.betti = std::vector<std::int64_t>{1, 1, 1, 1};
    e.expected.b1 = 1;
    e.expected.h1 = FirstHomology{1, {Int(2)}};
    e.expected.cover_degree = 4;
    e.expected.subgroup_index = 4;
    e.expected.certificate = CertificateKind::NotAProduct;
    e.expected.certificate_rule = "dim3-aspherical";
    return e;
  }
  if (name == "catmap") {
    e.description = "infinite-order symplectomorphism of T^2; only the partial report applies";
    e.spec.n = 1;
    e.spec.matrix = Matrix{{2, 1}, {1, 1}};
    e.expected.h1 = FirstHomology{1, {}};
    e.expected.wang = std::vector<std::int64_t>{1, 1, 1, 1};
    return e;
  }
  if (auto k = detail::recipe_argument(name, "identity")) {
    if (*k < 1 || *k > 6) throw UnknownCorpusError("identity(n) supports n = 1..6");
    e.description = "trivial monodromy on T^" + std::to_string(2 * *k) +
                    "; the mapping torus is the trivial product";
    e.spec.n = *k;
    e.spec.matrix = Matrix::identity(static_cast<std::size_t>(2 * *k));
    e.expected.order = 1;
    e.expected.betti = detail::binomial_row(*k);
    e.expected.h1 = FirstHomology{static_cast<std::size_t>(2 * *k + 1), {}};
    e.expected.cover_degree = 1;
    e.expected.subgroup_index = 1;
    e.expected.certificate = CertificateKind::TrivialProduct;
    return e;
  }
  if (auto k = detail::recipe_argument(name, "mp")) {
    if (*k < 1 || *k > 5) throw UnknownCorpusError("mp(n) supports n = 1..5");
    e.description = "order-6 Hermitian isometry of T^" + std::to_string(2 * *k) +
                    " acting by a primitive sixth root of unity on every complex coordinate";
    e.spec.n = *k;
    e.spec.matrix = detail::block_diagonal(Matrix{{0, -1}, {1, 1}}, *k);
    e.expected.order = 6;
    e.expected.b1 = 1;
    e.expected.h1 = FirstHomology{1, {}};
    e.expected.cover_degree = 6;
    e.expected.subgroup_index = 6;
    e.expected.certificate = CertificateKind::NotAProduct;
    e.expected.certificate_rule = "solvable-perfect";
    if (*k == 1) e.expected.betti = std::vector<std::int64_t>{1, 1, 1, 1};
    if (*k == 2) e.expected.betti = std::vector<std::int64_t>{1, 1, 4, 4, 1, 1};
    return e;
  }
  throw UnknownCorpusError("unknown corpus entry '" + name +
                           "' (known: cdm, mp(n), identity(n), catmap)");
}

inline std::vector<std::string> corpus_names() {
  return {"cdm",         "mp(1)",       "mp(2)",       "mp(3)", "mp(4)",
          "identity(1)", "identity(2)", "identity(3)", "catmap"};
}

struct CorpusRun {
  CorpusEntry entry;
  Report report;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

template <typename T>
inline std::string diff_line(const std::string& field, const T& expected, const T& got) {
  std::ostringstream os;
  os << field << ": expected " << expected << ", got " << got;
  return os.str();
}

}  // namespace detail

inline CorpusRun run_corpus_entry(const std::string& name) {
  CorpusRun run;
  run.entry = corpus_entry(name);
  run.report = run_pipeline(run.entry.spec);
  const Report& r = run.report;
  const ExpectedHighlights& x = run.entry.expected;
  auto& mm = run.mismatches;

  if (x.order) {
    if (!r.order.finite)
      mm.push_back("order: expected " + std::to_string(*x.order) + ", got infinite");
    else if (r.order.value != *x.order)
      mm.push_back(detail::diff_line("order", *x.order, r.order.value));
  } else if (r.order.finite) {
    mm.push_back("order: expected infinite, got " + std::to_string(r.order.value));
  }
  if (x.betti) {
    if (!r.betti)
      mm.push_back("betti: expected a value, got none");
    else if (r.betti->values() != *x.betti)
      mm.push_back("betti: expected (" + BettiVector(run.entry.spec.n, *x.betti).to_string() +
                   "), got (" + r.betti->to_string() + ")");
  }
  if (x.b1) {
    if (!r.betti)
      mm.push_back("b1: expected a value, got none");
    else if ((*r.betti)[1] != *x.b1)
      mm.push_back(detail::diff_line("b1", *x.b1, (*r.betti)[1]));
  }
  if (x.h1 && !(r.h1 == *x.h1))
    mm.push_back("first_homology: expected " + x.h1->to_string() + ", got " + r.h1.to_string());
  if (x.cover_degree) {
    if (!r.cover)
      mm.push_back("cover: expected a value, got none");
    else if (r.cover->degree != *x.cover_degree)
      mm.push_back(detail::diff_line("cover degree", *x.cover_degree, r.cover->degree));
  }
  if (x.subgroup_index) {
    if (!r.subgroup)
      mm.push_back("product_subgroup: expected a value, got none");
    else if (r.subgroup->index != *x.subgroup_index)
      mm.push_back(detail::diff_line("product_subgroup index", *x.subgroup_index,
                                     r.subgroup->index));
  }
  if (x.certificate) {
    if (!r.certificate) {
      mm.push_back("certificate: expected a value, got none");
    } else {
      if (r.certificate->kind != *x.certificate)
        mm.push_back(std::string("certificate kind: expected ") +
                     detail::certificate_kind_string(*x.certificate) + ", got " +
                     detail::certificate_kind_string(r.certificate->kind));
      if (x.certificate_rule && r.certificate->rule != *x.certificate_rule)
        mm.push_back(detail::diff_line("certificate rule", *x.certificate_rule,
                                       r.certificate->rule));
    }
  }
  if (x.wang) {
    if (!r.wang)
      mm.push_back("wang_betti: expected a value, got none");
    else if (r.wang->values() != *x.wang)
      mm.push_back("wang_betti: expected (" +
                   BettiVector(run.entry.spec.n, *x.wang).to_string() + "), got (" +
                   r.wang->to_string() + ")");
  }
  // Every check a finite-order entry runs must pass: the theorems are proved,
  // so a failure is an implementation bug, not a property of the input.
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::Fail) mm.push_back("check '" + c.name + "' failed");
  return run;
}

inline std::vector<CorpusRun> run_corpus(const std::string& name_or_all) {
  std::vector<CorpusRun> runs;
  if (name_or_all == "all") {
    for (const std::string& name : corpus_names()) runs.push_back(run_corpus_entry(name));
  } else {
    runs.push_back(run_corpus_entry(name_or_all));
  }
  return runs;
}

}  // namespace cokahler
