#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrhorn/hive.hpp"
#include "lrhorn/numeric.hpp"
#include "lrhorn/simplex.hpp"
#include "lrhorn/subsets.hpp"

namespace lrhorn {

/// Exact-rational linear form on the triangle grid, one coefficient per
/// position of Y_r in canonical order.
struct LinearForm {
  int r = 0;
  std::vector<Rat> coeffs;

  bool operator==(const LinearForm&) const = default;
};

inline LinearForm zero_form(int r) {
  return LinearForm{r, std::vector<Rat>(position_count(r), Rat(0))};
}

/// Evaluate the form on an integer array of the same rank.
inline Rat evaluate_form(const LinearForm& f, const TriangleArray& y) {
  if (f.r != y.r) throw std::invalid_argument("rank mismatch");
  Rat total = 0;
  for (std::size_t p = 0; p < f.coeffs.size(); ++p) total += f.coeffs[p] * Rat(y.values[p]);
  return total;
}

struct TailBasisEntry {
  TailIdentifier id;
  LinearForm form;
  // Index of an earlier identical form, when the boundary convention makes
  // two identifiers collapse to the same form (or to the zero form).
  std::optional<std::size_t> duplicate_of;
};

/// One 0/1 form per tail identifier, in canonical identifier order.
/// Duplicates are retained and flagged so certificates can reference any
/// identifier the caller prefers.
inline std::vector<TailBasisEntry> tails_basis(int r) {
  std::vector<TailBasisEntry> out;
  for (const auto& id : all_tail_identifiers(r)) {
    LinearForm form = zero_form(r);
    for (const auto& pos : tail_positions(r, id))
      form.coeffs[static_cast<std::size_t>(canonical_position_index(r, pos.i, pos.j, pos.k))] = 1;
    std::optional<std::size_t> dup;
    for (std::size_t p = 0; p < out.size(); ++p)
      if (out[p].form == form) {
        dup = p;
        break;
      }
    out.push_back(TailBasisEntry{id, std::move(form), dup});
  }
  return out;
}

/// Nonnegative rational combination of tails certifying tail-positivity of a
/// form. Only strictly positive coefficients are stored.
struct TailCertificate {
  std::vector<std::pair<TailIdentifier, Rat>> combination;
};

/// Expands a certificate back into the form it claims to reproduce.
inline LinearForm expand_certificate(int r, const TailCertificate& cert) {
  LinearForm total = zero_form(r);
  for (const auto& [id, coeff] : cert.combination)
    for (const auto& pos : tail_positions(r, id))
      total.coeffs[static_cast<std::size_t>(canonical_position_index(r, pos.i, pos.j, pos.k))] +=
          coeff;
  return total;
}

struct TailPositivityResult {
  bool positive = false;
  std::optional<TailCertificate> certificate;
};

/// Decides whether the form lies in the nonnegative rational span of the
/// tails, i.e. takes nonnegative values on the whole tail-positive cone.
/// Exact phase-1 feasibility over the coefficients of the combination; on
/// success the feasible point is returned as a certificate.
inline TailPositivityResult is_tail_positive_form(const LinearForm& f) {
  const auto basis = tails_basis(f.r);
  const std::size_t rows = position_count(f.r);
  if (f.coeffs.size() != rows) throw std::invalid_argument("malformed linear form");

  std::vector<std::vector<Rat>> matrix(rows, std::vector<Rat>(basis.size(), Rat(0)));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t p = 0; p < rows; ++p) matrix[p][c] = basis[c].form.coeffs[p];

  const auto solution = solve_nonnegative_exact(matrix, f.coeffs, basis.size());
  if (!solution) return TailPositivityResult{false, std::nullopt};

  TailCertificate cert;
  for (std::size_t c = 0; c < basis.size(); ++c)
    if ((*solution)[c] != 0) cert.combination.emplace_back(basis[c].id, (*solution)[c]);
  return TailPositivityResult{true, std::move(cert)};
}

/// The form induced on the triangle grid by the subset inequality
/// |mu|_J + |nu|_K - |lambda|_I: coefficient #(I_{>i}) - #(J_{>r-j}) - #(K_{>r-k})
/// at position (i, j, k).
inline LinearForm horn_form(const SubsetTriple& st) {
  LinearForm form = zero_form(st.r);
  const auto all = positions(st.r);
  for (std::size_t p = 0; p < all.size(); ++p) {
    const auto& pos = all[p];
    form.coeffs[p] = Rat(count_greater(st.I, pos.i) - count_greater(st.J, st.r - pos.j) -
                         count_greater(st.K, st.r - pos.k));
  }
  return form;
}

/// Consistency of a subset triple through the tail cone: the attached
/// partitions must balance in size and the induced form must be
/// tail-positive.
inline bool lr_consistent_via_tail_cone(const SubsetTriple& st) {
  const Int size_i = weight_size(rho(st.I));
  if (size_i != weight_size(rho(st.J)) + weight_size(rho(st.K))) return false;
  return is_tail_positive_form(horn_form(st)).positive;
}

/// Necessary condition for consistency: every coefficient of the induced
/// form is nonnegative, i.e. #(I_{>i}) >= #(J_{>r-j}) + #(K_{>r-k}) on all of
/// Y_r. Not sufficient: for larger ranks the form can be coefficientwise
/// nonnegative without lying in the nonnegative span of the tails.
inline bool induced_form_nonnegative(const SubsetTriple& st) {
  const auto form = horn_form(st);
  for (const auto& c : form.coeffs)
    if (c < 0) return false;
  return true;
}

}  // namespace lrhorn
