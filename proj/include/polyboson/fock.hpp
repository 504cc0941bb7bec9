#ifndef POLYBOSON_FOCK_HPP
#define POLYBOSON_FOCK_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "polyboson/rational.hpp"

namespace polyboson {

// Box-truncated multi-mode Fock space: per-mode occupation caps N_1..N_k.
struct SpaceSpec {
  std::vector<long> caps;

  std::size_t modes() const { return caps.size(); }
  std::size_t dimension() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

using FockState = std::vector<long>;  // per-mode occupation numbers

// Basis order is lexicographic with the last mode fastest; this order is a
// file-format contract shared with the matrix export.
std::vector<FockState> enumerate_basis(const SpaceSpec& spec);
std::size_t state_index(const SpaceSpec& spec, const FockState& st);

// Exact sparse linear map, stored column-wise; entries are (row, value)
// pairs sorted by row, zero values never stored.
class SparseOperator {
 public:
  explicit SparseOperator(SpaceSpec space)
      : space_(std::move(space)), cols_(space_.dimension()) {}

  const SpaceSpec& space() const { return space_; }
  std::size_t dim() const { return cols_.size(); }

  const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t c) const {
    return cols_[c];
  }

  // Accumulates v into entry (row, col); drops the entry if it cancels.
  void add_entry(std::size_t row, std::size_t col, const Rational& v);

  Rational entry(std::size_t row, std::size_t col) const;
  bool is_zero() const;

  friend bool operator==(const SparseOperator&, const SparseOperator&) = default;

 private:
  SpaceSpec space_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cols_;
};

SparseOperator zero_operator(const SpaceSpec& spec);
SparseOperator identity_operator(const SpaceSpec& spec);
// Diagonal operator with the given per-basis-state entries.
SparseOperator diagonal_operator(const SpaceSpec& spec, const std::vector<Rational>& diag);

// a_i^+ : |..,m,..> -> |..,m+1,..>; columns at the cap are empty (truncation).
SparseOperator creation(const SpaceSpec& spec, std::size_t mode);
// a_i : |..,m,..> -> m |..,m-1,..>  (unnormalized Gel'fand convention).
SparseOperator annihilation(const SpaceSpec& spec, std::size_t mode);
// n_i = a_i^+ a_i, diagonal.
SparseOperator number(const SpaceSpec& spec, std::size_t mode);
// e^{a_i} : |..,m,..> -> sum_k binom(m,k) |..,k,..>; exact, only lowers.
SparseOperator exp_annihilation(const SpaceSpec& spec, std::size_t mode);

SparseOperator op_add(const SparseOperator& a, const SparseOperator& b);
SparseOperator op_scale(const Rational& s, const SparseOperator& a);
SparseOperator op_mul(const SparseOperator& a, const SparseOperator& b);
SparseOperator op_commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator op_transpose(const SparseOperator& a);

// sum_i coeffs[i] * op^i with op^0 = identity.
SparseOperator apply_polynomial(const SparseOperator& op, const std::vector<Rational>& coeffs);

// Basis indices of all states with m_i <= N_i - margin_i in every mode.
std::vector<std::size_t> safe_subspace(const SpaceSpec& spec, const std::vector<long>& margins);

}  // namespace polyboson

#endif
