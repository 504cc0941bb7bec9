#include "polyboson/fock.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyboson {

std::size_t SpaceSpec::dimension() const {
  std::size_t d = 1;
  for (long c : caps) {
    if (c < 0) throw std::invalid_argument("SpaceSpec: negative cap");
    d *= static_cast<std::size_t>(c + 1);
  }
  return d;
}

std::vector<FockState> enumerate_basis(const SpaceSpec& spec) {
  std::vector<FockState> out;
  out.reserve(spec.dimension());
  FockState st(spec.modes(), 0);
  for (;;) {
    out.push_back(st);
    std::size_t k = spec.modes();
    while (k > 0) {
      --k;
      if (st[k] < spec.caps[k]) {
        ++st[k];
        std::fill(st.begin() + static_cast<long>(k) + 1, st.end(), 0);
        break;
      }
      if (k == 0) return out;
    }
    if (spec.modes() == 0) return out;
  }
}

std::size_t state_index(const SpaceSpec& spec, const FockState& st) {
  if (st.size() != spec.modes()) throw std::invalid_argument("state_index: mode count mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (st[i] < 0 || st[i] > spec.caps[i]) throw std::out_of_range("state_index: occupation out of box");
    idx = idx * static_cast<std::size_t>(spec.caps[i] + 1) + static_cast<std::size_t>(st[i]);
  }
  return idx;
}

void SparseOperator::add_entry(std::size_t row, std::size_t col, const Rational& v) {
  if (row >= dim() || col >= dim()) throw std::out_of_range("SparseOperator: index out of range");
  if (v.is_zero()) return;
  auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  } else {
    c.insert(it, {row, v});
  }
}

Rational SparseOperator::entry(std::size_t row, std::size_t col) const {
  const auto& c = cols_[col];
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return Rational(0);
}

bool SparseOperator::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

SparseOperator zero_operator(const SpaceSpec& spec) { return SparseOperator(spec); }

SparseOperator identity_operator(const SpaceSpec& spec) {
  SparseOperator op(spec);
  for (std::size_t i = 0; i < op.dim(); ++i) op.add_entry(i, i, Rational(1));
  return op;
}

SparseOperator diagonal_operator(const SpaceSpec& spec, const std::vector<Rational>& diag) {
  SparseOperator op(spec);
  if (diag.size() != op.dim()) throw std::invalid_argument("diagonal_operator: size mismatch");
  for (std::size_t i = 0; i < diag.size(); ++i) op.add_entry(i, i, diag[i]);
  return op;
}

namespace {

void check_mode(const SpaceSpec& spec, std::size_t mode) {
  if (mode >= spec.modes()) throw std::out_of_range("mode index out of range");
}

}  // namespace

SparseOperator creation(const SpaceSpec& spec, std::size_t mode) {
  check_mode(spec, mode);
  SparseOperator op(spec);
  for (const auto& st : enumerate_basis(spec)) {
    if (st[mode] == spec.caps[mode]) continue;  // truncated
    FockState up = st;
    ++up[mode];
    op.add_entry(state_index(spec, up), state_index(spec, st), Rational(1));
  }
  return op;
}

SparseOperator annihilation(const SpaceSpec& spec, std::size_t mode) {
  check_mode(spec, mode);
  SparseOperator op(spec);
  for (const auto& st : enumerate_basis(spec)) {
    if (st[mode] == 0) continue;
    FockState down = st;
    --down[mode];
    op.add_entry(state_index(spec, down), state_index(spec, st), Rational(st[mode]));
  }
  return op;
}

SparseOperator number(const SpaceSpec& spec, std::size_t mode) {
  check_mode(spec, mode);
  SparseOperator op(spec);
  for (const auto& st : enumerate_basis(spec)) {
    std::size_t i = state_index(spec, st);
    op.add_entry(i, i, Rational(st[mode]));
  }
  return op;
}

SparseOperator exp_annihilation(const SpaceSpec& spec, std::size_t mode) {
  check_mode(spec, mode);
  SparseOperator op(spec);
  for (const auto& st : enumerate_basis(spec)) {
    std::size_t col = state_index(spec, st);
    FockState lowered = st;
    for (long k = 0; k <= st[mode]; ++k) {
      lowered[mode] = k;
      op.add_entry(state_index(spec, lowered), col, binomial(st[mode], k));
    }
  }
  return op;
}

namespace {

void check_same_space(const SparseOperator& a, const SparseOperator& b) {
  if (!(a.space() == b.space())) throw std::invalid_argument("operator space mismatch");
}

}  // namespace

SparseOperator op_add(const SparseOperator& a, const SparseOperator& b) {
  check_same_space(a, b);
  SparseOperator out = a;
  for (std::size_t c = 0; c < b.dim(); ++c)
    for (const auto& [r, v] : b.column(c)) out.add_entry(r, c, v);
  return out;
}

SparseOperator op_scale(const Rational& s, const SparseOperator& a) {
  SparseOperator out(a.space());
  if (s.is_zero()) return out;
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (const auto& [r, v] : a.column(c)) out.add_entry(r, c, s * v);
  return out;
}

SparseOperator op_mul(const SparseOperator& a, const SparseOperator& b) {
  check_same_space(a, b);
  SparseOperator out(a.space());
  for (std::size_t c = 0; c < b.dim(); ++c) {
    std::map<std::size_t, Rational> acc;
    for (const auto& [k, bv] : b.column(c))
      for (const auto& [r, av] : a.column(k)) acc[r] += av * bv;
    for (const auto& [r, v] : acc) out.add_entry(r, c, v);
  }
  return out;
}

SparseOperator op_commutator(const SparseOperator& a, const SparseOperator& b) {
  return op_add(op_mul(a, b), op_scale(Rational(-1), op_mul(b, a)));
}

SparseOperator op_transpose(const SparseOperator& a) {
  SparseOperator out(a.space());
  for (std::size_t c = 0; c < a.dim(); ++c)
    for (const auto& [r, v] : a.column(c)) out.add_entry(c, r, v);
  return out;
}

SparseOperator apply_polynomial(const SparseOperator& op, const std::vector<Rational>& coeffs) {
  SparseOperator out(op.space());
  SparseOperator power = identity_operator(op.space());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) power = op_mul(power, op);
    if (!coeffs[i].is_zero()) out = op_add(out, op_scale(coeffs[i], power));
  }
  return out;
}

std::vector<std::size_t> safe_subspace(const SpaceSpec& spec, const std::vector<long>& margins) {
  if (margins.size() != spec.modes()) throw std::invalid_argument("safe_subspace: margin count mismatch");
  std::vector<std::size_t> out;
  auto basis = enumerate_basis(spec);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool ok = true;
    for (std::size_t m = 0; m < spec.modes(); ++m)
      if (basis[i][m] > spec.caps[m] - margins[m]) { ok = false; break; }
    if (ok) out.push_back(i);
  }
  return out;
}

}  // namespace polyboson
