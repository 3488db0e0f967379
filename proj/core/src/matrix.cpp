/*
   Copyright 2026 The chainring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "chainring/matrix.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chainring {

// ---------------------------------------------------------------- basics

RingMatrix::RingMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, Elem{0}) {
  if (!ring_) throw DomainError("matrix needs a ring");
}

RingMatrix RingMatrix::identity(RingPtr ring, std::size_t n) {
  RingMatrix m(std::move(ring), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = m.ring().one();
  return m;
}

RingMatrix RingMatrix::from_ints(RingPtr ring, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  RingMatrix m(std::move(ring), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = m.ring().from_int(rows[i][j]);
  }
  return m;
}

RingMatrix RingMatrix::from_elems(RingPtr ring, const std::vector<std::vector<Elem>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  RingMatrix m(std::move(ring), rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].code >= m.ring().size()) throw DomainError("matrix entry out of range");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

std::vector<Elem> RingMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Elem> RingMatrix::col(std::size_t j) const {
  std::vector<Elem> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RingMatrix RingMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
  RingMatrix b(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

RingMatrix RingMatrix::select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
  RingMatrix b(ring_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(rs[i], cs[j]);
  return b;
}

RingMatrix RingMatrix::scale(Elem c) const {
  RingMatrix m = *this;
  for (auto& x : m.data_) x = ring_->mul(x, c);
  return m;
}

std::vector<Elem> RingMatrix::apply(const std::vector<Elem>& v) const {
  if (v.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
  std::vector<Elem> out(rows_, ring_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = ring_->add(out[i], ring_->mul((*this)(i, j), v[j]));
  return out;
}

std::vector<Elem> RingMatrix::apply_left(const std::vector<Elem>& v) const {
  if (v.size() != rows_) throw DomainError("dimension mismatch in vector-matrix product");
  std::vector<Elem> out(cols_, ring_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[j] = ring_->add(out[j], ring_->mul(v[i], (*this)(i, j)));
  return out;
}

bool RingMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e.code == 0; });
}

std::string RingMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << ring_->to_string((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

namespace {
void check_ring(const RingMatrix& a, const RingMatrix& b) {
  if (a.ring_ptr() != b.ring_ptr() && !a.ring().same_as(b.ring()))
    throw ComponentMismatch("matrices over different rings");
}
}  // namespace

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  check_ring(a, b);
  if (a.cols_ != b.rows_) throw DomainError("dimension mismatch in matrix product");
  const Ring& R = *a.ring_;
  RingMatrix c(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Elem x = a(i, k);
      if (R.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = R.add(c(i, j), R.mul(x, b(k, j)));
    }
  return c;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  check_ring(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("dimension mismatch in matrix sum");
  RingMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.ring_->add(a.data_[k], b.data_[k]);
  return c;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
  check_ring(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("dimension mismatch in matrix difference");
  RingMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.ring_->sub(a.data_[k], b.data_[k]);
  return c;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
         (a.ring_ == b.ring_ || a.ring_->same_as(*b.ring_));
}

RingMatrix RingMatrix::hstack(const std::vector<RingMatrix>& parts) {
  if (parts.empty()) throw DomainError("nothing to stack");
  std::size_t r = parts[0].rows(), c = 0;
  for (const auto& p : parts) {
    if (p.rows() != r) throw DomainError("row counts differ in hstack");
    c += p.cols();
  }
  RingMatrix m(parts[0].ring_, r, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) m(i, off + j) = p(i, j);
    off += p.cols();
  }
  return m;
}

RingMatrix RingMatrix::vstack(const std::vector<RingMatrix>& parts) {
  if (parts.empty()) throw DomainError("nothing to stack");
  std::size_t c = parts[0].cols(), r = 0;
  for (const auto& p : parts) {
    if (p.cols() != c) throw DomainError("column counts differ in vstack");
    r += p.rows();
  }
  RingMatrix m(parts[0].ring_, r, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) m(off + i, j) = p(i, j);
    off += p.rows();
  }
  return m;
}

std::vector<RingMatrix> RingMatrix::crt_split() const {
  auto prod = std::dynamic_pointer_cast<const ProductRing>(ring_);
  if (!prod) return {*this};
  std::vector<RingMatrix> out;
  for (const auto& c : prod->components()) out.emplace_back(c, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    auto parts = prod->split(data_[k]);
    for (std::size_t i = 0; i < parts.size(); ++i) out[i].data_[k] = parts[i];
  }
  return out;
}

RingMatrix RingMatrix::crt_join(RingPtr ring, const std::vector<RingMatrix>& parts) {
  auto prod = std::dynamic_pointer_cast<const ProductRing>(ring);
  if (!prod) {
    if (parts.size() != 1) throw ComponentMismatch("expected a single component");
    return parts[0];
  }
  if (parts.size() != prod->components().size()) throw ComponentMismatch("wrong number of components");
  RingMatrix m(ring, parts[0].rows(), parts[0].cols());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].ring().same_as(*prod->components()[i])) throw ComponentMismatch("component ring mismatch");
    if (parts[i].rows() != m.rows() || parts[i].cols() != m.cols()) throw ComponentMismatch("component shapes differ");
  }
  std::vector<Elem> v(parts.size());
  for (std::size_t k = 0; k < m.data_.size(); ++k) {
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = parts[i].data_[k];
    m.data_[k] = prod->join(v);
  }
  return m;
}

// ---------------------------------------------------------------- elementary operations

namespace {

void swap_rows(RingMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(RingMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void scale_row(RingMatrix& m, std::size_t r, Elem c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m.ring().mul(m(r, j), c);
}

void scale_col(RingMatrix& m, std::size_t c, Elem x) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, c) = m.ring().mul(m(i, c), x);
}

// row dst += c * row src
void add_row(RingMatrix& m, std::size_t dst, std::size_t src, Elem c) {
  const Ring& R = m.ring();
  if (R.is_zero(c)) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) = R.add(m(dst, j), R.mul(c, m(src, j)));
}

// col dst += c * col src
void add_col(RingMatrix& m, std::size_t dst, std::size_t src, Elem c) {
  const Ring& R = m.ring();
  if (R.is_zero(c)) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) = R.add(m(i, dst), R.mul(c, m(i, src)));
}

}  // namespace

// ---------------------------------------------------------------- Smith

SmithDecomposition smith_form(const RingMatrix& A) {
  const ChainRing& R = A.ring().as_chain();
  const std::size_t m = A.rows(), n = A.cols();
  SmithDecomposition s{RingMatrix::identity(A.ring_ptr(), m), A, RingMatrix::identity(A.ring_ptr(), n),
                       RingMatrix::identity(A.ring_ptr(), m), RingMatrix::identity(A.ring_ptr(), n), 0, {}};
  RingMatrix& D = s.D;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pivot of minimal valuation, ties by row then column
    std::size_t pi = m, pj = n;
    unsigned best = R.nilpotency();
    for (std::size_t i = t; i < m && best > 0; ++i)
      for (std::size_t j = t; j < n; ++j) {
        unsigned v = R.valuation(D(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
          if (v == 0) break;
        }
      }
    if (pi == m) break;
    swap_rows(D, t, pi);
    swap_cols(s.U, t, pi);
    swap_rows(s.U_inv, t, pi);
    swap_cols(D, t, pj);
    swap_rows(s.V, t, pj);
    swap_cols(s.V_inv, t, pj);

    Elem u = R.unit_part(D(t, t));
    scale_row(D, t, R.inverse(u));
    scale_col(s.U, t, u);
    scale_row(s.U_inv, t, R.inverse(u));

    Elem piv = D(t, t);
    for (std::size_t i = t + 1; i < m; ++i) {
      if (R.is_zero(D(i, t))) continue;
      Elem c = R.quotient(D(i, t), piv);
      add_row(D, i, t, R.neg(c));
      add_col(s.U, t, i, c);
      add_row(s.U_inv, i, t, R.neg(c));
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (R.is_zero(D(t, j))) continue;
      Elem c = R.quotient(D(t, j), piv);
      add_col(D, j, t, R.neg(c));
      add_row(s.V, t, j, c);
      add_col(s.V_inv, j, t, R.neg(c));
    }
    s.rank = t + 1;
    s.exponents.push_back(best);
  }
  return s;
}

// ---------------------------------------------------------------- Hermite

HermiteDecomposition hermite_form(const RingMatrix& A) {
  const ChainRing& R = A.ring().as_chain();
  const std::size_t m = A.rows(), n = A.cols();
  HermiteDecomposition h{RingMatrix::identity(A.ring_ptr(), m), A, {}};
  RingMatrix& T = h.T;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t pi = m;
    unsigned best = R.nilpotency();
    for (std::size_t i = row; i < m; ++i) {
      unsigned v = R.valuation(T(i, col));
      if (v < best) {
        best = v;
        pi = i;
      }
    }
    if (pi == m) continue;
    swap_rows(T, row, pi);
    swap_cols(h.P, row, pi);
    Elem u = R.unit_part(T(row, col));
    scale_row(T, row, R.inverse(u));
    scale_col(h.P, row, u);
    Elem piv = T(row, col);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (R.is_zero(T(i, col))) continue;
      Elem c = R.quotient(T(i, col), piv);
      add_row(T, i, row, R.neg(c));
      add_col(h.P, row, i, c);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Elem e = T(i, col);
      Elem r = R.reduce_mod_p_power(e, best);
      Elem diff = R.sub(e, r);
      if (R.is_zero(diff)) continue;
      Elem c = R.quotient(diff, piv);
      add_row(T, i, row, R.neg(c));
      add_col(h.P, row, i, c);
    }
    h.pivot_cols.push_back(col);
    ++row;
  }
  return h;
}

// ---------------------------------------------------------------- rank, kernel, solving

std::vector<std::size_t> component_ranks(const RingMatrix& A) {
  std::vector<std::size_t> out;
  for (const auto& part : A.crt_split()) out.push_back(smith_form(part).rank);
  return out;
}

std::size_t rank(const RingMatrix& A) {
  auto r = component_ranks(A);
  return *std::max_element(r.begin(), r.end());
}

namespace {

RingMatrix kernel_chain(const RingMatrix& A) {
  const ChainRing& R = A.ring().as_chain();
  auto s = smith_form(A);
  const std::size_t n = A.cols();
  std::vector<std::vector<Elem>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Elem mult;
    if (i < s.rank) {
      unsigned e = s.exponents[i];
      if (e == 0) continue;
      mult = R.p_power(R.nilpotency() - e);
    } else {
      mult = R.one();
    }
    std::vector<Elem> g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = R.mul(s.V_inv(k, i), mult);
    gens.push_back(std::move(g));
  }
  RingMatrix K(A.ring_ptr(), n, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t k = 0; k < n; ++k) K(k, j) = gens[j][k];
  return K;
}

std::optional<std::vector<Elem>> solve_chain(const RingMatrix& A, const std::vector<Elem>& b) {
  const ChainRing& R = A.ring().as_chain();
  if (b.size() != A.rows()) throw DomainError("right-hand side has wrong length");
  auto s = smith_form(A);
  std::vector<Elem> c = s.U_inv.apply(b);
  std::vector<Elem> w(A.cols(), R.zero());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    if (i < s.rank) {
      unsigned e = s.exponents[i];
      if (R.valuation(c[i]) < e) return std::nullopt;
      w[i] = R.divide_by_p_power(c[i], e);
    } else if (!R.is_zero(c[i])) {
      return std::nullopt;
    }
  }
  return s.V_inv.apply(w);
}

std::vector<std::vector<Elem>> split_vector(const Ring& ring, const std::vector<Elem>& v) {
  auto* prod = dynamic_cast<const ProductRing*>(&ring);
  std::vector<std::vector<Elem>> out(prod->components().size(), std::vector<Elem>(v.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    auto parts = prod->split(v[k]);
    for (std::size_t i = 0; i < parts.size(); ++i) out[i][k] = parts[i];
  }
  return out;
}

std::vector<Elem> join_vector(const Ring& ring, const std::vector<std::vector<Elem>>& parts) {
  auto* prod = dynamic_cast<const ProductRing*>(&ring);
  std::vector<Elem> out(parts[0].size());
  std::vector<Elem> tmp(parts.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t i = 0; i < parts.size(); ++i) tmp[i] = parts[i][k];
    out[k] = prod->join(tmp);
  }
  return out;
}

}  // namespace

RingMatrix kernel(const RingMatrix& A) {
  if (A.ring().is_chain()) return kernel_chain(A);
  // Over a product, lift each component's generators with zeros elsewhere.
  auto parts = A.crt_split();
  std::vector<RingMatrix> ks;
  std::size_t total = 0;
  for (const auto& p : parts) {
    ks.push_back(kernel_chain(p));
    total += ks.back().cols();
  }
  RingMatrix K(A.ring_ptr(), A.cols(), total);
  std::size_t off = 0;
  for (std::size_t c = 0; c < ks.size(); ++c) {
    for (std::size_t j = 0; j < ks[c].cols(); ++j) {
      std::vector<RingMatrix> comps;
      for (std::size_t d = 0; d < parts.size(); ++d) {
        RingMatrix col(parts[d].ring_ptr(), A.cols(), 1);
        if (d == c)
          for (std::size_t k = 0; k < A.cols(); ++k) col(k, 0) = ks[c](k, j);
        comps.push_back(col);
      }
      RingMatrix joined = RingMatrix::crt_join(A.ring_ptr(), comps);
      for (std::size_t k = 0; k < A.cols(); ++k) K(k, off + j) = joined(k, 0);
    }
    off += ks[c].cols();
  }
  return K;
}

std::optional<std::vector<Elem>> solve_linear(const RingMatrix& A, const std::vector<Elem>& b) {
  if (A.ring().is_chain()) return solve_chain(A, b);
  auto parts = A.crt_split();
  auto bs = split_vector(A.ring(), b);
  std::vector<std::vector<Elem>> sols;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto s = solve_chain(parts[i], bs[i]);
    if (!s) return std::nullopt;
    sols.push_back(*s);
  }
  return join_vector(A.ring(), sols);
}

std::optional<std::vector<Elem>> solve_left(const RingMatrix& B, const std::vector<Elem>& y) {
  return solve_linear(B.transpose(), y);
}

bool in_row_space(const RingMatrix& B, const std::vector<Elem>& y) { return solve_left(B, y).has_value(); }

std::vector<std::vector<Elem>> all_solutions(const RingMatrix& A, const std::vector<Elem>& b, std::size_t limit) {
  const Ring& R = A.ring();
  if (A.rows() == 0) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < A.cols(); ++j) {
      total *= R.size();
      if (total > limit) throw TooLarge("linear system has more than " + std::to_string(limit) + " solutions");
    }
  }
  auto x0 = solve_linear(A, b);
  if (!x0) return {};
  RingMatrix K = kernel(A);
  // closure of {0} under adding multiples of each kernel generator
  std::set<std::vector<Elem>> span{std::vector<Elem>(A.cols(), R.zero())};
  for (std::size_t g = 0; g < K.cols(); ++g) {
    auto gen = K.col(g);
    std::set<std::vector<Elem>> next;
    for (const auto& v : span)
      for (std::uint64_t c = 0; c < R.size(); ++c) {
        auto w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = R.add(w[i], R.mul(Elem{c}, gen[i]));
        next.insert(std::move(w));
        if (next.size() > limit) throw TooLarge("linear system has more than " + std::to_string(limit) + " solutions");
      }
    span = std::move(next);
  }
  std::vector<std::vector<Elem>> out;
  for (const auto& v : span) {
    auto w = v;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = R.add(w[i], (*x0)[i]);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- envelopes and parity checks

namespace {

RingMatrix free_envelope_chain(const RingMatrix& A, std::size_t r) {
  auto s = smith_form(A);
  if (s.rank > r) throw RankTooLarge("rank " + std::to_string(s.rank) + " exceeds " + std::to_string(r));
  RingMatrix B = s.V.block(0, 0, r, A.cols());
  auto h = hermite_form(B);
  return h.T.block(0, 0, r, A.cols());
}

RingMatrix parity_check_chain(const RingMatrix& B) {
  const ChainRing& R = B.ring().as_chain();
  auto s = smith_form(B);
  if (s.rank != B.rows()) throw NotFree("rows are not linearly independent");
  for (unsigned e : s.exponents)
    if (e != 0) throw NotFree("row space is not a free module");
  (void)R;
  const std::size_t n = B.cols(), r = B.rows();
  return s.V_inv.block(0, r, n, n - r);
}

}  // namespace

RingMatrix free_envelope(const RingMatrix& A, std::size_t r) {
  if (r > A.cols()) throw DomainError("envelope rank exceeds the ambient dimension");
  if (A.ring().is_chain()) return free_envelope_chain(A, r);
  std::vector<RingMatrix> parts;
  for (const auto& p : A.crt_split()) parts.push_back(free_envelope_chain(p, r));
  return RingMatrix::crt_join(A.ring_ptr(), parts);
}

RingMatrix parity_check(const RingMatrix& B) {
  if (B.ring().is_chain()) return parity_check_chain(B);
  std::vector<RingMatrix> parts;
  for (const auto& p : B.crt_split()) parts.push_back(parity_check_chain(p));
  return RingMatrix::crt_join(B.ring_ptr(), parts);
}

StandardForm standard_form(const RingMatrix& Z) {
  if (!Z.ring().is_chain()) throw NotChainRing("standard form needs a chain ring, got " + Z.ring().describe());
  const ChainRing& R = Z.ring().as_chain();
  const std::size_t n = Z.rows(), k = Z.cols();
  if (k > n) throw NotFree("more columns than rows");
  RingMatrix W = Z.transpose();  // k x n
  RingMatrix Linv = RingMatrix::identity(Z.ring_ptr(), k);
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t pi = k, pj = n;
    for (std::size_t i = t; i < k && pi == k; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (R.is_unit(W(i, j))) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == k) throw NotFree("columns do not span a free module");
    swap_rows(W, t, pi);
    swap_cols(Linv, t, pi);
    swap_cols(W, t, pj);
    std::swap(cols[t], cols[pj]);
    Elem u = W(t, t);
    scale_row(W, t, R.inverse(u));
    scale_col(Linv, t, u);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == t || R.is_zero(W(i, t))) continue;
      Elem c = W(i, t);
      add_row(W, i, t, R.neg(c));
      add_col(Linv, t, i, c);
    }
  }
  StandardForm sf{RingMatrix(Z.ring_ptr(), n, n), W.block(0, k, k, n - k).transpose(), Linv.transpose(), cols};
  for (std::size_t t = 0; t < n; ++t) sf.P(cols[t], t) = R.one();
  return sf;
}

// ---------------------------------------------------------------- determinant

namespace {

Elem det_rec(const RingMatrix& A, std::vector<std::size_t>& cols, std::size_t row) {
  const Ring& R = A.ring();
  if (row == A.rows()) return R.one();
  Elem acc = R.zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    Elem a = A(row, cols[k]);
    if (R.is_zero(a)) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Elem minor = R.mul(a, det_rec(A, cols, row + 1));
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    acc = (k % 2 == 0) ? R.add(acc, minor) : R.sub(acc, minor);
  }
  return acc;
}

}  // namespace

Elem determinant(const RingMatrix& A) {
  if (A.rows() != A.cols()) throw DomainError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(A.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_rec(A, cols, 0);
}

}  // namespace chainring
