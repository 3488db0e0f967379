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

#include "chainring/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace chainring {

OracleBudget OracleBudget::from_env() {
  OracleBudget b;
  if (const char* s = std::getenv("CHAINRING_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v > 0) b.max_count = v;
  }
  return b;
}

void OracleBudget::charge(std::uint64_t n, const char* what) const {
  if (n > max_count)
    throw BudgetExceeded(std::string(what) + " needs " + std::to_string(n) + " steps, budget is " +
                         std::to_string(max_count));
}

namespace {

std::uint64_t checked_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

// Point number t of R^k, first coordinate most significant.
Vec nth_point(std::uint64_t t, std::uint64_t size, std::size_t k) {
  Vec v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = Elem{t % size};
    t /= size;
  }
  return v;
}

}  // namespace

SolutionSet brute_solve(const std::vector<MultiPoly>& F, const OracleBudget& budget) {
  if (F.empty()) throw DomainError("empty system");
  const auto& ctx = F.front().context();
  const Ring& R = ctx->ring();
  const std::size_t k = ctx->nvars();
  const std::uint64_t total = checked_pow(R.size(), k);
  budget.charge(total, "brute_solve");
  SolutionSet out{ctx->ring_ptr(), ctx->vars(), {}, false, 0, {}};
  for (std::uint64_t t = 0; t < total; ++t) {
    Vec pt = nth_point(t, R.size(), k);
    bool ok = std::all_of(F.begin(), F.end(), [&](const MultiPoly& f) { return R.is_zero(f.evaluate(pt)); });
    if (!ok) continue;
    std::vector<std::optional<Elem>> row(pt.begin(), pt.end());
    out.rows.push_back(std::move(row));
  }
  out.cap = out.rows.size();
  return out;
}

std::set<Vec> span_of(const Ring& R, const std::vector<Vec>& gens, const OracleBudget& budget) {
  std::size_t n = gens.empty() ? 0 : gens[0].size();
  std::set<Vec> S{Vec(n, Elem{0})};
  std::uint64_t work = 0;
  for (const auto& g : gens) {
    std::set<Vec> multiples;
    for (std::uint64_t a = 0; a < R.size(); ++a) {
      Vec m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = R.mul(Elem{a}, g[i]);
      multiples.insert(m);
    }
    std::set<Vec> next;
    for (const auto& s : S)
      for (const auto& m : multiples) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = R.add(s[i], m[i]);
        next.insert(std::move(v));
      }
    work += S.size() * multiples.size();
    budget.charge(work, "span enumeration");
    S = std::move(next);
  }
  return S;
}

std::size_t brute_rank(const RingMatrix& A, const OracleBudget& budget) {
  const Ring& R = A.ring();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));
  auto M = span_of(R, rows, budget);
  if (M.size() == 1) return 0;
  std::vector<Vec> elems;
  for (const auto& v : M)
    if (std::any_of(v.begin(), v.end(), [](Elem e) { return e.code != 0; })) elems.push_back(v);
  std::uint64_t work = 0;
  for (std::size_t r = 1; r <= rows.size(); ++r) {
    // r-combinations of the nonzero elements
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    if (r > elems.size()) break;
    while (true) {
      std::vector<Vec> sub;
      for (std::size_t i : idx) sub.push_back(elems[i]);
      budget.charge(++work, "rank subset search");
      if (span_of(R, sub, budget).size() == M.size()) return r;
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == elems.size() - r + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return rows.size();
}

std::size_t nakayama_rank(const RingMatrix& A, const OracleBudget& budget) {
  const ChainRing& R = A.ring().as_chain();
  std::vector<Vec> rows, prows;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    rows.push_back(A.row(i));
    Vec p = A.row(i);
    for (auto& e : p) e = R.mul(e, R.pi());
    prows.push_back(p);
  }
  std::size_t quotient = span_of(R, rows, budget).size() / span_of(R, prows, budget).size();
  std::size_t r = 0;
  for (std::size_t s = 1; s < quotient; s *= R.residue_size()) ++r;
  return r;
}

VanishingSearch brute_vanishing_poly(const ChainRing& R, const OracleBudget& budget) {
  const std::uint64_t n = R.size();
  std::uint64_t work = 0;
  for (std::size_t d = 1;; ++d) {
    const std::uint64_t count = checked_pow(n, d);
    work = (work + count > work) ? work + count : UINT64_MAX;
    budget.charge(work, "vanishing polynomial search");
    VanishingSearch out{d, {}};
    for (std::uint64_t t = 0; t < count; ++t) {
      // lower coefficients c_0..c_{d-1}, c_0 least significant
      Vec c(d + 1);
      std::uint64_t s = t;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = Elem{s % n};
        s /= n;
      }
      c[d] = R.one();
      bool vanish = true;
      for (std::uint64_t x = 0; x < n && vanish; ++x) {
        Elem acc{0};
        for (std::size_t i = d + 1; i-- > 0;) acc = R.add(R.mul(acc, Elem{x}), c[i]);
        vanish = R.is_zero(acc);
      }
      if (vanish) out.polys.push_back(std::move(c));
    }
    if (!out.polys.empty()) return out;
  }
}

std::vector<RingMatrix> brute_free_envelopes(const RingMatrix& A, std::size_t r, const OracleBudget& budget) {
  if (r == 0) throw DomainError("free envelopes need r >= 1");
  const Ring& R = A.ring();
  const std::size_t n = A.cols();
  const std::uint64_t nvec = checked_pow(R.size(), n);
  budget.charge(nvec, "vector enumeration");
  const std::uint64_t free_size = checked_pow(R.size(), r);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < A.rows(); ++i) rows.push_back(A.row(i));

  std::vector<RingMatrix> out;
  std::set<std::set<Vec>> seen;
  std::vector<std::uint64_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > nvec) return out;
  std::uint64_t work = 0;
  while (true) {
    budget.charge(++work, "free envelope search");
    std::vector<Vec> basis;
    for (auto t : idx) basis.push_back(nth_point(t, R.size(), n));
    auto S = span_of(R, basis, budget);
    if (S.size() == free_size &&
        std::all_of(rows.begin(), rows.end(), [&](const Vec& v) { return S.count(v) > 0; }) &&
        seen.insert(S).second) {
      out.push_back(RingMatrix::from_elems(A.ring_ptr(), basis));
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == nvec - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Vec> brute_minrank(const MinRankInstance& inst, const OracleBudget& budget) {
  inst.validate();
  const Ring& R = *inst.ring;
  const std::uint64_t count = checked_pow(R.size(), inst.k());
  budget.charge(count, "MinRank enumeration");
  std::vector<Vec> out;
  for (std::uint64_t t = 0; t < count; ++t) {
    Vec x = nth_point(t, R.size(), inst.k());
    RingMatrix M(inst.ring, inst.rows(), inst.cols());
    for (std::size_t i = 0; i < inst.rows(); ++i)
      for (std::size_t j = 0; j < inst.cols(); ++j) {
        Elem e = inst.matrices[0](i, j);
        for (std::size_t l = 0; l < x.size(); ++l) e = R.add(e, R.mul(x[l], inst.matrices[l + 1](i, j)));
        M(i, j) = e;
      }
    std::size_t rk = 0;
    if (R.is_chain()) {
      rk = nakayama_rank(M, budget);
    } else {
      for (const auto& part : M.crt_split()) rk = std::max(rk, nakayama_rank(part, budget));
    }
    if (rk <= inst.r) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SkewPoly> brute_annihilators(const ExtensionPtr& ext, const Vec& u, std::size_t r,
                                         const OracleBudget& budget) {
  const GaloisExtension& E = *ext;
  const Ring& S = E.ring();
  const std::uint64_t count = checked_pow(S.size(), r);
  budget.charge(count, "annihilator enumeration");
  // sigma^i(u_j), computed once
  std::vector<Vec> images(r + 1);
  for (std::size_t i = 0; i <= r; ++i)
    for (Elem x : u) images[i].push_back(E.frobenius(x, static_cast<std::int64_t>(i)));
  std::vector<SkewPoly> out;
  for (std::uint64_t t = 0; t < count; ++t) {
    Vec w = nth_point(t, S.size(), r);
    bool kills = true;
    for (std::size_t j = 0; j < u.size() && kills; ++j) {
      Elem acc = images[r][j];
      for (std::size_t i = 0; i < r; ++i) acc = S.add(acc, S.mul(w[i], images[i][j]));
      kills = S.is_zero(acc);
    }
    if (!kills) continue;
    w.push_back(S.one());
    out.emplace_back(ext, std::move(w));
  }
  return out;
}

}  // namespace chainring
