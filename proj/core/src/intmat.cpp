#include "galbrauer/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sparse_elim.hpp"

namespace galbrauer {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  for (const auto& row : rows)
    if (row.size() != c)
      throw Error("dimension-mismatch", "ragged row lengths in matrix literal");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_col(std::size_t j, const IntVector& v) {
  assert(v.size() == rows_);
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap(e_[i * cols_ + a], e_[i * cols_ + b]);
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& c) {
  Int* ra = e_.data() + a * cols_;
  const Int* rb = e_.data() + b * cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (mpz_sgn(rb[j].get_mpz_t()) != 0)
      mpz_addmul(ra[j].get_mpz_t(), c.get_mpz_t(), rb[j].get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& src = e_[i * cols_ + b];
    if (mpz_sgn(src.get_mpz_t()) != 0)
      mpz_addmul(e_[i * cols_ + a].get_mpz_t(), c.get_mpz_t(), src.get_mpz_t());
  }
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) {
    Int& x = e_[a * cols_ + j];
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) {
    Int& x = e_[i * cols_ + a];
    mpz_neg(x.get_mpz_t(), x.get_mpz_t());
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error("dimension-mismatch", "matrix product shape");
  IntMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (mpz_sgn(aik.get_mpz_t()) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Int& bkj = b(k, j);
        if (mpz_sgn(bkj.get_mpz_t()) != 0)
          mpz_addmul(r(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return r;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size())
    throw Error("dimension-mismatch", "matrix-vector product shape");
  IntVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (mpz_sgn(a(i, j).get_mpz_t()) != 0)
        mpz_addmul(r[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("dimension-mismatch", "matrix sum shape");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error("dimension-mismatch", "matrix difference shape");
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
  return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw Error("dimension-mismatch", "hstack row counts");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols())
    throw Error("dimension-mismatch", "vstack column counts");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

Int rounded_div(const Int& a, const Int& b) {
  if (b == 0) throw Error("dimension-mismatch", "division by zero");
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // The floor remainder shares b's sign, so the alternative representative
  // is always r - b with quotient q + 1.
  Int r2 = r * 2;
  if (mpz_cmpabs(r2.get_mpz_t(), b.get_mpz_t()) > 0) q += 1;
  return q;
}

namespace {

/// Smallest-absolute-value nonzero entry of D in the trailing submatrix
/// starting at (t, t); returns false when that submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d(i, j);
      if (mpz_sgn(x.get_mpz_t()) == 0) continue;
      if (!found ||
          mpz_cmpabs(x.get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

} // namespace

SnfDecomposition snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = out.D;
  IntMatrix& u = out.U;
  IntMatrix& v = out.V;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(d, t, pi, pj)) break; // trailing block is zero
    for (;;) {
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (mpz_sgn(d(i, t).get_mpz_t()) == 0) continue;
        Int q = rounded_div(d(i, t), d(t, t));
        if (q != 0) {
          Int nq = -q;
          d.add_row_multiple(i, t, nq);
          u.add_row_multiple(i, t, nq);
        }
        if (mpz_sgn(d(i, t).get_mpz_t()) != 0) clean = false;
      }
      if (!clean) {
        if (!find_pivot(d, t, pi, pj)) break;
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (mpz_sgn(d(t, j).get_mpz_t()) == 0) continue;
        Int q = rounded_div(d(t, j), d(t, t));
        if (q != 0) {
          Int nq = -q;
          d.add_col_multiple(j, t, nq);
          v.add_col_multiple(j, t, nq);
        }
        if (mpz_sgn(d(t, j).get_mpz_t()) != 0) clean = false;
      }
      if (!clean) {
        if (!find_pivot(d, t, pi, pj)) break;
        continue;
      }
      // Pull a witness of non-divisibility into row t, then restart.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n && divides; ++j) {
          if (mpz_sgn(d(i, j).get_mpz_t()) == 0) continue;
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            Int one = 1;
            d.add_row_multiple(t, i, one);
            u.add_row_multiple(t, i, one);
            divides = false;
          }
        }
      if (divides) break;
      pi = t;
      pj = t;
    }
    if (mpz_sgn(d(t, t).get_mpz_t()) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return out;
}

std::vector<Int> snf_diagonal(const IntMatrix& a) {
  IntMatrix d = snf(a).D;
  std::vector<Int> diag;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
    diag.push_back(d(i, i));
  return diag;
}

// --- sparse elimination engine -------------------------------------------

namespace detail {

void SparseMat::normalize() {
  for (auto& c : cols) {
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseCol out;
    for (auto& [r, v] : c) {
      if (!out.empty() && out.back().first == r)
        out.back().second += v;
      else
        out.emplace_back(r, std::move(v));
    }
    std::erase_if(out, [](const auto& p) { return p.second == 0; });
    c = std::move(out);
  }
}

SparseMat to_sparse(const IntMatrix& a) {
  SparseMat s;
  s.rows = a.rows();
  s.cols.resize(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) s.cols[j].emplace_back(i, a(i, j));
  return s;
}

IntMatrix to_dense(const SparseMat& a) {
  IntMatrix m(a.rows, a.cols.size());
  for (std::size_t j = 0; j < a.cols.size(); ++j)
    for (const auto& [i, v] : a.cols[j]) m(i, j) = v;
  return m;
}

IntVector col_to_dense(const SparseCol& c, std::size_t rows) {
  IntVector v(rows);
  for (const auto& [i, x] : c) v[i] = x;
  return v;
}

void axpy(SparseCol& y, const Int& k, const SparseCol& x) {
  if (k == 0 || x.empty()) return;
  SparseCol out;
  out.reserve(y.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
      out.push_back(std::move(y[i++]));
    } else if (i == y.size() || x[j].first < y[i].first) {
      out.emplace_back(x[j].first, k * x[j].second);
      ++j;
    } else {
      Int v = std::move(y[i].second);
      mpz_addmul(v.get_mpz_t(), k.get_mpz_t(), x[j].second.get_mpz_t());
      if (v != 0) out.emplace_back(y[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseMat mul(const SparseMat& a, const SparseMat& b) {
  SparseMat r;
  r.rows = a.rows;
  r.cols.resize(b.cols.size());
  for (std::size_t j = 0; j < b.cols.size(); ++j)
    for (const auto& [k, v] : b.cols[j]) axpy(r.cols[j], v, a.cols[k]);
  return r;
}

std::vector<std::size_t> Echelon::zero_columns() const {
  std::vector<std::size_t> z;
  for (std::size_t c = 0; c < h.size(); ++c)
    if (h[c].empty()) z.push_back(c);
  return z;
}

namespace {

void negate_col(SparseCol& c) {
  for (auto& [r, v] : c) mpz_neg(v.get_mpz_t(), v.get_mpz_t());
}

} // namespace

BlockReducer::BlockReducer(std::size_t block_rows,
                           const IntMatrix& block_relations)
    : block_rows_(block_rows) {
  if (block_relations.rows() != block_rows)
    throw Error("dimension-mismatch", "block relation height");
  const IntMatrix h = hnf(block_relations).H;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < h.cols(); ++c)
    for (std::size_t r = 0; r < block_rows_; ++r)
      if (h(r, c) != 0) {
        keep.push_back(c);
        leads_.push_back(r);
        break;
      }
  basis_ = IntMatrix(block_rows_, keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j)
    for (std::size_t r = 0; r < block_rows_; ++r)
      basis_(r, j) = h(r, keep[j]);
}

void BlockReducer::reduce(SparseCol& c) const {
  if (leads_.empty() || c.empty()) return;
  SparseCol out;
  out.reserve(c.size());
  IntVector local(block_rows_);
  std::size_t i = 0;
  while (i < c.size()) {
    const std::size_t base = c[i].first / block_rows_ * block_rows_;
    for (auto& v : local) v = 0;
    while (i < c.size() && c[i].first < base + block_rows_) {
      local[c[i].first - base] = std::move(c[i].second);
      ++i;
    }
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      const std::size_t lead = leads_[k];
      if (local[lead] == 0) continue;
      const Int q = rounded_div(local[lead], basis_(lead, k));
      if (q == 0) continue;
      for (std::size_t r = lead; r < block_rows_; ++r)
        if (basis_(r, k) != 0)
          mpz_submul(local[r].get_mpz_t(), q.get_mpz_t(),
                     basis_(r, k).get_mpz_t());
    }
    for (std::size_t r = 0; r < block_rows_; ++r)
      if (local[r] != 0) out.emplace_back(base + r, std::move(local[r]));
  }
  c = std::move(out);
}

namespace {

Echelon echelonize_impl(SparseMat a, bool with_transform,
                        std::size_t transform_rows,
                        const BlockReducer* reducer) {
  Echelon e;
  e.rows = a.rows;
  e.with_transform = with_transform;
  e.transform_rows = with_transform ? transform_rows : 0;
  const std::size_t n = a.cols.size();
  e.h = std::move(a.cols);
  if (with_transform) {
    e.t.resize(n);
    for (std::size_t c = 0; c < n && c < transform_rows; ++c)
      e.t[c].emplace_back(c, Int(1));
  }
  // Relation columns past transform_rows keep their initial form; reducing
  // them here would erase them before they can pivot.
  if (reducer)
    for (std::size_t c = 0; c < n && c < transform_rows; ++c)
      reducer->reduce(e.h[c]);

  // Lazy buckets of candidate columns keyed by current leading row.
  std::vector<std::vector<std::size_t>> bucket(e.rows);
  for (std::size_t c = 0; c < n; ++c)
    if (!e.h[c].empty()) bucket[e.h[c].front().first].push_back(c);

  std::vector<char> pivoted(n, 0);
  auto park = [&](std::size_t c) {
    if (!e.h[c].empty()) bucket[e.h[c].front().first].push_back(c);
  };

  for (std::size_t r = 0; r < e.rows; ++r) {
    std::vector<std::size_t> s;
    for (std::size_t c : bucket[r])
      if (!pivoted[c] && !e.h[c].empty() && e.h[c].front().first == r)
        s.push_back(c);
    bucket[r].clear();
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;

    while (s.size() > 1) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < s.size(); ++i)
        if (mpz_cmpabs(e.h[s[i]].front().second.get_mpz_t(),
                       e.h[s[best]].front().second.get_mpz_t()) < 0)
          best = i;
      std::swap(s[0], s[best]);
      const std::size_t c0 = s[0];
      std::vector<std::size_t> keep{c0};
      for (std::size_t i = 1; i < s.size(); ++i) {
        const std::size_t c = s[i];
        Int q = -rounded_div(e.h[c].front().second, e.h[c0].front().second);
        axpy(e.h[c], q, e.h[c0]);
        if (reducer) reducer->reduce(e.h[c]);
        if (with_transform) axpy(e.t[c], q, e.t[c0]);
        if (!e.h[c].empty() && e.h[c].front().first == r)
          keep.push_back(c);
        else
          park(c);
      }
      s = std::move(keep);
    }

    const std::size_t p = s[0];
    if (mpz_sgn(e.h[p].front().second.get_mpz_t()) < 0) {
      negate_col(e.h[p]);
      if (with_transform) negate_col(e.t[p]);
    }
    pivoted[p] = 1;
    e.pivots.emplace_back(r, p);
  }
  return e;
}

} // namespace

Echelon echelonize(SparseMat a, bool with_transform) {
  const std::size_t n = a.cols.size();
  return echelonize_impl(std::move(a), with_transform, n, nullptr);
}

Echelon echelonize_top(SparseMat a, std::size_t transform_rows) {
  return echelonize_impl(std::move(a), true, transform_rows, nullptr);
}

Echelon echelonize_top_reduced(SparseMat a, std::size_t transform_rows,
                               const BlockReducer& reducer) {
  if (reducer.block_rows() == 0 || a.rows % reducer.block_rows() != 0)
    throw Error("internal", "row count is not a whole number of blocks");
  return echelonize_impl(std::move(a), true, transform_rows, &reducer);
}

bool forward_solve(const Echelon& e, const IntVector& b, IntVector* coords) {
  if (b.size() != e.rows)
    throw Error("dimension-mismatch", "solve rhs length");
  if (coords && e.transform_rows < e.h.size())
    throw Error("internal", "solve needs the full transform");
  IntVector residual = b;
  std::vector<std::pair<std::size_t, Int>> used;
  for (const auto& [r, c] : e.pivots) {
    Int& cur = residual[r];
    if (cur == 0) continue;
    const Int& p = e.h[c].front().second;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cur.get_mpz_t(),
                p.get_mpz_t());
    if (rem != 0) return false;
    for (const auto& [row, v] : e.h[c])
      mpz_submul(residual[row].get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
    if (coords) used.emplace_back(c, std::move(q));
  }
  for (const auto& x : residual)
    if (x != 0) return false;
  if (coords) {
    IntVector out(e.h.size());
    for (const auto& [c, q] : used)
      for (const auto& [idx, v] : e.t[c])
        mpz_addmul(out[idx].get_mpz_t(), q.get_mpz_t(), v.get_mpz_t());
    *coords = std::move(out);
  }
  return true;
}

bool Echelon::contains(const IntVector& b) const {
  return forward_solve(*this, b, nullptr);
}

std::optional<IntVector> Echelon::solve(const IntVector& b) const {
  IntVector coords;
  if (!forward_solve(*this, b, &coords)) return std::nullopt;
  return coords;
}

} // namespace detail

// --- public routines on top of the engine --------------------------------

HermiteDecomposition hnf(const IntMatrix& a) {
  detail::Echelon e = detail::echelonize(detail::to_sparse(a), true);
  // Reduce entries left of each pivot into [0, pivot).
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const auto [ri, ci] = e.pivots[i];
    const Int& p = e.h[ci].front().second;
    for (std::size_t j = 0; j < i; ++j) {
      const std::size_t cj = e.pivots[j].second;
      auto it = std::lower_bound(
          e.h[cj].begin(), e.h[cj].end(), ri,
          [](const auto& ent, std::size_t row) { return ent.first < row; });
      if (it == e.h[cj].end() || it->first != ri) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
      if (q != 0) {
        Int nq = -q;
        detail::axpy(e.h[cj], nq, e.h[ci]);
        detail::axpy(e.t[cj], nq, e.t[ci]);
      }
    }
  }
  // Pivot columns ordered by pivot row, zero columns trailing.
  HermiteDecomposition out{IntMatrix(a.rows(), a.cols()),
                           IntMatrix(a.cols(), a.cols())};
  std::size_t dst = 0;
  auto emit = [&](std::size_t c) {
    for (const auto& [r, v] : e.h[c]) out.H(r, dst) = v;
    for (const auto& [r, v] : e.t[c]) out.U(r, dst) = v;
    ++dst;
  };
  for (const auto& [r, c] : e.pivots) emit(c);
  for (std::size_t c : e.zero_columns()) emit(c);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  detail::Echelon e = detail::echelonize(detail::to_sparse(a), true);
  const auto zeros = e.zero_columns();
  IntMatrix k(a.cols(), zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j)
    for (const auto& [r, v] : e.t[zeros[j]]) k(r, j) = v;
  return k;
}

IntMatrix kernel_basis_top(const IntMatrix& a, std::size_t k) {
  detail::Echelon e = detail::echelonize_top(detail::to_sparse(a), k);
  const auto zeros = e.zero_columns();
  IntMatrix out(k, zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j)
    for (const auto& [r, v] : e.t[zeros[j]]) out(r, j) = v;
  return out;
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) {
  detail::Echelon e = detail::echelonize(detail::to_sparse(a), true);
  return e.solve(b);
}

std::size_t rank(const IntMatrix& a) {
  return detail::echelonize(detail::to_sparse(a), false).rank();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error("dimension-mismatch", "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error("not-unimodular", "inverse of non-square matrix");
  SnfDecomposition s = snf(a);
  if (!s.D.is_identity())
    throw Error("not-unimodular", "matrix has nontrivial elementary divisors");
  return s.V * s.U;
}

// --- ColumnSpan -----------------------------------------------------------

struct ColumnSpan::Impl {
  detail::Echelon e;
};

ColumnSpan::ColumnSpan(const IntMatrix& a) : impl_(std::make_unique<Impl>()) {
  impl_->e = detail::echelonize(detail::to_sparse(a), true);
}

ColumnSpan::~ColumnSpan() = default;
ColumnSpan::ColumnSpan(ColumnSpan&&) noexcept = default;
ColumnSpan& ColumnSpan::operator=(ColumnSpan&&) noexcept = default;
ColumnSpan::ColumnSpan(const ColumnSpan& o)
    : impl_(std::make_unique<Impl>(*o.impl_)) {}
ColumnSpan& ColumnSpan::operator=(const ColumnSpan& o) {
  impl_ = std::make_unique<Impl>(*o.impl_);
  return *this;
}

std::size_t ColumnSpan::rank() const { return impl_->e.rank(); }

bool ColumnSpan::contains(const IntVector& v) const {
  return impl_->e.contains(v);
}

std::optional<IntVector> ColumnSpan::solve(const IntVector& v) const {
  return impl_->e.solve(v);
}

IntMatrix ColumnSpan::kernel() const {
  const detail::Echelon& e = impl_->e;
  const auto zeros = e.zero_columns();
  IntMatrix k(e.h.size(), zeros.size());
  for (std::size_t j = 0; j < zeros.size(); ++j)
    for (const auto& [r, v] : e.t[zeros[j]]) k(r, j) = v;
  return k;
}

} // namespace galbrauer
