#include <algorithm>
#include <map>

#include "snf_detail.hpp"
#include "sspec/errors.hpp"

namespace sspec {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

namespace detail {

FullSNF full_snf(IntMatrix a, unsigned want) {
  const int m = a.rows(), n = a.cols();
  FullSNF out;
  if (want & want_u) out.u = IntMatrix::identity(m);
  if (want & want_uinv) out.uinv = IntMatrix::identity(m);
  if (want & want_v) out.v = IntMatrix::identity(n);
  if (want & want_vinv) out.vinv = IntMatrix::identity(n);
  const bool wu = want & want_u, wui = want & want_uinv, wv = want & want_v,
             wvi = want & want_vinv;

  // row_i += q * row_t
  auto row_add = [&](int i, int t, const Int& q) {
    for (int c = 0; c < n; ++c)
      if (a(t, c) != 0) a(i, c) += q * a(t, c);
    if (wu)
      for (int c = 0; c < m; ++c)
        if (out.u(t, c) != 0) out.u(i, c) += q * out.u(t, c);
    if (wui)
      for (int r = 0; r < m; ++r)
        if (out.uinv(r, i) != 0) out.uinv(r, t) -= q * out.uinv(r, i);
  };
  auto row_swap = [&](int i, int t) {
    if (i == t) return;
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(t, c));
    if (wu)
      for (int c = 0; c < m; ++c) std::swap(out.u(i, c), out.u(t, c));
    if (wui)
      for (int r = 0; r < m; ++r) std::swap(out.uinv(r, i), out.uinv(r, t));
  };
  // col_j += q * col_t
  auto col_add = [&](int j, int t, const Int& q) {
    for (int r = 0; r < m; ++r)
      if (a(r, t) != 0) a(r, j) += q * a(r, t);
    if (wv)
      for (int r = 0; r < n; ++r)
        if (out.v(r, t) != 0) out.v(r, j) += q * out.v(r, t);
    if (wvi)
      for (int c = 0; c < n; ++c)
        if (out.vinv(j, c) != 0) out.vinv(t, c) -= q * out.vinv(j, c);
  };
  auto col_swap = [&](int j, int t) {
    if (j == t) return;
    for (int r = 0; r < m; ++r) std::swap(a(r, j), a(r, t));
    if (wv)
      for (int r = 0; r < n; ++r) std::swap(out.v(r, j), out.v(r, t));
    if (wvi)
      for (int c = 0; c < n; ++c) std::swap(out.vinv(j, c), out.vinv(t, c));
  };

  int t = 0;
  for (; t < std::min(m, n); ++t) {
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) row_add(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) col_add(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot is left somewhere; move it in
        int bi = -1, bj = -1;
        Int small = abs(a(t, t));
        for (int i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < small) small = abs(a(i, t)), bi = i, bj = -1;
        for (int j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < small) small = abs(a(t, j)), bj = j, bi = -1;
        if (bi >= 0) row_swap(t, bi);
        if (bj >= 0) col_swap(t, bj);
        continue;
      }
      int fi = -1;
      for (int i = t + 1; i < m && fi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            fi = i;
            break;
          }
      if (fi < 0) break;
      row_add(t, fi, Int(1));
    }
    if (a(t, t) < 0) {
      for (int c = 0; c < n; ++c) a(t, c) = -a(t, c);
      if (wu)
        for (int c = 0; c < m; ++c) out.u(t, c) = -out.u(t, c);
      if (wui)
        for (int r = 0; r < m; ++r) out.uinv(r, t) = -out.uinv(r, t);
    }
  }
  out.rank = t;
  out.d = std::move(a);
  return out;
}

}  // namespace detail

int SNFResult::rank() const {
  return static_cast<int>(std::count_if(diagonal.begin(), diagonal.end(),
                                        [](const Int& x) { return x != 0; }));
}

SNFResult smith_normal_form(const IntMatrix& m) {
  auto full = detail::full_snf(m, detail::want_u | detail::want_v);
  SNFResult r;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) r.diagonal.push_back(full.d(i, i));
  r.row_transform = std::move(full.u);
  r.col_transform = std::move(full.v);
  return r;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap_with = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_with, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void SparseMatrix::set_column(int j, SparseVector entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector merged;
  for (auto& [r, v] : entries) {
    if (r < 0 || r >= rows_) throw InvalidInput("sparse matrix: row index out of range");
    if (!merged.empty() && merged.back().first == r)
      merged.back().second += v;
    else
      merged.emplace_back(r, std::move(v));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  columns_[j] = std::move(merged);
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::map<int, Int> acc;
  for (const auto& [j, x] : v)
    for (const auto& [r, y] : columns_[j]) acc[r] += x * y;
  SparseVector out;
  for (auto& [r, x] : acc)
    if (x != 0) out.emplace_back(r, std::move(x));
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) s.columns_[j].emplace_back(i, m(i, j));
  return s;
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows_, cols());
  for (int j = 0; j < cols(); ++j)
    for (const auto& [i, x] : columns_[j]) m(i, j) = x;
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("sparse product: shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (int j = 0; j < b.cols(); ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

}  // namespace sspec
