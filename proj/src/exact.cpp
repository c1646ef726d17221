#include "bredon/exact.hpp"

#include <algorithm>
#include <sstream>

namespace bredon {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error("BadShape", "ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error("BadShape", "product dimension mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("BadShape", "sum dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("BadShape", "difference dimension mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::column(std::size_t j) const {
  IntMatrix c(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < cols_; ++k)
    std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k)
    std::swap((*this)(k, i), (*this)(k, j));
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
    os << "]";
  }
  os << "]";
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("BadShape", "hstack row mismatch");
  IntMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw Error("BadShape", "vstack col mismatch");
  IntMatrix r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

std::string AbelianGroupInvariants::to_string() const {
  std::ostringstream os;
  if (is_trivial()) return "0";
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < n; ++k) h(dst, k) += q * h(src, k);
    for (std::size_t k = 0; k < m; ++k) u(dst, k) += q * u(src, k);
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k) h(i, k) = -h(i, k);
    for (std::size_t k = 0; k < m; ++k) u(i, k) = -u(i, k);
  };
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclidean elimination within column c on rows r..m-1.
    for (;;) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 &&
            (piv == m || abs(h(i, c)) < abs(h(piv, c))))
          piv = i;
      if (piv == m) break;
      if (piv != r) {
        h.swap_rows(piv, r);
        u.swap_rows(piv, r);
      }
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Int q = h(i, c) / h(r, c);
        add_row(i, r, -q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      // floor division so residues land in [0, pivot)
      Int q = h(i, c) / h(r, c);
      if (h(i, c) - q * h(r, c) < 0) q -= 1;
      if (q != 0) add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = a.rows(), n = a.cols();
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < n; ++k) d(dst, k) += q * d(src, k);
    for (std::size_t k = 0; k < m; ++k) u(dst, k) += q * u(src, k);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < m; ++k) d(k, dst) += q * d(k, src);
    for (std::size_t k = 0; k < n; ++k) v(k, dst) += q * v(k, src);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest-magnitude nonzero pivot in the trailing block, index tie-break
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 &&
            (pi == m || abs(d(i, j)) < abs(d(pi, pj))))
          pi = i, pj = j;
    if (pi == m) break;
    if (pi != t) {
      d.swap_rows(pi, t);
      u.swap_rows(pi, t);
    }
    if (pj != t) {
      d.swap_cols(pj, t);
      v.swap_cols(pj, t);
    }
    bool dirty = false;
    for (std::size_t i = t + 1; i < m; ++i)
      if (d(i, t) != 0) {
        Int q = d(i, t) / d(t, t);
        add_row(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
    for (std::size_t j = t + 1; j < n; ++j)
      if (d(t, j) != 0) {
        Int q = d(t, j) / d(t, t);
        add_col(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
    if (dirty) continue;
    // pivot must divide the whole trailing block
    bool divides = true;
    for (std::size_t i = t + 1; i < m && divides; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (d(i, j) % d(t, t) != 0) {
          add_row(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < m; ++k) d(k, t) = -d(k, t);
      for (std::size_t k = 0; k < n; ++k) v(k, t) = -v(k, t);
    }
    ++t;
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::size_t matrix_rank(const IntMatrix& a) {
  HermiteResult hr = hermite_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (hr.h(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  // u * a^T = h; rows of u next to zero rows of h span ker(a).
  HermiteResult hr = hermite_normal_form(a.transpose());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool z = true;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h(i, j) != 0) {
        z = false;
        break;
      }
    if (z) zero_rows.push_back(i);
  }
  IntMatrix k(zero_rows.size(), a.cols());
  for (std::size_t r = 0; r < zero_rows.size(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) k(r, j) = hr.u(zero_rows[r], j);
  // canonicalize the basis itself
  IntMatrix kh = hermite_normal_form(k).h;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < kh.rows(); ++i) {
    bool z = true;
    for (std::size_t j = 0; j < kh.cols(); ++j)
      if (kh(i, j) != 0) {
        z = false;
        break;
      }
    if (!z) ++rank;
  }
  IntMatrix out(a.cols(), rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = kh(i, j);
  return out;
}

AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  AbelianGroupInvariants inv;
  std::size_t nonzero = 0;
  std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    if (s.d(i, i) == 0) continue;
    ++nonzero;
    if (s.d(i, i) > 1) inv.torsion.push_back(s.d(i, i));
  }
  inv.free_rank = a.rows() - nonzero;
  return inv;
}

std::optional<IntMatrix> solve(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error("BadShape", "solve dimension mismatch");
  SmithResult s = smith_normal_form(a);
  IntMatrix ub = s.u * b;
  IntMatrix y(a.cols(), b.cols());
  std::size_t k = std::min(a.rows(), a.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Int di = (i < k) ? s.d(i, i) : Int(0);
      if (di == 0) {
        if (ub(i, c) != 0) return std::nullopt;
      } else {
        if (ub(i, c) % di != 0) return std::nullopt;
        y(i, c) = ub(i, c) / di;
      }
    }
  }
  return s.v * y;
}

std::optional<IntMatrix> solve_mod(const IntMatrix& a, const IntMatrix& rels,
                                   const IntMatrix& b) {
  if (rels.cols() == 0) return solve(a, b);
  auto full = solve(hstack(a, rels), b);
  if (!full) return std::nullopt;
  IntMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = (*full)(i, j);
  return x;
}

bool in_span(const IntMatrix& a, const IntMatrix& b) {
  return solve(a, b).has_value();
}

bool is_unimodular(const IntMatrix& u) {
  if (u.rows() != u.cols()) return false;
  // Bareiss fraction-free determinant; avoids the entry blow-up of running a
  // normal form on matrices that already carry huge entries
  IntMatrix a = u;
  const std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return false;  // singular
    if (piv != k) {
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return a(n - 1, n - 1) == sign || a(n - 1, n - 1) == -sign;
}

}  // namespace bredon
