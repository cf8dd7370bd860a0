#include "octe8/linalg.hpp"

namespace octe8 {
namespace {

// Multiplies every row by the lcm of its denominators, then divides by the
// gcd of its numerators. Keeps elimination fraction-free in spirit while the
// arithmetic itself stays rational.
void normalize_rows(RatMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1, g = 0;
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      if (is_zero(x)) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (g == 0) continue;
    Rat f(l, g);
    f.canonicalize();
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m.at(i, j))) m.at(i, j) *= f;
  }
}

// Reduced row echelon form; returns pivot column per pivot row (row-major
// order). Pivot rows are normalized to leading 1.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  normalize_rows(m);
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Rat det(const RatMatrix& a) {
  RatMatrix m = a;
  int n = m.rows();
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(m.at(i, col))) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m.at(i, col))) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

}  // namespace

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rat>& d) {
  RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!octe8::is_zero(x)) return false;
  return true;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw error("shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (is_zero(b.at(k, j))) continue;
        c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return c;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw error("shape mismatch");
  std::vector<Rat> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!octe8::is_zero(at(i, j)) && !octe8::is_zero(v[j]))
        out[i] += at(i, j) * v[j];
  return out;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& A,
                                      const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw error("shape mismatch");
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  std::vector<Rat> x(A.cols());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, A.cols());
  return x;
}

int rank(const RatMatrix& A) {
  RatMatrix m = A;
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> kernel(const RatMatrix& A) {
  RatMatrix m = A;
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(A.cols());
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Signature signature(const RatMatrix& S) {
  if (!S.is_symmetric()) throw error("signature needs a symmetric matrix");
  RatMatrix m = S;
  int n = m.rows();
  Signature sig;
  std::vector<bool> done(n, false);
  for (;;) {
    // Prefer a nonzero diagonal pivot; otherwise transfer an off-diagonal
    // entry onto the diagonal with the symmetric row+column addition.
    int p = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && !is_zero(m.at(i, i))) {
        p = i;
        break;
      }
    if (p < 0) {
      int oi = -1, oj = -1;
      for (int i = 0; i < n && oi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (!done[j] && !is_zero(m.at(i, j))) {
            oi = i;
            oj = j;
            break;
          }
      }
      if (oi < 0) break;
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        m.at(oi, k) += m.at(oj, k);
      }
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        m.at(k, oi) += m.at(k, oj);
      }
      p = oi;
    }
    Rat piv = m.at(p, p);
    if (sgn(piv) > 0)
      ++sig.pos;
    else
      ++sig.neg;
    done[p] = true;
    std::vector<Rat> col(n);
    for (int i = 0; i < n; ++i)
      if (!done[i]) col[i] = m.at(i, p);
    // Symmetric rank-one update m <- m - col col^T / piv on the active block.
    for (int i = 0; i < n; ++i) {
      if (done[i] || is_zero(col[i])) continue;
      Rat f = col[i] / piv;
      for (int j = 0; j < n; ++j) {
        if (done[j] || is_zero(col[j])) continue;
        m.at(i, j) -= f * col[j];
      }
    }
  }
  sig.zero = n - sig.pos - sig.neg;
  return sig;
}

std::vector<Rat> leading_principal_minors(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw error("minors need a square matrix");
  std::vector<Rat> out;
  for (int k = 1; k <= A.rows(); ++k) {
    RatMatrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = A.at(i, j);
    out.push_back(det(sub));
  }
  return out;
}

EigenReport integer_eigenspaces(const RatMatrix& A,
                                const std::vector<Rat>& candidates) {
  if (A.rows() != A.cols()) throw error("eigenspaces need a square matrix");
  EigenReport rep;
  int captured = 0;
  for (const Rat& lambda : candidates) {
    RatMatrix shifted = A;
    for (int i = 0; i < A.rows(); ++i) shifted.at(i, i) -= lambda;
    Eigenspace es;
    es.lambda = lambda;
    es.basis = kernel(shifted);
    es.multiplicity = static_cast<int>(es.basis.size());
    captured += es.multiplicity;
    rep.spaces.push_back(std::move(es));
  }
  rep.residual_dim = A.rows() - captured;
  return rep;
}

}  // namespace octe8
