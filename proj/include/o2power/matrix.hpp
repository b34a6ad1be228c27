#pragma once
/// @file matrix.hpp
/// Dense square matrices over the residue field or O_2.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "o2power/poly.hpp"

namespace o2power {

template <CoefficientRing R>
class Matrix {
 public:
  using ring_type = R;
  using elem = typename R::elem;
  using Vec = std::vector<elem>;

  Matrix(R ring, std::size_t n) : ring_(std::move(ring)), n_(n), a_(n * n, ring_.zero()) {}
  Matrix(R ring, std::size_t n, std::vector<elem> entries) : ring_(std::move(ring)), n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) fail(ErrorCode::DimMismatch, "entry count is not n^2");
  }

  static Matrix identity(const R& r, std::size_t n) { return scalar(r, n, r.one()); }
  static Matrix scalar(const R& r, std::size_t n, elem c) {
    Matrix m(r, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
    return m;
  }
  /// Row-major integers mapped through from_int.
  static Matrix from_ints(const R& r, std::size_t n, std::initializer_list<std::int64_t> xs) {
    std::vector<elem> e;
    for (auto x : xs) e.push_back(r.from_int(x));
    return Matrix(r, n, std::move(e));
  }
  static Matrix from_columns(const R& r, const std::vector<Vec>& cols) {
    const std::size_t n = cols.size();
    Matrix m(r, n);
    for (std::size_t j = 0; j < n; ++j) {
      if (cols[j].size() != n) fail(ErrorCode::DimMismatch, "column length mismatch");
      for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  const R& ring() const { return ring_; }
  std::size_t n() const { return n_; }
  const std::vector<elem>& entries() const { return a_; }
  elem operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  elem& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Vec column(std::size_t j) const {
    Vec v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix& operator+=(const Matrix& o) {
    check(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = ring_.add(a_[i], o.a_[i]);
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = ring_.sub(a_[i], o.a_[i]);
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = ring_.neg(x);
    return m;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check(b);
    const R& r = a.ring_;
    const std::size_t n = a.n_;
    Matrix c(r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const elem x = a.a_[i * n + k];
        if (r.is_zero(x)) continue;
        for (std::size_t j = 0; j < n; ++j) c.a_[i * n + j] = r.add(c.a_[i * n + j], r.mul(x, b.a_[k * n + j]));
      }
    return c;
  }
  Vec operator*(const Vec& v) const {
    if (v.size() != n_) fail(ErrorCode::DimMismatch, "vector length mismatch");
    Vec out(n_, ring_.zero());
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] = ring_.add(out[i], ring_.mul(a_[i * n_ + j], v[j]));
    return out;
  }
  Matrix scaled(elem c) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = ring_.mul(x, c);
    return m;
  }
  Matrix transpose() const {
    Matrix m(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m.at(j, i) = (*this)(i, j);
    return m;
  }
  Matrix pow(std::uint64_t e) const {
    Matrix r = identity(ring_, n_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.a_ == b.a_;
  }

  /// Canonical byte encoding of the entries (4 bytes each, little-endian).
  std::string key() const {
    std::string s(a_.size() * 4, '\0');
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const std::uint32_t v = a_[i].v;
      for (int b = 0; b < 4; ++b) s[i * 4 + b] = static_cast<char>((v >> (8 * b)) & 0xFF);
    }
    return s;
  }

  /// Rows separated by `;`, entries by `,`.
  std::string to_text() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + ring_.format((*this)(i, j));
    }
    return s;
  }

 private:
  void check(const Matrix& o) const {
    require_same_ring(ring_, o.ring_);
    if (n_ != o.n_) fail(ErrorCode::DimMismatch, "matrix dimensions differ");
  }

  R ring_;
  std::size_t n_;
  std::vector<elem> a_;
};

using MatK = Matrix<Field>;
using MatO2 = Matrix<Ring>;

template <CoefficientRing R>
inline Matrix<R> parse_matrix(const R& r, std::string_view text) {
  const auto rows = detail::split(text, ';');
  const std::size_t n = rows.size();
  std::vector<typename R::elem> e;
  for (auto row : rows) {
    const auto cells = detail::split(row, ',');
    if (cells.size() != n) fail(ErrorCode::ParseError, "matrix text is not square");
    for (auto c : cells) e.push_back(r.parse(c));
  }
  return Matrix<R>(r, n, std::move(e));
}

inline MatK theta(const MatO2& A) {
  std::vector<KElem> e;
  e.reserve(A.entries().size());
  for (auto x : A.entries()) e.push_back(A.ring().theta(x));
  return MatK(A.ring().residue_field(), A.n(), std::move(e));
}

inline MatO2 lift(const Ring& R, const MatK& A) {
  require_same_ring(R.residue_field(), A.ring());
  std::vector<O2Elem> e;
  for (auto x : A.entries()) e.push_back(R.lift(x));
  return MatO2(R, A.n(), std::move(e));
}

inline MatO2 pi_times(const Ring& R, const MatK& A) {
  require_same_ring(R.residue_field(), A.ring());
  std::vector<O2Elem> e;
  for (auto x : A.entries()) e.push_back(R.pi_times(x));
  return MatO2(R, A.n(), std::move(e));
}

/// For a matrix with entries in m, the unique X over k with A = pi * lift(X).
inline MatK m_part(const MatO2& A) {
  const Ring& R = A.ring();
  std::vector<KElem> e;
  for (auto x : A.entries()) {
    if (!R.in_m(x)) fail(ErrorCode::Internal, "entry outside the maximal ideal");
    e.push_back(R.m_part(x));
  }
  return MatK(R.residue_field(), A.n(), std::move(e));
}

inline std::vector<KElem> theta(const Ring& R, const std::vector<O2Elem>& v) {
  std::vector<KElem> out;
  for (auto x : v) out.push_back(R.theta(x));
  return out;
}

/// det(tI - A) by Berkowitz's division-free recurrence over leading principal minors.
template <CoefficientRing R>
inline Poly<R> charpoly(const Matrix<R>& A) {
  const R& r = A.ring();
  const std::size_t n = A.n();
  using E = typename R::elem;
  if (n == 0) return Poly<R>::constant(r, r.one());
  std::vector<E> C = {r.one(), r.neg(A(0, 0))};  // highest degree first
  for (std::size_t m = 1; m < n; ++m) {
    // A_m = leading m x m block, row R = A[m][0..m-1], column Cc = A[0..m-1][m]
    std::vector<E> col(m + 2);
    col[0] = r.one();
    col[1] = r.neg(A(m, m));
    std::vector<E> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = A(i, m);
    for (std::size_t k = 0; k < m; ++k) {
      E s = r.zero();
      for (std::size_t j = 0; j < m; ++j) s = r.add(s, r.mul(A(m, j), v[j]));
      col[k + 2] = r.neg(s);
      if (k + 1 < m) {
        std::vector<E> w(m, r.zero());
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) w[i] = r.add(w[i], r.mul(A(i, j), v[j]));
        v = std::move(w);
      }
    }
    std::vector<E> next(m + 2, r.zero());
    for (std::size_t i = 0; i < m + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, m); ++j) next[i] = r.add(next[i], r.mul(col[i - j], C[j]));
    C = std::move(next);
  }
  std::vector<E> le(C.rbegin(), C.rend());
  return Poly<R>(r, std::move(le));
}

template <CoefficientRing R>
inline typename R::elem det(const Matrix<R>& A) {
  const R& r = A.ring();
  const std::size_t n = A.n();
  if (n == 1) return A(0, 0);
  if (n == 2) return r.sub(r.mul(A(0, 0), A(1, 1)), r.mul(A(0, 1), A(1, 0)));
  const auto c0 = charpoly(A)[0];
  return n % 2 ? r.neg(c0) : c0;
}

inline bool is_gl(const MatO2& A) { return A.ring().is_unit(det(A)); }
inline bool is_gl(const MatK& A) { return !A.ring().is_zero(det(A)); }

template <CoefficientRing R>
inline Matrix<R> minor_matrix(const Matrix<R>& A, std::size_t row, std::size_t col) {
  const std::size_t n = A.n();
  Matrix<R> m(A.ring(), n - 1);
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (j == col) continue;
      m.at(ii, jj++) = A(i, j);
    }
    ++ii;
  }
  return m;
}

template <CoefficientRing R>
inline Matrix<R> adjugate(const Matrix<R>& A) {
  const R& r = A.ring();
  const std::size_t n = A.n();
  Matrix<R> adj(r, n);
  if (n == 1) {
    adj.at(0, 0) = r.one();
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto d = det(minor_matrix(A, i, j));
      adj.at(j, i) = (i + j) % 2 ? r.neg(d) : d;
    }
  return adj;
}

/// Gauss-Jordan elimination choosing a unit pivot in each column.
template <CoefficientRing R>
inline Matrix<R> inverse_gauss_jordan(const Matrix<R>& A) {
  const R& r = A.ring();
  const std::size_t n = A.n();
  Matrix<R> M = A, I = Matrix<R>::identity(r, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (r.is_unit(M(i, c))) {
        piv = i;
        break;
      }
    if (piv == n) fail(ErrorCode::InvOfNonUnit, "matrix is not invertible");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(M.at(c, j), M.at(piv, j));
      std::swap(I.at(c, j), I.at(piv, j));
    }
    const auto inv = r.inv(M(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      M.at(c, j) = r.mul(M(c, j), inv);
      I.at(c, j) = r.mul(I(c, j), inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || r.is_zero(M(i, c))) continue;
      const auto f = M(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        M.at(i, j) = r.sub(M(i, j), r.mul(f, M(c, j)));
        I.at(i, j) = r.sub(I(i, j), r.mul(f, I(c, j)));
      }
    }
  }
  return I;
}

/// adj(A) * det(A)^{-1} for n <= 4, Gauss-Jordan otherwise.
template <CoefficientRing R>
inline Matrix<R> inverse(const Matrix<R>& A) {
  const R& r = A.ring();
  if (A.n() <= 4) {
    const auto d = det(A);
    if (!r.is_unit(d)) fail(ErrorCode::InvOfNonUnit, "matrix is not invertible");
    return adjugate(A).scaled(r.inv(d));
  }
  return inverse_gauss_jordan(A);
}

/// F(A) by Horner's rule.
template <CoefficientRing R>
inline Matrix<R> evaluate(const Poly<R>& F, const Matrix<R>& A) {
  require_same_ring(F.ring(), A.ring());
  const R& r = A.ring();
  Matrix<R> out(r, A.n());
  for (std::size_t i = F.coeffs().size(); i-- > 0;) {
    out = out * A;
    for (std::size_t d = 0; d < A.n(); ++d) out.at(d, d) = r.add(out(d, d), F.coeffs()[i]);
  }
  return out;
}

template <CoefficientRing R>
inline bool annihilates(const Poly<R>& F, const Matrix<R>& A) {
  const auto Z = evaluate(F, A);
  for (auto x : Z.entries())
    if (!A.ring().is_zero(x)) return false;
  return true;
}

/// Companion matrix: ones on the subdiagonal, last column -c_0, ..., -c_{n-1}.
template <CoefficientRing R>
inline Matrix<R> companion(const Poly<R>& F) {
  if (!F.is_monic()) fail(ErrorCode::NonMonic, "companion matrix needs a monic polynomial");
  const R& r = F.ring();
  const std::size_t n = F.deg();
  Matrix<R> C(r, n);
  for (std::size_t i = 1; i < n; ++i) C.at(i, i - 1) = r.one();
  for (std::size_t i = 0; i < n; ++i) C.at(i, n - 1) = r.neg(F[i]);
  return C;
}

template <CoefficientRing R>
inline Matrix<R> block_diag(const R& r, const std::vector<Matrix<R>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.n();
  Matrix<R> M(r, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.n(); ++i)
      for (std::size_t j = 0; j < b.n(); ++j) M.at(off + i, off + j) = b(i, j);
    off += b.n();
  }
  return M;
}

/// r copies of D on the diagonal and identity blocks on the subdiagonal.
template <CoefficientRing R>
inline Matrix<R> block_bidiagonal(const Matrix<R>& D, std::size_t r) {
  const auto& ring = D.ring();
  const std::size_t d = D.n();
  Matrix<R> M(ring, d * r);
  for (std::size_t b = 0; b < r; ++b) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M.at(b * d + i, b * d + j) = D(i, j);
    if (b + 1 < r)
      for (std::size_t i = 0; i < d; ++i) M.at((b + 1) * d + i, b * d + i) = ring.one();
  }
  return M;
}

/// J_{O_2,F}(r): companion blocks of F on the diagonal, identities below.
inline MatO2 jordan_O2(const PolyO2& F, std::size_t r) {
  if (r == 0) fail(ErrorCode::BadParams, "r must be positive");
  return block_bidiagonal(companion(F), r);
}

/// Columns w, Aw, ..., A^{n-1}w.
template <CoefficientRing R>
inline Matrix<R> krylov_matrix(const Matrix<R>& A, std::vector<typename R::elem> w) {
  std::vector<std::vector<typename R::elem>> cols;
  for (std::size_t j = 0; j < A.n(); ++j) {
    cols.push_back(w);
    w = A * w;
  }
  return Matrix<R>::from_columns(A.ring(), cols);
}

}  // namespace o2power
