#include "toric/integer_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Overflow-checked int64 arithmetic for the rank fast path.
struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t elim_step(std::int64_t pivot, std::int64_t x, std::int64_t lead, std::int64_t y,
                       std::int64_t prev) {
  return checked_sub(checked_mul(pivot, x), checked_mul(lead, y)) / prev;
}

Integer elim_step(const Integer& pivot, const Integer& x, const Integer& lead, const Integer& y,
                  const Integer& prev) {
  return (pivot * x - lead * y) / prev;
}

// Fraction-free (Bareiss) elimination; returns the rank.
template <class T>
std::size_t bareiss_rank(std::vector<std::vector<T>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t r = 0;
  T prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T lead = m[i][c];
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = elim_step(m[r][c], m[i][j], lead, m[r][j], prev);
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

IntVec make_vec(std::initializer_list<long long> values) {
  return IntVec(values.begin(), values.end());
}

IntVec make_vec(std::span<const long long> values) { return IntVec(values.begin(), values.end()); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Integer dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(const IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, abs_of(x));
  return g;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMat::IntMat(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMat: ragged initializer");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntVec IntMat::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVec IntMat::col(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMat IntMat::select_columns(std::span<const std::size_t> cols) const {
  IntMat m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

IntMat IntMat::select_rows(std::span<const std::size_t> rows) const {
  IntMat m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMat::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntVec IntMat::operator*(const IntVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("IntMat * IntVec: dimension mismatch");
  IntVec out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

IntMat IntMat::operator*(const IntMat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMat * IntMat: dimension mismatch");
  IntMat out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMat IntMat::operator-() const {
  IntMat out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

HermiteResult hermite_normal_form(const IntMat& A) {
  HermiteResult res{A, IntMat::identity(A.rows()), 0};
  IntMat& H = res.H;
  IntMat& U = res.U;
  const std::size_t m = H.rows();
  std::size_t p = 0;
  for (std::size_t j = 0; j < H.cols() && p < m; ++j) {
    // Euclid on column j among rows p..m-1 until only row p is nonzero.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = p; i < m; ++i)
        if (H(i, j) != 0 && (best == m || abs_of(H(i, j)) < abs_of(H(best, j)))) best = i;
      if (best == m) break;
      H.swap_rows(p, best);
      U.swap_rows(p, best);
      bool clean = true;
      for (std::size_t i = p + 1; i < m; ++i) {
        if (H(i, j) == 0) continue;
        const Integer q = H(i, j) / H(p, j);
        H.add_row_multiple(i, p, -q);
        U.add_row_multiple(i, p, -q);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(p, j) == 0) continue;
    if (H(p, j) < 0) {
      H.negate_row(p);
      U.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      const Integer q = floor_div(H(i, j), H(p, j));
      H.add_row_multiple(i, p, -q);
      U.add_row_multiple(i, p, -q);
    }
    ++p;
  }
  res.rank = p;
  return res;
}

std::vector<Integer> SmithResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

SmithResult smith_normal_form(const IntMat& A) {
  SmithResult res{IntMat::identity(A.rows()), A, IntMat::identity(A.cols()), 0};
  IntMat& S = res.S;
  IntMat& U = res.U;
  IntMat& V = res.V;
  const std::size_t m = S.rows();
  const std::size_t n = S.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (pi == m || abs_of(S(i, j)) < abs_of(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    S.swap_rows(t, pi);
    U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    V.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        const Integer q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        const Integer q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0 && abs_of(S(i, t)) < abs_of(S(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(t, j) != 0 && abs_of(S(t, j)) < abs_of(S(bi, bj))) {
            bi = t;
            bj = j;
          }
        if (bi != t) {
          S.swap_rows(t, bi);
          U.swap_rows(t, bi);
        }
        if (bj != t) {
          S.swap_cols(t, bj);
          V.swap_cols(t, bj);
        }
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      S.add_row_multiple(t, bad, 1);
      U.add_row_multiple(t, bad, 1);
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
  }
  res.rank = t;
  return res;
}

std::size_t rank(const IntMat& A) {
  bool small = true;
  const Integer lim = Integer(1) << 20;
  for (std::size_t i = 0; i < A.rows() && small; ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (abs_of(A(i, j)) > lim) {
        small = false;
        break;
      }
  if (small) {
    std::vector<std::vector<std::int64_t>> m(A.rows(), std::vector<std::int64_t>(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) m[i][j] = static_cast<std::int64_t>(A(i, j));
    try {
      return bareiss_rank(std::move(m), A.cols());
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  std::vector<std::vector<Integer>> m(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) m[i] = A.row(i);
  return bareiss_rank(std::move(m), A.cols());
}

Integer determinant(const IntMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  IntMat m = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

bool is_unimodular(const IntMat& A) {
  if (A.rows() != A.cols()) return false;
  const Integer d = determinant(A);
  return d == 1 || d == -1;
}

std::vector<IntVec> kernel_basis(const IntMat& A) {
  const HermiteResult h = hermite_normal_form(A.transpose());
  std::vector<IntVec> rows;
  for (std::size_t i = h.rank; i < h.U.rows(); ++i) rows.push_back(h.U.row(i));
  if (rows.empty()) return rows;
  const HermiteResult canon = hermite_normal_form(IntMat::from_rows(rows));
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < canon.rank; ++i) basis.push_back(canon.H.row(i));
  return basis;
}

Cokernel cokernel_map(const IntMat& A) {
  const SmithResult s = smith_normal_form(A);
  const std::size_t m = A.rows();
  Cokernel out;
  std::vector<IntVec> free_rows;
  for (std::size_t i = s.rank; i < m; ++i) free_rows.push_back(s.U.row(i));
  std::vector<IntVec> rows;
  if (!free_rows.empty()) {
    const HermiteResult h = hermite_normal_form(IntMat::from_rows(free_rows));
    for (std::size_t i = 0; i < h.H.rows(); ++i) rows.push_back(h.H.row(i));
  }
  out.free_rank = rows.size();
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Integer& d = s.S(i, i);
    if (d == 1) continue;
    IntVec r = s.U.row(i);
    for (auto& x : r) {
      x %= d;
      if (x < 0) x += d;
    }
    rows.push_back(std::move(r));
    out.invariants.push_back(d);
  }
  out.grading = IntMat::from_rows(rows, m);
  return out;
}

std::optional<IntVec> solve_integer(const IntMat& A, const IntVec& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  const SmithResult s = smith_normal_form(A);
  const IntVec c = s.U * b;
  for (std::size_t i = s.rank; i < c.size(); ++i)
    if (c[i] != 0) throw NoRationalSolution();
  IntVec y(A.cols(), Integer(0));
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (c[i] % s.S(i, i) != 0) return std::nullopt;
    y[i] = c[i] / s.S(i, i);
  }
  return s.V * y;
}

std::optional<IntVec> solve_nonneg_line(const IntMat& A, const IntVec& e, const IntVec& k) {
  const auto particular = solve_integer(A, e);
  if (!particular) return std::nullopt;
  const IntVec& x0 = *particular;
  if (k.empty() || is_zero(k)) {
    const bool ok = std::all_of(x0.begin(), x0.end(), [](const Integer& x) { return x >= 0; });
    return ok ? particular : std::nullopt;
  }
  if (k.size() != x0.size()) throw std::invalid_argument("solve_nonneg_line: kernel length");
  if (!is_zero(A * k)) throw std::invalid_argument("solve_nonneg_line: k is not in ker A");
  IntVec dir = k;
  const Integer g = gcd_of(dir);
  for (auto& x : dir) x /= g;

  std::optional<Integer> lo, hi;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    if (dir[i] == 0) {
      if (x0[i] < 0) return std::nullopt;
    } else if (dir[i] > 0) {
      const Integer b = ceil_div(-x0[i], dir[i]);
      if (!lo || b > *lo) lo = b;
    } else {
      const Integer b = floor_div(x0[i], -dir[i]);
      if (!hi || b < *hi) hi = b;
    }
  }
  if (lo && hi && *lo > *hi) return std::nullopt;
  const Integer t = lo ? *lo : *hi;
  IntVec x = x0;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += t * dir[i];
  return x;
}

namespace {

// Dense simplex tableau over Q in equality form, Bland's rule throughout.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : t_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t cols() const { return t_.empty() ? 0 : t_.front().size() - 1; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  std::vector<std::vector<Rational>>& rows() { return t_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t_[r][c];
    for (auto& x : t_[r]) x /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = c;
  }

  // Maximizes c.x over the columns in [0, active). Returns nullopt when
  // unbounded.
  std::optional<Rational> maximize(const std::vector<Rational>& c, std::size_t active) {
    const std::size_t rhs = cols();
    for (;;) {
      std::size_t enter = active;
      for (std::size_t j = 0; j < active && enter == active; ++j) {
        Rational red = c[j];
        for (std::size_t i = 0; i < t_.size(); ++i) red -= c[basis_[i]] * t_[i][j];
        if (red > 0) enter = j;
      }
      if (enter == active) break;
      std::size_t leave = t_.size();
      Rational best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter] <= 0) continue;
        const Rational ratio = t_[i][rhs] / t_[i][enter];
        if (leave == t_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.size()) return std::nullopt;
      pivot(leave, enter);
    }
    Rational value = 0;
    for (std::size_t i = 0; i < t_.size(); ++i) value += c[basis_[i]] * t_[i][rhs];
    return value;
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
};

Integer floor_rational(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

}  // namespace

std::optional<std::vector<Integer>> nonneg_fiber_bounds(const IntMat& A, const IntVec& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("nonneg_fiber_bounds: dimension mismatch");
  const std::size_t n = A.cols();
  // Reduce [A | b] to independent rows; a pivot in the b column means the
  // system has no rational solution at all.
  IntMat aug(A.rows(), n + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n) = b[i];
  }
  const HermiteResult h = hermite_normal_form(aug);
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < h.rank; ++i) {
    bool only_rhs = true;
    for (std::size_t j = 0; j < n; ++j)
      if (h.H(i, j) != 0) only_rhs = false;
    if (only_rhs) return std::vector<Integer>{};
    const int sign = h.H(i, n) < 0 ? -1 : 1;
    std::vector<Rational> row(n + h.rank + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(sign * h.H(i, j));
    row[n + i] = 1;
    row.back() = Rational(sign * h.H(i, n));
    rows.push_back(std::move(row));
  }
  const std::size_t m = rows.size();
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  Tableau tab(std::move(rows), std::move(basis));

  // Phase 1: minimize the artificial sum.
  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  const auto p1 = tab.maximize(phase1, n + m);
  if (!p1 || *p1 != 0) return std::vector<Integer>{};
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.rows()[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  std::vector<Integer> bounds(n);
  for (std::size_t k = 0; k < n; ++k) {
    Tableau work = tab;
    std::vector<Rational> c(n + m, Rational(0));
    c[k] = 1;
    const auto best = work.maximize(c, n);
    if (!best) return std::nullopt;
    bounds[k] = floor_rational(*best);
  }
  return bounds;
}

}  // namespace toric
