#include "topohelly/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "topohelly/errors.hpp"

namespace topohelly {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& v) { return v == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw internal_consistency_error("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Int& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ == 0 && a.rows_ == 0) {
    return b;
  }
  if (b.cols_ == 0 && b.rows_ == 0) {
    return a;
  }
  if (a.rows_ != b.rows_)
    throw internal_consistency_error("hcat row mismatch");
  IntMatrix out(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
  }
  return out;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& idx) const {
  IntMatrix out(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
  return out;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  IntMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

namespace {

// Thrown inside the machine-word elimination path; the caller retries with
// arbitrary precision.
struct overflow_signal {};

struct I64Ops {
  using Scalar = std::int64_t;
  static Scalar mul(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_signal{};
    return r;
  }
  static Scalar sub(Scalar a, Scalar b) {
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_signal{};
    return r;
  }
  static Scalar div_exact(Scalar a, Scalar b) {
    if (a % b != 0)
      throw internal_consistency_error("fraction-free division not exact");
    return a / b;
  }
  static bool less_abs(Scalar a, Scalar b) {
    const auto ua = a < 0 ? -static_cast<std::uint64_t>(a)
                          : static_cast<std::uint64_t>(a);
    const auto ub = b < 0 ? -static_cast<std::uint64_t>(b)
                          : static_cast<std::uint64_t>(b);
    return ua < ub;
  }
};

struct BigOps {
  using Scalar = Int;
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar div_exact(const Scalar& a, const Scalar& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0)
      throw internal_consistency_error("fraction-free division not exact");
    return q;
  }
  static bool less_abs(const Scalar& a, const Scalar& b) {
    return boost::multiprecision::abs(a) < boost::multiprecision::abs(b);
  }
};

template <class Ops>
using Grid = std::vector<std::vector<typename Ops::Scalar>>;

bool fits_i64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

template <class Ops>
Grid<Ops> to_grid(const IntMatrix& m) {
  Grid<Ops> g(m.rows(), std::vector<typename Ops::Scalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<typename Ops::Scalar, std::int64_t>) {
        if (!fits_i64(m(i, j))) throw overflow_signal{};
        g[i][j] = static_cast<std::int64_t>(m(i, j));
      } else {
        g[i][j] = m(i, j);
      }
    }
  return g;
}

// Fraction-free (Bareiss) forward elimination with row pivoting by minimal
// absolute value.  Zero columns are skipped; pivot_cols records the echelon
// structure.  All divisions are exact by the Sylvester identity; the scalar
// ops verify this.
template <class Ops>
std::vector<std::size_t> ff_forward(Grid<Ops>& m) {
  using S = typename Ops::Scalar;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  S prev = S(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pi = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0 && (pi == rows || Ops::less_abs(m[i][c], m[pi][c])))
        pi = i;
    if (pi == rows) continue;
    std::swap(m[r], m[pi]);
    const S pivot = m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) {
        // Still needs the Bareiss rescale to keep later divisions exact.
        for (std::size_t j = c; j < cols; ++j) {
          if (m[i][j] != 0)
            m[i][j] = Ops::div_exact(Ops::mul(pivot, m[i][j]), prev);
        }
        continue;
      }
      const S f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = Ops::div_exact(
            Ops::sub(Ops::mul(pivot, m[i][j]), Ops::mul(f, m[r][j])), prev);
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

// One-step fraction-free Gauss-Jordan (Nakos-Turner-Williams style): after
// the run every pivot entry equals the final pivot delta and pivot columns
// are zero elsewhere, so kernel vectors read off directly.
template <class Ops>
std::vector<std::size_t> ff_gauss_jordan(Grid<Ops>& m) {
  using S = typename Ops::Scalar;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  S prev = S(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pi = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0 && (pi == rows || Ops::less_abs(m[i][c], m[pi][c])))
        pi = i;
    if (pi == rows) continue;
    std::swap(m[r], m[pi]);
    const S pivot = m[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const S f = m[i][c];
      if (f == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (m[i][j] != 0)
            m[i][j] = Ops::div_exact(Ops::mul(pivot, m[i][j]), prev);
        }
      } else {
        for (std::size_t j = 0; j < cols; ++j)
          m[i][j] = Ops::div_exact(
              Ops::sub(Ops::mul(pivot, m[i][j]), Ops::mul(f, m[r][j])), prev);
      }
    }
    prev = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return;
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead < v.size() && v[lead] < 0) g = -g;
  for (Int& x : v) x /= g;
}

template <class Ops>
IntMatrix kernel_impl(const IntMatrix& m) {
  Grid<Ops> g = to_grid<Ops>(m);
  const std::size_t cols = m.cols();
  const std::vector<std::size_t> pivots = ff_gauss_jordan<Ops>(g);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  const std::size_t dim = cols - pivots.size();
  IntMatrix out(cols, dim);
  if (dim == 0) return out;

  const Int delta =
      pivots.empty() ? Int(1) : Int(g[pivots.size() - 1][pivots.back()]);
  std::size_t col = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Int> v(cols);
    v[f] = delta;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -Int(g[i][f]);
    make_primitive(v);
    for (std::size_t i = 0; i < cols; ++i) out(i, col) = v[i];
    ++col;
  }
  return out;
}

template <class Ops>
long rank_impl(const IntMatrix& m) {
  Grid<Ops> g = to_grid<Ops>(m);
  return static_cast<long>(ff_forward<Ops>(g).size());
}

// ---- prime field helpers -------------------------------------------------

std::int64_t fp_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::vector<std::vector<std::int64_t>> to_fp_grid(const IntMatrix& m,
                                                  std::uint32_t p) {
  std::vector<std::vector<std::int64_t>> g(
      m.rows(), std::vector<std::int64_t>(m.cols()));
  const Int pp = p;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int r = m(i, j) % pp;
      if (r < 0) r += pp;
      g[i][j] = static_cast<std::int64_t>(r);
    }
  return g;
}

// Reduced row echelon over F_p; pivots normalized to 1.
std::vector<std::size_t> fp_rref(std::vector<std::vector<std::int64_t>>& m,
                                 std::int64_t p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pi = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pi = i;
        break;
      }
    if (pi == rows) continue;
    std::swap(m[r], m[pi]);
    const std::int64_t inv = fp_pow(m[r][c], p - 2, p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p))
    throw malformed_input_error("field characteristic must be 0 or prime, got " +
                                std::to_string(p));
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

long rank_q(const IntMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  try {
    return rank_impl<I64Ops>(m);
  } catch (const overflow_signal&) {
    return rank_impl<BigOps>(m);
  }
}

IntMatrix kernel_q(const IntMatrix& m) {
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  try {
    return kernel_impl<I64Ops>(m);
  } catch (const overflow_signal&) {
    return kernel_impl<BigOps>(m);
  }
}

long rank_fp(const IntMatrix& m, std::uint32_t p) {
  require_prime(p);
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto g = to_fp_grid(m, p);
  return static_cast<long>(fp_rref(g, p).size());
}

IntMatrix kernel_fp(const IntMatrix& m, std::uint32_t p) {
  require_prime(p);
  if (m.cols() == 0) return IntMatrix(0, 0);
  if (m.rows() == 0) return IntMatrix::identity(m.cols());
  auto g = to_fp_grid(m, p);
  const auto pivots = fp_rref(g, p);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  IntMatrix out(cols, cols - pivots.size());
  std::size_t col = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out(f, col) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const std::int64_t v = g[i][f];
      out(pivots[i], col) = v == 0 ? 0 : p - v;
    }
    ++col;
  }
  return out;
}

long rank_field(const IntMatrix& m, std::uint32_t characteristic) {
  return characteristic == 0 ? rank_q(m) : rank_fp(m, characteristic);
}

IntMatrix kernel_field(const IntMatrix& m, std::uint32_t characteristic) {
  return characteristic == 0 ? kernel_q(m) : kernel_fp(m, characteristic);
}

std::vector<std::size_t> extending_columns(const IntMatrix& fixed,
                                           const IntMatrix& candidates,
                                           std::uint32_t characteristic) {
  const IntMatrix joined = IntMatrix::hcat(fixed, candidates);
  std::vector<std::size_t> pivots;
  if (characteristic == 0) {
    try {
      Grid<I64Ops> g = to_grid<I64Ops>(joined);
      pivots = ff_forward<I64Ops>(g);
    } catch (const overflow_signal&) {
      Grid<BigOps> g = to_grid<BigOps>(joined);
      pivots = ff_forward<BigOps>(g);
    }
  } else {
    require_prime(characteristic);
    auto g = to_fp_grid(joined, characteristic);
    pivots = fp_rref(g, characteristic);
  }
  std::vector<std::size_t> out;
  for (std::size_t c : pivots)
    if (c >= fixed.cols()) out.push_back(c - fixed.cols());
  return out;
}

std::optional<RatMatrix> solve_linear(const IntMatrix& a, const IntMatrix& b,
                                      std::uint32_t characteristic) {
  if (a.rows() != b.rows())
    throw internal_consistency_error("solve_linear shape mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();

  if (characteristic != 0) {
    require_prime(characteristic);
    const std::int64_t p = characteristic;
    auto g = to_fp_grid(IntMatrix::hcat(a, b), characteristic);
    const auto pivots = fp_rref(g, p);
    for (std::size_t c : pivots)
      if (c >= n) return std::nullopt;
    RatMatrix x(n, k);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) x(pivots[i], j) = Rat(g[i][n + j]);
    return x;
  }

  // Rational Gauss-Jordan on the augmented system; sizes here are modest
  // (representative solves), so plain rational arithmetic is fine.
  std::vector<std::vector<Rat>> g(a.rows(), std::vector<Rat>(n + k));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = Rat(a(i, j));
    for (std::size_t j = 0; j < k; ++j) g[i][n + j] = Rat(b(i, j));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n + k && r < g.size(); ++c) {
    std::size_t pi = g.size();
    for (std::size_t i = r; i < g.size(); ++i)
      if (g[i][c] != 0) {
        pi = i;
        break;
      }
    if (pi == g.size()) continue;
    std::swap(g[r], g[pi]);
    const Rat inv = Rat(1) / g[r][c];
    for (std::size_t j = c; j < n + k; ++j) g[r][j] *= inv;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == r || g[i][c] == 0) continue;
      const Rat f = g[i][c];
      for (std::size_t j = c; j < n + k; ++j) g[i][j] -= f * g[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t c : pivots)
    if (c >= n) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) x(pivots[i], j) = g[i][n + j];
  return x;
}

}  // namespace topohelly
