#include "critgroup/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

// Thrown by the 64-bit engine; the caller redoes the work with GMP.
struct Overflow {};

// --- scalar operations, overloaded for the two engines ---------------------

inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
inline int sign_of(const BigInt& x) { return sgn(x); }

inline std::int64_t checked_abs(std::int64_t x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return x < 0 ? -x : x;
}
inline bool abs_less(std::int64_t a, std::int64_t b) {
  return checked_abs(a) < checked_abs(b);
}
inline bool abs_less(const BigInt& a, const BigInt& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline std::int64_t tdiv(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return a / b;
}
inline BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(std::int64_t p, std::int64_t x) { return x % p == 0; }
inline bool divides(const BigInt& p, const BigInt& x) {
  return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0;
}

// x -= q * y
inline void submul(std::int64_t& x, std::int64_t q, std::int64_t y) {
  if (y == 0) return;
  std::int64_t p;
  if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &x)) {
    throw Overflow{};
  }
}
inline void submul(BigInt& x, const BigInt& q, const BigInt& y) {
  if (sgn(y) != 0) mpz_submul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
}

// x += q * y
inline void addmul(std::int64_t& x, std::int64_t q, std::int64_t y) {
  if (y == 0) return;
  std::int64_t p;
  if (__builtin_mul_overflow(q, y, &p) || __builtin_add_overflow(x, p, &x)) {
    throw Overflow{};
  }
}
inline void addmul(BigInt& x, const BigInt& q, const BigInt& y) {
  if (sgn(y) != 0) mpz_addmul(x.get_mpz_t(), q.get_mpz_t(), y.get_mpz_t());
}

inline void negate(std::int64_t& x) {
  if (x == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  x = -x;
}
inline void negate(BigInt& x) { mpz_neg(x.get_mpz_t(), x.get_mpz_t()); }

inline BigInt to_big(std::int64_t x) { return BigInt(static_cast<long>(x)); }
inline BigInt to_big(const BigInt& x) { return x; }

template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1;
    return d;
  }

  IntMatrix to_matrix() const {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = to_big((*this)(r, c));
    }
    return m;
  }
};

std::optional<Dense<std::int64_t>> to_int64(const IntMatrix& m) {
  Dense<std::int64_t> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!fits_int64(m(r, c))) return std::nullopt;
      d(r, c) = m(r, c).get_si();
    }
  }
  return d;
}

Dense<BigInt> to_bigint(const IntMatrix& m) {
  Dense<BigInt> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d(r, c) = m(r, c);
  }
  return d;
}

struct Tracking {
  bool u = false;
  bool u_inv = false;
  bool v = false;
};

// Diagonalizes A in place, mirroring every row operation into U (and the
// inverse column operation into U^-1) and every column operation into V.
template <class T>
class SmithEngine {
 public:
  SmithEngine(Dense<T> a, Tracking track) : a_(std::move(a)), track_(track) {
    if (track_.u) u_ = Dense<T>::identity(a_.rows);
    if (track_.u_inv) u_inv_ = Dense<T>::identity(a_.rows);
    if (track_.v) v_ = Dense<T>::identity(a_.cols);
  }

  void run() {
    const std::size_t n = std::min(a_.rows, a_.cols);
    for (std::size_t t = 0; t < n; ++t) {
      if (!bring_min_pivot(t)) break;
      for (;;) {
        if (!eliminate(t)) {
          bring_min_pivot(t);
          continue;
        }
        if (auto bad = find_non_multiple(t)) {
          row_add(t, *bad);
          continue;
        }
        break;
      }
      if (sign_of(a_(t, t)) < 0) row_negate(t);
    }
  }

  Dense<T> a_;
  Dense<T> u_;
  Dense<T> u_inv_;
  Dense<T> v_;

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool bring_min_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows; ++i) {
      for (std::size_t j = t; j < a_.cols; ++j) {
        const T& x = a_(i, j);
        if (is_zero(x)) continue;
        if (!best || abs_less(x, a_(best->first, best->second))) best = {i, j};
      }
    }
    if (!best) return false;
    if (best->first != t) row_swap(t, best->first);
    if (best->second != t) col_swap(t, best->second);
    return true;
  }

  // Clears row t and column t by truncated division. Returns false if any
  // remainder is left (which is then smaller than the pivot).
  bool eliminate(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows; ++i) {
      if (is_zero(a_(i, t))) continue;
      T q = tdiv(a_(i, t), a_(t, t));
      row_submul(i, t, q);
      if (!is_zero(a_(i, t))) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols; ++j) {
      if (is_zero(a_(t, j))) continue;
      T q = tdiv(a_(t, j), a_(t, t));
      col_submul(j, t, q);
      if (!is_zero(a_(t, j))) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    for (std::size_t i = t + 1; i < a_.rows; ++i) {
      for (std::size_t j = t + 1; j < a_.cols; ++j) {
        if (!divides(a_(t, t), a_(i, j))) return i;
      }
    }
    return std::nullopt;
  }

  // row_i -= q * row_t
  void row_submul(std::size_t i, std::size_t t, const T& q) {
    for (std::size_t k = t; k < a_.cols; ++k) submul(a_(i, k), q, a_(t, k));
    if (track_.u) {
      for (std::size_t k = 0; k < u_.cols; ++k) submul(u_(i, k), q, u_(t, k));
    }
    if (track_.u_inv) {
      for (std::size_t k = 0; k < u_inv_.rows; ++k) addmul(u_inv_(k, t), q, u_inv_(k, i));
    }
  }

  // row_t += row_i
  void row_add(std::size_t t, std::size_t i) {
    const T one = 1;
    for (std::size_t k = t; k < a_.cols; ++k) addmul(a_(t, k), one, a_(i, k));
    if (track_.u) {
      for (std::size_t k = 0; k < u_.cols; ++k) addmul(u_(t, k), one, u_(i, k));
    }
    if (track_.u_inv) {
      for (std::size_t k = 0; k < u_inv_.rows; ++k) submul(u_inv_(k, i), one, u_inv_(k, t));
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a_.cols; ++k) std::swap(a_(i, k), a_(j, k));
    if (track_.u) {
      for (std::size_t k = 0; k < u_.cols; ++k) std::swap(u_(i, k), u_(j, k));
    }
    if (track_.u_inv) {
      for (std::size_t k = 0; k < u_inv_.rows; ++k) std::swap(u_inv_(k, i), u_inv_(k, j));
    }
  }

  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < a_.cols; ++k) negate(a_(i, k));
    if (track_.u) {
      for (std::size_t k = 0; k < u_.cols; ++k) negate(u_(i, k));
    }
    if (track_.u_inv) {
      for (std::size_t k = 0; k < u_inv_.rows; ++k) negate(u_inv_(k, i));
    }
  }

  // col_j -= q * col_t
  void col_submul(std::size_t j, std::size_t t, const T& q) {
    for (std::size_t k = t; k < a_.rows; ++k) submul(a_(k, j), q, a_(k, t));
    if (track_.v) {
      for (std::size_t k = 0; k < v_.rows; ++k) submul(v_(k, j), q, v_(k, t));
    }
  }

  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < a_.rows; ++k) std::swap(a_(k, i), a_(k, j));
    if (track_.v) {
      for (std::size_t k = 0; k < v_.rows; ++k) std::swap(v_(k, i), v_(k, j));
    }
  }

  Tracking track_;
};

struct SmithResult {
  IntMatrix d;
  IntMatrix u;
  IntMatrix u_inv;
  IntMatrix v;
};

template <class T>
SmithResult finish(SmithEngine<T>& e, Tracking track) {
  SmithResult r;
  r.d = e.a_.to_matrix();
  if (track.u) r.u = e.u_.to_matrix();
  if (track.u_inv) r.u_inv = e.u_inv_.to_matrix();
  if (track.v) r.v = e.v_.to_matrix();
  return r;
}

SmithResult smith_impl(const IntMatrix& a, Tracking track) {
  if (auto small = to_int64(a)) {
    try {
      SmithEngine<std::int64_t> e(std::move(*small), track);
      e.run();
      return finish(e, track);
    } catch (const Overflow&) {
      // fall through to the exact engine
    }
  }
  SmithEngine<BigInt> e(to_bigint(a), track);
  e.run();
  return finish(e, track);
}

std::vector<BigInt> diagonal_of(const IntMatrix& d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
  return out;
}

FiniteAbelianGroup group_from_diagonal(const std::vector<BigInt>& diag, std::size_t rows) {
  std::vector<BigInt> orders;
  for (const auto& x : diag) {
    if (x != 0) orders.push_back(x);
  }
  if (orders.size() < rows) {
    throw Error(ErrorKind::InfiniteCokernel,
                "relations have rank " + std::to_string(orders.size()) + " < " +
                    std::to_string(rows));
  }
  return FiniteAbelianGroup::from_cyclic_orders(std::move(orders));
}

}  // namespace

std::vector<BigInt> SmithForm::diagonal() const { return diagonal_of(d); }

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithResult r = smith_impl(a, {.u = true, .u_inv = false, .v = true});
  return {std::move(r.d), std::move(r.u), std::move(r.v)};
}

std::vector<BigInt> smith_diagonal(const IntMatrix& a) {
  return diagonal_of(smith_impl(a, {}).d);
}

std::size_t rank(const IntMatrix& a) {
  std::size_t r = 0;
  for (const auto& x : smith_diagonal(a)) {
    if (x != 0) ++r;
  }
  return r;
}

BigInt determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Dense<BigInt> m = to_bigint(a);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt x = m(i, j) * m(k, k);
        mpz_submul(x.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

FiniteAbelianGroup cokernel_structure(const IntMatrix& a) {
  return group_from_diagonal(smith_diagonal(a), a.rows());
}

FiniteAbelianGroup CokernelCoordinates::group() const {
  return FiniteAbelianGroup::from_cyclic_orders(moduli);
}

bool CokernelCoordinates::is_relation(std::span<const BigInt> x) const {
  IntVector c = to_coords * x;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (!divides(moduli[i], c[i])) return false;
  }
  return true;
}

CokernelCoordinates cokernel_coordinates(const IntMatrix& a) {
  SmithResult r = smith_impl(a, {.u = true, .u_inv = true, .v = false});
  const std::vector<BigInt> diag = diagonal_of(r.d);
  group_from_diagonal(diag, a.rows());  // rank check

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] > 1) keep.push_back(i);
  }
  CokernelCoordinates out;
  out.to_coords = IntMatrix(keep.size(), a.rows());
  out.from_coords = IntMatrix(a.rows(), keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t i = keep[k];
    out.moduli.push_back(diag[i]);
    for (std::size_t c = 0; c < a.rows(); ++c) {
      mpz_fdiv_r(out.to_coords(k, c).get_mpz_t(), r.u(i, c).get_mpz_t(),
                 diag[i].get_mpz_t());
      out.from_coords(c, k) = r.u_inv(c, i);
    }
  }
  return out;
}

}  // namespace critgroup
