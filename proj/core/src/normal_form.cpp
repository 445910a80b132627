#include "torhom/normal_form.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace torhom {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Round-to-nearest quotient, so remainders satisfy |r| <= |b|/2.
Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  Int b2 = abs_int(b);
  if (2 * abs_int(r) > b2) q += (r > 0) == (b > 0) ? 1 : -1;
  return q;
}

}  // namespace

Int InvariantFactors::torsion_order() const {
  Int o = 1;
  for (const auto& t : torsion) o *= t;
  return o;
}

InvariantFactors InvariantFactors::localized_at(const Int& p) const {
  InvariantFactors out;
  out.free_rank = free_rank;
  for (const auto& t : torsion) {
    Int pp = 1, rest = t;
    while (rest % p == 0) {
      pp *= p;
      rest /= p;
    }
    if (pp > 1) out.torsion.push_back(pp);
  }
  return out;
}

std::vector<Int> InvariantFactors::torsion_primes() const {
  std::vector<Int> primes;
  if (torsion.empty()) return primes;
  // The largest invariant factor is divisible by every torsion prime.
  Int m = torsion.back();
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

SnfResult snf(const IntMat& m) {
  SnfResult res;
  res.S = m;
  res.U = IntMat::identity(m.rows());
  res.V = IntMat::identity(m.cols());
  IntMat& S = res.S;
  IntMat& U = res.U;
  IntMat& V = res.V;
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t T = std::min(R, C);

  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row dst -= q * row src
    for (std::size_t j = 0; j < C; ++j) S(dst, j) -= q * S(src, j);
    for (std::size_t j = 0; j < R; ++j) U(dst, j) -= q * U(src, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < R; ++i) S(i, dst) -= q * S(i, src);
    for (std::size_t i = 0; i < C; ++i) V(i, dst) -= q * V(i, src);
  };

  std::size_t t = 0;
  for (; t < T; ++t) {
    // Minimal-absolute-value pivot in the trailing submatrix.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (S(i, j) == 0) continue;
        Int a = abs_int(S(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    S.swap_rows(t, pi);
    U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    V.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (S(i, t) == 0) continue;
        Int q = rounded_div(S(i, t), S(t, t));
        row_op(i, t, q);
        if (S(i, t) != 0) {
          // Remainder smaller than pivot: promote it.
          S.swap_rows(t, i);
          U.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t to the right of the pivot.
      for (std::size_t j = t + 1; j < C; ++j) {
        if (S(t, j) == 0) continue;
        Int q = rounded_div(S(t, j), S(t, t));
        col_op(j, t, q);
        if (S(t, j) != 0) {
          S.swap_cols(t, j);
          V.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: pivot must divide every trailing entry.
      bool fixed = true;
      for (std::size_t i = t + 1; i < R && fixed; ++i)
        for (std::size_t j = t + 1; j < C && fixed; ++j)
          if (S(i, j) % S(t, t) != 0) {
            // Fold row i into row t and restart the cleanup.
            for (std::size_t jj = 0; jj < C; ++jj) S(t, jj) += S(i, jj);
            for (std::size_t jj = 0; jj < R; ++jj) U(t, jj) += U(i, jj);
            fixed = false;
          }
      if (fixed) break;
    }
    if (S(t, t) < 0) {
      for (std::size_t j = 0; j < C; ++j) S(t, j) = -S(t, j);
      for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
    }
  }
  res.rank = t;
  return res;
}

HnfResult hnf(const IntMat& m) {
  HnfResult res;
  res.H = m;
  res.U = IntMat::identity(m.rows());
  IntMat& H = res.H;
  IntMat& U = res.U;
  const std::size_t R = m.rows(), C = m.cols();

  std::size_t r = 0;
  for (std::size_t j = 0; j < C && r < R; ++j) {
    // Reduce column j to a single pivot at row r via gcd steps.
    for (;;) {
      std::size_t pi = R;
      Int best = 0;
      for (std::size_t i = r; i < R; ++i) {
        if (H(i, j) == 0) continue;
        Int a = abs_int(H(i, j));
        if (pi == R || a < best) {
          best = a;
          pi = i;
        }
      }
      if (pi == R) break;  // column clear
      H.swap_rows(r, pi);
      U.swap_rows(r, pi);
      bool clean = true;
      for (std::size_t i = r + 1; i < R; ++i) {
        if (H(i, j) == 0) continue;
        Int q = rounded_div(H(i, j), H(r, j));
        for (std::size_t k = 0; k < C; ++k) H(i, k) -= q * H(r, k);
        for (std::size_t k = 0; k < R; ++k) U(i, k) -= q * U(r, k);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < R && H(r, j) != 0) {
      if (H(r, j) < 0) {
        for (std::size_t k = 0; k < C; ++k) H(r, k) = -H(r, k);
        for (std::size_t k = 0; k < R; ++k) U(r, k) = -U(r, k);
      }
      // Reduce entries above the pivot into [0, pivot).
      for (std::size_t i = 0; i < r; ++i) {
        Int q = H(i, j) / H(r, j);
        if (H(i, j) - q * H(r, j) < 0) q -= 1;
        if (q == 0) continue;
        for (std::size_t k = 0; k < C; ++k) H(i, k) -= q * H(r, k);
        for (std::size_t k = 0; k < R; ++k) U(i, k) -= q * U(r, k);
      }
      ++r;
    }
  }
  res.rank = r;
  return res;
}

std::size_t rank_of(const IntMat& m) { return hnf(m).rank; }

IntMat kernel_basis(const IntMat& m) {
  SnfResult s = snf(m);
  std::size_t n = m.cols();
  std::size_t k = n - s.rank;
  IntMat ker(n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) ker(i, j) = s.V(i, s.rank + j);
  if (k == 0) return ker;
  // Canonical basis of the kernel lattice.
  IntMat rows = row_lattice_basis(ker.transpose());
  return rows.transpose();
}

IntMat row_lattice_basis(const IntMat& generators) {
  HnfResult h = hnf(generators);
  IntMat basis(h.rank, generators.cols());
  for (std::size_t i = 0; i < h.rank; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) basis(i, j) = h.H(i, j);
  return basis;
}

IntMat saturate_rows(const IntMat& generators) {
  const std::size_t n = generators.cols();
  IntMat ker = kernel_basis(generators);  // n x k, orthogonal complement directions
  // Saturation = annihilator of the annihilator.
  IntMat sat_cols = kernel_basis(ker.transpose());  // n x rank
  return row_lattice_basis(sat_cols.transpose());
}

InvariantFactors cokernel_invariants(const IntMat& m) {
  SnfResult s = snf(m);
  InvariantFactors inv;
  inv.free_rank = m.rows() - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.S(i, i) > 1) inv.torsion.push_back(s.S(i, i));
  return inv;
}

std::optional<std::vector<Int>> solve_integer_linear(const IntMat& m, const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  SnfResult s = snf(m);
  std::vector<Int> ub(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) ub[i] += s.U(i, j) * b[j];
  std::vector<Int> y(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.S(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.S(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Int> x(m.cols(), 0);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] += s.V(i, j) * y[j];
  return x;
}

std::optional<IntMat> solve_integer_linear_mat(const IntMat& m, const IntMat& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("rhs shape mismatch");
  IntMat x(m.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto sol = solve_integer_linear(m, b.col(j));
    if (!sol) return std::nullopt;
    for (std::size_t i = 0; i < m.cols(); ++i) x(i, j) = (*sol)[i];
  }
  return x;
}

bool in_row_lattice(const IntMat& latt, const std::vector<Int>& v) {
  return solve_integer_linear(latt.transpose(), v).has_value();
}

namespace {

// Unimodular inverse via HNF: for unimodular V, hnf(V).U is V^{-1}.
IntMat unimodular_inverse(const IntMat& v) {
  HnfResult h = hnf(v);
  if (!h.H.is_identity()) throw std::logic_error("matrix is not unimodular");
  return h.U;
}

RatVec mat_apply_rat(const IntMat& m, const RatVec& x) { return m.apply(x); }

struct AffineSystem {
  SnfResult s;
  RatVec uprime;  // U * d
  bool solvable = false;
};

AffineSystem analyze(const IntMat& c, const RatVec& d) {
  AffineSystem a;
  a.s = snf(c);
  a.uprime = mat_apply_rat(a.s.U, d);
  a.solvable = true;
  for (std::size_t i = a.s.rank; i < c.rows(); ++i)
    if (!is_integral(a.uprime[i])) a.solvable = false;
  return a;
}

}  // namespace

std::vector<RatVec> enumerate_affine_solutions(const IntMat& c, const RatVec& d, const Int& q) {
  const std::size_t n = c.cols();
  std::vector<RatVec> out;
  AffineSystem a = analyze(c, d);
  if (!a.solvable) return out;
  // Solve S w == q*U*d (mod q) over w in (Z/q)^n, then x = V w / q.
  std::vector<std::vector<Int>> choices(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.s.rank) {
      Rat rhs_r = Rat(q) * a.uprime[i];
      if (!is_integral(rhs_r)) return out;
      Int rhs = num(rhs_r) % q;
      if (rhs < 0) rhs += q;
      Int di = a.s.S(i, i) % q;
      Int g = gcd(gcd(a.s.S(i, i), q), q);
      g = gcd(a.s.S(i, i), q);
      if (rhs % g != 0) return out;
      // w == (rhs/g) * inverse(di/g) (mod q/g)
      Int qg = q / g;
      Int dg = (a.s.S(i, i) / g) % qg;
      // modular inverse of dg mod qg (qg may be 1)
      Int w0 = 0;
      if (qg > 1) {
        Int t0 = 0, t1 = 1, r0 = qg, r1 = ((dg % qg) + qg) % qg;
        while (r1 != 0) {
          Int qq = r0 / r1;
          Int tmp = t0 - qq * t1;
          t0 = t1;
          t1 = tmp;
          tmp = r0 - qq * r1;
          r0 = r1;
          r1 = tmp;
        }
        Int inv = ((t0 % qg) + qg) % qg;
        w0 = ((rhs / g) % qg * inv) % qg;
      }
      for (Int t = 0; t < g; ++t) choices[i].push_back(w0 + qg * t);
    } else {
      for (Int t = 0; t < q; ++t) choices[i].push_back(t);
    }
  }
  // Cartesian product.
  std::vector<std::size_t> idx(n, 0);
  Int total = 1;
  for (auto& ch : choices) total *= Int(ch.size());
  if (total > 4000000) throw std::runtime_error("affine solution enumeration too large");
  for (;;) {
    RatVec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Rat(choices[i][idx[i]], q);
    out.push_back(mod1(mat_apply_rat(a.s.V, w)));
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == choices[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
    if (n == 0) break;
  }
  if (n == 0 && a.solvable) out.push_back(RatVec{});
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RatVec> solve_integer_affine(const IntMat& c, const RatVec& d) {
  if (d.size() != c.rows()) throw std::invalid_argument("rhs length mismatch");
  const std::size_t n = c.cols();
  AffineSystem a = analyze(c, d);
  if (!a.solvable) return std::nullopt;
  // Base solution: z_i = uprime_i / d_i on pivot coordinates.
  RatVec z(n, Rat(0));
  for (std::size_t i = 0; i < a.s.rank; ++i) z[i] = a.uprime[i] / Rat(a.s.S(i, i));
  RatVec x0 = mod1(mat_apply_rat(a.s.V, z));
  Int q0 = common_denominator(x0);
  // Minimal denominator achievable over the full solution set.
  for (Int q = 1; q <= q0; ++q) {
    bool ok = true;
    for (std::size_t i = 0; i < a.s.rank && ok; ++i) {
      Rat rhs = Rat(q) * a.uprime[i];
      if (!is_integral(rhs)) {
        ok = false;
        break;
      }
      Int g = gcd(a.s.S(i, i), q);
      Int r = num(rhs) % q;
      if (r < 0) r += q;
      if (r % g != 0) ok = false;
    }
    if (!ok) continue;
    auto sols = enumerate_affine_solutions(c, d, q);
    if (!sols.empty()) return sols.front();
  }
  return x0;  // unreachable: q0 always succeeds
}

}  // namespace torhom
