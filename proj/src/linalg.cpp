#include "pretrop/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pretrop {

int sign_of(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& x : v)
    if (sign_of(x) != 0) return false;
  return true;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

std::string vec_to_string(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

void make_primitive_inplace(IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (sign_of(g) == 0)
    throw std::invalid_argument("zero vector has no primitive form");
  for (Int& x : v) x /= g;
}

IntVec primitive(const IntVec& v) {
  IntVec out = v;
  make_primitive_inplace(out);
  return out;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<IntVec>& rows,
                                   std::size_t ncols) {
  RatMatrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols)
      throw std::invalid_argument("RatMatrix: ragged rows");
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = Rat(rows[i][j]);
  }
  return m;
}

RatMatrix RatMatrix::from_rat_rows(std::vector<std::vector<Rat>> rows,
                                   std::size_t ncols) {
  RatMatrix m;
  m.ncols_ = ncols;
  for (auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("RatMatrix: ragged rows");
  m.rows_ = std::move(rows);
  return m;
}

namespace {

// Reduced row echelon form over Q, in place. Returns pivot columns.
std::vector<std::size_t> rref_inplace(std::vector<std::vector<Rat>>& rows,
                                      std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rat inv = 1 / rows[r][c];
    for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rat f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(pivots.size(), std::vector<Rat>(ncols));
  return pivots;
}

IntVec clear_denominators(const std::vector<Rat>& row) {
  Int lcm = 1;
  for (const Rat& q : row) {
    Int d = q.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
  }
  IntVec out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) {
    Rat scaled = row[j] * Rat(lcm);
    out[j] = scaled.get_num();
  }
  return out;
}

std::vector<std::vector<Rat>> to_rat_rows(const std::vector<IntVec>& rows) {
  std::vector<std::vector<Rat>> out;
  out.reserve(rows.size());
  for (const IntVec& r : rows) {
    std::vector<Rat> q(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) q[j] = Rat(r[j]);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto rows = m.rows();
  return rref_inplace(rows, m.ncols()).size();
}

std::size_t rank_int_rows(const std::vector<IntVec>& rows, std::size_t ncols) {
  auto q = to_rat_rows(rows);
  return rref_inplace(q, ncols).size();
}

std::vector<IntVec> kernel_basis(const RatMatrix& m) {
  auto rows = m.rows();
  const std::size_t n = m.ncols();
  const auto pivots = rref_inplace(rows, n);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<IntVec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = -rows[i][f];
    IntVec v = clear_denominators(x);
    make_primitive_inplace(v);
    if (sign_of(v[f]) < 0)
      for (Int& e : v) e = -e;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<IntVec> kernel_basis_int_rows(const std::vector<IntVec>& rows,
                                          std::size_t ncols) {
  return kernel_basis(RatMatrix::from_int_rows(rows, ncols));
}

std::vector<IntVec> rref_int_rows(const std::vector<IntVec>& rows,
                                  std::size_t ncols) {
  auto q = to_rat_rows(rows);
  rref_inplace(q, ncols);
  std::vector<IntVec> out;
  out.reserve(q.size());
  for (const auto& row : q) {
    IntVec v = clear_denominators(row);
    make_primitive_inplace(v);
    for (const Int& e : v) {
      int s = sign_of(e);
      if (s > 0) break;
      if (s < 0) {
        for (Int& x : v) x = -x;
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace pretrop
