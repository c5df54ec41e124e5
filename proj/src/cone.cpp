#include "pretrop/cone.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dd.hpp"

namespace pretrop {

namespace {

std::vector<IntVec> normalized_rows(const std::vector<IntVec>& rows) {
  std::vector<IntVec> out;
  out.reserve(rows.size());
  for (const IntVec& r : rows) {
    if (is_zero_vec(r)) continue;
    out.push_back(primitive(r));
  }
  return out;
}

// Orthogonal projection of r modulo span(lin), scaled back to a primitive
// integer vector. lin rows are independent.
IntVec project_mod_lineality(const IntVec& r, const std::vector<IntVec>& lin) {
  const std::size_t k = lin.size();
  const std::size_t d = r.size();
  // Gram system G y = lin * r
  std::vector<std::vector<Rat>> g(k, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = Rat(dot(lin[i], lin[j]));
    g[i][k] = Rat(dot(lin[i], r));
  }
  // Gaussian elimination with back substitution
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && sgn(g[p][c]) == 0) ++p;
    std::swap(g[c], g[p]);
    const Rat inv = 1 / g[c][c];
    for (std::size_t j = c; j <= k; ++j) g[c][j] *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || sgn(g[i][c]) == 0) continue;
      const Rat f = g[i][c];
      for (std::size_t j = c; j <= k; ++j) g[i][j] -= f * g[c][j];
    }
  }
  std::vector<Rat> proj(d);
  for (std::size_t j = 0; j < d; ++j) {
    proj[j] = Rat(r[j]);
    for (std::size_t i = 0; i < k; ++i) proj[j] -= g[i][k] * Rat(lin[i][j]);
  }
  Int lcm = 1;
  for (const Rat& q : proj) {
    Int den = q.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  IntVec out(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rat scaled = proj[j] * Rat(lcm);
    out[j] = scaled.get_num();
  }
  make_primitive_inplace(out);
  return out;
}

}  // namespace

Cone make_cone_from_state(std::shared_ptr<const dd::State> state,
                          int ambient_dim) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.state_ = std::move(state);
  c.cache_ = std::make_shared<Cone::Cache>();
  return c;
}

bool Cone::trivial() const {
  if (!state_) return true;
  return state_->empty_vrep();
}

const Cone::Body& Cone::body() const {
  Body* b = cache_->body.ptr.load(std::memory_order_acquire);
  if (b) return *b;
  auto fresh = std::make_unique<Body>();
  if (state_) {
    dd::VRep v = state_->vrep();
    fresh->rays = std::move(v.rays);
    fresh->lineality = std::move(v.lineality);
    fresh->inequalities = state_->ineq_rows();
    fresh->equations = state_->eq_rows();
  }
  Body* expected = nullptr;
  if (cache_->body.ptr.compare_exchange_strong(expected, fresh.get(),
                                               std::memory_order_acq_rel))
    return *fresh.release();
  return *expected;
}

const Cone::Canon& Cone::canon() const {
  Canon* c = cache_->canon.ptr.load(std::memory_order_acquire);
  if (c) return *c;
  const Body& b = body();
  auto fresh = std::make_unique<Canon>();
  fresh->lineality = rref_int_rows(b.lineality, ambient_dim_);
  fresh->rays.reserve(b.rays.size());
  for (const IntVec& r : b.rays) {
    fresh->rays.push_back(fresh->lineality.empty()
                              ? primitive(r)
                              : project_mod_lineality(r, fresh->lineality));
  }
  std::sort(fresh->rays.begin(), fresh->rays.end(), lex_less);
  fresh->rays.erase(std::unique(fresh->rays.begin(), fresh->rays.end()),
                    fresh->rays.end());
  std::vector<IntVec> all = fresh->rays;
  all.insert(all.end(), fresh->lineality.begin(), fresh->lineality.end());
  fresh->dim = static_cast<int>(rank_int_rows(all, ambient_dim_));

  std::ostringstream key;
  key << "C" << ambient_dim_ << "|L";
  for (const IntVec& l : fresh->lineality) key << '[' << vec_to_string(l) << ']';
  key << "|R";
  for (const IntVec& r : fresh->rays) key << '[' << vec_to_string(r) << ']';
  fresh->key = key.str();

  Canon* expected = nullptr;
  if (cache_->canon.ptr.compare_exchange_strong(expected, fresh.get(),
                                                std::memory_order_acq_rel))
    return *fresh.release();
  return *expected;
}

Cone cone_from_halfspaces(const std::vector<IntVec>& inequalities,
                          const std::vector<IntVec>& equations,
                          int ambient_dim) {
  auto state = std::make_shared<dd::State>(dd::State::make(
      ambient_dim, normalized_rows(equations), normalized_rows(inequalities)));
  return make_cone_from_state(std::move(state), ambient_dim);
}

Cone cone_from_rays(const std::vector<IntVec>& rays,
                    const std::vector<IntVec>& lineality, int ambient_dim) {
  // Dual conversion: the dual cone's extreme rays are the facets of the
  // primal cone, its lineality spans the primal's orthogonal complement.
  dd::VRep dual = dd::enumerate(ambient_dim, normalized_rows(lineality),
                                normalized_rows(rays));
  return cone_from_halfspaces(dual.rays, dual.lineality, ambient_dim);
}

Cone intersect(const Cone& a, const Cone& b, LevelStats* stats) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (stats) ++stats->intersections;
  std::shared_ptr<const dd::State> base = a.state();
  if (!base)
    throw std::invalid_argument("intersect: uninitialized cone");
  auto state = std::make_shared<dd::State>(
      base->extended(b.equations(), b.inequalities()));
  return make_cone_from_state(std::move(state), a.ambient_dim());
}

namespace {

// int64 fast path for containment: both states use the int64 backend, so
// all entries are within the checked range and dots fit in __int128.
bool contains_fast(const dd::Backend<std::int64_t>& outer,
                   const dd::Backend<std::int64_t>& inner) {
  using O = dd::Ops<std::int64_t>;
  for (const auto& ray : inner.rays()) {
    for (const auto& row : outer.ineq_rows())
      if (O::dot(row, ray.v) < 0) return false;
    for (const auto& row : outer.eq_rows())
      if (O::dot(row, ray.v) != 0) return false;
  }
  for (const auto& l : inner.lin()) {
    for (const auto& row : outer.ineq_rows())
      if (O::dot(row, l) != 0) return false;
    for (const auto& row : outer.eq_rows())
      if (O::dot(row, l) != 0) return false;
  }
  return true;
}

bool contains_exact(const Cone& outer, const Cone& inner) {
  for (const IntVec& r : inner.rays()) {
    for (const IntVec& row : outer.inequalities())
      if (sign_of(dot(row, r)) < 0) return false;
    for (const IntVec& row : outer.equations())
      if (sign_of(dot(row, r)) != 0) return false;
  }
  for (const IntVec& l : inner.lineality()) {
    for (const IntVec& row : outer.inequalities())
      if (sign_of(dot(row, l)) != 0) return false;
    for (const IntVec& row : outer.equations())
      if (sign_of(dot(row, l)) != 0) return false;
  }
  return true;
}

}  // namespace

bool contains(const Cone& outer, const Cone& inner, LevelStats* stats) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw std::invalid_argument("contains: ambient dimension mismatch");
  if (stats) ++stats->containment_checks;
  bool result;
  const auto* of =
      outer.state()
          ? std::get_if<dd::Backend<std::int64_t>>(&outer.state()->impl())
          : nullptr;
  const auto* inf =
      inner.state()
          ? std::get_if<dd::Backend<std::int64_t>>(&inner.state()->impl())
          : nullptr;
  if (of && inf)
    result = contains_fast(*of, *inf);
  else
    result = contains_exact(outer, inner);
  if (result && stats) ++stats->containment_hits;
  return result;
}

bool is_trivial(const Cone& c) { return c.trivial(); }

namespace {

// True iff inequality row is tight on the whole cone.
bool is_implicit_equality(const Cone& c, const IntVec& row) {
  for (const IntVec& r : c.rays())
    if (sign_of(dot(row, r)) != 0) return false;
  for (const IntVec& l : c.lineality())
    if (sign_of(dot(row, l)) != 0) return false;
  return true;
}

bool in_relative_interior(const Cone& c, const IntVec& v) {
  for (const IntVec& row : c.equations())
    if (sign_of(dot(row, v)) != 0) return false;
  for (const IntVec& row : c.inequalities()) {
    const int s = sign_of(dot(row, v));
    if (s < 0) return false;
    if (s == 0 && !is_implicit_equality(c, row)) return false;
  }
  return true;
}

}  // namespace

IntVec interior_ray(const Cone& c, std::uint64_t seed) {
  if (c.trivial())
    throw std::invalid_argument("interior_ray: zero cone");
  const auto& rays = c.rays();
  const auto& lin = c.lineality();
  const int d = c.ambient_dim();

  for (std::uint64_t attempt = 0;; ++attempt) {
    IntVec v(d, Int(0));
    if (rays.empty()) {
      if (attempt == 0) {
        v = lin[0];
      } else {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
        for (const IntVec& l : lin) {
          const Int coeff = Int(static_cast<unsigned long>(1 + rng() % 97));
          for (int j = 0; j < d; ++j) v[j] += coeff * l[j];
        }
      }
    } else {
      std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
      for (const IntVec& r : rays) {
        const Int coeff =
            attempt == 0 ? Int(1)
                         : Int(static_cast<unsigned long>(1 + rng() % 97));
        for (int j = 0; j < d; ++j) v[j] += coeff * r[j];
      }
    }
    if (!is_zero_vec(v)) {
      make_primitive_inplace(v);
      if (in_relative_interior(c, v)) return v;
    }
    if (attempt > 64)
      throw std::logic_error("interior_ray: no interior point found");
  }
}

const ConeKey& canonical_key(const Cone& c) { return c.key(); }

}  // namespace pretrop
