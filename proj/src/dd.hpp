#ifndef PRETROP_DD_HPP
#define PRETROP_DD_HPP

// Incremental double description for polyhedral cones.
//
// A state holds the V-representation (lineality basis + extreme rays) of
// the cone cut out by the constraints inserted so far; hyperplanes and
// halfspaces are inserted one at a time.  Ray adjacency is decided
// combinatorially from the zero sets of the inserted inequalities
// (Fukuda-Prodon style), which stay exact under the update rules used
// here.  States are cheap to copy, so a cone intersection restarts from
// the left operand's state instead of re-inserting its constraints.
//
// Two scalar backends share the code: checked int64 (throws Overflow,
// caller retries with GMP) and mpz_class.  Both are exact.

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

#include "pretrop/linalg.hpp"

namespace pretrop::dd {

struct Overflow {};

constexpr int kMaxDim = 64;

// Zero set over inserted inequality indices.
struct TightSet {
  static constexpr unsigned kWords = 8;
  static constexpr unsigned kCapacity = kWords * 64;
  std::array<std::uint64_t, kWords> w{};

  void set(unsigned i) { w[i >> 6] |= (1ull << (i & 63)); }
  bool subset_of(const TightSet& o) const {
    for (unsigned k = 0; k < kWords; ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  static TightSet meet(const TightSet& a, const TightSet& b) {
    TightSet t;
    for (unsigned k = 0; k < kWords; ++k) t.w[k] = a.w[k] & b.w[k];
    return t;
  }
  static TightSet all_below(unsigned n) {
    TightSet t;
    for (unsigned k = 0; k < kWords; ++k) {
      if (n >= (k + 1) * 64)
        t.w[k] = ~0ull;
      else if (n > k * 64)
        t.w[k] = (1ull << (n - k * 64)) - 1;
    }
    return t;
  }
};

// ---------------------------------------------------------------------------
// Scalar operations per backend.

template <class T>
struct Ops;

template <>
struct Ops<std::int64_t> {
  using Wide = __int128;
  // Entry bound keeping dot products and combinations inside __int128.
  static constexpr std::int64_t kEntryLimit = std::int64_t(1) << 40;

  static bool fits(const Int& x) {
    return mpz_fits_slong_p(x.get_mpz_t()) &&
           x.get_si() <= kEntryLimit && x.get_si() >= -kEntryLimit;
  }
  static std::int64_t from_mpz(const Int& x) { return x.get_si(); }
  static Int to_mpz(std::int64_t x) {
    Int r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(x));
    return r;
  }
  static int sgn_wide(Wide x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

  static Wide dot(const std::vector<std::int64_t>& a,
                  const std::vector<std::int64_t>& b) {
    Wide s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s += static_cast<Wide>(a[i]) * b[i];
    return s;
  }

  static unsigned __int128 uabs(Wide x) {
    return x < 0 ? -static_cast<unsigned __int128>(x)
                 : static_cast<unsigned __int128>(x);
  }

  // z = alpha * x - beta * y, gcd-reduced.
  static std::vector<std::int64_t> combine(Wide alpha,
                                           const std::vector<std::int64_t>& x,
                                           Wide beta,
                                           const std::vector<std::int64_t>& y) {
    const std::size_t n = x.size();
    std::vector<Wide> z(n);
    unsigned __int128 g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = alpha * static_cast<Wide>(x[i]) - beta * static_cast<Wide>(y[i]);
      unsigned __int128 a = uabs(z[i]);
      while (a) {
        unsigned __int128 t = g % a;
        g = a;
        a = t;
      }
    }
    std::vector<std::int64_t> out(n);
    if (g == 0) return out;  // zero vector (callers treat as degenerate)
    for (std::size_t i = 0; i < n; ++i) {
      Wide q = z[i] / static_cast<Wide>(g);
      if (q > kEntryLimit || q < -kEntryLimit) throw Overflow{};
      out[i] = static_cast<std::int64_t>(q);
    }
    return out;
  }

  static void negate(std::vector<std::int64_t>& v) {
    for (auto& x : v) x = -x;
  }
  static bool is_zero(const std::vector<std::int64_t>& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  }
  static void make_primitive(std::vector<std::int64_t>& v) {
    unsigned __int128 g = 0;
    for (auto x : v) {
      unsigned __int128 a = uabs(x);
      while (a) {
        unsigned __int128 t = g % a;
        g = a;
        a = t;
      }
    }
    if (g <= 1) return;
    for (auto& x : v) x = static_cast<std::int64_t>(x / static_cast<std::int64_t>(g));
  }
};

template <>
struct Ops<Int> {
  using Wide = Int;

  static bool fits(const Int&) { return true; }
  static Int from_mpz(const Int& x) { return x; }
  static Int to_mpz(const Int& x) { return x; }
  static int sgn_wide(const Int& x) { return sign_of(x); }

  static Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  static IntVec combine(const Int& alpha, const IntVec& x, const Int& beta,
                        const IntVec& y) {
    const std::size_t n = x.size();
    IntVec z(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = alpha * x[i] - beta * y[i];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sign_of(g) == 0) return z;
    if (g != 1)
      for (auto& e : z) e /= g;
    return z;
  }

  static void negate(IntVec& v) {
    for (auto& x : v) x = -x;
  }
  static bool is_zero(const IntVec& v) { return is_zero_vec(v); }
  static void make_primitive(IntVec& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sign_of(g) == 0 || g == 1) return;
    for (auto& x : v) x /= g;
  }
};

// ---------------------------------------------------------------------------

struct VRep {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};

template <class T>
class Backend {
 public:
  using O = Ops<T>;
  using Vec = std::vector<T>;

  void init(int dim) {
    dim_ = dim;
    lin_.clear();
    rays_.clear();
    eq_rows_.clear();
    ineq_rows_.clear();
    nineq_ = 0;
    lin_.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      Vec e(dim, T(0));
      e[i] = T(1);
      lin_.push_back(std::move(e));
    }
  }

  int dim() const { return dim_; }

  void push_equation(Vec a) {
    O::make_primitive(a);
    if (O::is_zero(a)) return;
    Vec neg = a;
    O::negate(neg);
    if (seen(eq_rows_, a) || seen(eq_rows_, neg)) return;
    // If one side of the hyperplane is already an inequality row, insert the
    // other side as an inequality instead: the zero sets stay exact and the
    // existing row's bit keeps its meaning.
    if (seen(ineq_rows_, a)) {
      push_inequality(std::move(neg));
      eq_rows_.push_back(std::move(a));
      return;
    }
    if (seen(ineq_rows_, neg)) {
      push_inequality(a);
      eq_rows_.push_back(std::move(a));
      return;
    }
    std::size_t p;
    if (find_lin_pivot(a, p)) {
      reduce_lineality(a, p);
    } else {
      partition_rays(a, /*is_equation=*/true, 0);
    }
    eq_rows_.push_back(std::move(a));
  }

  void push_inequality(Vec a) {
    O::make_primitive(a);
    if (O::is_zero(a)) return;
    if (seen(ineq_rows_, a) || seen(eq_rows_, a)) return;
    {
      Vec neg = a;
      O::negate(neg);
      if (seen(eq_rows_, neg)) return;  // implied by an equation
    }
    if (nineq_ >= TightSet::kCapacity)
      throw std::runtime_error("dd: inequality capacity exceeded");
    const unsigned bit = nineq_++;
    std::size_t p;
    if (find_lin_pivot(a, p)) {
      // All old rays land on the hyperplane; the pivot vector becomes the
      // single ray on the strict side.
      typename O::Wide dw = O::dot(a, lin_[p]);
      Vec w = std::move(lin_[p]);
      lin_.erase(lin_.begin() + p);
      if (O::sgn_wide(dw) < 0) {
        O::negate(w);
        dw = typename O::Wide(0) - dw;
      }
      adjust_against(a, dw, w, lin_);
      for (auto& r : rays_) {
        typename O::Wide dr = O::dot(a, r.v);
        if (O::sgn_wide(dr) != 0) r.v = O::combine(dw, r.v, dr, w);
        r.tight.set(bit);
      }
      Ray nw;
      nw.v = std::move(w);
      nw.tight = TightSet::all_below(bit);
      rays_.push_back(std::move(nw));
    } else {
      partition_rays(a, /*is_equation=*/false, bit);
    }
    ineq_rows_.push_back(std::move(a));
  }

  VRep vrep() const {
    VRep out;
    out.lineality.reserve(lin_.size());
    for (const auto& l : lin_) out.lineality.push_back(to_intvec(l));
    out.rays.reserve(rays_.size());
    for (const auto& r : rays_) out.rays.push_back(to_intvec(r.v));
    return out;
  }

  template <class U>
  void convert_from(const Backend<U>& o);

  struct Ray {
    Vec v;
    TightSet tight;
  };

  const std::vector<Vec>& lin() const { return lin_; }
  const std::vector<Ray>& rays() const { return rays_; }
  const std::vector<Vec>& eq_rows() const { return eq_rows_; }
  const std::vector<Vec>& ineq_rows() const { return ineq_rows_; }
  unsigned nineq() const { return nineq_; }

 private:
  static IntVec to_intvec(const Vec& v) {
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(O::to_mpz(x));
    return out;
  }

  static bool seen(const std::vector<Vec>& rows, const Vec& a) {
    for (const auto& r : rows)
      if (r == a) return true;
    return false;
  }

  bool find_lin_pivot(const Vec& a, std::size_t& p) const {
    for (std::size_t i = 0; i < lin_.size(); ++i) {
      if (O::sgn_wide(O::dot(a, lin_[i])) != 0) {
        p = i;
        return true;
      }
    }
    return false;
  }

  // Replace every vector of `vecs` not orthogonal to a by its combination
  // with the pivot w, landing on the hyperplane {a = 0}.
  void adjust_against(const Vec& a, const typename O::Wide& dw, const Vec& w,
                      std::vector<Vec>& vecs) {
    for (auto& l : vecs) {
      typename O::Wide dl = O::dot(a, l);
      if (O::sgn_wide(dl) != 0) l = O::combine(dw, l, dl, w);
    }
  }

  void reduce_lineality(const Vec& a, std::size_t p) {
    typename O::Wide dw = O::dot(a, lin_[p]);
    Vec w = std::move(lin_[p]);
    lin_.erase(lin_.begin() + p);
    if (O::sgn_wide(dw) < 0) {  // keep ray adjustments positive combinations
      O::negate(w);
      dw = typename O::Wide(0) - dw;
    }
    adjust_against(a, dw, w, lin_);
    for (auto& r : rays_) {
      typename O::Wide dr = O::dot(a, r.v);
      if (O::sgn_wide(dr) != 0) r.v = O::combine(dw, r.v, dr, w);
    }
  }

  void partition_rays(const Vec& a, bool is_equation, unsigned bit) {
    const std::size_t n = rays_.size();
    std::vector<typename O::Wide> d(n);
    std::vector<int> sg(n);
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = O::dot(a, rays_[i].v);
      sg[i] = O::sgn_wide(d[i]);
      has_pos |= sg[i] > 0;
      has_neg |= sg[i] < 0;
    }

    std::vector<Ray> created;
    if (has_pos && has_neg) {
      for (std::size_t i = 0; i < n; ++i) {
        if (sg[i] <= 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (sg[j] >= 0) continue;
          TightSet t = TightSet::meet(rays_[i].tight, rays_[j].tight);
          bool adjacent = true;
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            if (t.subset_of(rays_[k].tight)) {
              adjacent = false;
              break;
            }
          }
          if (!adjacent) continue;
          Ray z;
          // positive combination of rays i and j lying on {a = 0}
          z.v = O::combine(d[i], rays_[j].v, d[j], rays_[i].v);
          z.tight = t;
          if (!is_equation) z.tight.set(bit);
          created.push_back(std::move(z));
        }
      }
    }

    std::vector<Ray> next;
    next.reserve(n + created.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (sg[i] == 0) {
        if (!is_equation) rays_[i].tight.set(bit);
        next.push_back(std::move(rays_[i]));
      } else if (sg[i] > 0 && !is_equation) {
        next.push_back(std::move(rays_[i]));
      }
    }
    for (Ray& z : created) next.push_back(std::move(z));
    rays_ = std::move(next);
  }

  int dim_ = 0;
  std::vector<Vec> lin_;
  std::vector<Ray> rays_;
  std::vector<Vec> eq_rows_;
  std::vector<Vec> ineq_rows_;
  unsigned nineq_ = 0;
};

template <class T>
template <class U>
void Backend<T>::convert_from(const Backend<U>& o) {
  dim_ = o.dim();
  nineq_ = o.nineq();
  auto conv = [](const typename Backend<U>::Vec& v) {
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v)
      out.push_back(Ops<T>::from_mpz(Ops<U>::to_mpz(x)));
    return out;
  };
  lin_.clear();
  for (const auto& l : o.lin()) lin_.push_back(conv(l));
  rays_.clear();
  for (const auto& r : o.rays()) {
    Ray nr;
    nr.v = conv(r.v);
    nr.tight = r.tight;
    rays_.push_back(std::move(nr));
  }
  eq_rows_.clear();
  for (const auto& e : o.eq_rows()) eq_rows_.push_back(conv(e));
  ineq_rows_.clear();
  for (const auto& e : o.ineq_rows()) ineq_rows_.push_back(conv(e));
}

// ---------------------------------------------------------------------------

class State {
 public:
  static State make(int dim, const std::vector<IntVec>& eqs,
                    const std::vector<IntVec>& ineqs);

  /// A copy of this state with extra constraints inserted.
  State extended(const std::vector<IntVec>& eqs,
                 const std::vector<IntVec>& ineqs) const;

  VRep vrep() const;
  int dim() const;

  /// True iff the cone is {0}: no rays and no lineality left.
  bool empty_vrep() const;

  std::vector<IntVec> eq_rows() const;
  std::vector<IntVec> ineq_rows() const;

  const std::variant<Backend<std::int64_t>, Backend<Int>>& impl() const {
    return impl_;
  }

 private:
  static bool rows_fit(const std::vector<IntVec>& rows);
  static void push_all(Backend<std::int64_t>& b, const std::vector<IntVec>& eqs,
                       const std::vector<IntVec>& ineqs);
  static void push_all(Backend<Int>& b, const std::vector<IntVec>& eqs,
                       const std::vector<IntVec>& ineqs);

  std::variant<Backend<std::int64_t>, Backend<Int>> impl_;
};

/// One-shot enumeration: V-representation of {x : eqs x = 0, ineqs x >= 0}.
VRep enumerate(int dim, const std::vector<IntVec>& eqs,
               const std::vector<IntVec>& ineqs);

}  // namespace pretrop::dd

#endif
