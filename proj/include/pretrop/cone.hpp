#ifndef PRETROP_CONE_HPP
#define PRETROP_CONE_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pretrop/linalg.hpp"
#include "pretrop/stats.hpp"

namespace pretrop {

namespace dd {
class State;
}

/// Polyhedral cone with both representations available.
///
/// V-side: extreme rays (primitive) and a lineality basis.  H-side:
/// inequalities a·x >= 0 and equations a·x = 0.  Cones are immutable and
/// safe to share; the representation vectors and the canonical forms
/// (rays projected modulo the lineality space, RREF lineality basis, the
/// key string) are materialized lazily from the enumeration state and
/// cached.
class Cone {
 public:
  Cone() = default;

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVec>& rays() const { return body().rays; }
  const std::vector<IntVec>& lineality() const { return body().lineality; }
  const std::vector<IntVec>& inequalities() const {
    return body().inequalities;
  }
  const std::vector<IntVec>& equations() const { return body().equations; }

  /// Dimension of the cone as a set (0 for the zero cone).
  int dim() const { return canon().dim; }

  /// Extreme rays projected orthogonally modulo the lineality space,
  /// primitive, lexicographically sorted: canonical representatives.
  const std::vector<IntVec>& canonical_rays() const { return canon().rays; }
  const std::vector<IntVec>& canonical_lineality() const {
    return canon().lineality;
  }

  /// Deterministic serialization; equal as sets iff equal keys.
  const std::string& key() const { return canon().key; }

  bool trivial() const;

  const std::shared_ptr<const dd::State>& state() const { return state_; }

 private:
  friend Cone make_cone_from_state(std::shared_ptr<const dd::State> state,
                                   int ambient_dim);

  struct Body {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
    std::vector<IntVec> inequalities;
    std::vector<IntVec> equations;
  };
  struct Canon {
    std::vector<IntVec> rays;
    std::vector<IntVec> lineality;
    int dim = 0;
    std::string key;
  };
  template <class T>
  struct Slot {
    std::atomic<T*> ptr{nullptr};
    ~Slot() { delete ptr.load(std::memory_order_acquire); }
  };
  struct Cache {
    Slot<Body> body;
    Slot<Canon> canon;
  };

  const Body& body() const;
  const Canon& canon() const;

  int ambient_dim_ = 0;
  std::shared_ptr<const dd::State> state_;
  std::shared_ptr<Cache> cache_;
};

using ConeKey = std::string;

/// Cone generated by the given rays and lineality vectors; computes the
/// H-representation by dual conversion and reduces the generators to
/// extreme rays and a basis. Empty input yields the zero cone.
Cone cone_from_rays(const std::vector<IntVec>& rays,
                    const std::vector<IntVec>& lineality, int ambient_dim);

/// Cone {x : ineqs x >= 0, eqs x = 0} with the V-representation enumerated.
Cone cone_from_halfspaces(const std::vector<IntVec>& inequalities,
                          const std::vector<IntVec>& equations,
                          int ambient_dim);

/// Set intersection; the counted primitive operation.
Cone intersect(const Cone& a, const Cone& b, LevelStats* stats = nullptr);

/// True iff every generator of `inner` satisfies every constraint of
/// `outer` (rays: inequalities and equations; lineality: equality in both).
bool contains(const Cone& outer, const Cone& inner,
              LevelStats* stats = nullptr);

bool is_trivial(const Cone& c);

/// A primitive vector in the relative interior of c.  Deterministic: the
/// sum of the extreme rays (unit coefficients) with a seeded perturbation
/// retry; a lineality combination when there are no rays.
IntVec interior_ray(const Cone& c, std::uint64_t seed = 0);

const ConeKey& canonical_key(const Cone& c);

}  // namespace pretrop

#endif
