#include "dd.hpp"

namespace pretrop::dd {

bool State::rows_fit(const std::vector<IntVec>& rows) {
  for (const auto& r : rows)
    for (const auto& x : r)
      if (!Ops<std::int64_t>::fits(x)) return false;
  return true;
}

void State::push_all(Backend<std::int64_t>& b, const std::vector<IntVec>& eqs,
                     const std::vector<IntVec>& ineqs) {
  auto conv = [](const IntVec& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Ops<std::int64_t>::from_mpz(x));
    return out;
  };
  for (const auto& e : eqs) b.push_equation(conv(e));
  for (const auto& a : ineqs) b.push_inequality(conv(a));
}

void State::push_all(Backend<Int>& b, const std::vector<IntVec>& eqs,
                     const std::vector<IntVec>& ineqs) {
  for (const auto& e : eqs) b.push_equation(e);
  for (const auto& a : ineqs) b.push_inequality(a);
}

State State::make(int dim, const std::vector<IntVec>& eqs,
                  const std::vector<IntVec>& ineqs) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dd: bad ambient dimension");
  State s;
  if (rows_fit(eqs) && rows_fit(ineqs)) {
    try {
      Backend<std::int64_t> b;
      b.init(dim);
      push_all(b, eqs, ineqs);
      s.impl_ = std::move(b);
      return s;
    } catch (const Overflow&) {
      // fall through to the GMP backend
    }
  }
  Backend<Int> b;
  b.init(dim);
  push_all(b, eqs, ineqs);
  s.impl_ = std::move(b);
  return s;
}

State State::extended(const std::vector<IntVec>& eqs,
                      const std::vector<IntVec>& ineqs) const {
  State s;
  if (const auto* fast = std::get_if<Backend<std::int64_t>>(&impl_)) {
    if (rows_fit(eqs) && rows_fit(ineqs)) {
      try {
        Backend<std::int64_t> b = *fast;
        push_all(b, eqs, ineqs);
        s.impl_ = std::move(b);
        return s;
      } catch (const Overflow&) {
        // retry below with the GMP backend
      }
    }
    Backend<Int> b;
    b.convert_from(*fast);
    push_all(b, eqs, ineqs);
    s.impl_ = std::move(b);
    return s;
  }
  Backend<Int> b = std::get<Backend<Int>>(impl_);
  push_all(b, eqs, ineqs);
  s.impl_ = std::move(b);
  return s;
}

VRep State::vrep() const {
  return std::visit([](const auto& b) { return b.vrep(); }, impl_);
}

int State::dim() const {
  return std::visit([](const auto& b) { return b.dim(); }, impl_);
}

bool State::empty_vrep() const {
  return std::visit(
      [](const auto& b) { return b.rays().empty() && b.lin().empty(); },
      impl_);
}

namespace {
template <class T>
std::vector<IntVec> rows_to_intvecs(const std::vector<std::vector<T>>& rows) {
  std::vector<IntVec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    IntVec v;
    v.reserve(r.size());
    for (const auto& x : r) v.push_back(Ops<T>::to_mpz(x));
    out.push_back(std::move(v));
  }
  return out;
}
}  // namespace

std::vector<IntVec> State::eq_rows() const {
  return std::visit([](const auto& b) { return rows_to_intvecs(b.eq_rows()); },
                    impl_);
}

std::vector<IntVec> State::ineq_rows() const {
  return std::visit(
      [](const auto& b) { return rows_to_intvecs(b.ineq_rows()); }, impl_);
}

VRep enumerate(int dim, const std::vector<IntVec>& eqs,
               const std::vector<IntVec>& ineqs) {
  return State::make(dim, eqs, ineqs).vrep();
}

}  // namespace pretrop::dd
