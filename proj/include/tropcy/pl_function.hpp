#pragma once

#include "tropcy/fan.hpp"

#include <memory>

namespace tropcy {

/// Piecewise linear function bound to a fan: one linear form per maximal
/// cone, continuous across shared faces, determined by (and checked against)
/// its values on the fan's rays.
class PLFunction {
 public:
  static PLFunction from_ray_values(std::shared_ptr<const Fan> fan,
                                    std::vector<Rat> values_by_ray_index);
  static PLFunction from_cone_forms(std::shared_ptr<const Fan> fan,
                                    std::vector<VecQ> forms_by_max_cone);

  const Fan& fan() const { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  const std::vector<Rat>& ray_values() const { return ray_values_; }
  const std::vector<VecQ>& cone_forms() const { return cone_forms_; }

  Rat value_at_ray(int ray_index) const { return ray_values_[ray_index]; }
  Rat operator()(const VecQ& x) const;
  Rat operator()(const VecZ& x) const { return (*this)(to_q(x)); }

  bool is_convex() const;
  bool is_strictly_convex() const;
  /// First wall violating (strict) convexity, if any.
  std::optional<Wall> convexity_violation(bool strict) const;
  bool is_integral() const;

  PLFunction operator+(const PLFunction& o) const;
  PLFunction operator-(const PLFunction& o) const;
  PLFunction operator*(const Rat& c) const;

  /// Same function expressed on a refinement of this fan.
  PLFunction restricted_to(std::shared_ptr<const Fan> finer) const;

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<Rat> ray_values_;
  std::vector<VecQ> cone_forms_;
};

/// Support function n -> -min_{v in P} <v, n> expressed on the given fan,
/// which must refine the normal fan of P.
PLFunction support_function(const Polytope& p, std::shared_ptr<const Fan> fan);

/// Newton polytope {m : <m, n> >= -f(n) for all n} of a convex PL function on
/// a complete fan.
Polytope newton_polytope(const PLFunction& f);

}  // namespace tropcy
