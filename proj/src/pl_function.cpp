#include "tropcy/pl_function.hpp"

#include <algorithm>

namespace tropcy {

PLFunction PLFunction::from_ray_values(std::shared_ptr<const Fan> fan,
                                       std::vector<Rat> values) {
  if (values.size() != fan->rays().size())
    throw Error("ray value count does not match the fan");
  PLFunction f;
  f.fan_ = std::move(fan);
  f.ray_values_ = std::move(values);
  for (const auto& cone : f.fan_->max_cones()) {
    MatQ rows;
    VecQ rhs;
    for (const auto& r : cone.rays()) {
      rows.push_back(to_q(r));
      rhs.push_back(f.ray_values_[f.fan_->ray_index(r)]);
    }
    auto form = solve_general(rows, rhs);
    if (!form) throw Error("ray values are not linear on " + cone.describe());
    f.cone_forms_.push_back(*form);
  }
  return f;
}

PLFunction PLFunction::from_cone_forms(std::shared_ptr<const Fan> fan,
                                       std::vector<VecQ> forms) {
  if (forms.size() != fan->max_cones().size())
    throw Error("form count does not match the fan");
  PLFunction f;
  f.fan_ = std::move(fan);
  f.cone_forms_ = std::move(forms);
  f.ray_values_.assign(f.fan_->rays().size(), Rat(0));
  std::vector<bool> seen(f.ray_values_.size(), false);
  for (std::size_t ci = 0; ci < f.fan_->max_cones().size(); ++ci) {
    for (const auto& r : f.fan_->max_cones()[ci].rays()) {
      int ri = f.fan_->ray_index(r);
      Rat v = dot(f.cone_forms_[ci], to_q(r));
      if (seen[ri] && f.ray_values_[ri] != v)
        throw Error("cone forms disagree on a shared ray");
      f.ray_values_[ri] = v;
      seen[ri] = true;
    }
  }
  return f;
}

Rat PLFunction::operator()(const VecQ& x) const {
  int ci = fan_->locate(x);
  if (ci < 0) throw Error("point outside the fan support");
  return dot(cone_forms_[ci], x);
}

std::optional<Wall> PLFunction::convexity_violation(bool strict) const {
  for (const auto& w : fan_->walls()) {
    Rat a = dot(cone_forms_[w.cone_a], to_q(w.witness_b));
    Rat b = dot(cone_forms_[w.cone_b], to_q(w.witness_b));
    if (strict ? (b <= a) : (b < a)) return w;
  }
  return std::nullopt;
}

bool PLFunction::is_convex() const {
  return !convexity_violation(false).has_value();
}

bool PLFunction::is_strictly_convex() const {
  return is_convex() && !convexity_violation(true).has_value();
}

bool PLFunction::is_integral() const {
  for (const auto& form : cone_forms_)
    for (const auto& c : form)
      if (!is_integer(c)) return false;
  return true;
}

PLFunction PLFunction::operator+(const PLFunction& o) const {
  if (fan_ != o.fan_) throw Error("PL functions live on different fans");
  PLFunction out;
  out.fan_ = fan_;
  for (std::size_t i = 0; i < ray_values_.size(); ++i)
    out.ray_values_.push_back(ray_values_[i] + o.ray_values_[i]);
  for (std::size_t i = 0; i < cone_forms_.size(); ++i)
    out.cone_forms_.push_back(add(cone_forms_[i], o.cone_forms_[i]));
  return out;
}

PLFunction PLFunction::operator-(const PLFunction& o) const {
  return *this + (o * Rat(-1));
}

PLFunction PLFunction::operator*(const Rat& c) const {
  PLFunction out;
  out.fan_ = fan_;
  for (const auto& v : ray_values_) out.ray_values_.push_back(v * c);
  for (const auto& f : cone_forms_) out.cone_forms_.push_back(scale(f, c));
  return out;
}

PLFunction PLFunction::restricted_to(std::shared_ptr<const Fan> finer) const {
  if (finer->refines(*fan_) != RefinementCheck::Refines)
    throw Error("target fan does not refine the source fan");
  std::vector<Rat> values;
  values.reserve(finer->rays().size());
  for (const auto& r : finer->rays()) values.push_back((*this)(to_q(r)));
  return from_ray_values(std::move(finer), std::move(values));
}

PLFunction support_function(const Polytope& p,
                            std::shared_ptr<const Fan> fan) {
  if (p.is_empty()) throw Error("support function of the empty polytope");
  std::vector<Rat> values;
  values.reserve(fan->rays().size());
  for (const auto& r : fan->rays()) {
    Rat best = dot(to_q(r), p.vertices()[0]);
    for (const auto& v : p.vertices()) best = std::min(best, dot(to_q(r), v));
    values.push_back(-best);
  }
  std::vector<VecQ> forms;
  for (const auto& cone : fan->max_cones()) {
    VecQ probe = cone.relative_interior_point();
    Rat best = dot(probe, p.vertices()[0]);
    VecQ arg = p.vertices()[0];
    for (const auto& v : p.vertices()) {
      Rat s = dot(probe, v);
      if (s < best) {
        best = s;
        arg = v;
      }
    }
    VecQ form = scale(arg, Rat(-1));
    for (const auto& r : cone.rays()) {
      if (dot(form, to_q(r)) != values[fan->ray_index(r)])
        throw Error("fan does not refine the normal fan");
    }
    forms.push_back(std::move(form));
  }
  return PLFunction::from_cone_forms(std::move(fan), std::move(forms));
}

Polytope newton_polytope(const PLFunction& f) {
  if (f.fan().support() != FanSupport::Complete)
    throw Error("Newton polytope needs a complete fan");
  if (!f.is_convex()) throw Error("not convex; Newton polytope not faithful");
  std::vector<HalfSpace> hs;
  const auto& rays = f.fan().rays();
  for (std::size_t i = 0; i < rays.size(); ++i)
    hs.push_back(HalfSpace{rays[i], f.value_at_ray(static_cast<int>(i))});
  return Polytope::intersect(f.fan().ambient_rank(), std::move(hs));
}

}  // namespace tropcy
