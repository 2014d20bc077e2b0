#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

namespace advect {

enum class Family { cgks, grp, dg, fr };
enum class TimeIntegrator { rk2, s1o2, s2o4 };
enum class Correction { none, radau, g2 };

/// Scheme identity. The constructor enforces: a correction only for FR, S2O4 only for CGKS.
class SchemeId {
 public:
  SchemeId(Family family, TimeIntegrator integrator, Correction correction = Correction::none);

  /// Case-insensitive; accepts exactly the names listed by all_scheme_names().
  static SchemeId parse(std::string_view text);

  Family family() const { return family_; }
  TimeIntegrator integrator() const { return integrator_; }
  Correction correction() const { return correction_; }

  /// Canonical lower-case name, e.g. "fr-rk2-radau".
  std::string name() const;
  /// Display label, e.g. "FR-g2-RK2".
  std::string label() const;

  friend bool operator==(const SchemeId&, const SchemeId&) = default;
  friend auto operator<=>(const SchemeId&, const SchemeId&) = default;

 private:
  Family family_;
  TimeIntegrator integrator_;
  Correction correction_;
};

std::ostream& operator<<(std::ostream& os, const SchemeId& id);

namespace schemes_id {
inline const SchemeId cgks_s1o2{Family::cgks, TimeIntegrator::s1o2};
inline const SchemeId cgks_rk2{Family::cgks, TimeIntegrator::rk2};
inline const SchemeId cgks_s2o4{Family::cgks, TimeIntegrator::s2o4};
inline const SchemeId grp{Family::grp, TimeIntegrator::s1o2};
inline const SchemeId dg_rk2{Family::dg, TimeIntegrator::rk2};
inline const SchemeId dg_s1o2{Family::dg, TimeIntegrator::s1o2};
inline const SchemeId fr_radau{Family::fr, TimeIntegrator::rk2, Correction::radau};
inline const SchemeId fr_g2{Family::fr, TimeIntegrator::rk2, Correction::g2};
}  // namespace schemes_id

/// Every scheme with a stencil construction, in canonical order.
const std::array<SchemeId, 8>& all_schemes();
/// The six second-order schemes that have printed truncation polynomials.
const std::array<SchemeId, 6>& second_order_schemes();

}  // namespace advect
