#include "advect/scheme_id.hpp"

#include "advect/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <ostream>

namespace advect {

SchemeId::SchemeId(Family family, TimeIntegrator integrator, Correction correction)
    : family_(family), integrator_(integrator), correction_(correction) {
  if (correction_ != Correction::none && family_ != Family::fr) {
    throw UnsupportedScheme("a correction function applies only to the FR family");
  }
  if (integrator_ == TimeIntegrator::s2o4 && family_ != Family::cgks) {
    throw UnsupportedScheme("S2O4 is specified only for the CGKS family");
  }
}

const std::array<SchemeId, 8>& all_schemes() {
  static const std::array<SchemeId, 8> ids{
      schemes_id::cgks_s1o2, schemes_id::cgks_rk2, schemes_id::grp,      schemes_id::dg_rk2,
      schemes_id::dg_s1o2,   schemes_id::fr_radau, schemes_id::fr_g2,    schemes_id::cgks_s2o4};
  return ids;
}

const std::array<SchemeId, 6>& second_order_schemes() {
  static const std::array<SchemeId, 6> ids{schemes_id::cgks_rk2, schemes_id::cgks_s1o2,
                                           schemes_id::dg_rk2,   schemes_id::dg_s1o2,
                                           schemes_id::fr_radau, schemes_id::fr_g2};
  return ids;
}

SchemeId SchemeId::parse(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& id : all_schemes()) {
    if (id.name() == lowered) return id;
  }
  throw UnsupportedScheme(fmt::format("unknown scheme '{}'", text));
}

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::cgks: return "cgks";
    case Family::grp: return "grp";
    case Family::dg: return "dg";
    case Family::fr: return "fr";
  }
  return "?";
}

const char* integrator_name(TimeIntegrator t) {
  switch (t) {
    case TimeIntegrator::rk2: return "rk2";
    case TimeIntegrator::s1o2: return "s1o2";
    case TimeIntegrator::s2o4: return "s2o4";
  }
  return "?";
}

const char* correction_name(Correction c) {
  switch (c) {
    case Correction::none: return "";
    case Correction::radau: return "radau";
    case Correction::g2: return "g2";
  }
  return "?";
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

}  // namespace

std::string SchemeId::name() const {
  if (family_ == Family::grp) return "grp";
  std::string out = fmt::format("{}-{}", family_name(family_), integrator_name(integrator_));
  if (correction_ != Correction::none) out += fmt::format("-{}", correction_name(correction_));
  return out;
}

std::string SchemeId::label() const {
  if (family_ == Family::grp) return "GRP";
  std::string base = upper(family_name(family_));
  std::string step = upper(integrator_name(integrator_));
  if (correction_ == Correction::radau) return fmt::format("{}-Radau-{}", base, step);
  if (correction_ == Correction::g2) return fmt::format("{}-g2-{}", base, step);
  return fmt::format("{}-{}", base, step);
}

std::ostream& operator<<(std::ostream& os, const SchemeId& id) { return os << id.name(); }

}  // namespace advect
