#include "refl/kops/kops.hpp"

namespace refl {

namespace {
constexpr std::pair<Variant, const char*> kNames[] = {
    {Variant::diagonal, "diagonal"},   {Variant::upper, "upper"},         {Variant::lower, "lower"},
    {Variant::upper_alt, "upper_alt"}, {Variant::lower_alt, "lower_alt"}, {Variant::onsager_candidate, "onsager_candidate"},
};
}

std::string to_string(Variant v) {
  for (const auto& [k, name] : kNames)
    if (k == v) return name;
  return "unknown";
}

std::optional<Variant> parse_variant(const std::string& s) {
  for (const auto& [k, name] : kNames)
    if (s == name) return k;
  return std::nullopt;
}

}  // namespace refl
