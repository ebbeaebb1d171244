#include "refl/repr/params.hpp"

namespace refl {

std::string describe(const RationalParams& p) {
  return "eps_plus=" + p.eps_plus.get_str() + " eps_minus=" + p.eps_minus.get_str() + " k_plus=" +
         p.k_plus.get_str() + " k_minus=" + p.k_minus.get_str() + " p_tilde=" + p.p_tilde.get_str() +
         " s0=" + std::to_string(p.s0) + " s1=" + std::to_string(p.s1);
}

}  // namespace refl
