#include "refl/repr/evaluation.hpp"

namespace refl {

std::string to_string(Generator g) {
  switch (g) {
    case Generator::e0: return "e0";
    case Generator::f0: return "f0";
    case Generator::k0: return "q^h0";
    case Generator::e1: return "e1";
    case Generator::f1: return "f1";
    case Generator::k1: return "q^h1";
  }
  return "?";
}

}  // namespace refl
