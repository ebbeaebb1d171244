#include "refl/scalar/field.hpp"

#include <sstream>

namespace refl {

std::string NumericField::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "numeric(q=" << q_.real() << (q_.imag() < 0 ? "-" : "+") << std::abs(q_.imag()) << "i, tol=" << tol_
     << ", max_terms=" << max_terms_ << ")";
  return os.str();
}

}  // namespace refl
