#include "slgap/algebra/numberfield.hpp"

#include "slgap/errors.hpp"

namespace slgap::algebra {

NumberField NumberField::make(IntPoly f_coeffs) {
  normalize(f_coeffs);
  int d = slgap::algebra::degree(f_coeffs);
  if (d < 1) raise(Errc::NotMonic, "defining polynomial must have degree >= 1");
  if (f_coeffs[d] != 1) raise(Errc::NotMonic, "defining polynomial must be monic");
  if (has_rational_factor(f_coeffs))
    raise(Errc::Reducible, "defining polynomial factors over Z");

  NumberField K;
  K.f_ = std::move(f_coeffs);
  K.degree_ = static_cast<unsigned>(d);
  K.disc_ = slgap::algebra::discriminant(K.f_);
  if (K.disc_ == 0)
    raise(Errc::ZeroDiscriminant, "defining polynomial has repeated roots");
  return K;
}

}  // namespace slgap::algebra
