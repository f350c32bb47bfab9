#include "bvp/types.hpp"

#include "bvp/errors.hpp"

namespace bvp {

void Params3::validate() const {
  if (!(alpha0 > 0.0 && alpha1 > 0.0 && alpha2 > 0.0)) {
    throw invalid_parameter_error("all shape parameters must be positive");
  }
}

void Params7::validate() const {
  if (!(sigma1 > 0.0 && sigma2 > 0.0)) {
    throw invalid_parameter_error("scale parameters must be positive");
  }
  alphas().validate();
}

}  // namespace bvp
