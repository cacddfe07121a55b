#pragma once

#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

struct Term {
  FieldScalar coeff;
  Monomial mono;
  bool operator==(const Term&) const = default;
};

}  // namespace sympow
