#pragma once

#include "braidld/braid.hpp"

namespace braidld::detail {

  // True if the unreduced Burau matrices of p and q, evaluated at fixed
  // points of Z/(2^61 - 1), differ. Burau is a homomorphism, so a
  // difference proves p != q; agreement proves nothing.
  bool burau_separates(BraidWord const& p, BraidWord const& q);

}  // namespace braidld::detail
