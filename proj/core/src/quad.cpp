// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/quad.hpp"

namespace gfpkit {

QuadElem pow(const QuadElem& base, std::uint64_t exponent) {
    QuadElem result = QuadElem::scalar(Poly(1), base.delta());
    QuadElem sq = base;
    while (exponent != 0) {
        if (exponent & 1u) result = result * sq;
        exponent >>= 1u;
        if (exponent != 0) sq = sq * sq;
    }
    return result;
}

}  // namespace gfpkit
