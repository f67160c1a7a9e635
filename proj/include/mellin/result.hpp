#pragma once

#include "mellin/mpnum.hpp"

namespace mellin {

// Value of a truncated series with a bound on the omitted remainder.
struct SeriesResult {
    Complex value;
    long terms_used = 0;
    Real tail_bound;
};

}  // namespace mellin
