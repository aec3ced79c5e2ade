#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hiccup/errors.hpp"

namespace hiccup {

using IntegerSequence = std::vector<long long>;

/// The quadruple (j,x,y,z): a(1) = x and a(n) = a(n-1) + y when n-j already
/// occurred among a(1..n-1), else a(n-1) + z.
struct HiccupParams {
    long long j = 0; ///< lookback offset, >= 0
    long long x = 1; ///< first term, >= 0
    long long y = 1; ///< gap on membership hit, >= 1
    long long z = 2; ///< gap on membership miss, >= 1

    /// Throws validation_error naming the violated invariant. Degenerate
    /// params pass validation; callers that cannot handle them check
    /// degenerate() themselves.
    void validate() const;

    /// j=0, x=1, z=1: the recursion collapses to a(n) = n.
    bool degenerate() const { return j == 0 && x == 1 && z == 1; }

    static HiccupParams parse(const std::string& comma_separated);
    std::string str() const;

    bool operator==(const HiccupParams&) const = default;
};

IntegerSequence generate_hiccup(const HiccupParams& params, long long count);

/// Characteristic word: position p holds '1' iff p occurs in seq.
/// length must not exceed the last generated term.
std::string characteristic_word(const IntegerSequence& seq, long long length);

/// (j,x,y,z) with j>0 maps to (0,x+j,y,z); the reduced sequence is the
/// original plus the returned shift, term by term.
std::pair<HiccupParams, long long> reduce_j_to_zero(const HiccupParams& params);

struct LiftRule {
    HiccupParams base;   ///< the (0,z-1,y,z) params whose sequence b this lifts
    // the lifted sequence obeys a(1) = 0, a(n+1) = b(n) + 1
};

/// (0,0,y,z) with y,z > 1 is a +1 shift of the (0,z-1,y,z) sequence.
LiftRule lift_from_zero_x(const HiccupParams& params);

/// All (j,x,y,z) with j <= j_max reproducing the whole prefix. x is pinned to
/// prefix[0] and y,z must come from the observed first differences (at most
/// two distinct values, else not_hiccup_error).
std::vector<HiccupParams> infer_params(const IntegerSequence& prefix, long long j_max = 2);

} // namespace hiccup
