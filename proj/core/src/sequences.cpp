#include "hiccup/sequences.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hiccup {

void HiccupParams::validate() const {
    if (j < 0) throw validation_error("invalid params " + str() + ": j must be >= 0");
    if (x < 0) throw validation_error("invalid params " + str() + ": x must be >= 0");
    if (y < 1) throw validation_error("invalid params " + str() + ": y must be >= 1");
    if (z < 1) throw validation_error("invalid params " + str() + ": z must be >= 1");
    if (y == z) throw validation_error("invalid params " + str() + ": y != z is required");
    if (x == 0 && (j != 0 || y <= 1 || z <= 1))
        throw validation_error("invalid params " + str() + ": x = 0 requires j = 0 and y,z > 1");
}

HiccupParams HiccupParams::parse(const std::string& s) {
    std::istringstream in(s);
    HiccupParams p;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(in >> p.j >> c1 >> p.x >> c2 >> p.y >> c3 >> p.z) || c1 != ',' || c2 != ',' || c3 != ',')
        throw format_error("expected params as j,x,y,z; got \"" + s + "\"");
    std::string rest;
    if (in >> rest) throw format_error("trailing text after params: \"" + rest + "\"");
    return p;
}

std::string HiccupParams::str() const {
    return "(" + std::to_string(j) + "," + std::to_string(x) + "," + std::to_string(y) + "," +
           std::to_string(z) + ")";
}

IntegerSequence generate_hiccup(const HiccupParams& params, long long count) {
    params.validate();
    if (count < 1) throw validation_error("empty request: count must be >= 1");

    IntegerSequence a;
    a.reserve(static_cast<std::size_t>(count));
    a.push_back(params.x);

    // The query n-j increases by one per step, so a single probe index over
    // the (increasing) terms decides membership in O(1) amortized.
    std::size_t probe = 0;
    for (long long n = 2; n <= count; ++n) {
        long long q = n - params.j;
        bool member = false;
        if (q >= 1) { // positions that never occurred (q <= 0) count as absent
            while (probe < a.size() && a[probe] < q) ++probe;
            member = probe < a.size() && a[probe] == q;
        }
        a.push_back(a.back() + (member ? params.y : params.z));
    }
    return a;
}

std::string characteristic_word(const IntegerSequence& seq, long long length) {
    if (length < 1) throw validation_error("characteristic word length must be >= 1");
    if (seq.empty() || seq.back() < length)
        throw horizon_error("length " + std::to_string(length) +
                            " exceeds the generated horizon; generate more terms first");
    std::string w(static_cast<std::size_t>(length), '0');
    for (long long t : seq) {
        if (t > length) break;
        if (t >= 1) w[static_cast<std::size_t>(t - 1)] = '1';
    }
    return w;
}

std::pair<HiccupParams, long long> reduce_j_to_zero(const HiccupParams& params) {
    params.validate();
    if (params.j == 0) throw precondition_error("params already have j = 0; nothing to reduce");
    HiccupParams out{0, params.x + params.j, params.y, params.z};
    return {out, params.j};
}

LiftRule lift_from_zero_x(const HiccupParams& params) {
    params.validate();
    if (params.x != 0 || params.j != 0)
        throw precondition_error("lift applies to (0,0,y,z) params only");
    if (params.y <= 1 || params.z <= 1)
        throw precondition_error("lift requires y > 1 and z > 1");
    return LiftRule{HiccupParams{0, params.z - 1, params.y, params.z}};
}

std::vector<HiccupParams> infer_params(const IntegerSequence& prefix, long long j_max) {
    if (prefix.size() < 4) throw validation_error("inference needs a prefix of length >= 4");
    for (std::size_t i = 1; i < prefix.size(); ++i)
        if (prefix[i] <= prefix[i - 1])
            throw validation_error("prefix must be strictly increasing");

    std::set<long long> diffs;
    for (std::size_t i = 1; i < prefix.size(); ++i) diffs.insert(prefix[i] - prefix[i - 1]);
    if (diffs.size() > 2)
        throw not_hiccup_error("prefix has " + std::to_string(diffs.size()) +
                               " distinct gaps; a hiccup sequence has at most two");

    std::vector<std::pair<long long, long long>> gap_pairs;
    if (diffs.size() == 2) {
        auto it = diffs.begin();
        long long d1 = *it++, d2 = *it;
        gap_pairs = {{d1, d2}, {d2, d1}};
    }
    // A single observed gap cannot pin y != z, so no candidate survives.

    std::vector<HiccupParams> out;
    for (long long j = 0; j <= j_max; ++j) {
        for (auto [y, z] : gap_pairs) {
            HiccupParams cand{j, prefix.front(), y, z};
            try {
                cand.validate();
            } catch (const validation_error&) {
                continue;
            }
            if (generate_hiccup(cand, static_cast<long long>(prefix.size())) == prefix)
                out.push_back(cand);
        }
    }
    return out;
}

} // namespace hiccup
