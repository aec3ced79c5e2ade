#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hiccup/morphism.hpp"
#include "hiccup/quadratic.hpp"

namespace hiccup {

enum class Generator { E, L, R, G, Gt, H };

using GeneratorWord = std::vector<Generator>;

Morphism generator_morphism(Generator g);

/// Left-to-right composition: compose({A,B}) applies B first, then A,
/// matching the usual A∘B.
Morphism compose(const GeneratorWord& gens);

struct SturmianDecomposition {
    GeneratorWord gens;
    /// x=1, y=z-1: the gens are those of the (0,2,y,z) word; the requested
    /// sequence is the same morphism's other fixed point.
    bool alternate_seed = false;
};

/// Generator decomposition for (0,x,y,z) with 1 <= x <= z and |y-z| = 1.
SturmianDecomposition sturmian_decomposition(const HiccupParams& params);

enum class Rounding { floor, ceiling };

/// Word convention used throughout: letter(n) = round(alpha*n + beta) -
/// round(alpha*(n-1) + beta) for n >= 1, with beta normalized to [0,1).
/// Under it the k-th 1 of the floor word sits at ceil((k-beta)/alpha) and of
/// the ceiling word at floor((k-beta)/alpha) + 1. The two words differ only
/// when some alpha*n + beta is an exact integer (at most one such n).
struct MechanicalParams {
    QN alpha;
    QN beta;
    Rounding rounding = Rounding::floor;
};

/// Frequency of letter 1 in the fixed points of a primitive two-letter
/// morphism, from the Perron eigenvector of its adjacency matrix.
QN eigen_density(const Morphism& m);

/// Exact (alpha, beta) fixed point of the composite parameter transformation
/// of the generator word; rounding defaults to floor. Errors when the
/// composition is not primitive.
MechanicalParams transformation_fixed_point(const GeneratorWord& gens);

/// Mechanical params of the characteristic word of (0,x,y,z), x >= 1,
/// x <= z, |y-z| = 1: alpha from the adjacency eigenvector, beta from the
/// composite transformation (for x=1, y=z+1 the word w satisfies
/// sigma(w) = 0w, which shifts the fixed-point equation by alpha), rounding
/// resolved by the integer-hit analysis against the recursion.
MechanicalParams hiccup_mechanical_params(const HiccupParams& params);

std::string mechanical_word(const MechanicalParams& mp, long long length);

struct BeattyParams {
    QN slope;
    QN intercept;
    Rounding rounding = Rounding::floor;
    bool operator==(const BeattyParams&) const = default;
};

BeattyParams beatty_from_mechanical(const MechanicalParams& mp);

long long beatty_term(const BeattyParams& bp, long long n);

/// The single n >= 1 (if any) with alpha*n + beta an exact integer k >= 1.
std::optional<std::pair<long long, long long>> integer_hit(const QN& alpha, const QN& beta);

/// End-to-end Beatty description of a catalog entry: j is reduced away and
/// x=0 is lifted before the Sturmian machinery runs.
struct HiccupBeatty {
    BeattyParams base;        ///< Beatty params of the reduced (0,x',y,z) word
    long long shift = 0;      ///< j-reduction shift to subtract
    bool lifted = false;      ///< x=0: a(1)=0 and a(n) = base(n-1)+1
    BeattyParams presentation; ///< floor-normalized single formula
    long long valid_from = 1; ///< presentation valid for n >= valid_from

    long long term(long long n) const;
};

HiccupBeatty hiccup_beatty(const HiccupParams& params);

/// Text form "floor((1+sqrt(2))*n - sqrt(2)/2)"; parse is its exact inverse.
std::string render_formula(const BeattyParams& bp);
BeattyParams parse_formula(const std::string& text);

} // namespace hiccup
