#pragma once

#include <map>
#include <string>
#include <vector>

#include "hiccup/morphism.hpp"
#include "hiccup/quadratic.hpp"

namespace hiccup {

/// Digit recognizer, msd-first. Missing transitions reject.
struct Dfa {
    int initial = 0;
    std::vector<std::map<int, int>> transitions; // state -> digit -> state
    std::vector<bool> accepting;
    std::vector<std::string> state_names;

    bool accepts(const std::string& digits) const;
    /// Word readable from some state (used for digit windows of longer
    /// representations, where the run need not start at the initial state).
    bool runnable_from_any(const std::string& digits) const;
    std::string dot() const;
};

/// Positional numeration derived from a prolongable two-letter morphism:
/// base B_i is the length of the (i-1)-th iterated image of the seed, digits
/// index prefixes of image words, and the recognizer walks the image letters.
class NumerationSystem {
  public:
    NumerationSystem(Morphism m, char seed);

    const Morphism& morphism() const { return morphism_; }
    char seed() const { return seed_; }
    const Dfa& recognizer() const { return dfa_; }
    int max_digit() const { return max_digit_; }

    /// B_1, B_2, ... up to at least `count` entries.
    std::vector<long long> bases(int count) const;
    /// B_{n+1} = c1*B_n + c2*B_{n-1} (derived from the adjacency matrix and
    /// verified against iterated image lengths).
    std::pair<long long, long long> recurrence() const { return recurrence_; }

    /// Unique msd-first representation without leading zeros; 0 -> "0".
    std::string represent(long long n) const;
    /// Valuation of an accepted msd-first word; inverse of represent. For
    /// systems whose image prefixes are all zeros this is sum d_i * B_i in
    /// lsd indexing.
    long long value(const std::string& digits) const;

  private:
    Morphism morphism_;
    char seed_;
    Dfa dfa_;
    int max_digit_;
    std::pair<long long, long long> recurrence_;
    mutable std::vector<std::array<long long, 2>> letter_len_; // level -> per-letter image length
    long long letter_length(int level, char letter) const;
    void ensure_levels(long long cover) const;
    static int letter_index(char letter);
};

NumerationSystem dumont_thomas(const Morphism& m, char seed);

/// Direct decidable re-expressions of the three first-order gap tests for the
/// (0,2,4,2) sequence, plus the structural law rep(a(n)) = rep(n) + "0".
struct ShiftedPairReport {
    bool gaps_in_two_four = true; // a(n+1)-a(n) in {2,4}
    bool hit_gap_four = true;     // n+1 in the sequence  => gap 4
    bool miss_gap_two = true;     // n+1 not in the sequence => gap 2
    bool pairing = true;          // rep(a(n)) = rep(n)"0", rep accepted
    long long first_failure = -1; // smallest witness n, -1 when all pass
    int failed_test = 0;          // 1..3, 4 = pairing

    bool all_pass() const { return gaps_in_two_four && hit_gap_four && miss_gap_two && pairing; }
};

ShiftedPairReport verify_shifted_pair(const NumerationSystem& ns, long long horizon);
ShiftedPairReport verify_shifted_pair(const NumerationSystem& ns, const IntegerSequence& seq);

/// Binet identities B_n = (lambda^n - conj^n)/(2 sqrt 3) and
/// B_{n+1} - lambda B_n = conj^n, exactly in Q(sqrt 3).
bool binet_check(const NumerationSystem& ns, int n_max);

struct ExtremaResult {
    std::string min_word; // lsd-first digit strings
    std::string max_word;
    QN min_value;
    QN max_value;
};

/// Exhaustive extremization of sum d_i * lambda_bar^i over lsd digit windows
/// of the given length that can occur in accepted representations.
ExtremaResult digit_extrema(const QN& lambda_bar, int length, const Dfa& constraint);

struct KimberlingBounds {
    QN lower; // > -3
    QN upper; // < 2
};

/// Certified enclosure of a(n) - (1+sqrt 3) n from the window extrema (their
/// three-decimal roundings) plus exact geometric tails.
KimberlingBounds kimberling_bound(const NumerationSystem& ns);

/// Exact integer-arithmetic scan of -3 < a(n) - (1+sqrt 3) n < 2.
/// Returns the first violating n, or -1 when the bound holds throughout.
long long kimberling_scan(long long n_max);

} // namespace hiccup
