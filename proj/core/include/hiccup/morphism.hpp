#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hiccup/sequences.hpp"

namespace hiccup {

/// Substitution over a subset of {c,b,0,1}. Letters b (and c, used by the
/// x=0 lift) only ever appear as the first letters of a fixed point.
class Morphism {
  public:
    Morphism() = default;
    Morphism(std::initializer_list<std::pair<char, std::string>> rules);

    void set(char letter, std::string image);
    bool has(char letter) const;
    const std::string& image(char letter) const;
    /// Letters in canonical order c, b, 0, 1 (only those present).
    const std::string& alphabet() const { return alphabet_; }

    std::string apply(const std::string& word) const;

    /// Text form "0->10, 1->100" (canonical rule order).
    std::string to_text() const;
    static Morphism parse_text(const std::string& text);

    bool operator==(const Morphism&) const = default;

  private:
    std::array<std::string, 4> images_{};
    std::array<bool, 4> present_{};
    std::string alphabet_;
    static int idx(char letter);
};

/// First `length` letters of the unique fixed point extending `seed`
/// (one letter, prolongable; or a two-letter Slater seed). Iterates apply()
/// checking prefix stability each round, up to `max_rounds`.
std::string fixed_point(const Morphism& m, const std::string& seed, std::size_t length,
                        int max_rounds = 64);

/// Seeds (length 1 or 2) from which a fixed point provably extends.
std::vector<std::string> valid_seeds(const Morphism& m);

/// Letter-to-letter coding into {0,1}; letters absent from the map code to
/// themselves.
struct Coding {
    std::string from;
    std::string to;
    char map(char letter) const;
    std::string apply(const std::string& word) const;
    bool identity_on_01() const;
    bool operator==(const Coding&) const = default;
};

enum class MorphismForm { Eq4, Eq5, Eq6, Eq7, Eq6b, Lemma6, Lemma6Pure, Lemma7Lift };

struct HiccupMorphism {
    Morphism morphism;
    Coding coding;
    std::string seed;
    MorphismForm form;
};

/// Substitution system whose coded fixed point has its 1s exactly at the
/// terms of generate_hiccup(params). For x=0 the positions match a(2),a(3),...
/// (the leading term 0 is not a word position). Requires j in {0,1}; reduce
/// higher j first.
HiccupMorphism hiccup_morphism(const HiccupParams& params);

/// Positions of 1s of the coded fixed point, aligned so they compare directly
/// against generate_hiccup (for x=0: against its tail).
IntegerSequence morphic_positions(const HiccupParams& params, std::size_t letters);

IntegerSequence ones_positions(const std::string& word01);

/// Incidence counts: entry (u,v) is the number of occurrences of letter u in
/// the image of letter v, so column sums are image lengths and count vectors
/// evolve by left multiplication.
struct AdjacencyMatrix {
    std::string letters;
    std::array<std::array<long long, 4>, 4> m{};
    long long at(int row, int col) const { return m[row][col]; }
};

AdjacencyMatrix adjacency_matrix(const Morphism& m, bool restrict_to_01 = false);

/// Some power (up to dim^2) of the {0,1}-restricted adjacency matrix is
/// entrywise positive.
bool is_primitive(const Morphism& m);

/// One conjugation step: the common last letter of the images of 0 and 1
/// rotates to the front; an image of b instead drops that trailing letter.
Morphism cyclic_shift(const Morphism& m);

/// Remove the special letter b when its image is b followed by a word the
/// pure part regenerates; returns the pure morphism and its seed.
std::optional<std::pair<Morphism, std::string>> drop_special_letter(const Morphism& m,
                                                                    const Coding& coding);

} // namespace hiccup
