#include "hiccup/morphism.hpp"

#include <algorithm>

namespace hiccup {

namespace {
const char kCanonicalOrder[] = {'c', 'b', '0', '1'};

std::string repeat(char ch, long long n) {
    return std::string(static_cast<std::size_t>(std::max<long long>(n, 0)), ch);
}
} // namespace

int Morphism::idx(char letter) {
    switch (letter) {
        case 'c': return 0;
        case 'b': return 1;
        case '0': return 2;
        case '1': return 3;
        default: return -1;
    }
}

Morphism::Morphism(std::initializer_list<std::pair<char, std::string>> rules) {
    for (const auto& [l, w] : rules) set(l, w);
}

void Morphism::set(char letter, std::string image) {
    int i = idx(letter);
    if (i < 0) throw alphabet_error(std::string("unsupported letter '") + letter + "'");
    if (image.empty()) throw validation_error("image words must be nonempty");
    for (char c : image)
        if (idx(c) < 0) throw alphabet_error(std::string("unsupported letter '") + c + "' in image");
    images_[i] = std::move(image);
    if (!present_[i]) {
        present_[i] = true;
        alphabet_.clear();
        for (char l : kCanonicalOrder)
            if (present_[idx(l)]) alphabet_.push_back(l);
    }
}

bool Morphism::has(char letter) const {
    int i = idx(letter);
    return i >= 0 && present_[i];
}

const std::string& Morphism::image(char letter) const {
    if (!has(letter)) throw alphabet_error(std::string("letter '") + letter + "' is not in the alphabet");
    return images_[idx(letter)];
}

std::string Morphism::apply(const std::string& word) const {
    std::size_t len = 0;
    for (char c : word) len += image(c).size();
    std::string out;
    out.reserve(len);
    for (char c : word) out += image(c);
    return out;
}

std::string Morphism::to_text() const {
    std::string out;
    for (char l : alphabet_) {
        if (!out.empty()) out += ", ";
        out += l;
        out += "->";
        out += image(l);
    }
    return out;
}

Morphism Morphism::parse_text(const std::string& text) {
    Morphism m;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
        if (pos >= text.size()) break;
        char letter = text[pos++];
        if (text.compare(pos, 2, "->") != 0)
            throw format_error("expected \"->\" after letter in morphism text: \"" + text + "\"");
        pos += 2;
        std::string img;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ' ') img += text[pos++];
        m.set(letter, img);
    }
    if (m.alphabet().empty()) throw format_error("no rules in morphism text: \"" + text + "\"");
    return m;
}

std::string fixed_point(const Morphism& m, const std::string& seed, std::size_t length,
                        int max_rounds) {
    if (length == 0) return "";
    if (seed.empty() || seed.size() > 2)
        throw prolongability_error("seed must have one or two letters");
    for (char c : seed)
        if (!m.has(c)) throw alphabet_error(std::string("seed letter '") + c + "' is not in the alphabet");

    std::string w = seed;
    for (int round = 0; round < max_rounds; ++round) {
        std::string next = m.apply(w);
        if (next.size() < w.size() || next.compare(0, w.size(), w) != 0)
            throw prolongability_error("morphism does not prolong the seed \"" + seed + "\"");
        if (next.size() == w.size()) {
            // w maps to itself; anything beyond it is unconstrained.
            if (w.size() >= length) return w.substr(0, length);
            throw ambiguity_error("seed \"" + seed +
                                  "\" reproduces itself without growth; the fixed point is not determined");
        }
        if (next.size() > length) next.resize(length);
        w = std::move(next);
        if (w.size() >= length) return w;
    }
    throw prolongability_error("fixed point did not reach the requested length within the iteration cap");
}

std::vector<std::string> valid_seeds(const Morphism& m) {
    std::vector<std::string> out;
    auto grows_from = [&](const std::string& seed) {
        std::string w = seed;
        for (int round = 0; round < 8; ++round) {
            std::string next = m.apply(w);
            if (next.size() < w.size() || next.compare(0, w.size(), w) != 0) return false;
            if (next.size() > 64) return true;
            if (next.size() == w.size()) return false;
            w = std::move(next);
        }
        return true;
    };
    for (char l : m.alphabet()) {
        const std::string& img = m.image(l);
        if (img.size() >= 2 && img[0] == l) out.push_back(std::string(1, l));
    }
    for (char a : m.alphabet())
        for (char b : m.alphabet()) {
            std::string seed{a, b};
            // skip seeds subsumed by a prolongable first letter
            if (std::find(out.begin(), out.end(), std::string(1, a)) != out.end()) continue;
            if (grows_from(seed)) out.push_back(seed);
        }
    return out;
}

char Coding::map(char letter) const {
    auto p = from.find(letter);
    return p == std::string::npos ? letter : to[p];
}

std::string Coding::apply(const std::string& word) const {
    std::string out = word;
    for (char& c : out) c = map(c);
    return out;
}

bool Coding::identity_on_01() const {
    return map('0') == '0' && map('1') == '1' && from.find('b') == std::string::npos &&
           from.find('c') == std::string::npos;
}

HiccupMorphism hiccup_morphism(const HiccupParams& params) {
    params.validate();
    if (params.degenerate())
        throw degeneracy_error("params " + params.str() + " are degenerate (a(n) = n)");
    if (params.j >= 2)
        throw precondition_error("j >= 2: apply reduce_j_to_zero first");

    const long long x = params.x, y = params.y, z = params.z;

    if (params.j == 1) {
        if (x == 1) {
            if (y == 1)
                throw degeneracy_error("params " + params.str() + " give the trivial sequence a(n) = n");
            Morphism m{{'0', "1" + repeat('0', z - 1)}, {'1', "1" + repeat('0', y - 1)}};
            return {m, Coding{}, "1", MorphismForm::Lemma6Pure};
        }
        Morphism m{{'b', "b" + repeat('0', x - 2) + "1" + repeat('0', y - 1)},
                   {'0', "1" + repeat('0', z - 1)},
                   {'1', "1" + repeat('0', y - 1)}};
        return {m, Coding{"b", "0"}, "b", MorphismForm::Lemma6};
    }

    // j = 0 from here on.
    if (x == 0) {
        // Lift: the (0,0,y,z) word is the (0,z-1,y,z) word with one position
        // prepended. A letter c with image c and a two-letter seed keeps the
        // inner fixed point intact one position later.
        HiccupMorphism inner = hiccup_morphism(lift_from_zero_x(params).base);
        Morphism m = inner.morphism;
        m.set('c', "c");
        Coding coding = inner.coding;
        coding.from += 'c';
        coding.to += '0';
        return {m, coding, "c" + inner.seed.substr(0, 1), MorphismForm::Lemma7Lift};
    }

    if (x == 1) {
        if (y < z) {
            Morphism m{{'0', repeat('0', z - y) + "1" + repeat('0', y - 1)},
                       {'1', "1" + repeat('0', y - 1)}};
            return {m, Coding{}, "10", MorphismForm::Eq4};
        }
        Morphism m{{'b', "b" + repeat('0', z - 1)},
                   {'0', "1" + repeat('0', z - 1)},
                   {'1', repeat('0', y - z) + "1" + repeat('0', z - 1)}};
        return {m, Coding{"b", "1"}, "b", MorphismForm::Eq5};
    }

    // x >= 2: prefer the pure two-letter form when it applies.
    if (z - y + 1 <= x && x <= z) {
        Morphism m{{'0', repeat('0', x - 1) + "1" + repeat('0', z - x)},
                   {'1', repeat('0', x + y - z - 1) + "1" + repeat('0', z - x)}};
        return {m, Coding{}, "0", MorphismForm::Eq6b};
    }
    if (y < z) {
        Morphism m{{'b', "b" + repeat('0', x - 2) + "1" + repeat('0', y - 1)},
                   {'0', repeat('0', z - y) + "1" + repeat('0', y - 1)},
                   {'1', "1" + repeat('0', y - 1)}};
        return {m, Coding{"b", "0"}, "b", MorphismForm::Eq6};
    }
    Morphism m{{'b', "b" + repeat('0', x - 2) + "1" + repeat('0', z - 1)},
               {'0', "1" + repeat('0', z - 1)},
               {'1', repeat('0', y - z) + "1" + repeat('0', z - 1)}};
    return {m, Coding{"b", "0"}, "b", MorphismForm::Eq7};
}

IntegerSequence morphic_positions(const HiccupParams& params, std::size_t letters) {
    HiccupMorphism hm = hiccup_morphism(params);
    std::string w = fixed_point(hm.morphism, hm.seed, letters);
    return ones_positions(hm.coding.apply(w));
}

IntegerSequence ones_positions(const std::string& word01) {
    IntegerSequence out;
    for (std::size_t i = 0; i < word01.size(); ++i)
        if (word01[i] == '1') out.push_back(static_cast<long long>(i) + 1);
    return out;
}

AdjacencyMatrix adjacency_matrix(const Morphism& m, bool restrict_to_01) {
    AdjacencyMatrix A;
    if (restrict_to_01) {
        A.letters = "01";
    } else {
        A.letters = m.alphabet();
    }
    for (std::size_t col = 0; col < A.letters.size(); ++col) {
        const std::string& img = m.image(A.letters[col]);
        for (char c : img) {
            auto row = A.letters.find(c);
            if (row != std::string::npos) A.m[row][col] += 1;
        }
    }
    return A;
}

bool is_primitive(const Morphism& m) {
    if (!m.has('0') || !m.has('1')) return false;
    AdjacencyMatrix A = adjacency_matrix(m, true);
    long long a = A.m[0][0], b = A.m[0][1], c = A.m[1][0], d = A.m[1][1];
    for (int power = 1; power <= 4; ++power) {
        if (power > 1) {
            long long na = a * A.m[0][0] + b * A.m[1][0];
            long long nb = a * A.m[0][1] + b * A.m[1][1];
            long long nc = c * A.m[0][0] + d * A.m[1][0];
            long long nd = c * A.m[0][1] + d * A.m[1][1];
            a = na; b = nb; c = nc; d = nd;
        }
        if (a > 0 && b > 0 && c > 0 && d > 0) return true;
    }
    return false;
}

Morphism cyclic_shift(const Morphism& m) {
    if (!m.has('0') || !m.has('1'))
        throw conjugation_error("cyclic shift needs both letters 0 and 1");
    if (m.has('c')) throw conjugation_error("cyclic shift is not defined with the lift letter c");
    const std::string& i0 = m.image('0');
    const std::string& i1 = m.image('1');
    char last = i0.back();
    if (i1.back() != last)
        throw conjugation_error("images of 0 and 1 end with different letters");

    Morphism out;
    out.set('0', std::string(1, last) + i0.substr(0, i0.size() - 1));
    out.set('1', std::string(1, last) + i1.substr(0, i1.size() - 1));
    if (m.has('b')) {
        const std::string& ib = m.image('b');
        if (ib.back() != last || ib.size() < 2)
            throw conjugation_error("image of b does not end with the rotated letter");
        out.set('b', ib.substr(0, ib.size() - 1));
    }

    // The rotation must leave at least one seed of the original usable.
    for (const std::string& seed : valid_seeds(m)) {
        try {
            fixed_point(out, seed, 8);
            return out;
        } catch (const error&) {
        }
    }
    throw conjugation_error("rotation breaks prolongability of every seed of the original morphism");
}

std::optional<std::pair<Morphism, std::string>> drop_special_letter(const Morphism& m,
                                                                    const Coding& coding) {
    if (!m.has('b')) return std::nullopt;
    Morphism pure;
    for (char l : {'0', '1'})
        if (m.has(l)) pure.set(l, m.image(l));
    std::string target;
    try {
        target = coding.apply(fixed_point(m, "b", 2048));
    } catch (const error&) {
        return std::nullopt;
    }
    for (const std::string& seed : valid_seeds(pure)) {
        try {
            if (coding.apply(fixed_point(pure, seed, 2048)) == target) return {{pure, seed}};
        } catch (const error&) {
        }
    }
    return std::nullopt;
}

} // namespace hiccup
