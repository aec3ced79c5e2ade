#include "hiccup/sturmian.hpp"

#include <algorithm>
#include <cctype>

namespace hiccup {

namespace {

void expand_to_elr(Generator g, GeneratorWord& out) {
    switch (g) {
        case Generator::E: out.push_back(Generator::E); break;
        case Generator::L: out.push_back(Generator::L); break;
        case Generator::R: out.push_back(Generator::R); break;
        case Generator::G: out.insert(out.end(), {Generator::L, Generator::E}); break;
        case Generator::Gt: out.insert(out.end(), {Generator::R, Generator::E}); break;
        case Generator::H: out.insert(out.end(), {Generator::E, Generator::R, Generator::E}); break;
    }
}

GeneratorWord expand_to_elr(const GeneratorWord& gens) {
    GeneratorWord out;
    for (Generator g : gens) expand_to_elr(g, out);
    return out;
}

// beta coefficients of the whole composition, threading the slope through
// the stages innermost (rightmost generator) first. Per stage, beta maps
// affinely: E sends it to 1-beta; L to (1-beta)/(2-alpha); R to
// (2-alpha-beta)/(2-alpha).
std::pair<QN, QN> thread_affine(const GeneratorWord& elr, const QN& alpha_fixed) {
    QN A(1), B(0), alpha = alpha_fixed;
    for (auto it = elr.rbegin(); it != elr.rend(); ++it) {
        QN a, b;
        switch (*it) {
            case Generator::E:
                a = QN(-1);
                b = QN(1);
                alpha = QN(1) - alpha;
                break;
            case Generator::L: {
                QN den = QN(2) - alpha;
                a = QN(-1) / den;
                b = QN(1) / den;
                alpha = (QN(1) - alpha) / den;
                break;
            }
            case Generator::R: {
                QN den = QN(2) - alpha;
                a = QN(-1) / den;
                b = (QN(2) - alpha) / den;
                alpha = (QN(1) - alpha) / den;
                break;
            }
            default:
                throw precondition_error("thread_affine expects E/L/R only");
        }
        A = a * A;
        B = a * B + b;
    }
    if (alpha != alpha_fixed)
        throw precondition_error("slope is not fixed by the composite transformation");
    return {A, B};
}

QN normalized_unit(QN beta) {
    long long f = beta.floor();
    if (f != 0) beta = beta - QN(f);
    return beta;
}

long long round_value(const QN& t, Rounding r) {
    return r == Rounding::floor ? t.floor() : t.ceil();
}

} // namespace

Morphism generator_morphism(Generator g) {
    switch (g) {
        case Generator::E: return Morphism{{'0', "1"}, {'1', "0"}};
        case Generator::L: return Morphism{{'0', "01"}, {'1', "0"}};
        case Generator::R: return Morphism{{'0', "10"}, {'1', "0"}};
        case Generator::G: return Morphism{{'0', "0"}, {'1', "01"}};
        case Generator::Gt: return Morphism{{'0', "0"}, {'1', "10"}};
        case Generator::H: return Morphism{{'0', "1"}, {'1', "01"}};
    }
    throw precondition_error("unknown generator");
}

Morphism compose(const GeneratorWord& gens) {
    if (gens.empty()) throw precondition_error("empty generator word");
    Morphism out;
    for (char l : {'0', '1'}) {
        std::string w(1, l);
        for (auto it = gens.rbegin(); it != gens.rend(); ++it)
            w = generator_morphism(*it).apply(w);
        out.set(l, w);
    }
    return out;
}

SturmianDecomposition sturmian_decomposition(const HiccupParams& params) {
    params.validate();
    if (params.j != 0) throw precondition_error("decomposition needs j = 0; reduce first");
    if (params.x == 0) throw precondition_error("decomposition needs x >= 1; lift (0,0,y,z) first");
    long long x = params.x, y = params.y, z = params.z;
    if (x > z || (y != z + 1 && y != z - 1))
        throw precondition_error("not a Sturmian case: requires x <= z and |y-z| = 1, got " +
                                 params.str());

    SturmianDecomposition dec;
    auto push = [&](Generator g, long long count) {
        for (long long i = 0; i < count; ++i) dec.gens.push_back(g);
    };
    if (y == z + 1) {
        push(Generator::G, x - 1);
        push(Generator::Gt, z - x);
        dec.gens.push_back(Generator::H);
    } else if (x >= 2) {
        push(Generator::G, x - 2);
        push(Generator::Gt, z - x);
        dec.gens.push_back(Generator::H);
        dec.gens.push_back(Generator::E);
    } else {
        if (z <= 1) throw precondition_error("x = 1, y = z-1 requires z > 1");
        // same morphism as for (0,2,z-1,z), started from the other letter
        push(Generator::Gt, z - 2);
        dec.gens.push_back(Generator::H);
        dec.gens.push_back(Generator::E);
        dec.alternate_seed = true;
    }
    return dec;
}

QN eigen_density(const Morphism& m) {
    if (!is_primitive(m))
        throw precondition_error("morphism is not primitive; no unique letter frequency");
    AdjacencyMatrix A = adjacency_matrix(m, true);
    long long t = A.m[0][0] + A.m[1][1];
    long long det = A.m[0][0] * A.m[1][1] - A.m[0][1] * A.m[1][0];
    QN disc = QN::sqrt_of(t * t - 4 * det);
    QN lambda = (QN(t) + disc) / QN(2);
    // right Perron eigenvector (v0, v1): v0 (lambda - m00) = m01 v1
    QN num = lambda - QN(A.m[0][0]);
    return num / (num + QN(A.m[0][1]));
}

MechanicalParams transformation_fixed_point(const GeneratorWord& gens) {
    Morphism composed = compose(gens);
    if (!is_primitive(composed))
        throw precondition_error("composition is not primitive; no unique fixed point");
    QN alpha = eigen_density(composed);
    if (alpha.is_rational())
        throw precondition_error("composition has rational density; no isolated fixed point");
    auto [A, B] = thread_affine(expand_to_elr(gens), alpha);
    QN beta = B / (QN(1) - A);
    return {alpha, normalized_unit(beta), Rounding::floor};
}

MechanicalParams hiccup_mechanical_params(const HiccupParams& params) {
    SturmianDecomposition dec = sturmian_decomposition(params);
    if (params.y == 1)
        throw precondition_error("y = 1 gives a non-primitive morphism; no mechanical parameters");
    Morphism composed = compose(dec.gens);
    if (!is_primitive(composed))
        throw precondition_error("composed morphism is not primitive");
    QN alpha = eigen_density(composed);
    auto [A, B] = thread_affine(expand_to_elr(dec.gens), alpha);

    QN beta;
    if (params.x == 1 && params.y == params.z + 1) {
        // The word is not a fixed point here: sigma(w) = 0w, so the
        // parameters shift by alpha across one application.
        beta = (B + alpha) / (QN(1) - A);
    } else {
        beta = B / (QN(1) - A);
    }
    beta = normalized_unit(beta);

    Rounding rounding = Rounding::floor;
    if (auto hit = integer_hit(alpha, beta)) {
        // The floor and ceiling words disagree at exactly this index; let the
        // recursion arbitrate.
        auto [n_star, k_star] = *hit;
        IntegerSequence truth = generate_hiccup(params, k_star);
        rounding = truth.back() == n_star ? Rounding::floor : Rounding::ceiling;
        if (rounding == Rounding::ceiling && truth.back() != n_star + 1)
            throw precondition_error("integer hit matches neither rounding; bad parameters");
    }
    return {alpha, beta, rounding};
}

std::string mechanical_word(const MechanicalParams& mp, long long length) {
    if (mp.alpha.sign() <= 0 || (mp.alpha - QN(1)).sign() >= 0)
        throw precondition_error("mechanical word needs alpha in (0,1)");
    std::string w;
    w.reserve(static_cast<std::size_t>(std::max<long long>(length, 0)));
    long long prev = round_value(mp.beta, mp.rounding);
    for (long long n = 1; n <= length; ++n) {
        long long cur = round_value(mp.alpha * QN(n) + mp.beta, mp.rounding);
        w.push_back(cur - prev ? '1' : '0');
        prev = cur;
    }
    return w;
}

BeattyParams beatty_from_mechanical(const MechanicalParams& mp) {
    if (mp.alpha.is_rational())
        throw precondition_error("lemma precondition: alpha must be irrational");
    if (mp.alpha.sign() <= 0 || (mp.alpha - QN(1)).sign() >= 0)
        throw precondition_error("lemma precondition: alpha must lie in (0,1)");
    if (mp.beta.sign() < 0 || (mp.beta - QN(1)).sign() >= 0)
        throw precondition_error("lemma precondition: beta must be normalized to [0,1)");
    QN slope = QN(1) / mp.alpha;
    QN ratio = mp.beta / mp.alpha;
    if (mp.rounding == Rounding::floor) {
        // positions of the floor word form the rounded-up Beatty sequence
        return {slope, -ratio, Rounding::ceiling};
    }
    return {slope, QN(1) - ratio, Rounding::floor};
}

long long beatty_term(const BeattyParams& bp, long long n) {
    if (n < 1) throw validation_error("Beatty index must be >= 1");
    if (bp.slope.is_rational())
        throw precondition_error("unsupported: rational Beatty slope");
    return round_value(bp.slope * QN(n) + bp.intercept, bp.rounding);
}

std::optional<std::pair<long long, long long>> integer_hit(const QN& alpha, const QN& beta) {
    if (alpha.is_rational()) throw precondition_error("integer_hit expects irrational alpha");
    // alpha*n + beta integral forces the radical parts to cancel:
    // n * q_a/r_a + q_b/r_b = 0.
    long long num = -beta.q() * alpha.r();
    long long den = alpha.q() * beta.r();
    if (den == 0 || num % den != 0) return std::nullopt;
    long long n = num / den;
    if (n < 1) return std::nullopt;
    QN value = alpha * QN(n) + beta;
    if (!value.is_integer()) return std::nullopt;
    long long k = value.p();
    if (k < 1) return std::nullopt;
    return {{n, k}};
}

long long HiccupBeatty::term(long long n) const {
    if (n < 1) throw validation_error("term index must be >= 1");
    if (lifted) return n == 1 ? 0 : beatty_term(base, n - 1) + 1;
    return beatty_term(base, n) - shift;
}

HiccupBeatty hiccup_beatty(const HiccupParams& params) {
    params.validate();
    HiccupBeatty out;
    HiccupParams reduced = params;
    if (reduced.j > 0) {
        auto [r, shift] = reduce_j_to_zero(reduced);
        reduced = r;
        out.shift = shift;
    }
    if (reduced.x == 0) {
        reduced = lift_from_zero_x(reduced).base;
        out.lifted = true;
    }
    if (reduced.x > reduced.z || std::llabs(reduced.y - reduced.z) != 1)
        throw precondition_error("no Beatty form: requires x <= z and |y-z| = 1 after reduction");
    if (reduced.y == 1)
        throw precondition_error("no Beatty form: y = 1 gives a non-primitive morphism");

    MechanicalParams mp = hiccup_mechanical_params(reduced);
    out.base = beatty_from_mechanical(mp);

    // One floor-normalized formula for the original entry. Ceiling converts
    // to floor whenever the argument never hits an integer.
    BeattyParams pres = out.base;
    if (pres.rounding == Rounding::ceiling && !integer_hit(pres.slope, pres.intercept))
        pres = {pres.slope, pres.intercept + QN(1), Rounding::floor};
    if (out.lifted) {
        // a(n) = base(n-1) + 1 for n >= 2
        pres.intercept = pres.intercept - pres.slope + QN(1);
        out.valid_from = 2;
    } else if (out.shift != 0) {
        pres.intercept = pres.intercept - QN(out.shift);
    }
    out.presentation = pres;
    return out;
}

namespace {

std::string render_qn(const QN& v) {
    if (v.is_rational())
        return v.r() == 1 ? std::to_string(v.p())
                          : std::to_string(v.p()) + "/" + std::to_string(v.r());
    std::string radical = (std::llabs(v.q()) == 1 ? std::string() : std::to_string(std::llabs(v.q())) + "*") +
                          "sqrt(" + std::to_string(v.d()) + ")";
    std::string body;
    if (v.p() == 0) {
        body = (v.q() < 0 ? "-" : "") + radical;
        if (v.q() < 0) body = "(" + body + ")"; // keep the sign attached
    } else {
        body = "(" + std::to_string(v.p()) + (v.q() >= 0 ? "+" : "-") + radical + ")";
    }
    if (v.r() != 1) body += "/" + std::to_string(v.r());
    return body;
}

// abs-value renderer used after the sign was emitted separately
std::string render_qn_abs(const QN& v) {
    return render_qn(v.sign() < 0 ? -v : v);
}

struct FormulaParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit FormulaParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw format_error("expected '" + std::string(1, c) + "' in formula", -1);
    }
    bool eat_word(const char* w) {
        skip_ws();
        std::size_t n = std::string(w).size();
        if (s.compare(pos, n, w) == 0) {
            pos += n;
            return true;
        }
        return false;
    }
    long long integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw format_error("expected an integer in formula", -1);
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    // term := int | int*sqrt(int) | sqrt(int)
    QN term() {
        skip_ws();
        if (eat_word("sqrt")) {
            expect('(');
            long long d = integer();
            expect(')');
            return QN::sqrt_of(d);
        }
        long long v = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '*' && s.compare(pos, 6, "*sqrt(") == 0) {
            pos += 1;
            eat_word("sqrt");
            expect('(');
            long long d = integer();
            expect(')');
            return QN(v) * QN::sqrt_of(d);
        }
        return QN(v);
    }

    // qexpr := ( '(' sum ')' | term ) [ '/' int ]
    QN qexpr() {
        skip_ws();
        QN v;
        if (eat('(')) {
            v = term();
            while (true) {
                skip_ws();
                if (eat('+')) {
                    v += term();
                } else if (pos < s.size() && s[pos] == '-') {
                    ++pos;
                    v -= term();
                } else {
                    break;
                }
            }
            expect(')');
        } else {
            v = term();
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            v /= QN(integer());
        }
        return v;
    }
};

} // namespace

std::string render_formula(const BeattyParams& bp) {
    std::string out = bp.rounding == Rounding::floor ? "floor(" : "ceil(";
    out += render_qn(bp.slope) + "*n";
    int s = bp.intercept.sign();
    if (s != 0) {
        out += s > 0 ? " + " : " - ";
        out += render_qn_abs(bp.intercept);
    }
    out += ")";
    return out;
}

BeattyParams parse_formula(const std::string& text) {
    FormulaParser p(text);
    Rounding rounding;
    if (p.eat_word("floor")) {
        rounding = Rounding::floor;
    } else if (p.eat_word("ceil")) {
        rounding = Rounding::ceiling;
    } else {
        throw format_error("formula must start with floor( or ceil(", -1);
    }
    p.expect('(');
    QN slope = p.qexpr();
    p.expect('*');
    if (!p.eat_word("n")) throw format_error("expected the index variable n", -1);
    QN intercept(0);
    p.skip_ws();
    if (p.pos < p.s.size() && (p.s[p.pos] == '+' || p.s[p.pos] == '-')) {
        bool neg = p.s[p.pos] == '-';
        ++p.pos;
        QN mag = p.qexpr();
        intercept = neg ? -mag : mag;
    }
    p.expect(')');
    p.skip_ws();
    if (p.pos != p.s.size()) throw format_error("trailing text after formula", -1);
    return {slope, intercept, rounding};
}

} // namespace hiccup
