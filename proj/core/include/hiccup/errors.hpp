#pragma once

#include <stdexcept>
#include <string>

namespace hiccup {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter or argument violates a stated invariant; the message names it.
struct validation_error : error { using error::error; };

// Params are degenerate (j=0, x=1, z=1 family) or force the trivial a(n)=n.
struct degeneracy_error : error { using error::error; };

// A word/sequence query reaches past what has been generated.
struct horizon_error : error { using error::error; };

// A prefix cannot come from any two-gap sequence.
struct not_hiccup_error : error { using error::error; };

struct alphabet_error : error { using error::error; };
struct prolongability_error : error { using error::error; };
struct ambiguity_error : error { using error::error; };
struct conjugation_error : error { using error::error; };

// Generic unmet precondition (lemma hypotheses, reduce-first, not-sturmian-case, ...).
struct precondition_error : error { using error::error; };

struct format_error : error {
    format_error(const std::string& what, long long line = -1)
        : error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what), line_no(line) {}
    long long line_no;
};

struct invalid_representation_error : error { using error::error; };
struct precision_error : error { using error::error; };
struct divergence_error : error { using error::error; };
struct bound_violation_error : error { using error::error; };
struct overflow_error : error { using error::error; };

} // namespace hiccup
