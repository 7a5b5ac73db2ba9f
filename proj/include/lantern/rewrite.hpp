#pragma once

#include <utility>
#include <vector>

#include "lantern/twist.hpp"

namespace lantern {

// Multiset measure of a word: the (complexity, max index) pairs of its
// non-terminal right-handed letters, sorted descending. Lexicographic
// comparison of these sorted sequences is the Dershowitz-Manna order, and
// every lantern step strictly decreases it.
using Measure = std::vector<std::pair<int, int>>;

Measure measure_of(const TwistWord& w);

struct RewriteTrace {
    long lantern_steps = 0;
    std::vector<std::pair<Measure, Measure>> measures;  // (before, after)
};

// One lantern rewrite of a right-handed non-terminal twist t along the
// canonical curve of S: with r = max S, A = S \ {r}, q = c(S) and
// lobe = {a in A : a > q},
//   t  ~  t_beta . delta_r . delta_q . t_lambda0 . t_lambda2^-1 . t_lambda1^-1
// where beta = canonical(A), lambda0 = canonical(A+{q,r}),
// lambda1 = canonical(A+{q}), lambda2 = canonical({q,r}). When the lobe is
// all of A the two left-handed letters appear in the opposite order; when it
// is a proper nonempty subset both are conjugated by the twist along
// canonical({q} + lobe). Oracle-verified for every non-terminal subset.
std::vector<Twist> lantern_step(int n, const Twist& t);

// f^-1 t f as a single twist: boundary-parallel twists are central and come
// back unchanged; otherwise the conjugator is appended (and dropped again if
// f turns out to commute with t) and the curve word is replaced by its image
// under the action of f.
Twist conjugate_twist(int n, const Twist& t, const Letters& f);

// Rewrites the leftmost non-terminal right-handed letter until none remain.
// Asserts the measure decrease at every step.
TwistWord reduce_right_twists(TwistWord w, RewriteTrace* trace = nullptr);

struct Factorization {
    int n = 1;
    std::vector<int> delta_exponents;  // index i-1 holds n_i, all >= 1
    std::vector<int> gamma_exponents;  // index j-2 holds m_j (j = 2..n), all >= 1
    TwistWord tail;                    // left-handed letters only
};

Factorization factorize(const TwistWord& w, RewriteTrace* trace = nullptr);

// delta_1^{n_1} .. delta_n^{n_n} gamma_2^{m_2} .. gamma_n^{m_n} . tail
TwistWord reassemble(const Factorization& f);

// Giroux stabilization: the same word on Surface(n+1) followed by a
// right-handed twist along the canonical curve through the new handle,
// enclosing {attach_to, n+1}.
TwistWord stabilize(const TwistWord& w, int attach_to);

}  // namespace lantern
