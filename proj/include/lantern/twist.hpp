#pragma once

#include <compare>
#include <vector>

#include "lantern/action.hpp"
#include "lantern/free_word.hpp"

namespace lantern {

// Planar surface with boundary components B_0 (outer) and B_1..B_n.
struct Surface {
    int n = 1;

    explicit Surface(int n_);
    bool operator==(const Surface&) const = default;
};

// Complexity of a twist: the maximal element of {1..max S} \ S, or -infinity
// when S is a prefix {1..max S}. Totally ordered with -infinity minimal.
class ComplexityValue {
public:
    static ComplexityValue neg_infinity() { return ComplexityValue(); }
    static ComplexityValue finite(int v);

    bool is_neg_infinity() const { return !finite_; }
    int value() const;  // throws on -infinity

    auto operator<=>(const ComplexityValue& o) const {
        if (finite_ != o.finite_)
            return finite_ <=> o.finite_;
        return value_ <=> o.value_;
    }
    bool operator==(const ComplexityValue&) const = default;

private:
    ComplexityValue() = default;
    bool finite_ = false;
    int value_ = 0;
};

ComplexityValue complexity(const std::vector<int>& enclosed);

// A curve on the surface, given by the set of inner boundary components it
// encloses and its boundary word. Canonical curves carry the increasing
// ordered product of the enclosed generators; image curves produced by
// conjugation carry the image word (display and oracle bookkeeping only; the
// action of a conjugated twist is computed from its conjugator).
struct CurveSpec {
    std::vector<int> enclosed;  // nonempty, sorted, unique
    FreeWord word;

    bool operator==(const CurveSpec&) const = default;
};

CurveSpec canonical_curve(std::vector<int> enclosed);
bool is_canonical(const CurveSpec& c);

struct Twist;
using Letters = std::vector<Twist>;

// Signed Dehn twist. Plain twists (empty conjugator) are twists along the
// canonical curve of their enclosed set; a nonempty conjugator f means the
// twist f^-1 t f along the image curve.
struct Twist {
    CurveSpec curve;
    int sign = 1;  // +1 right-handed, -1 left-handed
    Letters conjugator;

    Twist inverse() const;
    bool operator==(const Twist&) const = default;
};

Twist plain_twist(std::vector<int> enclosed, int sign);
Twist delta(int i, int sign = 1);
Twist gamma(int j, int sign = 1);

struct TwistWord {
    Surface surface{1};
    Letters letters;

    bool operator==(const TwistWord&) const = default;
};

TwistWord make_word(int n, Letters letters);
TwistWord inverse_word(const TwistWord& w);

// true iff left-handed, or a delta_i, or the canonical gamma_j
bool is_terminal(const Twist& t);
bool is_delta(const Twist& t);
bool is_gamma(const Twist& t);

// Geometric action of the right-handed twist along the canonical curve of S.
// With gaps(a) = elements of {min S .. a} missing from S, G_a their ascending
// product and W~ the ordered product of the conjugates G_a x_a G_a^-1, the
// twist maps x_a -> V_a x_a V_a^-1 and prefixes the arc a_a by V_a, where
// V_a = G_a^-1 W~ G_a; everything outside S is fixed. When S has no interior
// gaps this is the uniform rule x_a -> W x_a W^-1 with W the curve word.
// Left-handed twists act by the inverse.
MappingClassAction twist_action(int n, const CurveSpec& curve, int sign);
MappingClassAction twist_action(int n, const Twist& t);

MappingClassAction word_to_action(const TwistWord& w);

bool oracle_equal(const TwistWord& a, const TwistWord& b);

}  // namespace lantern
