#include "lantern/twist.hpp"

#include <algorithm>
#include <stdexcept>

namespace lantern {

Surface::Surface(int n_) : n(n_) {
    if (n < 1)
        throw std::invalid_argument("surface needs at least one inner boundary");
}

ComplexityValue ComplexityValue::finite(int v) {
    ComplexityValue c;
    c.finite_ = true;
    c.value_ = v;
    return c;
}

int ComplexityValue::value() const {
    if (!finite_)
        throw std::logic_error("complexity is -infinity");
    return value_;
}

static void check_enclosed(const std::vector<int>& enclosed) {
    if (enclosed.empty())
        throw std::invalid_argument("enclosed set must be nonempty");
    for (std::size_t i = 0; i < enclosed.size(); ++i) {
        if (enclosed[i] < 1)
            throw std::invalid_argument("boundary indices start at 1");
        if (i && enclosed[i] <= enclosed[i - 1])
            throw std::invalid_argument("enclosed set must be strictly increasing");
    }
}

ComplexityValue complexity(const std::vector<int>& enclosed) {
    check_enclosed(enclosed);
    int top = enclosed.back();
    std::vector<bool> in(top + 1, false);
    for (int a : enclosed)
        in[a] = true;
    for (int v = top; v >= 1; --v)
        if (!in[v])
            return ComplexityValue::finite(v);
    return ComplexityValue::neg_infinity();
}

CurveSpec canonical_curve(std::vector<int> enclosed) {
    std::sort(enclosed.begin(), enclosed.end());
    check_enclosed(enclosed);
    std::vector<int> letters(enclosed.begin(), enclosed.end());
    return CurveSpec{std::move(enclosed), FreeWord(std::move(letters))};
}

bool is_canonical(const CurveSpec& c) {
    return c.word == canonical_curve(c.enclosed).word;
}

Twist Twist::inverse() const {
    Twist t = *this;
    t.sign = -t.sign;
    return t;
}

Twist plain_twist(std::vector<int> enclosed, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("twist sign must be +1 or -1");
    return Twist{canonical_curve(std::move(enclosed)), sign, {}};
}

Twist delta(int i, int sign) { return plain_twist({i}, sign); }

Twist gamma(int j, int sign) {
    std::vector<int> pre(j);
    for (int i = 0; i < j; ++i)
        pre[i] = i + 1;
    return plain_twist(std::move(pre), sign);
}

TwistWord make_word(int n, Letters letters) {
    TwistWord w{Surface(n), std::move(letters)};
    for (const auto& t : w.letters)
        if (t.curve.enclosed.back() > n)
            throw std::invalid_argument("twist encloses boundary beyond surface");
    return w;
}

TwistWord inverse_word(const TwistWord& w) {
    TwistWord out{w.surface, {}};
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(it->inverse());
    return out;
}

bool is_delta(const Twist& t) {
    return t.sign > 0 && t.curve.enclosed.size() == 1;
}

bool is_gamma(const Twist& t) {
    return t.sign > 0 && t.conjugator.empty() && t.curve.enclosed.size() > 1 &&
           complexity(t.curve.enclosed).is_neg_infinity() && is_canonical(t.curve);
}

bool is_terminal(const Twist& t) {
    if (t.sign < 0)
        return true;
    if (t.curve.enclosed.size() == 1)
        return true;  // boundary-parallel, central
    return is_gamma(t);
}

static MappingClassAction canonical_twist_action(int n, const std::vector<int>& S, int sign) {
    int lo = S.front(), hi = S.back();
    std::vector<bool> in(hi + 1, false);
    for (int a : S)
        in[a] = true;
    std::vector<int> gaps;
    for (int g = lo + 1; g < hi; ++g)
        if (!in[g])
            gaps.push_back(g);

    auto gap_prefix = [&](int a) {
        std::vector<int> letters;
        for (int g : gaps) {
            if (g >= a)
                break;
            letters.push_back(g);
        }
        return FreeWord(std::move(letters));
    };

    FreeWord core;
    for (int a : S)
        core *= FreeWord::generator(a).conjugated_by(gap_prefix(a));
    if (sign < 0)
        core = core.inverse();

    std::vector<FreeWord> loops, arcs;
    loops.reserve(n);
    arcs.reserve(n);
    for (int j = 1; j <= n; ++j) {
        if (j <= hi && j >= lo && in[j]) {
            FreeWord g = gap_prefix(j);
            FreeWord v = g.inverse() * core * g;
            loops.push_back(FreeWord::generator(j).conjugated_by(v));
            arcs.push_back(std::move(v));
        } else {
            loops.push_back(FreeWord::generator(j));
            arcs.push_back(FreeWord());
        }
    }
    return MappingClassAction(n, std::move(loops), std::move(arcs));
}

MappingClassAction twist_action(int n, const CurveSpec& curve, int sign) {
    check_enclosed(curve.enclosed);
    if (curve.enclosed.back() > n)
        throw std::invalid_argument("curve encloses boundary beyond surface");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("twist sign must be +1 or -1");
    if (!is_canonical(curve))
        throw std::invalid_argument(
            "twist_action on a bare CurveSpec requires the canonical word; "
            "non-canonical curves arise only as conjugated twists");
    return canonical_twist_action(n, curve.enclosed, sign);
}

MappingClassAction twist_action(int n, const Twist& t) {
    if (t.curve.enclosed.back() > n)
        throw std::invalid_argument("twist encloses boundary beyond surface");
    if (t.conjugator.empty() && !is_canonical(t.curve))
        throw std::invalid_argument(
            "plain twist must carry the canonical curve word");
    MappingClassAction base = canonical_twist_action(n, t.curve.enclosed, t.sign);
    if (t.conjugator.empty())
        return base;
    TwistWord f = make_word(n, t.conjugator);
    MappingClassAction fa = word_to_action(f);
    MappingClassAction fi = word_to_action(inverse_word(f));
    return compose(compose(fi, base), fa);
}

MappingClassAction word_to_action(const TwistWord& w) {
    MappingClassAction act = MappingClassAction::identity(w.surface.n);
    for (const auto& t : w.letters)
        act = compose(act, twist_action(w.surface.n, t));
    return act;
}

bool oracle_equal(const TwistWord& a, const TwistWord& b) {
    if (a.surface.n != b.surface.n)
        throw std::invalid_argument("comparing words on different surfaces");
    return equal(word_to_action(a), word_to_action(b));
}

}  // namespace lantern
