#include "lantern/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace lantern {

Measure measure_of(const TwistWord& w) {
    Measure m;
    for (const auto& t : w.letters) {
        if (t.sign > 0 && !is_terminal(t)) {
            ComplexityValue c = complexity(t.curve.enclosed);
            if (c.is_neg_infinity())
                continue;  // prefix-set letters are resolved separately
            m.emplace_back(c.value(), t.curve.enclosed.back());
        }
    }
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

std::vector<Twist> lantern_step(int n, const Twist& t) {
    if (t.sign < 0)
        throw std::invalid_argument("lantern_step needs a right-handed twist");
    if (is_terminal(t))
        throw std::invalid_argument("lantern_step needs a non-terminal twist");
    ComplexityValue c = complexity(t.curve.enclosed);
    if (c.is_neg_infinity())
        throw std::invalid_argument("lantern_step needs finite complexity");
    if (t.conjugator.empty() && !is_canonical(t.curve))
        throw std::invalid_argument("lantern_step needs a canonical curve");

    int q = c.value();
    int r = t.curve.enclosed.back();
    std::vector<int> A(t.curve.enclosed.begin(), t.curve.enclosed.end() - 1);
    std::vector<int> lobe;
    for (int a : A)
        if (a > q)
            lobe.push_back(a);

    auto with = [](std::vector<int> base, std::initializer_list<int> extra) {
        for (int v : extra)
            base.push_back(v);
        std::sort(base.begin(), base.end());
        return base;
    };

    std::vector<Twist> out;
    out.push_back(plain_twist(A, +1));
    out.push_back(delta(r));
    out.push_back(delta(q));
    out.push_back(plain_twist(with(A, {q, r}), +1));

    Twist lambda2 = plain_twist({q, r}, -1);
    Twist lambda1 = plain_twist(with(A, {q}), -1);
    if (lobe.empty()) {
        out.push_back(lambda2);
        out.push_back(lambda1);
    } else if (lobe.size() == A.size()) {
        out.push_back(lambda1);
        out.push_back(lambda2);
    } else {
        Letters f{plain_twist(with(lobe, {q}), +1)};
        out.push_back(conjugate_twist(n, lambda2, f));
        out.push_back(conjugate_twist(n, lambda1, f));
    }

    // a conjugated input conjugates the whole relation
    if (!t.conjugator.empty())
        for (auto& letter : out)
            letter = conjugate_twist(n, letter, t.conjugator);
    return out;
}

Twist conjugate_twist(int n, const Twist& t, const Letters& f) {
    if (f.empty())
        return t;
    if (t.curve.enclosed.back() > n)
        throw std::invalid_argument("twist encloses boundary beyond surface");
    if (t.curve.enclosed.size() == 1)
        return t;  // delta_i is central

    TwistWord fw = make_word(n, f);
    MappingClassAction fa = word_to_action(fw);
    if (fa.is_identity())
        return t;

    Twist out = t;
    out.conjugator.insert(out.conjugator.end(), f.begin(), f.end());
    out.curve.word = fa.apply(t.curve.word);

    // f commuting with t (nested or disjoint curves) leaves the twist alone
    if (equal(twist_action(n, out), twist_action(n, t)))
        return t;
    return out;
}

// Right-handed prefix-set letters with a non-canonical word do not arise from
// the canonical templates; the paper identifies them with gamma. We accept
// the identification only when the oracle confirms it.
static Twist resolve_prefix_letter(int n, const Twist& t) {
    Twist g = gamma(t.curve.enclosed.back());
    if (!equal(twist_action(n, t), twist_action(n, g)))
        throw std::domain_error(
            "produced prefix-set twist is not oracle-equal to the standard gamma");
    return g;
}

TwistWord reduce_right_twists(TwistWord w, RewriteTrace* trace) {
    const int n = w.surface.n;
    for (;;) {
        std::size_t idx = w.letters.size();
        for (std::size_t i = 0; i < w.letters.size(); ++i) {
            if (w.letters[i].sign > 0 && !is_terminal(w.letters[i])) {
                idx = i;
                break;
            }
        }
        if (idx == w.letters.size())
            return w;

        if (complexity(w.letters[idx].curve.enclosed).is_neg_infinity()) {
            w.letters[idx] = resolve_prefix_letter(n, w.letters[idx]);
            continue;
        }

        Measure before = measure_of(w);
        std::vector<Twist> repl = lantern_step(n, w.letters[idx]);
        w.letters.erase(w.letters.begin() + idx);
        w.letters.insert(w.letters.begin() + idx, repl.begin(), repl.end());
        Measure after = measure_of(w);
        if (!(after < before))
            throw std::logic_error("lantern step failed to decrease the measure");
        if (trace) {
            ++trace->lantern_steps;
            trace->measures.emplace_back(std::move(before), std::move(after));
        }
    }
}

Factorization factorize(const TwistWord& w, RewriteTrace* trace) {
    const int n = w.surface.n;
    TwistWord reduced = reduce_right_twists(w, trace);

    Factorization f;
    f.n = n;
    f.delta_exponents.assign(n, 0);
    f.gamma_exponents.assign(n >= 2 ? n - 1 : 0, 0);
    f.tail = make_word(n, {});

    for (const auto& t : reduced.letters) {
        if (is_delta(t)) {
            f.delta_exponents[t.curve.enclosed[0] - 1] += 1;
        } else if (is_gamma(t)) {
            f.gamma_exponents[t.curve.enclosed.back() - 2] += 1;
            for (auto& tailt : f.tail.letters)
                tailt = conjugate_twist(n, tailt, {t});
        } else {
            if (t.sign > 0)
                throw std::logic_error("reduction left a non-terminal right twist");
            f.tail.letters.push_back(t);
        }
    }

    Letters pads;
    for (int i = 1; i <= n; ++i) {
        if (f.delta_exponents[i - 1] == 0) {
            f.delta_exponents[i - 1] = 1;
            pads.push_back(delta(i, -1));
        }
    }
    for (int j = 2; j <= n; ++j) {
        if (f.gamma_exponents[j - 2] == 0) {
            f.gamma_exponents[j - 2] = 1;
            pads.push_back(gamma(j, -1));
        }
    }
    f.tail.letters.insert(f.tail.letters.begin(), pads.begin(), pads.end());
    return f;
}

TwistWord reassemble(const Factorization& f) {
    Letters letters;
    for (int i = 1; i <= f.n; ++i)
        for (int k = 0; k < f.delta_exponents[i - 1]; ++k)
            letters.push_back(delta(i));
    for (int j = 2; j <= f.n; ++j)
        for (int k = 0; k < f.gamma_exponents[j - 2]; ++k)
            letters.push_back(gamma(j));
    letters.insert(letters.end(), f.tail.letters.begin(), f.tail.letters.end());
    return make_word(f.n, std::move(letters));
}

TwistWord stabilize(const TwistWord& w, int attach_to) {
    const int n = w.surface.n;
    if (attach_to < 1 || attach_to > n)
        throw std::invalid_argument("stabilization index out of range");
    TwistWord out = make_word(n + 1, w.letters);
    out.letters.push_back(plain_twist({attach_to, n + 1}, +1));
    return out;
}

}  // namespace lantern
