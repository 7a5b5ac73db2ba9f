#include "lantern/contact.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace lantern {

Rat c1_squared(const IntMatrix& q, const IntVector& r) {
    const std::size_t n = q.size();
    if (!is_symmetric(q))
        throw std::invalid_argument("intersection form must be symmetric");
    if (r.size() != n)
        throw std::invalid_argument("rot vector length must match the form rank");

    // solve Q a = r over the rationals
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = Rat(q[i][j]);
        A[i][n] = Rat(r[i]);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && A[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw std::invalid_argument("degenerate intersection form: det Q = 0");
        std::swap(A[c], A[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || A[i][c] == 0)
                continue;
            Rat f = A[i][c] / A[c][c];
            for (std::size_t j = c; j <= n; ++j)
                A[i][j] -= f * A[c][j];
        }
    }
    Rat out(0);
    for (std::size_t i = 0; i < n; ++i)
        out += Rat(r[i]) * (A[i][n] / A[i][i]);
    out.canonicalize();
    return out;
}

Rat d3_from_filling(const FillingData& f) {
    Rat c2 = c1_squared(f.matrix, f.rot);
    Rat out = (c2 - Rat(3) * Rat(f.sigma) - Rat(2) * Rat(f.chi_x0)) / Rat(4);
    out.canonicalize();
    return out;
}

FillingData legendrian_surgery_presentation(const LegendrianKnotData& k) {
    if (((k.tb + k.rot) % 2 + 2) % 2 != 1)
        throw std::invalid_argument("tb + rot must be odd");
    FillingData f;
    f.matrix = IntMatrix{{Int(k.tb - 1)}};
    f.rot = IntVector{Int(k.rot)};
    f.chi_x0 = 1;
    long fr = k.tb - 1;
    f.sigma = fr > 0 ? 1 : fr < 0 ? -1 : 0;
    return f;
}

bool ObstructionReport::any_obstruction() const {
    for (const auto& v : verdicts)
        if (v.obstructed)
            return true;
    return false;
}

ObstructionReport obstruction_report(const HypothesisSet& h) {
    if (h.c1_spin_nontorsion && h.c1_xi_zero)
        throw std::invalid_argument(
            "contradictory hypotheses: c_1(xi) = 0 is torsion, s(xi) cannot be nontorsion");
    if (h.legendrian_surgery_s3) {
        long tb = h.legendrian_surgery_s3->tb;
        long rot = h.legendrian_surgery_s3->rot;
        if (((tb + rot) % 2 + 2) % 2 != 1)
            throw std::invalid_argument("tb + rot must be odd");
    }

    ObstructionReport rep;
    if (h.cplus_nonzero && h.c1_spin_nontorsion)
        rep.verdicts.push_back({"R1",
                                "c+(xi) != 0 with nontorsion s(xi): xi does not support "
                                "a planar open book decomposition",
                                true});
    if (h.stein_filling_c1_nonzero && h.c1_xi_zero)
        rep.verdicts.push_back({"R2",
                                "Stein filling with c_1(X,J) != 0 and c_1(xi) = 0: xi is "
                                "not supported by a planar open book decomposition",
                                true});
    if (h.legendrian_surgery_s3 && h.legendrian_surgery_s3->tb == 0)
        rep.verdicts.push_back({"R3",
                                "Legendrian surgery on a tb = 0 knot in S^3: xi_L is not "
                                "supported by a planar open book decomposition",
                                true});
    if (h.fillable_planar_qhs) {
        Rat d3 = h.fillable_planar_qhs->d3;
        Rat d = h.fillable_planar_qhs->correction_term;
        if (d3 == d)
            rep.verdicts.push_back({"R4",
                                    "d3(xi) coincides with the correction term d(-Y,s): "
                                    "constraint satisfied",
                                    false});
        else
            rep.verdicts.push_back({"R4",
                                    "d3(xi) = " + to_string(d3) + " differs from d(-Y,s) = " +
                                        to_string(d) +
                                        ": xi cannot be both fillable and supported by a "
                                        "planar open book decomposition",
                                    true});
    }
    return rep;
}

}  // namespace lantern
