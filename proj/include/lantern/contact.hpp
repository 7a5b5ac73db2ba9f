#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lantern/bigint.hpp"

namespace lantern {

// Filling data for the d3 formula: the intersection form Q of the filling X,
// the evaluation vector r determining c_1, and sigma / chi of X minus a ball.
struct FillingData {
    IntMatrix matrix;
    IntVector rot;
    Int chi_x0;
    Int sigma;
};

// r . a for the rational solution of Q a = r; throws on degenerate Q
Rat c1_squared(const IntMatrix& q, const IntVector& r);

// (c_1^2 - 3 sigma(X_0) - 2 chi(X_0)) / 4, exact
Rat d3_from_filling(const FillingData& f);

struct LegendrianKnotData {
    long tb = 0;
    long rot = 0;
};

// Contact (-1)-surgery on a Legendrian knot in S^3: a single 2-handle with
// framing tb - 1, c_1 evaluating as rot, chi(X_0) = 1. Enforces the parity
// law tb + rot odd.
FillingData legendrian_surgery_presentation(const LegendrianKnotData& k);

struct HypothesisSet {
    bool c1_spin_nontorsion = false;       // s(xi) nontorsion
    bool cplus_nonzero = false;            // c+(xi) != 0
    bool stein_filling_c1_nonzero = false; // Stein filling with c_1(X,J) != 0
    bool c1_xi_zero = false;               // c_1(xi) = 0
    std::optional<LegendrianKnotData> legendrian_surgery_s3;
    struct FillableQHS {
        Rat d3;               // Hopf invariant of the 2-plane field
        Rat correction_term;  // user-supplied d(-Y, s)
    };
    std::optional<FillableQHS> fillable_planar_qhs;
};

struct RuleVerdict {
    std::string rule;       // "R1".."R4"
    std::string statement;
    bool obstructed = false;
};

struct ObstructionReport {
    std::vector<RuleVerdict> verdicts;
    bool any_obstruction() const;
};

// Fires every applicable rule:
//  R1  c+(xi) != 0 and s(xi) nontorsion       => no planar open book
//  R2  Stein filling, c_1(X,J) != 0, c_1(xi)=0 => no planar open book
//  R3  Legendrian surgery on tb = 0 knot in S^3 => no planar open book
//  R4  fillable + planar on a QHS requires d3(xi) = d(-Y, s)
// Contradictory hypotheses (nontorsion s(xi) with c_1(xi) = 0) are rejected.
ObstructionReport obstruction_report(const HypothesisSet& h);

}  // namespace lantern
