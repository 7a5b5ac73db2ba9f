#pragma once

#include <string>
#include <vector>

#include "lantern/bigint.hpp"
#include "lantern/rewrite.hpp"

namespace lantern {

// Framed link recorded at linking-matrix level: diagonal entries are
// framings, off-diagonal entries linking numbers. No embedding or crossing
// data is kept; every claim consumed downstream is a quadratic-form claim.
struct FramedDiagram {
    std::vector<std::string> components;
    IntMatrix matrix;
};

FramedDiagram make_diagram(std::vector<std::string> components, IntMatrix matrix);

// The chain-form surgery description: n 0-framed unknots U_1..U_n, p_i
// (-1)-framed circles linking U_i and U_{i+1}, q_i (-1)-framed meridians
// of U_i, all with p_i, q_i >= 1.
struct ModelDiagram {
    int n = 1;
    std::vector<long> p;  // n-1 entries
    std::vector<long> q;  // n entries
};

ModelDiagram make_model(int n, std::vector<long> p, std::vector<long> q);

struct FormInvariants {
    Int det;
    long signature = 0;
    long b2_plus = 0;
    long b2_minus = 0;
    long b2_zero = 0;
};

// Surgery presentation of a positive factorization (empty tail): U_i with
// framing 0 and zero mutual linking, n_i meridians of U_i and, for each j,
// m_j circles linking U_1..U_j once, all framed -1, all linkings +1.
FramedDiagram diagram_from_factorization(const Factorization& f);

// Slides U_i over U_{i+1} (subtracting homology classes) for i = 1..n-1,
// normalizes orientations and reads off the chain form. The parameter
// correspondence p_i = n_{i+1}, q_1 = n_1, q_j = m_j is verified by exact
// matrix congruence against linking_matrix of the result.
ModelDiagram chain_slide(const FramedDiagram& d);

FramedDiagram linking_matrix(const ModelDiagram& m);

// Removes component k (0-based) with framing eps = +-1 via
// Q'_ij = Q_ij - eps Q_ik Q_jk. Preserves |det|, shifts signature by eps.
FramedDiagram blow_down(const FramedDiagram& d, std::size_t k);

enum class CancelMode { delete_meridian, zero_surgery_cancel };

// Result of removing the last 0-framed unknot. In zero-surgery mode the
// diagram stays in chain form with q'_{n-1} = q_{n-1} + p_{n-1}. In
// delete-meridian mode (q_n = 1) the cancellation splits off a
// negative-definite -(I+J) block of order p_{n-1}; the block is a lens-type
// connected summand recorded by split_lens_order = p_{n-1}, with
// |H_1| = split_lens_order * |det linking_matrix(model)|. Both updates are
// verified against the literal matrix moves.
struct CancelResult {
    ModelDiagram model;
    long split_lens_order = 1;
};

CancelResult cancel_or_delete_last(const ModelDiagram& m, CancelMode mode);

// Exact determinant, signature and inertia via rational congruence
// diagonalization; no floating point.
FormInvariants form_invariants(const FramedDiagram& d);

// True iff the lattice of the (negative or positive) definite form contains
// rank-many pairwise-orthogonal vectors of square -1 (resp. +1), decided by
// exhaustive enumeration of the finitely many vectors of that norm.
bool is_diagonalizable_over_integers(const FramedDiagram& d);

// internal congruence moves shared with the certificate machinery
namespace moves {
// cancel components a, b where Q_aa = 0 and |Q_ab| = 1; every other
// component is slid off both before the pair is deleted
FramedDiagram cancel_pair(const FramedDiagram& d, std::size_t a, std::size_t b);
// blow down every -1-framed component, repeatedly
FramedDiagram blow_down_all_negative(FramedDiagram d);
}  // namespace moves

}  // namespace lantern
