#include "lantern/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lantern {

FramedDiagram make_diagram(std::vector<std::string> components, IntMatrix matrix) {
    if (components.size() != matrix.size())
        throw std::invalid_argument("component count must match matrix dimension");
    if (!is_symmetric(matrix))
        throw std::invalid_argument("linking matrix must be symmetric");
    return FramedDiagram{std::move(components), std::move(matrix)};
}

ModelDiagram make_model(int n, std::vector<long> p, std::vector<long> q) {
    if (n < 1)
        throw std::invalid_argument("model needs n >= 1");
    if (p.size() != static_cast<std::size_t>(n - 1) ||
        q.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("model needs n-1 chain and n meridian parameters");
    for (long v : p)
        if (v < 1)
            throw std::invalid_argument("model parameters must satisfy p_i >= 1");
    for (long v : q)
        if (v < 1)
            throw std::invalid_argument("model parameters must satisfy q_i >= 1");
    return ModelDiagram{n, std::move(p), std::move(q)};
}

FramedDiagram diagram_from_factorization(const Factorization& f) {
    if (!f.tail.letters.empty())
        throw std::invalid_argument("surgery presentation needs a positive factorization (empty tail)");
    const int n = f.n;
    for (int v : f.delta_exponents)
        if (v < 1)
            throw std::invalid_argument("factorization exponents must be >= 1");
    for (int v : f.gamma_exponents)
        if (v < 1)
            throw std::invalid_argument("factorization exponents must be >= 1");

    std::vector<std::string> labels;
    std::vector<std::vector<int>> links;  // circle row -> linked unknots
    for (int i = 1; i <= n; ++i)
        labels.push_back("U" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= f.delta_exponents[i - 1]; ++k) {
            labels.push_back("m" + std::to_string(i) + "." + std::to_string(k));
            links.push_back({i - 1});
        }
    for (int j = 2; j <= n; ++j)
        for (int k = 1; k <= f.gamma_exponents[j - 2]; ++k) {
            labels.push_back("g" + std::to_string(j) + "." + std::to_string(k));
            std::vector<int> row(j);
            std::iota(row.begin(), row.end(), 0);
            links.push_back(std::move(row));
        }

    const std::size_t N = labels.size();
    IntMatrix M(N, IntVector(N, 0));
    for (std::size_t c = 0; c < links.size(); ++c) {
        std::size_t r = n + c;
        M[r][r] = -1;
        for (int u : links[c])
            M[r][u] = M[u][r] = 1;
    }
    return FramedDiagram{std::move(labels), std::move(M)};
}

FramedDiagram linking_matrix(const ModelDiagram& m) {
    make_model(m.n, m.p, m.q);  // validate
    std::vector<std::string> labels;
    for (int i = 1; i <= m.n; ++i)
        labels.push_back("U" + std::to_string(i));
    std::vector<std::pair<int, int>> chain_ends;  // (U_i, U_{i+1}) per chain circle
    for (int i = 1; i < m.n; ++i)
        for (long k = 1; k <= m.p[i - 1]; ++k) {
            labels.push_back("c" + std::to_string(i) + "." + std::to_string(k));
            chain_ends.emplace_back(i - 1, i);
        }
    std::vector<int> merid_of;
    for (int i = 1; i <= m.n; ++i)
        for (long k = 1; k <= m.q[i - 1]; ++k) {
            labels.push_back("m" + std::to_string(i) + "." + std::to_string(k));
            merid_of.push_back(i - 1);
        }

    const std::size_t N = labels.size();
    IntMatrix M(N, IntVector(N, 0));
    std::size_t r = m.n;
    for (auto [a, b] : chain_ends) {
        M[r][r] = -1;
        M[r][a] = M[a][r] = 1;
        M[r][b] = M[b][r] = 1;
        ++r;
    }
    for (int u : merid_of) {
        M[r][r] = -1;
        M[r][u] = M[u][r] = 1;
        ++r;
    }
    return FramedDiagram{std::move(labels), std::move(M)};
}

ModelDiagram chain_slide(const FramedDiagram& d) {
    // recover the constructed shape from the labels
    int n = 0;
    std::vector<int> nexp, mexp;
    std::vector<std::vector<std::size_t>> merid_rows, gamma_rows;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const std::string& l = d.components[i];
        if (l.size() > 1 && l[0] == 'U') {
            int idx = std::stoi(l.substr(1));
            if (idx != ++n || i + 1 != static_cast<std::size_t>(n))
                throw std::invalid_argument("diagram is not in constructed shape");
        }
    }
    if (n == 0)
        throw std::invalid_argument("diagram is not in constructed shape");
    nexp.assign(n, 0);
    mexp.assign(n >= 2 ? n - 1 : 0, 0);
    merid_rows.assign(n, {});
    gamma_rows.assign(n >= 2 ? n - 1 : 0, {});
    for (std::size_t i = n; i < d.components.size(); ++i) {
        const std::string& l = d.components[i];
        auto dot = l.find('.');
        if (dot == std::string::npos || l.size() < 4)
            throw std::invalid_argument("diagram is not in constructed shape");
        int idx = std::stoi(l.substr(1, dot - 1));
        if (l[0] == 'm' && idx >= 1 && idx <= n) {
            nexp[idx - 1] += 1;
            merid_rows[idx - 1].push_back(i);
        } else if (l[0] == 'g' && idx >= 2 && idx <= n) {
            mexp[idx - 2] += 1;
            gamma_rows[idx - 2].push_back(i);
        } else {
            throw std::invalid_argument("diagram is not in constructed shape");
        }
    }

    Factorization f;
    f.n = n;
    f.delta_exponents = nexp;
    f.gamma_exponents = mexp;
    f.tail = make_word(n, {});
    if (diagram_from_factorization(f).matrix != d.matrix)
        throw std::invalid_argument("diagram is not in constructed shape");

    const std::size_t N = d.matrix.size();

    // congruence for U_i -> U_i - U_{i+1}
    IntMatrix E(N, IntVector(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        E[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i)
        E[i][i + 1] = -1;
    IntMatrix M(N, IntVector(N, 0));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b) {
            Int acc = 0;
            for (std::size_t i = 0; i < N; ++i) {
                if (E[a][i] == 0)
                    continue;
                for (std::size_t j = 0; j < N; ++j)
                    if (E[b][j] != 0)
                        acc += E[a][i] * d.matrix[i][j] * E[b][j];
            }
            M[a][b] = acc;
        }

    // orientation normalization: alternate the unknot orientations, then
    // reorient each circle whose linkings came out negative
    std::vector<int> eps(N, 1);
    for (int i = 0; i < n; ++i)
        eps[i] = (i % 2 == 0) ? 1 : -1;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            M[a][b] *= eps[a] * eps[b];
    for (std::size_t r = n; r < N; ++r) {
        bool any = false, all_neg = true;
        for (int u = 0; u < n; ++u)
            if (M[r][u] != 0) {
                any = true;
                if (M[r][u] > 0)
                    all_neg = false;
            }
        if (any && all_neg)
            for (std::size_t k = 0; k < N; ++k) {
                M[r][k] = -M[r][k];
                M[k][r] = -M[k][r];
            }
    }

    // expected correspondence
    std::vector<long> p, q;
    for (int i = 1; i < n; ++i)
        p.push_back(nexp[i]);
    q.push_back(nexp[0]);
    for (int j = 2; j <= n; ++j)
        q.push_back(mexp[j - 2]);
    ModelDiagram model = make_model(n, std::move(p), std::move(q));

    // permute into model order: meridians of U_{i+1} are the chain circles
    // between U_i and U_{i+1}; old gamma circles are the new meridians
    std::vector<std::size_t> perm;
    for (int i = 0; i < n; ++i)
        perm.push_back(i);
    for (int i = 1; i < n; ++i)
        for (std::size_t r : merid_rows[i])
            perm.push_back(r);
    for (std::size_t r : merid_rows[0])
        perm.push_back(r);
    for (int j = 2; j <= n; ++j)
        for (std::size_t r : gamma_rows[j - 2])
            perm.push_back(r);

    FramedDiagram target = linking_matrix(model);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (M[perm[a]][perm[b]] != target.matrix[a][b])
                throw std::logic_error("chain slide did not reproduce the model matrix");
    return model;
}

FramedDiagram blow_down(const FramedDiagram& d, std::size_t k) {
    const std::size_t N = d.matrix.size();
    if (k >= N)
        throw std::invalid_argument("component index out of range");
    const Int eps = d.matrix[k][k];
    if (eps != 1 && eps != -1)
        throw std::invalid_argument("blow-down needs framing +1 or -1");

    std::vector<std::string> labels;
    IntMatrix M;
    labels.reserve(N - 1);
    M.reserve(N - 1);
    for (std::size_t i = 0; i < N; ++i) {
        if (i == k)
            continue;
        labels.push_back(d.components[i]);
        IntVector row;
        row.reserve(N - 1);
        for (std::size_t j = 0; j < N; ++j) {
            if (j == k)
                continue;
            row.push_back(d.matrix[i][j] - eps * d.matrix[i][k] * d.matrix[j][k]);
        }
        M.push_back(std::move(row));
    }
    return FramedDiagram{std::move(labels), std::move(M)};
}

namespace moves {

FramedDiagram cancel_pair(const FramedDiagram& d, std::size_t a, std::size_t b) {
    const std::size_t N = d.matrix.size();
    if (a >= N || b >= N || a == b)
        throw std::invalid_argument("bad cancellation pair");
    if (d.matrix[a][a] != 0)
        throw std::invalid_argument("cancellation needs a 0-framed component");
    const Int s = d.matrix[a][b];
    if (s != 1 && s != -1)
        throw std::invalid_argument("cancellation pair must link once");

    IntMatrix M = d.matrix;
    auto addmul = [&](std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t k = 0; k < N; ++k)
            M[i][k] += c * M[j][k];
        for (std::size_t k = 0; k < N; ++k)
            M[k][i] += c * M[k][j];
    };
    for (std::size_t j = 0; j < N; ++j) {
        if (j == a || j == b)
            continue;
        if (M[j][a] != 0)
            addmul(j, b, -M[j][a] * s);
        if (M[j][b] != 0)
            addmul(j, a, -M[j][b] * s);
    }

    std::vector<std::string> labels;
    IntMatrix out;
    for (std::size_t i = 0; i < N; ++i) {
        if (i == a || i == b)
            continue;
        labels.push_back(d.components[i]);
        IntVector row;
        for (std::size_t j = 0; j < N; ++j)
            if (j != a && j != b)
                row.push_back(M[i][j]);
        out.push_back(std::move(row));
    }
    return FramedDiagram{std::move(labels), std::move(out)};
}

FramedDiagram blow_down_all_negative(FramedDiagram d) {
    for (;;) {
        std::size_t k = d.matrix.size();
        for (std::size_t i = 0; i < d.matrix.size(); ++i)
            if (d.matrix[i][i] == -1) {
                k = i;
                break;
            }
        if (k == d.matrix.size())
            return d;
        d = blow_down(d, k);
    }
}

}  // namespace moves

static bool matches_split_model(const FramedDiagram& got, const ModelDiagram& model,
                                long split_order) {
    // expected matrix: linking_matrix(model) plus a split -(I+J) block of
    // rank split_order - 1, up to simultaneous permutation. The cancellation
    // keeps the model components in their original relative order, so it is
    // enough to locate the split rows and compare blocks.
    FramedDiagram target = linking_matrix(model);
    const std::size_t nm = target.matrix.size();
    const std::size_t ns = static_cast<std::size_t>(split_order - 1);
    if (got.matrix.size() != nm + ns)
        return false;
    std::vector<std::size_t> split_rows, model_rows;
    for (std::size_t i = 0; i < got.matrix.size(); ++i) {
        bool isolated_block = got.matrix[i][i] == -2;
        if (isolated_block)
            split_rows.push_back(i);
        else
            model_rows.push_back(i);
    }
    if (split_rows.size() != ns || model_rows.size() != nm)
        return false;
    for (std::size_t i = 0; i < nm; ++i)
        for (std::size_t j = 0; j < nm; ++j)
            if (got.matrix[model_rows[i]][model_rows[j]] != target.matrix[i][j])
                return false;
    for (std::size_t i : split_rows)
        for (std::size_t j : split_rows)
            if (got.matrix[i][j] != (i == j ? Int(-2) : Int(-1)))
                return false;
    for (std::size_t i : split_rows)
        for (std::size_t j : model_rows)
            if (got.matrix[i][j] != 0)
                return false;
    return true;
}

CancelResult cancel_or_delete_last(const ModelDiagram& m, CancelMode mode) {
    make_model(m.n, m.p, m.q);  // validate
    if (m.n < 2)
        throw std::invalid_argument("cancellation needs n >= 2");

    FramedDiagram d = linking_matrix(m);
    const std::size_t last_meridian = d.matrix.size() - 1;

    if (mode == CancelMode::zero_surgery_cancel) {
        // 0-surgery on the last meridian K, then cancel (K, U_n); leftover
        // meridians of U_n become isolated -1 unknots and blow down
        d.matrix[last_meridian][last_meridian] = 0;
        FramedDiagram c = moves::cancel_pair(d, last_meridian, m.n - 1);
        for (;;) {
            std::size_t iso = c.matrix.size();
            for (std::size_t i = 0; i < c.matrix.size(); ++i) {
                if (c.matrix[i][i] != -1)
                    continue;
                bool alone = true;
                for (std::size_t j = 0; j < c.matrix.size(); ++j)
                    if (j != i && c.matrix[i][j] != 0)
                        alone = false;
                if (alone) {
                    iso = i;
                    break;
                }
            }
            if (iso == c.matrix.size())
                break;
            c = blow_down(c, iso);
        }
        std::vector<long> p2(m.p.begin(), m.p.end() - 1);
        std::vector<long> q2(m.q.begin(), m.q.end() - 1);
        q2.back() += m.p.back();
        ModelDiagram out = make_model(m.n - 1, std::move(p2), std::move(q2));
        if (!matches_split_model(c, out, 1))
            throw std::logic_error("zero-surgery cancellation did not reach the expected model");
        return CancelResult{out, 1};
    }

    // delete-meridian mode: q_n = 1, remove K, cancel U_n against one of the
    // p_{n-1} chain circles; the remaining chain circles band into a split
    // negative-definite -(I+J) block
    if (m.q.back() != 1)
        throw std::invalid_argument("delete-meridian mode needs q_n = 1");
    std::vector<std::string> labels(d.components.begin(), d.components.end() - 1);
    IntMatrix M;
    for (std::size_t i = 0; i + 1 < d.matrix.size(); ++i)
        M.push_back(IntVector(d.matrix[i].begin(), d.matrix[i].end() - 1));
    FramedDiagram del{std::move(labels), std::move(M)};

    std::string chain_label = "c" + std::to_string(m.n - 1) + "." + std::to_string(m.p.back());
    std::size_t chain = std::find(del.components.begin(), del.components.end(), chain_label) -
                        del.components.begin();
    FramedDiagram c = moves::cancel_pair(del, m.n - 1, chain);

    std::vector<long> p2(m.p.begin(), m.p.end() - 1);
    std::vector<long> q2(m.q.begin(), m.q.end() - 1);
    ModelDiagram out = make_model(m.n - 1, std::move(p2), std::move(q2));
    if (!matches_split_model(c, out, m.p.back()))
        throw std::logic_error("meridian cancellation did not reach the expected split model");
    return CancelResult{out, m.p.back()};
}

FormInvariants form_invariants(const FramedDiagram& d) {
    const std::size_t N = d.matrix.size();
    FormInvariants inv;
    inv.det = exact_det(d.matrix);

    // rational congruence diagonalization
    std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            A[i][j] = Rat(d.matrix[i][j]);

    std::vector<bool> done(N, false);
    for (;;) {
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < N; ++i)
            if (!done[i])
                live.push_back(i);
        if (live.empty())
            break;
        std::size_t piv = N;
        for (std::size_t i : live)
            if (A[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv == N) {
            std::size_t oi = N, oj = N;
            for (std::size_t a = 0; a < live.size() && oi == N; ++a)
                for (std::size_t b = a + 1; b < live.size(); ++b)
                    if (A[live[a]][live[b]] != 0) {
                        oi = live[a];
                        oj = live[b];
                        break;
                    }
            if (oi == N) {
                inv.b2_zero += static_cast<long>(live.size());
                break;
            }
            for (std::size_t k = 0; k < N; ++k)
                A[oi][k] += A[oj][k];
            for (std::size_t k = 0; k < N; ++k)
                A[k][oi] += A[k][oj];
            piv = oi;
        }
        Rat a = A[piv][piv];
        if (a > 0)
            ++inv.b2_plus;
        else
            ++inv.b2_minus;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == piv || done[r] || A[r][piv] == 0)
                continue;
            Rat f = A[r][piv] / a;
            for (std::size_t k = 0; k < N; ++k)
                A[r][k] -= f * A[piv][k];
            for (std::size_t k = 0; k < N; ++k)
                A[k][r] -= f * A[k][piv];
        }
        done[piv] = true;
    }
    inv.signature = inv.b2_plus - inv.b2_minus;
    return inv;
}

namespace {

// enumeration of all integer vectors with v^T P v = 1 for positive definite
// P, via the rational LDL split v^T P v = sum_k d_k (v_k + sum_{j>k} l_kj v_j)^2
struct NormOneEnumerator {
    std::size_t n;
    std::vector<std::vector<Rat>> l;
    std::vector<Rat> diag;
    std::vector<Int> current;
    std::vector<IntVector> found;

    explicit NormOneEnumerator(const IntMatrix& P) : n(P.size()) {
        std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                A[i][j] = Rat(P[i][j]);
        l.assign(n, std::vector<Rat>(n, Rat(0)));
        diag.assign(n, Rat(0));
        for (std::size_t k = 0; k < n; ++k) {
            diag[k] = A[k][k];
            if (diag[k] <= 0)
                throw std::invalid_argument("form is not definite");
            for (std::size_t j = k + 1; j < n; ++j)
                l[k][j] = A[k][j] / diag[k];
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    A[i][j] -= A[i][k] * A[k][j] / diag[k];
        }
        current.assign(n, 0);
    }

    void run() { recurse(n, Rat(1)); }

    void recurse(std::size_t k, const Rat& budget) {
        if (k == 0) {
            if (budget == 0) {
                bool nonzero = false;
                for (const Int& v : current)
                    if (v != 0)
                        nonzero = true;
                if (nonzero)
                    found.push_back(current);
            }
            // budget > 0 at depth 0 means norm < 1, not a norm-one vector
            return;
        }
        std::size_t i = k - 1;
        Rat c(0);
        for (std::size_t j = k; j < n; ++j)
            c += l[i][j] * Rat(current[j]);
        // d_i (v + c)^2 <= budget
        Rat t = budget / diag[i];
        // safe integer superset of [-c - sqrt(t), -c + sqrt(t)]
        Int tc = t.get_num() / t.get_den() + 1;
        Int b = sqrt(tc) + 1;
        Int center = -(c.get_num() / c.get_den());
        for (Int v = center - b - 1; v <= center + b + 1; ++v) {
            Rat term = Rat(v) + c;
            Rat used = diag[i] * term * term;
            if (used > budget)
                continue;
            current[i] = v;
            recurse(i, budget - used);
        }
        current[i] = 0;
    }
};

}  // namespace

bool is_diagonalizable_over_integers(const FramedDiagram& d) {
    const std::size_t N = d.matrix.size();
    FormInvariants inv = form_invariants(d);
    if (inv.b2_zero != 0 ||
        (inv.b2_plus != 0 && inv.b2_minus != 0))
        throw std::invalid_argument("diagonalizability test needs a definite form");
    if (N == 0)
        return true;

    IntMatrix P = d.matrix;
    if (inv.b2_minus > 0)
        for (auto& row : P)
            for (auto& v : row)
                v = -v;

    NormOneEnumerator en(P);
    en.run();

    // keep one representative per +-v pair
    std::vector<IntVector> roots;
    for (const auto& v : en.found) {
        bool neg_seen = false;
        for (const auto& u : roots) {
            bool is_neg = true;
            for (std::size_t i = 0; i < N; ++i)
                if (u[i] != -v[i])
                    is_neg = false;
            if (is_neg)
                neg_seen = true;
        }
        if (!neg_seen)
            roots.push_back(v);
    }
    if (roots.size() < N)
        return false;

    auto pairing = [&](const IntVector& a, const IntVector& b) {
        Int s = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                s += a[i] * P[i][j] * b[j];
        return s;
    };

    // search a pairwise-orthogonal subset of size N
    std::vector<std::size_t> chosen;
    std::vector<std::vector<bool>> orth(roots.size(), std::vector<bool>(roots.size()));
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j)
            orth[i][j] = (i == j) || pairing(roots[i], roots[j]) == 0;

    std::function<bool(std::size_t)> pick = [&](std::size_t start) -> bool {
        if (chosen.size() == N)
            return true;
        for (std::size_t i = start; i < roots.size(); ++i) {
            bool ok = true;
            for (std::size_t c : chosen)
                if (!orth[c][i])
                    ok = false;
            if (!ok)
                continue;
            chosen.push_back(i);
            if (pick(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0);
}

}  // namespace lantern
