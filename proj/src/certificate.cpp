#include "lantern/certificate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lantern {

namespace {

Int abs_det(const ModelDiagram& m) {
    Int d = exact_det(linking_matrix(m).matrix);
    return d >= 0 ? d : Int(-d);
}

FramedDiagram ambient_with_triad_circles(const ModelDiagram& y2) {
    FramedDiagram d = linking_matrix(y2);
    const std::size_t N = d.matrix.size();
    const std::size_t K = N - 1;  // last meridian of U_n
    d.components.push_back("C");
    d.components.push_back("D");
    for (auto& row : d.matrix) {
        row.push_back(0);
        row.push_back(0);
    }
    d.matrix.push_back(IntVector(N + 2, 0));
    d.matrix.push_back(IntVector(N + 2, 0));
    d.matrix[N][N] = -1;      // C
    d.matrix[N + 1][N + 1] = -1;  // D
    d.matrix[N][K] = d.matrix[K][N] = 1;
    d.matrix[N + 1][N] = d.matrix[N][N + 1] = 1;
    return d;
}

}  // namespace

W3Evidence w3_check_ambient(FramedDiagram ambient, const std::string& c_label,
                            const std::string& k_label, const std::string& un_label) {
    auto index_of = [&](const std::string& l) {
        auto it = std::find(ambient.components.begin(), ambient.components.end(), l);
        if (it == ambient.components.end())
            throw std::invalid_argument("component label not found: " + l);
        return static_cast<std::size_t>(it - ambient.components.begin());
    };

    W3Evidence ev;
    FramedDiagram d = blow_down(ambient, index_of(c_label));

    auto find = [&](const std::string& l) {
        auto it = std::find(d.components.begin(), d.components.end(), l);
        if (it == d.components.end())
            throw std::invalid_argument("component label not found: " + l);
        return static_cast<std::size_t>(it - d.components.begin());
    };
    std::size_t k = find(k_label), un = find(un_label);
    if (d.matrix[k][k] != 0) {
        // the moves no longer apply; report failure with what we have
        ev.residual = d;
        ev.invariants = form_invariants(d);
        ev.positive_definite = false;
        return ev;
    }
    d = moves::cancel_pair(d, k, un);
    d = moves::blow_down_all_negative(std::move(d));

    ev.residual = d;
    ev.invariants = form_invariants(d);
    ev.positive_definite = ev.invariants.b2_minus == 0 && ev.invariants.b2_zero == 0;
    return ev;
}

W3Evidence w3_check(const ModelDiagram& y2) {
    make_model(y2.n, y2.p, y2.q);
    std::string k_label = "m" + std::to_string(y2.n) + "." + std::to_string(y2.q.back());
    std::string un_label = "U" + std::to_string(y2.n);
    return w3_check_ambient(ambient_with_triad_circles(y2), "C", k_label, un_label);
}

namespace {

struct CertBuilder {
    std::vector<CertificateStep> steps;
    std::map<std::string, bool> memo;
    bool all_ok = true;

    static std::string key_of(const ModelDiagram& m) {
        std::string k = std::to_string(m.n) + ";";
        for (long v : m.p)
            k += std::to_string(v) + ",";
        k += ";";
        for (long v : m.q)
            k += std::to_string(v) + ",";
        return k;
    }

    void certify(const ModelDiagram& m) {
        std::string key = key_of(m);
        auto it = memo.find(key);
        if (it != memo.end())
            return;
        memo[key] = true;

        if (m.n == 1) {
            CertificateStep step;
            step.kind = CertificateStep::Kind::lens_base;
            step.y2 = m;
            step.det_y2 = abs_det(m);
            FramedDiagram d = moves::blow_down_all_negative(linking_matrix(m));
            bool ok = d.matrix.size() == 1 && d.matrix[0][0] == m.q[0] &&
                      step.det_y2 == m.q[0];
            step.lens_framing = m.q[0];
            step.passed = ok;
            all_ok = all_ok && ok;
            steps.push_back(std::move(step));
            return;
        }

        CertificateStep step;
        step.kind = CertificateStep::Kind::triad;
        step.y2 = m;
        step.det_y2 = abs_det(m);

        if (m.q.back() >= 2) {
            ModelDiagram y1 = m;
            y1.q.back() -= 1;
            step.y1_model = y1;
            step.y1_split_order = 1;
        } else {
            CancelResult c = cancel_or_delete_last(m, CancelMode::delete_meridian);
            step.y1_model = c.model;
            step.y1_split_order = c.split_lens_order;
        }
        CancelResult z = cancel_or_delete_last(m, CancelMode::zero_surgery_cancel);
        step.y3_model = z.model;

        certify(*step.y1_model);
        certify(*step.y3_model);

        step.det_y1 = Int(step.y1_split_order) * abs_det(*step.y1_model);
        step.det_y3 = abs_det(*step.y3_model);
        step.det_identity_ok = (step.det_y2 == step.det_y1 + step.det_y3);
        step.w3 = w3_check(m);
        step.passed = step.det_identity_ok && step.w3->positive_definite;
        all_ok = all_ok && step.passed;
        steps.push_back(std::move(step));
    }
};

}  // namespace

LSpaceCertificate lspace_certificate(const ModelDiagram& m) {
    make_model(m.n, m.p, m.q);  // parameter range check throws
    CertBuilder b;
    b.certify(m);
    return LSpaceCertificate{b.all_ok, std::move(b.steps)};
}

bool verify_certificate(const LSpaceCertificate& cert) {
    if (!cert.success)
        return false;
    for (const auto& step : cert.steps) {
        if (!step.passed)
            return false;
        if (abs_det(step.y2) != step.det_y2)
            return false;
        if (step.kind == CertificateStep::Kind::lens_base) {
            if (!step.lens_framing || step.det_y2 != *step.lens_framing)
                return false;
            continue;
        }
        if (!step.y1_model || !step.y3_model || !step.w3)
            return false;
        Int d1 = Int(step.y1_split_order) * abs_det(*step.y1_model);
        Int d3 = abs_det(*step.y3_model);
        if (d1 != step.det_y1 || d3 != step.det_y3)
            return false;
        if (step.det_y2 != d1 + d3)
            return false;
        W3Evidence w = w3_check(step.y2);
        if (!w.positive_definite)
            return false;
        FormInvariants inv = form_invariants(w.residual);
        if (inv.b2_minus != 0 || inv.b2_zero != 0)
            return false;
    }
    return true;
}

}  // namespace lantern
