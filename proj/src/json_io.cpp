#include "lantern/json_io.hpp"

#include <stdexcept>

namespace lantern {

json int_to_json(const Int& v) {
    if (v.fits_slong_p())
        return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer())
        return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string())
        return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json rat_to_json(const Rat& v) { return json(to_string(v)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

json to_json(const FreeWord& w) { return json(w.letters()); }

json to_json(const Twist& t) {
    json j{{"sign", t.sign},
           {"enclosed", t.curve.enclosed},
           {"word", to_json(t.curve.word)}};
    if (!t.conjugator.empty()) {
        json conj = json::array();
        for (const auto& c : t.conjugator)
            conj.push_back(to_json(c));
        j["conjugator"] = std::move(conj);
    }
    return j;
}

json to_json(const TwistWord& w) {
    json letters = json::array();
    for (const auto& t : w.letters)
        letters.push_back(to_json(t));
    return json{{"n", w.surface.n}, {"letters", std::move(letters)}};
}

json to_json(const Factorization& f) {
    json deltas = json::object(), gammas = json::object();
    for (int i = 1; i <= f.n; ++i)
        deltas[std::to_string(i)] = f.delta_exponents[i - 1];
    for (int j = 2; j <= f.n; ++j)
        gammas[std::to_string(j)] = f.gamma_exponents[j - 2];
    json tail = json::array();
    for (const auto& t : f.tail.letters)
        tail.push_back(to_json(t));
    return json{{"n", f.n},
                {"delta_exponents", std::move(deltas)},
                {"gamma_exponents", std::move(gammas)},
                {"tail", std::move(tail)}};
}

json to_json(const FramedDiagram& d) {
    json rows = json::array();
    for (const auto& row : d.matrix) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(int_to_json(v));
        rows.push_back(std::move(r));
    }
    return json{{"components", d.components}, {"matrix", std::move(rows)}};
}

json to_json(const ModelDiagram& m) {
    return json{{"n", m.n}, {"p", m.p}, {"q", m.q}};
}

json to_json(const FormInvariants& inv) {
    return json{{"det", int_to_json(inv.det)},
                {"signature", inv.signature},
                {"b2_plus", inv.b2_plus},
                {"b2_minus", inv.b2_minus},
                {"b2_zero", inv.b2_zero}};
}

json to_json(const W3Evidence& ev) {
    return json{{"residual", to_json(ev.residual)},
                {"invariants", to_json(ev.invariants)},
                {"positive_definite", ev.positive_definite},
                {"recorded_b2_plus", ev.recorded_b2_plus}};
}

json to_json(const LSpaceCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps) {
        json step{{"y2", to_json(s.y2)}, {"det_y2", int_to_json(s.det_y2)}};
        if (s.kind == CertificateStep::Kind::lens_base) {
            step["kind"] = "lens";
            step["lens_framing"] = *s.lens_framing;
        } else {
            step["kind"] = "triad";
            step["y1"] = to_json(*s.y1_model);
            step["y1_split_order"] = s.y1_split_order;
            step["y3"] = to_json(*s.y3_model);
            step["det_y1"] = int_to_json(s.det_y1);
            step["det_y3"] = int_to_json(s.det_y3);
            step["det_identity_ok"] = s.det_identity_ok;
            step["w3"] = to_json(*s.w3);
        }
        step["passed"] = s.passed;
        steps.push_back(std::move(step));
    }
    return json{{"verdict", cert.success ? "success" : "failure"},
                {"steps", std::move(steps)}};
}

json to_json(const MultiGraph& g) {
    json edges = json::array();
    for (const auto& [key, mult] : g.edges)
        edges.push_back(json{{"u", key.first}, {"v", key.second}, {"multiplicity", mult}});
    return json{{"vertices", g.vertex_count}, {"edges", std::move(edges)}};
}

json to_json(const ConsistencyReport& rep) {
    return json{{"det_linking", int_to_json(rep.det_linking)},
                {"tree_count", int_to_json(rep.tree_count)},
                {"det_goeritz", int_to_json(rep.det_goeritz)},
                {"pass", rep.pass}};
}

json to_json(const ObstructionReport& rep) {
    json verdicts = json::array();
    for (const auto& v : rep.verdicts)
        verdicts.push_back(json{{"rule", v.rule},
                                {"statement", v.statement},
                                {"obstructed", v.obstructed}});
    return json{{"verdicts", std::move(verdicts)},
                {"obstructed", rep.any_obstruction()}};
}

IntMatrix matrix_from_json(const json& j) {
    const json& rows = j.is_object() ? j.at("matrix") : j;
    if (!rows.is_array())
        throw std::invalid_argument("matrix must be an array of rows");
    IntMatrix m;
    for (const auto& row : rows) {
        IntVector r;
        for (const auto& v : row)
            r.push_back(int_from_json(v));
        m.push_back(std::move(r));
    }
    for (const auto& r : m)
        if (r.size() != m.size())
            throw std::invalid_argument("matrix must be square");
    return m;
}

FramedDiagram diagram_from_json(const json& j) {
    IntMatrix m = matrix_from_json(j);
    std::vector<std::string> components;
    if (j.is_object() && j.contains("components"))
        components = j.at("components").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < m.size(); ++i)
            components.push_back("K" + std::to_string(i + 1));
    return make_diagram(std::move(components), std::move(m));
}

ModelDiagram model_from_json(const json& j) {
    return make_model(j.at("n").get<int>(), j.at("p").get<std::vector<long>>(),
                      j.at("q").get<std::vector<long>>());
}

HypothesisSet hypotheses_from_json(const json& j) {
    HypothesisSet h;
    const json& r = j.contains("rules") ? j.at("rules") : j;
    h.c1_spin_nontorsion = r.value("c1_spin_nontorsion", false);
    h.cplus_nonzero = r.value("cplus_nonzero", false);
    h.stein_filling_c1_nonzero = r.value("stein_filling_c1_nonzero", false);
    h.c1_xi_zero = r.value("c1_xi_zero", false);
    if (r.contains("legendrian_surgery_s3")) {
        const json& k = r.at("legendrian_surgery_s3");
        h.legendrian_surgery_s3 =
            LegendrianKnotData{k.at("tb").get<long>(), k.at("rot").get<long>()};
    }
    if (r.contains("fillable_planar_qhs")) {
        const json& k = r.at("fillable_planar_qhs");
        h.fillable_planar_qhs = HypothesisSet::FillableQHS{
            rat_from_json(k.at("d3")), rat_from_json(k.at("correction_term"))};
    }
    return h;
}

}  // namespace lantern
