#include <doctest.h>

#include "lantern/certificate.hpp"

using namespace lantern;

TEST_CASE("lens base case") {
    LSpaceCertificate c = lspace_certificate(make_model(1, {}, {3}));
    CHECK(c.success);
    REQUIRE(c.steps.size() == 1);
    CHECK(c.steps[0].kind == CertificateStep::Kind::lens_base);
    CHECK(c.steps[0].det_y2 == 3);
    CHECK(*c.steps[0].lens_framing == 3);
    CHECK(verify_certificate(c));
}

TEST_CASE("triad certificate for the triangle model") {
    LSpaceCertificate c = lspace_certificate(make_model(2, {1}, {1, 1}));
    CHECK(c.success);
    bool saw_triad = false;
    for (const auto& s : c.steps) {
        CHECK(s.passed);
        if (s.kind == CertificateStep::Kind::triad) {
            saw_triad = true;
            CHECK(s.det_identity_ok);
            CHECK(s.det_y2 == s.det_y1 + s.det_y3);
            CHECK(s.w3->positive_definite);
        }
    }
    CHECK(saw_triad);
    CHECK(verify_certificate(c));
}

TEST_CASE("certificate rejects bad parameters") {
    CHECK_THROWS_AS(lspace_certificate(ModelDiagram{2, {0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(lspace_certificate(ModelDiagram{2, {1}, {1}}), std::invalid_argument);
}

TEST_CASE("w3 residual is positive definite on sample models") {
    for (auto m : {make_model(2, {1}, {1, 1}), make_model(2, {2}, {2, 2}),
                   make_model(3, {2, 3}, {1, 2, 1})}) {
        W3Evidence ev = w3_check(m);
        CHECK(ev.positive_definite);
        CHECK(ev.invariants.b2_minus == 0);
        CHECK(ev.invariants.b2_zero == 0);
        CHECK(ev.recorded_b2_plus == 1);
    }
}

TEST_CASE("w3 on a corrupted diagram fails without throwing") {
    ModelDiagram m = make_model(2, {1}, {1, 1});
    FramedDiagram amb = linking_matrix(m);
    const std::size_t N = amb.matrix.size();
    amb.components.push_back("C");
    amb.components.push_back("D");
    for (auto& row : amb.matrix) {
        row.push_back(0);
        row.push_back(0);
    }
    amb.matrix.push_back(IntVector(N + 2, 0));
    amb.matrix.push_back(IntVector(N + 2, 0));
    amb.matrix[N][N] = -1;
    amb.matrix[N + 1][N + 1] = -1;
    std::size_t K = N - 1;
    amb.matrix[N][K] = amb.matrix[K][N] = 1;
    amb.matrix[N + 1][N] = amb.matrix[N][N + 1] = 1;

    // corrupt a chain circle framing
    for (std::size_t i = 0; i < amb.components.size(); ++i)
        if (amb.components[i][0] == 'c')
            amb.matrix[i][i] = -2;

    W3Evidence ev = w3_check_ambient(amb, "C", "m2.1", "U2");
    CHECK_FALSE(ev.positive_definite);
}

TEST_CASE("grid of certificates up to n = 2") {
    for (long p1 = 1; p1 <= 3; ++p1)
        for (long q1 = 1; q1 <= 3; ++q1)
            for (long q2 = 1; q2 <= 3; ++q2) {
                LSpaceCertificate c = lspace_certificate(make_model(2, {p1}, {q1, q2}));
                CHECK(c.success);
            }
}
