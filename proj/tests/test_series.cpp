#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quadsq/repcount.hpp"
#include "quadsq/series.hpp"

using namespace quadsq;

TEST_CASE("tp_elements_upto is sorted and complete") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        auto els = tp_elements_upto(F, 12);
        CHECK(!els.empty());
        for (size_t i = 0; i < els.size(); ++i) {
            CHECK(F.is_totally_positive(els[i]));
            CHECK(F.trace(els[i]) <= 12);
            if (i) CHECK(F.trace(els[i - 1]) <= F.trace(els[i]));
        }
        for (long a = 1; a <= 6; ++a) {
            QuadInt z(a, 0);
            if (F.trace(z) > 12) continue;
            CHECK(std::find(els.begin(), els.end(), z) != els.end());
        }
    }
}

TEST_CASE("theta counts square roots") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        FourierSeries th = theta(F, 16);
        CHECK(th.constant == 1);
        CHECK(th.at(QuadInt(1, 0)) == 2);
        CHECK(th.at(QuadInt(2, 0)) == 0);
        FourierSeries th2 = series_mul(th, th);
        FourierSeries th3 = series_mul(th2, th);
        for (const QuadInt& nu : tp_elements_upto(F, 16)) {
            CHECK(th2.at(nu) == Rat(r2_brute(F, nu)));
            CHECK(th3.at(nu) == Rat(r3_brute(F, nu)));
        }
    }
}

TEST_CASE("product is commutative and distributes") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> num(-4, 4);
    const Field& F = Field::q17();
    auto random_series = [&] {
        FourierSeries f;
        f.F = &F;
        f.T = 10;
        f.constant = num(rng);
        for (const QuadInt& nu : tp_elements_upto(F, 10))
            if (num(rng) > 1) f.set(nu, Rat(num(rng)));
        return f;
    };
    for (int i = 0; i < 5; ++i) {
        FourierSeries a = random_series(), b = random_series(), c = random_series();
        FourierSeries ab = series_mul(a, b), ba = series_mul(b, a);
        CHECK(ab.constant == ba.constant);
        for (const QuadInt& nu : tp_elements_upto(F, 10)) {
            CHECK(ab.at(nu) == ba.at(nu));
            CHECK(series_mul(a, series_add(b, c)).at(nu) ==
                  series_add(series_mul(a, b), series_mul(a, c)).at(nu));
        }
    }
}

TEST_CASE("dilate then u_op returns the original") {
    const Field& F = Field::q3();
    FourierSeries th = theta(F, 10);
    FourierSeries back = u_op(QuadInt(2, 0), dilate(2, th));
    CHECK(back.constant == th.constant);
    for (const QuadInt& nu : tp_elements_upto(F, 10))
        CHECK(back.at(nu) == th.at(nu));
}

TEST_CASE("theta squared identity") {
    CHECK(verify_theta_sq(Field::q3(), 20).pass());
    CHECK(verify_theta_sq(Field::q17(), 20).pass());
}

TEST_CASE("eisenstein constants feed the theta square combination") {
    const Field& F3 = Field::q3();
    CHECK(eisenstein(F3, EisSeries::G1Chi, 6).constant == Rat(1, 3));
    CHECK(eisenstein(F3, EisSeries::G1ChiOne, 6).constant == 0);
    CHECK(eisenstein(F3, EisSeries::G2, 6).constant == Rat(1, 6));
    const Field& F17 = Field::q17();
    CHECK(eisenstein(F17, EisSeries::G1Chi, 6).constant == 2);
    CHECK(eisenstein(F17, EisSeries::G2, 6).constant == Rat(1, 3));
    CHECK_THROWS_AS(eisenstein(F3, EisSeries::G2OneP2p, 6), InvalidInput);
}

TEST_CASE("cusp form leading coefficients") {
    const Field& F3 = Field::q3();
    FourierSeries pe = build_pefe3(F3, 20);
    CHECK(pe.constant == 0);
    CHECK(pe.at(QuadInt(2, 0)) == 1);
    CHECK(pe.at(QuadInt(4, 2)) == -1);
    CHECK(pe.at(QuadInt(6, 0)) == -3);
    FourierSeries xi = build_xi3(F3, 10);
    CHECK(xi.at(QuadInt(1, 0)) == 1);
    CHECK(xi.at(QuadInt(2, 1)) == -1);
    CHECK(xi.at(QuadInt(3, 0)) == -3);
    const Field& F17 = Field::q17();
    FourierSeries phi = build_phi17(F17, 10);
    CHECK(phi.constant == 0);
    CHECK(phi.at(QuadInt(1, 0)) == 1);
    CHECK(phi.at(QuadInt(2, 0)) == 3);
    CHECK(phi.at(QuadInt(3, -1)) == -1);
    CHECK(phi.at(QuadInt(2, 1)) == -1);
}

TEST_CASE("lift verification on sample alphas") {
    const Field& F3 = Field::q3();
    CHECK(verify_lift(F3, QuadInt(5, 0), 10).pass());
    CHECK(verify_lift(F3, QuadInt(11, 0), 10).pass());
    const Field& F17 = Field::q17();
    CHECK(verify_lift(F17, QuadInt(5, 0), 10).pass());
    CHECK(verify_lift(F17, QuadInt(3, 0), 10).pass());
}

TEST_CASE("dump format") {
    const Field& F3 = Field::q3();
    std::string d = dump(theta(F3, 4));
    CHECK(d.find("0 0 0 1") == 0);
    CHECK(d.find("2 1 0 2") != std::string::npos);
}
