#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "quadsq/tables.hpp"

using namespace quadsq;

TEST_CASE("first enumerated alphas") {
    const Field& F3 = Field::q3();
    auto a3 = enumerate_alphas(F3, 5);
    REQUIRE(a3.size() == 5);
    CHECK(a3[0] == QuadInt(1, 0));
    CHECK(a3[1] == QuadInt(2, 1));
    CHECK(a3[2] == QuadInt(3, 1));
    CHECK(a3[3] == QuadInt(4, 1));
    CHECK(a3[4] == QuadInt(5, 0));
    const Field& F17 = Field::q17();
    auto a17 = enumerate_alphas(F17, 5);
    REQUIRE(a17.size() == 5);
    CHECK(a17[0] == QuadInt(1, 0));
    CHECK(a17[1] == QuadInt(2, 0));
    CHECK(a17[2] == QuadInt(3, 0));
    CHECK(a17[3] == QuadInt(5, 0));
    CHECK(a17[4] == QuadInt(5, 1));
}

TEST_CASE("kept alphas are pairwise inequivalent") {
    for (const Field* Fp : {&Field::q3(), &Field::q17()}) {
        const Field& F = *Fp;
        auto as = enumerate_alphas(F, 40);
        QuadInt u = F.mul(F.eps0(), F.eps0());
        auto related = [&](QuadInt a, QuadInt b) {
            for (const QuadInt& c : {b, F.conj(b)}) {
                QuadInt s = c;
                for (int k = 0; k <= 10; ++k) {
                    if (s == a) return true;
                    s = F.mul(s, u);
                }
                s = F.mul(a, u);
                for (int k = 0; k <= 10; ++k) {
                    if (s == c) return true;
                    s = F.mul(s, u);
                }
            }
            return false;
        };
        for (size_t i = 0; i < as.size(); ++i)
            for (size_t j = i + 1; j < as.size(); ++j)
                CHECK_FALSE(related(as[i], as[j]));
    }
}

TEST_CASE("discriminant markers") {
    const Field& F3 = Field::q3();
    CHECK(disc_marker(F3, QuadInt(1, 0)).first == 1);
    CHECK(disc_marker(F3, QuadInt(2, 1)).first == 4);
    CHECK(disc_marker(F3, QuadInt(35, 17)).first == 4);
    const Field& F17 = Field::q17();
    CHECK(disc_marker(F17, QuadInt(1, 0)) == std::pair<int, int>(2, 2));
    CHECK(disc_marker(F17, QuadInt(3, 0)) == std::pair<int, int>(0, 0));
    CHECK(disc_marker(F17, QuadInt(6, 0)) == std::pair<int, int>(2, 2));
}

TEST_CASE("golden rows reproduce") {
    const Field& F3 = Field::q3();
    auto rows = generate_table(F3, 30);
    auto golden = load_golden(F3, "data/table_q3.csv");
    REQUIRE(golden.size() == 220);
    CHECK(golden[0] == TableRow{1, 0, 1, 0, 1});
    for (size_t i = 0; i < rows.size(); ++i) CHECK(rows[i] == golden[i]);
    bool found = false;
    for (const TableRow& r : golden)
        if (r.a == 35 && r.b == 17) {
            found = true;
            CHECK(r.e == 4);
            CHECK(r.h == 18);
        }
    CHECK(found);
}

TEST_CASE("golden q17 spot row") {
    auto golden = load_golden(Field::q17(), "data/table_q17.csv");
    REQUIRE(golden.size() == 220);
    bool found = false;
    for (const TableRow& r : golden)
        if (r.a == 38 && r.b == 23) {
            found = true;
            CHECK(r.e == 2);
            CHECK(r.ep == 2);
            CHECK(r.h == 12);
        }
    CHECK(found);
}

TEST_CASE("checksum is enforced") {
    std::ifstream in("data/table_q3.csv");
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    content.push_back('x');
    std::string tmp = "/tmp/quadsq_corrupt.csv";
    std::ofstream(tmp) << content;
    CHECK_THROWS_AS(load_golden(Field::q3(), tmp), InvalidInput);
}

TEST_CASE("diff reports missing and mismatched rows") {
    auto golden = load_golden(Field::q3(), "data/table_q3.csv");
    auto rows = golden;
    rows[3].h += 1;
    rows.pop_back();
    auto d = diff_table(golden, rows);
    CHECK(d.missing.size() == 1);
    CHECK(d.mismatched.size() == 1);
    CHECK(d.extra.empty());
    CHECK(!d.clean());
    CHECK(diff_table(golden, golden).clean());
}

TEST_CASE("csv and json render") {
    const Field& F3 = Field::q3();
    auto rows = generate_table(F3, 2);
    std::string csv = table_csv(F3, rows);
    CHECK(csv.find("a,b,m,h\n1,0,1,1\n") == 0);
    std::string js = table_json(F3, rows);
    CHECK(js.find("\"h\": 1") != std::string::npos);
}
