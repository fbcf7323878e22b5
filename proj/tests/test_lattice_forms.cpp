#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thetalat/lattice_forms.hpp"

using namespace thetalat;
using testsupport::Rng;

namespace {

IntMat canonical_pattern(const SymplecticData& s, int n) {
    IntMat c(n, n);
    int off = 2 * s.g0();
    for (size_t p = 0; p < s.divisors.size(); ++p) {
        c(off + 2 * p, off + 2 * p + 1) = s.divisors[p];
        c(off + 2 * p + 1, off + 2 * p) = -s.divisors[p];
    }
    return c;
}

}  // namespace

TEST_CASE("radical examples") {
    IntMat z(2, 2);
    CHECK(radical(make_alternating(z)).size() == 2);

    CHECK(radical(make_alternating(testsupport::e_block(1))).empty());

    IntMat e(4, 4);
    e(0, 1) = 1;
    e(1, 0) = -1;
    auto rad = radical(make_alternating(e));
    REQUIRE(rad.size() == 2);
    std::vector<RatVec> got, want;
    for (const auto& v : rad) {
        RatVec r(4);
        for (int i = 0; i < 4; ++i)
            r[i] = Rational(v[i]);
        got.push_back(r);
    }
    want.push_back({Rational(0), Rational(0), Rational(1), Rational(0)});
    want.push_back({Rational(0), Rational(0), Rational(0), Rational(1)});
    CHECK(same_span(got, want, 4));
}

TEST_CASE("normal form frozen examples") {
    SymplecticData s2 = symplectic_normal_form(make_alternating(testsupport::e_block(2)));
    REQUIRE(s2.divisors.size() == 1);
    CHECK(s2.divisors[0] == 2);
    CHECK(s2.radical_basis.empty());

    IntMat f4 = testsupport::block_diag(testsupport::e_block(1), testsupport::e_block(2));
    SymplecticData s4 = symplectic_normal_form(make_alternating(f4));
    REQUIRE(s4.divisors.size() == 2);
    CHECK(s4.divisors[0] == 1);
    CHECK(s4.divisors[1] == 2);
    Int prod = s4.divisor_product();
    CHECK(prod * prod == det_int(f4));

    // conjugated [[0,6],[-6,0]]: divisors are basis independent
    IntMat u(2, 2);
    u(0, 0) = 1;
    u(0, 1) = 1;
    u(1, 1) = 1;
    IntMat e6 = u.transposed() * testsupport::e_block(6) * u;
    SymplecticData s6 = symplectic_normal_form(make_alternating(e6));
    REQUIRE(s6.divisors.size() == 1);
    CHECK(s6.divisors[0] == 6);
    CHECK(abs(pfaffian(e6)) == 6);

    // zero form: no pairs, full radical
    IntMat z(4, 4);
    SymplecticData sz = symplectic_normal_form(make_alternating(z));
    CHECK(sz.pairs.empty());
    CHECK(sz.radical_basis.size() == 4);
}

TEST_CASE("normal form on 500 random alternating matrices") {
    Rng rng(20240601);
    for (int iter = 0; iter < 500; ++iter) {
        IntMat e = testsupport::random_alternating(rng, 4, 9);
        AlternatingForm f = make_alternating(e);
        SymplecticData s = symplectic_normal_form(f);

        CHECK(abs(det_int(s.change_of_basis)) == 1);
        IntMat gram = s.change_of_basis.transposed() * e * s.change_of_basis;
        CHECK(gram == canonical_pattern(s, e.rows));
        for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
            CHECK(s.divisors[i] > 0);
            CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
        }
        // (prod d)^2 equals |det| of the nondegenerate block
        if (!s.pairs.empty()) {
            int m = 2 * static_cast<int>(s.pairs.size());
            IntMat l1(e.rows, m);
            for (int p = 0; p < m / 2; ++p)
                for (int i = 0; i < e.rows; ++i) {
                    l1(i, 2 * p) = s.pairs[p].first[i];
                    l1(i, 2 * p + 1) = s.pairs[p].second[i];
                }
            IntMat block = l1.transposed() * e * l1;
            Int prod = s.divisor_product();
            CHECK(prod * prod == abs(det_int(block)));
        }
        // radical has even length and complements the rank
        CHECK(s.radical_basis.size() % 2 == 0);
        CHECK(static_cast<int>(s.radical_basis.size() + 2 * s.pairs.size()) == e.rows);
        auto rad = radical(f);
        CHECK(rad.size() == s.radical_basis.size());
        CHECK(rank_rat(to_rat_mat(e)) + static_cast<int>(rad.size()) == e.rows);
    }
}

TEST_CASE("divisors are invariant under unimodular conjugation") {
    Rng rng(555);
    IntMat e = testsupport::block_diag(testsupport::e_block(2), testsupport::e_block(6));
    SymplecticData base = symplectic_normal_form(make_alternating(e));
    for (int iter = 0; iter < 50; ++iter) {
        IntMat u = testsupport::random_unimodular(rng, 4);
        IntMat e2 = u.transposed() * e * u;
        SymplecticData s = symplectic_normal_form(make_alternating(e2));
        CHECK(s.divisors == base.divisors);
    }
}

TEST_CASE("dual lattice") {
    SymplecticData s2 = symplectic_normal_form(make_alternating(testsupport::e_block(2)));
    auto d2 = dual_lattice(s2);
    REQUIRE(d2.size() == 2);
    std::vector<RatVec> want;
    want.push_back({make_rational(1, 2), Rational(0)});
    want.push_back({Rational(0), make_rational(1, 2)});
    CHECK(same_span(d2, want, 2));

    SymplecticData s1 = symplectic_normal_form(make_alternating(testsupport::e_block(1)));
    auto d1 = dual_lattice(s1);
    for (const auto& v : d1)
        for (const auto& x : v)
            CHECK(x.get_den() == 1);

    IntMat f4 = testsupport::block_diag(testsupport::e_block(1), testsupport::e_block(2));
    SymplecticData s4 = symplectic_normal_form(make_alternating(f4));
    auto d4 = dual_lattice(s4);
    REQUIRE(d4.size() == 4);
    // every dual vector pairs integrally with every lattice basis vector
    for (const auto& v : d4)
        for (int j = 0; j < 4; ++j) {
            Rational pair = 0;
            for (int i = 0; i < 4; ++i)
                pair += v[i] * Rational(f4(i, j));
            CHECK(pair.get_den() == 1);
        }
    std::vector<RatVec> want4;
    want4.push_back({Rational(1), Rational(0), Rational(0), Rational(0)});
    want4.push_back({Rational(0), Rational(1), Rational(0), Rational(0)});
    want4.push_back({Rational(0), Rational(0), make_rational(1, 2), Rational(0)});
    want4.push_back({Rational(0), Rational(0), Rational(0), make_rational(1, 2)});
    CHECK(same_span(d4, want4, 4));

    IntMat z(2, 2);
    SymplecticData sz = symplectic_normal_form(make_alternating(z));
    CHECK_THROWS_AS(dual_lattice(sz), std::invalid_argument);
}

TEST_CASE("discriminant group shapes") {
    SymplecticData s2 = symplectic_normal_form(make_alternating(testsupport::e_block(2)));
    DiscriminantGroup d2 = discriminant_group(s2);
    REQUIRE(d2.divisors.size() == 1);
    CHECK(d2.divisors[0] == 2);
    CHECK(d2.order() == 4);

    SymplecticData s1 = symplectic_normal_form(make_alternating(testsupport::e_block(1)));
    DiscriminantGroup d1 = discriminant_group(s1);
    CHECK(d1.divisors.empty());
    CHECK(d1.order() == 1);
    CHECK(d1.all_elements().size() == 1);

    IntMat f4 = testsupport::block_diag(testsupport::e_block(1), testsupport::e_block(2));
    DiscriminantGroup d4 = discriminant_group(symplectic_normal_form(make_alternating(f4)));
    REQUIRE(d4.divisors.size() == 1);  // the d = 1 factor is dropped
    CHECK(d4.divisors[0] == 2);
    CHECK(d4.order() == 4);
}

TEST_CASE("pairing examples") {
    DiscriminantGroup d;
    d.divisors = {Int(2)};
    IntVec x{Int(1), Int(0)}, y{Int(0), Int(1)};
    CHECK(pairing_eE(d, x, y) == make_rational(1, 2));
    CHECK(pairing_eE(d, x, x) == 0);
    CHECK(pairing_eE(d, y, y) == 0);

    DiscriminantGroup triv;
    CHECK(pairing_eE(triv, IntVec{}, IntVec{}) == 0);

    IntVec bad{Int(2), Int(0)};
    CHECK_THROWS_AS(pairing_eE(d, bad, y), std::invalid_argument);
}

TEST_CASE("pairing bilinear and alternating on random groups") {
    Rng rng(8080);
    std::vector<std::vector<Int>> types = {{Int(2)}, {Int(3)}, {Int(2), Int(4)}, {Int(6)}};
    for (const auto& tp : types) {
        DiscriminantGroup d;
        d.divisors = tp;
        auto elems = d.all_elements();
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int iter = 0; iter < 100; ++iter) {
            const IntVec& x = elems[pick(rng)];
            const IntVec& y = elems[pick(rng)];
            const IntVec& z = elems[pick(rng)];
            CHECK(pairing_eE(d, x, x) == 0);
            CHECK(mod1(pairing_eE(d, x, y) + pairing_eE(d, y, x)) == 0);
            CHECK(pairing_eE(d, d.add(x, y), z) ==
                  mod1(pairing_eE(d, x, z) + pairing_eE(d, y, z)));
        }
    }
}

TEST_CASE("pairing is nondegenerate on groups of order up to 144") {
    std::vector<std::vector<Int>> types = {
        {Int(2)},  {Int(3)},         {Int(4)},         {Int(5)},
        {Int(6)},  {Int(7)},         {Int(8)},         {Int(2), Int(2)},
        {Int(2), Int(4)},            {Int(9)},         {Int(3), Int(3)},
        {Int(10)}, {Int(11)},        {Int(12)},        {Int(2), Int(6)},
        {Int(2), Int(2), Int(2)}};
    for (const auto& tp : types) {
        DiscriminantGroup d;
        d.divisors = tp;
        REQUIRE(d.order() <= 144);
        auto elems = d.all_elements();
        for (const auto& x : elems) {
            bool zero = true;
            for (const auto& v : x)
                if (v != 0)
                    zero = false;
            if (zero)
                continue;
            bool found = false;
            for (const auto& y : elems)
                if (pairing_eE(d, x, y) != 0) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}
