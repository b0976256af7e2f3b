#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gelmod/coxeter.hpp"
#include "gelmod/errors.hpp"
#include "gelmod/fakedeg.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace gelmod;

namespace {

IntPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> v(coeffs.begin(), coeffs.end());
    return IntPolynomial::from_coefficients(std::move(v));
}

// the small catalogue most checks below run over
std::vector<CoxeterDescriptor> catalogue() {
    std::vector<CoxeterDescriptor> out;
    for (int n = 1; n <= 5; ++n) out.push_back(descriptor(Family::A, n));
    for (int n = 2; n <= 4; ++n) out.push_back(descriptor(Family::B, n));
    for (int n = 4; n <= 6; ++n) out.push_back(descriptor(Family::D, n));
    for (int n = 3; n <= 8; ++n) out.push_back(descriptor(Family::Dihedral, n));
    out.push_back(descriptor(Family::Dihedral, 12));
    out.push_back(descriptor(Family::H3, 3));
    return out;
}

} // namespace

TEST_CASE("symmetric family closed form") {
    CHECK(fake_degree_A(Partition({3})) == poly({1}));
    CHECK(fake_degree_A(Partition({2, 1})) == poly({0, 1, 1}));
    CHECK(fake_degree_A(Partition({1, 1, 1})) == poly({0, 0, 0, 1}));
    // hook shapes in S4
    CHECK(fake_degree_A(Partition({2, 2})) == poly({0, 0, 1, 0, 1}));
    CHECK(fake_degree_A(Partition({2, 1, 1})) == poly({0, 0, 0, 1, 1, 1}));

    SUBCASE("padding does not change the value") {
        for (const char* s : {"[3]", "[2,1]", "[2,2]", "[3,1,1]", "[4,2,1]"}) {
            const Partition alpha = Partition::parse(s);
            const IntPolynomial base = fake_degree_A(alpha);
            for (int pad = alpha.count(); pad <= alpha.count() + 3; ++pad) {
                CAPTURE(s);
                CAPTURE(pad);
                CHECK(fake_degree_A_padded(alpha, pad) == base);
            }
        }
        CHECK_THROWS_AS(fake_degree_A_padded(Partition({2, 1}), 1), PadTooSmall);
    }
}

TEST_CASE("signed family closed form") {
    const Partition e;
    CHECK(fake_degree_B({Partition({2}), e}) == poly({1}));
    CHECK(fake_degree_B({Partition({1, 1}), e}) == poly({0, 0, 1}));
    CHECK(fake_degree_B({e, Partition({2})}) == poly({0, 0, 1}));
    CHECK(fake_degree_B({e, Partition({1, 1})}) == poly({0, 0, 0, 0, 1}));
    CHECK(fake_degree_B({Partition({1}), Partition({1})}) == poly({0, 1, 0, 1}));

    // a rank-4 pair with a repeated exponent, and its swap
    const IntPolynomial f = poly({0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1});
    CHECK(fake_degree_B({Partition({2}), Partition({1, 1})}) == f);
    CHECK(fake_degree_B({Partition({1, 1}), Partition({2})}) == f);

    SUBCASE("padding does not change the value") {
        const BiPartition pair{Partition({2, 1}), Partition({1})};
        const IntPolynomial base = fake_degree_B(pair);
        for (int pa = 2; pa <= 4; ++pa)
            for (int pb = 1; pb <= 3; ++pb)
                CHECK(fake_degree_B_padded(pair, pa, pb) == base);
    }

    SUBCASE("swapping the sides moves the first occurrence when n is odd") {
        for (int n : {3, 5, 7}) {
            CAPTURE(n);
            for (const auto& pair : bipartitions_of(n)) {
                const BiPartition swapped{pair.beta, pair.alpha};
                const int p = fake_degree_B(pair).low_exponent();
                const int q = fake_degree_B(swapped).low_exponent();
                CAPTURE(pair.to_string());
                CHECK(p != q);
            }
        }
    }
}

TEST_CASE("index-two family closed form") {
    const BiPartition mixed{Partition({2}), Partition({1, 1})};
    CHECK(fake_degree_D(mixed, std::nullopt) == poly({0, 0, 0, 0, 2, 0, 2, 0, 2}));
    // unordered: the swap gives the same merged value
    CHECK(fake_degree_D({mixed.beta, mixed.alpha}, std::nullopt) ==
          fake_degree_D(mixed, std::nullopt));

    const BiPartition equal{Partition({2}), Partition({2})};
    CHECK(fake_degree_D(equal, 1) == poly({0, 0, 1, 0, 1, 0, 1}));
    CHECK(fake_degree_D(equal, 2) == fake_degree_D(equal, 1));

    CHECK_THROWS_AS(fake_degree_D(equal, std::nullopt), MissingSplitTag);
    CHECK_THROWS_AS(fake_degree_D(mixed, 1), InvalidLabel);
    CHECK_THROWS_AS(fake_degree_D(equal, 3), InvalidLabel);
}

TEST_CASE("dihedral closed form") {
    CHECK(fake_degree_dihedral(7, {DihedralLabel::Triv, 0}) == poly({1}));
    CHECK(fake_degree_dihedral(7, {DihedralLabel::Sign, 0}) ==
          IntPolynomial::monomial(1, 7));
    for (int j = 1; j <= 3; ++j) {
        IntPolynomial expected = IntPolynomial::monomial(1, j) +
                                 IntPolynomial::monomial(1, 7 - j);
        CHECK(fake_degree_dihedral(7, {DihedralLabel::TwoDim, j}) == expected);
    }
    // even n: the two determinant-like characters sit in the middle degree,
    // including the n = 4k case where the naive guess would halve wrongly
    for (int n : {4, 6, 8, 12}) {
        CAPTURE(n);
        const IntPolynomial mid = IntPolynomial::monomial(1, n / 2);
        CHECK(fake_degree_dihedral(n, {DihedralLabel::DetPlus, 0}) == mid);
        CHECK(fake_degree_dihedral(n, {DihedralLabel::DetMinus, 0}) == mid);
    }
    CHECK(fake_degree_dihedral(6, {DihedralLabel::TwoDim, 2}) == poly({0, 0, 1, 0, 1}));
}

TEST_CASE("icosahedral table") {
    const std::map<std::string, IntPolynomial> expected = {
        {"U1", poly({1})},
        {"U1'", IntPolynomial::monomial(1, 15)},
        {"V4", poly({0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1})},
        {"V4'", poly({0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1})},
        {"W5", poly({0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1})},
        {"W5'", poly({0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1})},
        {"Y3", poly({0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1})},
        {"Y3'", poly({0, 1, 0, 0, 0, 1, 0, 0, 0, 1})},
        {"Z3", poly({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1})},
        {"Z3'", poly({0, 0, 0, 1, 0, 1, 0, 1})},
    };
    const auto g = descriptor(Family::H3, 3);
    const auto reports = fake_degree_reports(g);
    REQUIRE(reports.size() == expected.size());
    for (const auto& r : reports) {
        CAPTURE(r.label);
        REQUIRE(expected.count(r.label) == 1);
        CHECK(r.fakeDegree == expected.at(r.label));
    }
}

TEST_CASE("structural invariants across the catalogue") {
    for (const auto& g : catalogue()) {
        CAPTURE(g.name());
        const auto labels = irreducible_labels(g);
        const int N = g.reflection_count();
        int unitCount = 0;   // labels with fake degree exactly 1
        int topCount = 0;    // labels with fake degree exactly t^N
        for (const auto& l : labels) {
            CAPTURE(label_to_string(l));
            const IntPolynomial f = fake_degree_closed(g, l);
            REQUIRE(!f.is_zero());
            CHECK(f.coefficients_nonnegative());
            // value at 1 counts the copies inside the coinvariant algebra
            CHECK(f.evaluate_at_one() == label_dimension(g, l));
            CHECK(*f.degree() <= N);
            if (f == IntPolynomial(1)) ++unitCount;
            if (f == IntPolynomial::monomial(1, N)) ++topCount;
            // report plumbing agrees with first_occurrence
            const auto occ = first_occurrence(f);
            CHECK(occ.p == f.low_exponent());
            CHECK(occ.multiplicity == f.coeff(occ.p));
        }
        CHECK(unitCount == 1);
        CHECK(topCount == 1);

        const auto reports = fake_degree_reports(g);
        REQUIRE(reports.size() == labels.size());
        for (size_t i = 0; i < reports.size(); ++i) {
            CHECK(reports[i].label == label_to_string(labels[i]));
            CHECK(reports[i].p == reports[i].fakeDegree.low_exponent());
            CHECK(reports[i].dim == reports[i].fakeDegree.evaluate_at_one());
        }
    }
}

TEST_CASE("regular-representation identity") {
    for (const auto& g : catalogue()) {
        CAPTURE(g.name());
        const auto rep = poincare_check(g);
        CHECK(rep.pass);
        CHECK(rep.defect.is_zero());
        CHECK(*rep.rhs.degree() == g.reflection_count());
        CHECK(rep.rhs.evaluate_at_one() == g.order());
    }
}

TEST_CASE("series oracle matches the closed forms") {
    for (const auto& g : {descriptor(Family::A, 3), descriptor(Family::B, 2),
                          descriptor(Family::Dihedral, 5), descriptor(Family::H3, 3)}) {
        CAPTURE(g.name());
        for (const auto& l : irreducible_labels(g)) {
            CAPTURE(label_to_string(l));
            CHECK(fake_degree_molien(g, l) == fake_degree_closed(g, l));
        }
    }
    SUBCASE("split labels come back as the sum of both halves") {
        const auto g = descriptor(Family::D, 4);
        for (const auto& l : irreducible_labels(g)) {
            CAPTURE(label_to_string(l));
            const auto* dl = std::get_if<DLabel>(&l);
            IntPolynomial expected = fake_degree_closed(g, l);
            if (dl && dl->split != 0)
                expected += fake_degree_D(dl->pair, dl->split == 1 ? 2 : 1);
            CHECK(fake_degree_molien(g, l) == expected);
        }
    }
}

TEST_CASE("isotypic series") {
    const auto g = descriptor(Family::A, 2);
    const auto labels = irreducible_labels(g);

    // trivial label: dimensions of the invariant rings, here degrees {2,3}
    const std::vector<Int> inv = isotypic_series(g, labels.front(), 6);
    const std::vector<Int> expectedInv = {1, 0, 1, 1, 1, 1, 2};
    CHECK(inv == expectedInv);

    for (const auto& gg : {descriptor(Family::B, 2), descriptor(Family::Dihedral, 5)}) {
        CAPTURE(gg.name());
        for (const auto& l : irreducible_labels(gg)) {
            const IntPolynomial f = fake_degree_closed(gg, l);
            const auto series = isotypic_series(gg, l, gg.reflection_count() + 4);
            for (const auto& c : series) CHECK(c >= 0);
            // the series starts exactly where the fake degree does
            const auto occ = first_occurrence(f);
            for (int k = 0; k < occ.p; ++k) CHECK(series[k] == 0);
            CHECK(series[occ.p] == occ.multiplicity);
        }
    }
    CHECK_THROWS_AS(first_occurrence(IntPolynomial()), ZeroPolynomial);
}

TEST_CASE("model dimension counts involutions") {
    CHECK(gelfand_dimension(descriptor(Family::A, 3)) == 10);
    CHECK(gelfand_dimension(descriptor(Family::B, 2)) == 6);
    CHECK(gelfand_dimension(descriptor(Family::Dihedral, 5)) == 6);
    CHECK(gelfand_dimension(descriptor(Family::H3, 3)) == 32);

    // brute force on a couple of small groups
    for (const auto& g : {descriptor(Family::B, 2), descriptor(Family::Dihedral, 6),
                          descriptor(Family::A, 3)}) {
        CAPTURE(g.name());
        const auto els = enumerate_elements(g);
        Int count = 0;
        for (const auto& m : els.elements)
            if ((m * m).is_identity()) ++count;
        CHECK(gelfand_dimension(g) == count);
    }

    ProductDescriptor prod{{GroupFactor{Family::A, 1}, GroupFactor{Family::A, 2}}};
    CHECK(gelfand_dimension(prod) == 8);
}

TEST_CASE("verdicts") {
    // computed scan agrees with the classification rule on every computable group
    for (const auto& g : catalogue()) {
        CAPTURE(g.name());
        const Verdict computed = gelfand_verdict_computed(g);
        CHECK(computed.method == "computed");
        ProductDescriptor single{{GroupFactor{g.family(), g.parameter()}}};
        const Verdict classified = gelfand_verdict_classification(single);
        CHECK(classified.method == "classified");
        CHECK(computed.isGelfand == classified.isGelfand);
        const bool expected = !(g.family() == Family::D && g.parameter() % 2 == 0);
        CHECK(computed.isGelfand == expected);
        if (!computed.isGelfand) {
            REQUIRE(!computed.witnesses.empty());
            for (const auto& w : computed.witnesses) {
                CHECK(w.factor == g.name());
                CHECK(!w.label.empty());
                CHECK(w.firstMultiplicity >= 2);
            }
        } else {
            CHECK(computed.witnesses.empty());
        }
    }

    SUBCASE("products and classification-only tags") {
        ProductDescriptor mixed{{GroupFactor{Family::A, 2}, GroupFactor{Family::E7, 7}}};
        const Verdict v = gelfand_verdict(mixed);
        CHECK(v.method == "classified");
        CHECK(!v.isGelfand);
        REQUIRE(v.witnesses.size() == 1);
        CHECK(v.witnesses[0].factor == "E7");
        CHECK(v.witnesses[0].label.empty());
        CHECK(v.witnesses[0].firstMultiplicity == 0);

        ProductDescriptor good{{GroupFactor{Family::H4, 4}, GroupFactor{Family::F4, 4}}};
        CHECK(gelfand_verdict(good).isGelfand);
        CHECK(gelfand_verdict(good).method == "classified");

        ProductDescriptor allComputable{{GroupFactor{Family::B, 4}, GroupFactor{Family::D, 5}}};
        const Verdict vc = gelfand_verdict(allComputable);
        CHECK(vc.method == "computed");
        CHECK(vc.isGelfand);

        ProductDescriptor bad{{GroupFactor{Family::B, 4}, GroupFactor{Family::D, 6}}};
        const Verdict vb = gelfand_verdict(bad);
        CHECK(vb.method == "computed");
        CHECK(!vb.isGelfand);
        REQUIRE(!vb.witnesses.empty());
        CHECK(vb.witnesses[0].factor == "D6");
    }
}
