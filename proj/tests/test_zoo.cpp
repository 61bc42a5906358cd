#include <doctest.h>

#include "latcoh/errors.hpp"
#include "latcoh/resolution.hpp"
#include "latcoh/snf.hpp"
#include "latcoh/tate.hpp"
#include "latcoh/zoo.hpp"

using namespace latcoh;

namespace {

Lattice zoo(const std::string& name) { return zoo_build(ZooName::parse(name)); }

} // namespace

TEST_CASE("name parsing round trips") {
    for (const ZooName& z : zoo_base_names()) {
        CHECK(ZooName::parse(z.to_string()) == z);
        for (int k : {-2, 1, 3}) {
            ZooName t = z;
            t.k = k;
            CHECK(ZooName::parse(t.to_string()) == t);
            CHECK(t.base() == z);
        }
    }
    CHECK(ZooName::parse("L++").kind == ZooName::Kind::luv);
    CHECK(ZooName::parse("A@-2").k == -2);
    CHECK(ZooName::parse("Nab@1").subgroup == 2);

    for (const std::string& bad : {"", "L", "L+", "L+++", "X", "A@", "A@x", "N", "Nc", "R@2@3",
                                   "l++", "radr", "A @1"})
        CHECK_THROWS_AS(ZooName::parse(bad), BadParameters);
}

TEST_CASE("zoo listing is stable") {
    std::vector<ZooName> names = zoo_base_names();
    REQUIRE(names.size() == 11);
    CHECK(names[0].to_string() == "L++");
    CHECK(names[1].to_string() == "L+-");
    CHECK(names[2].to_string() == "L-+");
    CHECK(names[3].to_string() == "L--");
    CHECK(names[4].to_string() == "R");
    CHECK(names[5].to_string() == "A");
    CHECK(names[6].to_string() == "radR");
    CHECK(names[7].to_string() == "aug");
    CHECK(names[8].to_string() == "Na");
    CHECK(names[9].to_string() == "Nb");
    CHECK(names[10].to_string() == "Nab");
}

TEST_CASE("built lattices match their defining data") {
    Lattice Lpm = zoo("L+-");
    CHECK(Lpm.rank == 1);
    CHECK(Lpm.action[0] == IntMatrix{{1}});
    CHECK(Lpm.action[1] == IntMatrix{{-1}});

    Lattice R = zoo("R");
    CHECK(R.rank == 4);
    for (const IntMatrix& g : R.action)
        for (int j = 0; j < 4; ++j) {
            int ones = 0;
            for (int i = 0; i < 4; ++i) ones += g.at(i, j) == 1 ? 1 : 0;
            CHECK(ones == 1); // permutation action
        }

    Lattice Na = zoo("Na");
    CHECK(Na.action[0] == -IntMatrix::identity(2));
    CHECK(Na.action[1] == IntMatrix{{0, 1}, {1, 0}});

    for (const ZooName& z : zoo_base_names()) CHECK_NOTHROW(validate(zoo_build(z)));
}

TEST_CASE("the overring contains the regular lattice with index two") {
    // columns: images of the R-basis inside A
    Lattice A = zoo("A");
    CHECK(A.rank == 4);
    CHECK(r_multiplicities(A) == std::array<int, 4>{1, 1, 1, 1});

    // 1 = 2e - a - b - ab in the overring basis {e, a, b, ab}
    IntMatrix embed{{2, 0, 0, 0}, {-1, 1, 0, 0}, {-1, 0, 1, 0}, {-1, 0, 0, 1}};
    Lattice inside = sublattice(A, embed);
    CHECK(is_isomorphic(inside, zoo("R")).is_yes());
    mpz_class det = embed.determinant();
    CHECK((det == 2 || det == -2));
    CHECK(subquotient_group(IntMatrix::identity(4), embed) == FinAbGroup({2}));
}

TEST_CASE("the radical has index two in the regular lattice") {
    Lattice radR = zoo("radR");
    mpz_class det = 1;
    // its defining basis, expressed in R coordinates
    IntMatrix basis{{2, -1, -1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    det = basis.determinant();
    CHECK((det == 2 || det == -2));
    CHECK(is_isomorphic(sublattice(zoo("R"), basis), radR).is_yes());
}

TEST_CASE("minimal overrings for other groups") {
    for (auto [p, s] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        GroupSpec G(p, std::vector<long>(static_cast<size_t>(s), p));
        Lattice A = minimal_overring(G);
        CHECK(A.rank == G.order());
        validate(A);

        // R embeds with index p: 1 = p*e - sum of nonidentity elements
        IntMatrix embed(A.rank, A.rank);
        embed.at(0, 0) = p;
        for (int i = 1; i < A.rank; ++i) embed.at(i, 0) = -1;
        for (int j = 1; j < A.rank; ++j) embed.at(j, j) = 1;
        Lattice inside = sublattice(A, embed);
        CHECK(is_isomorphic(inside, regular_lattice(G)).is_yes());
        CHECK(subquotient_group(IntMatrix::identity(A.rank), embed) == FinAbGroup({p}));
    }

    // Klein instance agrees with the zoo entry
    CHECK(minimal_overring(GroupSpec::klein()).action == zoo("A").action);
}

TEST_CASE("translated names build translated lattices") {
    CHECK(is_isomorphic(zoo("A@1"), zoo("radR")).is_yes());
    CHECK(is_isomorphic(zoo("L++@1"), zoo("aug")).is_yes());
    CHECK(is_isomorphic(zoo("Na@2"), zoo("Na")).is_yes());
    CHECK(is_isomorphic(zoo("Na@-1"), cosyzygy(zoo("Na"))).is_yes());
    CHECK(zoo("R@1").rank == 0);
    CHECK_THROWS_AS(zoo("R@2"), ZeroModule);
}

TEST_CASE("character lattices are pairwise non isomorphic") {
    std::vector<std::string> ls = {"L++", "L+-", "L-+", "L--"};
    for (const std::string& a : ls)
        for (const std::string& b : ls) {
            IsoResult r = is_isomorphic(zoo(a), zoo(b));
            if (a == b)
                CHECK(r.is_yes());
            else
                CHECK(r.verdict == Iso::no);
        }
}

TEST_CASE("tube mouths and their translates") {
    for (const std::string& name : {"Na", "Nb", "Nab"}) {
        Lattice N = zoo(name);
        CHECK(r_multiplicities(N)[0] == 0);
        Lattice ON = syzygy(N);
        CHECK(r_multiplicities(ON)[0] == 1);
        CHECK(h0(N).is_trivial());
        CHECK(h0(ON) == FinAbGroup({2}));
    }
}

TEST_CASE("predictions evaluate the closed forms") {
    CHECK(predict(Prediction::prop6(1, 1, 0)) == FinAbGroup({4}));
    CHECK(predict(Prediction::prop6(1, 1, 2)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::prop6(1, 1, -3)) == FinAbGroup({2}));
    CHECK(predict(Prediction::prop6(1, -1, 0)).is_trivial());
    CHECK(predict(Prediction::prop6(-1, 1, 3)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::prop6(-1, -1, -4)) == FinAbGroup({2, 2}));

    CHECK(predict(Prediction::thmpj_overring(0, 0)) == FinAbGroup({2}));
    CHECK(predict(Prediction::thmpj_overring(2, -1)) == FinAbGroup({2, 2, 2}));
    CHECK(predict(Prediction::thmpj_overring(2, 5)) == FinAbGroup({2, 2, 2, 2}));
    CHECK(predict(Prediction::thmpj_luv(1, 1, 1, 1)) == FinAbGroup({4}));
    CHECK(predict(Prediction::thmpj_luv(1, 1, -2, 0)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::thmpj_luv(1, -1, 2, 3)) == FinAbGroup({2}));

    CHECK(predict(Prediction::prop3(2, 2, 1)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::prop3(3, 2, -3)) == FinAbGroup({3, 3, 3}));
    CHECK(predict(Prediction::prop3(2, 3, 2)) == FinAbGroup({2, 2, 2, 2, 2, 2}));
    CHECK(predict(Prediction::prop3(2, 1, 4)) == FinAbGroup({2}));
    CHECK(predict(Prediction::prop3(2, 1, -5)) == FinAbGroup({2}));

    CHECK(predict(Prediction::tube_hom(1, 2, 0)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::tube_special(2, 1, -1)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(2, 1, 0)).is_trivial());
    CHECK(predict(Prediction::tube_special(1, 1, 0)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(1, 1, 1)).is_trivial());
    CHECK(predict(Prediction::tube_special(1, 2, 0)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(1, 3, 0)) == FinAbGroup({2, 2}));
    CHECK(predict(Prediction::tube_special(1, 3, 1)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(2, 3, 2)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(1, 2, 1)) == FinAbGroup({2}));
    CHECK(predict(Prediction::tube_special(2, 2, 1)) == FinAbGroup({2}));
}

TEST_CASE("prediction families agree where they overlap") {
    for (int n = -8; n <= 8; ++n) {
        CHECK(predict(Prediction::thmpj_overring(0, n)) == predict(Prediction::prop3(2, 2, n)));
        for (int u : {1, -1})
            for (int v : {1, -1})
                CHECK(predict(Prediction::thmpj_luv(u, v, 0, n)) ==
                      predict(Prediction::prop6(u, v, n)));
    }
}

TEST_CASE("prediction parameter validation") {
    CHECK_THROWS_AS(predict(Prediction::prop6(0, 1, 0)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::prop6(2, 1, 0)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::prop3(2, 0, 1)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::prop3(1, 2, 1)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::tube_hom(0, 1, 0)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::tube_hom(1, 0, 0)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::tube_special(3, 1, 0)), BadParameters);
    CHECK_THROWS_AS(predict(Prediction::tube_special(1, 0, 0)), BadParameters);
}

TEST_CASE("zoo build is memoized") {
    const Lattice a = zoo("A");
    const Lattice b = zoo("A");
    CHECK(a.action == b.action);
    CHECK(a.rank == b.rank);
}
