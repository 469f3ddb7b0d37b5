#include <catch_amalgamated.hpp>

#include <random>
#include "permhom/corpus.hpp"
#include "permhom/stratify.hpp"
#include "oracles.hpp"

using namespace permhom;
using namespace permhom::testing;

namespace {

FGAbelianGroup Z(std::size_t r = 1) { return FGAbelianGroup(r); }

const std::vector<std::string> two_and_three = {"simplex2", "sphere2", "torus7",     "rp2_6",     "moebius",
                                                "book3",    "x_pp",    "susp_torus", "cone_torus"};

SimplicialComplex closed_spine() { return build_complex({{0, 1}}); }

}   // namespace

TEST_CASE("local homology examples")
{
    CHECK(local_homology_profile(corpus::sphere(2), {0, 1, 2}) == LocalProfile{{}, {}, Z()});
    CHECK(local_homology_profile(corpus::book3(), {0, 1}) == LocalProfile{{}, {}, Z(2)});
    CHECK(local_homology_profile(corpus::book3(), {0}) == LocalProfile{{}, {}, {}});
    CHECK(local_homology_profile(corpus::x_pp(), {0}) == LocalProfile{{}, Z(), Z(2)});
    CHECK(local_homology(corpus::x_pp(), {0}, 1) == Z());
    CHECK_THROWS_AS(local_homology_profile(corpus::book3(), {2, 3}), Error);
}

TEST_CASE("link formula on every simplex of the corpus")
{
    for (const std::string& name : corpus::names())
    {
        SimplicialComplex K = corpus::get(name);
        LocalHomology lh(K);
        for (const Simplex& s : K.all_simplexes())
        {
            INFO(name << " " << to_string(s));
            CHECK(lh.profile(s) == local_homology_via_link(K, s));
        }
    }
}

TEST_CASE("q maps: examples and the direct cross-check")
{
    SimplicialComplex B = corpus::book3();
    CHECK(local_map_is_iso(B, {0, 1}, {0, 1}));
    CHECK_FALSE(local_map_is_iso(B, {0}, {0, 1}));
    CHECK_FALSE(local_map_is_iso(B, {0, 1}, {0, 1, 2}));
    try
    {
        local_map_is_iso(B, {2}, {0, 1});
        FAIL("non-face accepted");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::NotAFace);
    }
    SimplicialComplex S = corpus::sphere(2);
    for (const Simplex& s : S.all_simplexes())
        for (const Simplex& t : cofaces(S, s))
            CHECK(local_map_is_iso(S, s, t));

    std::mt19937 rng(17);
    for (const std::string& name : {"book3", "x_pp", "moebius", "cone_torus"})
    {
        SimplicialComplex K = corpus::get(name);
        std::vector<Simplex> all = K.all_simplexes();
        for (int trial = 0; trial < 25; ++trial)
        {
            const Simplex& s = all[rng() % all.size()];
            std::vector<Simplex> up = cofaces(K, s);
            const Simplex& t = up[rng() % up.size()];
            INFO(name << " " << to_string(s) << " " << to_string(t));
            CHECK(local_map_is_iso(K, s, t) == local_map_is_iso_direct(K, s, t));
        }
    }
}

TEST_CASE("local constancy")
{
    SimplicialComplex B = corpus::book3();
    CHECK(is_locally_constant(B, {0, 1, 2}, B));
    CHECK_FALSE(is_locally_constant(B, {0, 1}, B));
    CHECK(is_locally_constant(B, {0, 1}, closed_spine()));
    for (const Simplex& s : corpus::sphere(2).all_simplexes())
        CHECK(is_locally_constant(corpus::sphere(2), s, corpus::sphere(2)));
    CHECK_THROWS_AS(is_locally_constant(B, {0, 2}, closed_spine()), Error);
}

TEST_CASE("open-star propagation and face-closed non-constant locus")
{
    for (const std::string& name : two_and_three)
    {
        SimplicialComplex K = corpus::get(name);
        LocalHomology lh(K);
        for (const Simplex& s : K.all_simplexes())
        {
            if (!is_locally_constant(lh, s, K))
            {
                for (const Simplex& f : all_faces(s))
                    CHECK_FALSE(is_locally_constant(lh, f, K));
            }
            else
            {
                for (const Simplex& t : lh.proper_cofaces(s))
                    CHECK(is_locally_constant(lh, t, K));
            }
        }
    }
}

TEST_CASE("intrinsic stratification examples")
{
    Filtration S = intrinsic_stratification(corpus::sphere(2));
    CHECK(S.occupancy() == std::set<int>{2});
    CHECK(S == Filtration::trivial(corpus::sphere(2)));

    Filtration X = intrinsic_stratification(corpus::x_pp());
    CHECK(X.level(0) == build_complex({{0}, {1}}));
    CHECK(X.level(1) == build_complex({{0}, {1}}));
    CHECK(X.occupancy() == std::set<int>{0, 2});

    // The page edges away from the spine carry boundary points, whose local
    // homology vanishes, so they stay in X_1 next to the spine.
    Filtration B = intrinsic_stratification(corpus::book3());
    CHECK(B.level(0) == build_complex({{0}, {1}}));
    CHECK(is_subcomplex(closed_spine(), B.level(1)));
    CHECK(B.level(1) == build_complex({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));

    Filtration M = intrinsic_stratification(corpus::moebius());
    CHECK(M.level(1) == corpus::moebius_boundary());
    CHECK(M.level(0).empty());

    CHECK_THROWS_AS(intrinsic_stratification(build_complex({{0, 1, 2}, {2, 3}})), Error);
}

TEST_CASE("intrinsic stratifications are h-stratifications with levels of the right dimension")
{
    for (const std::string& name : two_and_three)
    {
        SimplicialComplex K = corpus::get(name);
        IntrinsicStratification is = intrinsic_stratification_detailed(K);
        INFO(name);
        CHECK(check_h_stratification(K, is.filtration));
        for (int j = 0; j <= K.dimension(); ++j)
            CHECK(is.filtration.level(j).dimension() <= j);
        CHECK(is_homology_manifold(K) == (is.filtration == Filtration::trivial(K)));
    }
}

TEST_CASE("h-stratification checks")
{
    SimplicialComplex B = corpus::book3();
    CHECK_FALSE(check_h_stratification(B, Filtration::trivial(B)));
    SimplicialComplex S = corpus::sphere(2);
    CHECK(check_h_stratification(S, Filtration::skeletal(S)));
    CHECK(check_h_stratification(S, Filtration::trivial(S)));
    CHECK_THROWS_AS(check_h_stratification(B, Filtration::trivial(S)), Error);
}

TEST_CASE("filtration validation")
{
    SimplicialComplex B = corpus::book3();
    auto bad = [&](std::vector<SimplicialComplex> levels) {
        try
        {
            Filtration(B, levels);
            return false;
        }
        catch (const Error& e)
        {
            return e.kind() == ErrorKind::InvalidFiltration;
        }
    };
    CHECK(bad({SimplicialComplex(), B}));
    CHECK(bad({build_complex({{0, 1}}), closed_spine(), B}));
    CHECK(bad({build_complex({{0}}), build_complex({{2, 3}}), B}));
    CHECK(bad({build_complex({{1}}), build_complex({{0, 2}}), B}));
    CHECK_FALSE(bad({build_complex({{0}, {1}}), closed_spine(), B}));
}

TEST_CASE("homology manifold detector")
{
    for (const std::string& name : {"sphere1", "sphere2", "sphere3", "torus7", "rp2_6"})
        CHECK(is_homology_manifold(corpus::get(name)));
    for (const std::string& name : {"book3", "x_pp", "susp_torus", "cone_torus", "moebius", "simplex2"})
        CHECK_FALSE(is_homology_manifold(corpus::get(name)));
}

TEST_CASE("strong and very strong conditions")
{
    SimplicialComplex S = corpus::sphere(2);
    CHECK(check_strong(S, Filtration::trivial(S)));
    CHECK(check_very_strong(S, Filtration::trivial(S)));
    SimplicialComplex B = corpus::book3();
    CHECK(check_strong(B, intrinsic_stratification(B)));
    SimplicialComplex X = corpus::x_pp();
    CHECK(check_very_strong(X, intrinsic_stratification(X)));
    // boundary circle as X_1 of the triangle
    SimplicialComplex D = corpus::simplex(2);
    Filtration F(D, {SimplicialComplex(), skeleton(D, 1), D});
    CHECK(check_strong(D, F));
}

TEST_CASE("per-stratum manifold verdicts and report")
{
    StratificationReport r = stratify(corpus::x_pp(), true, true);
    REQUIRE(r.strata.size() == 2);
    CHECK(r.strata[0].dimension == 0);
    CHECK(r.strata[0].profiles == std::vector<LocalProfile>{{{}, Z(), Z(2)}});
    CHECK(r.strata[1].homology_manifold);
    CHECK(r.is_h_stratification);
    CHECK(*r.is_strong);
    CHECK(*r.is_very_strong);
    CHECK_FALSE(r.is_homology_manifold);
    // the poles lie in no edge of X_1 and are kept there by demotion
    CHECK(r.demoted.size() == 2);
}

TEST_CASE("stratification of the subdivision is the subdivided stratification")
{
    for (const std::string& name : {"sphere2", "book3", "x_pp", "moebius", "torus7"})
    {
        SimplicialComplex K = corpus::get(name);
        LabeledSubdivision S = barycentric_subdivision(K);
        Filtration F = intrinsic_stratification(K);
        Filtration G = intrinsic_stratification(S.complex);
        INFO(name);
        for (int j = 0; j <= K.dimension(); ++j)
            CHECK(G.level(j) == subdivided_subcomplex(S, F.level(j)));
    }
}

TEST_CASE("experimental local permutation homology")
{
    SimplicialComplex S = corpus::sphere(2);
    for (const Simplex& s : {Simplex{0}, Simplex{0, 1}, Simplex{0, 1, 2}})
    {
        LocalPermHomology lp(S, Permutation::reversal(2), s);
        CHECK(lp.profile_via_image() == local_homology_profile(S, s));
        CHECK(lp.profile_via_chain() == lp.profile_via_image());
    }
    LocalPermHomology pole(corpus::x_pp(), Permutation::reversal(2), {0});
    CHECK(pole.profile_via_image() == pole.profile_via_chain());
    CHECK(pole.profile_via_image() == LocalProfile{{}, {}, Z(2)});

    LocalPermHomology top(corpus::simplex(2), Permutation::reversal(2), {0, 1, 2});
    CHECK(top.profile_via_image() == LocalProfile{{}, {}, Z()});
    CHECK_THROWS_AS(LocalPermHomology(S, Permutation::parse("0,2,1"), {0}), Error);
}
