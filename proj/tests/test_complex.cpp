#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include "permhom/complex.hpp"
#include "permhom/corpus.hpp"
#include "permhom/perm_homology.hpp"

using namespace permhom;

namespace {

long euler_characteristic(const SimplicialComplex& K)
{
    long chi = 0;
    for (int k = 0; k <= K.dimension(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<long>(K.count(k));
    return chi;
}

// Brute-force flag enumeration, independent of the memoized construction.
std::size_t count_flags(const SimplicialComplex& K)
{
    std::vector<Simplex> all = K.all_simplexes();
    std::map<Simplex, std::size_t> ending;
    std::size_t total = 0;
    for (const Simplex& A : all)   // canonical order lists faces before cofaces
    {
        std::size_t c = 1;
        for (const Simplex& B : all)
            if (B.size() < A.size() && is_face(B, A))
                c += ending[B];
        ending[A] = c;
        total += c;
    }
    return total;
}

}   // namespace

TEST_CASE("complexes are closed under faces and reject malformed input")
{
    SimplicialComplex D2 = corpus::simplex(2);
    CHECK(D2.f_vector() == std::vector<std::size_t>{3, 3, 1});
    CHECK(D2.dimension() == 2);
    CHECK(D2.contains({0, 2}));
    CHECK_FALSE(D2.contains({0, 3}));

    SimplicialComplex unsorted = build_complex({{2, 0, 1}});
    CHECK(unsorted == D2);

    CHECK_THROWS_AS(build_complex({{0, 0, 1}}), Error);
    try
    {
        SimplicialComplex::from_closed({{0}, {0, 1}});
        FAIL("missing face accepted");
    }
    catch (const Error& e)
    {
        CHECK(e.kind() == ErrorKind::NotSubcomplex);
    }
    CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("corpus f-vectors and Euler characteristics")
{
    CHECK(corpus::sphere(2).f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(corpus::torus7().f_vector() == std::vector<std::size_t>{7, 21, 14});
    CHECK(corpus::rp2_6().f_vector() == std::vector<std::size_t>{6, 15, 10});
    CHECK(corpus::moebius().f_vector() == std::vector<std::size_t>{5, 10, 5});
    CHECK(corpus::book3().f_vector() == std::vector<std::size_t>{5, 7, 3});
    CHECK(corpus::x_pp().f_vector() == std::vector<std::size_t>{8, 18, 12});
    CHECK(euler_characteristic(corpus::torus7()) == 0);
    CHECK(euler_characteristic(corpus::rp2_6()) == 1);
    CHECK(euler_characteristic(corpus::x_pp()) == 2);
    CHECK(euler_characteristic(corpus::susp_torus()) == 2);
    CHECK(euler_characteristic(corpus::cone_torus()) == 1);
    for (const std::string& name : corpus::names())
        CHECK(corpus::find(name).has_value());
    CHECK_FALSE(corpus::find("no_such").has_value());
}

TEST_CASE("principality")
{
    CHECK(is_principal(corpus::book3()));
    SimplicialComplex with_whisker = build_complex({{0, 1, 2}, {2, 3}});
    CHECK_FALSE(is_principal(with_whisker));
    CHECK(principalize(with_whisker) == corpus::simplex(2));
    CHECK_THROWS_AS(is_principal(SimplicialComplex()), Error);
}

TEST_CASE("links, stars and complements")
{
    SimplicialComplex B = corpus::book3();
    SimplicialComplex lk = link(B, {0, 1});
    CHECK(lk.f_vector() == std::vector<std::size_t>{3});
    CHECK(lk.vertices() == std::vector<int>{2, 3, 4});

    SimplicialComplex lk0 = link(corpus::x_pp(), {0});
    CHECK(lk0.f_vector() == std::vector<std::size_t>{6, 6});

    SimplicialComplex C = complement_of_open_star(B, {0, 1});
    CHECK_FALSE(C.contains({0, 1}));
    CHECK(C.contains({0, 2}));
    CHECK(C.f_vector() == std::vector<std::size_t>{5, 6});
    CHECK(closed_star(B, {2}) == build_complex({{0, 1, 2}}));
    CHECK_THROWS_AS(link(B, {2, 3}), Error);
}

TEST_CASE("subdivision counts flags and keeps provenance")
{
    for (const std::string& name : corpus::names())
    {
        SimplicialComplex K = corpus::get(name);
        LabeledSubdivision S = barycentric_subdivision(K);
        INFO(name);
        CHECK(S.complex.count(0) == K.size());
        CHECK(S.complex.size() == count_flags(K));
        CHECK(S.complex.f_vector() == derived_f_vector(K.f_vector()));
        CHECK(euler_characteristic(S.complex) == euler_characteristic(K));
        CHECK(S.complex.dimension() == K.dimension());
        for (const Simplex& flag : S.complex.all_simplexes())
            for (std::size_t t = 1; t < flag.size(); ++t)
                CHECK(is_face(S.vertex_origin[flag[t - 1]], S.vertex_origin[flag[t]]));
    }
}

TEST_CASE("iterated subdivision tracks carriers in the base")
{
    SimplicialComplex K = corpus::simplex(2);
    LabeledSubdivision S2 = iterated_subdivision(K, 2);
    CHECK(S2.complex.count(2) == 36);
    CHECK(S2.complex.f_vector() == derived_f_vector(derived_f_vector(K.f_vector())));
    std::map<int, int> by_dim;
    for (int d : S2.vertex_dim)
        ++by_dim[d];
    // vertices of K^(2) over open simplexes of the triangle
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3 * 3);
    CHECK(by_dim[2] == 13);

    SimplicialComplex edge = build_complex({{0, 1}});
    SimplicialComplex sub = subdivided_subcomplex(S2, edge);
    CHECK(sub.f_vector() == std::vector<std::size_t>{5, 4});
}

TEST_CASE("union, intersection and join helpers")
{
    SimplicialComplex a = build_complex({{0, 1}});
    SimplicialComplex b = build_complex({{1, 2}});
    CHECK(union_of(a, b).f_vector() == std::vector<std::size_t>{3, 2});
    CHECK(intersection_of(a, b) == build_complex({{1}}));
    CHECK(join_simplexes({0, 3}, {1}) == Simplex{0, 1, 3});
    CHECK(disjoint({0, 3}, {1, 2}));
    CHECK_FALSE(disjoint({0, 3}, {3}));
}

TEST_CASE("random complexes: maximal simplexes regenerate the complex")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial)
    {
        std::vector<Simplex> gens;
        std::uniform_int_distribution<int> size(1, 4), vertex(0, 7);
        for (int g = 0; g < 6; ++g)
        {
            std::set<int> s;
            int want = size(rng);
            while (static_cast<int>(s.size()) < want)
                s.insert(vertex(rng));
            gens.emplace_back(s.begin(), s.end());
        }
        SimplicialComplex K = build_complex(gens);
        CHECK(build_complex(K.maximal_simplexes()) == K);
        CHECK(SimplicialComplex::from_closed(K.all_simplexes()) == K);
        for (const Simplex& s : K.all_simplexes())
            for (const Simplex& f : facets_of(s))
                if (!f.empty())
                    CHECK(K.contains(f));
    }
}
