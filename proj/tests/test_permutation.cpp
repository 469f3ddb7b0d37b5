#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include "permhom/permutation.hpp"

using namespace permhom;

namespace {

// |{k <= i : pi(k) <= j}| - 1, counted directly.
int d_direct(const std::vector<int>& pi, int i, int j)
{
    int c = 0;
    for (int k = 0; k <= i; ++k)
        if (pi[k] <= j)
            ++c;
    return c - 1;
}

// Decreasing to the zero, then increasing, by scanning differences.
bool v_shape_direct(const std::vector<int>& pi)
{
    auto zero = std::find(pi.begin(), pi.end(), 0);
    return std::is_sorted(pi.begin(), zero + 1, std::greater<int>()) && std::is_sorted(zero, pi.end());
}

}   // namespace

TEST_CASE("permutation parsing and validation")
{
    Permutation p = Permutation::parse("3,1,0,2");
    CHECK(p.n() == 3);
    CHECK(p(0) == 3);
    CHECK(p.preimage(0) == 2);
    CHECK(p.str() == "3,1,0,2");
    CHECK(Permutation::parse(" 2, 0 ,1 ").str() == "2,0,1");
    for (const char* bad : {"", "1,1,0", "0,2", "a,b", "0,,1", "-1,0"})
    {
        INFO(bad);
        try
        {
            Permutation::parse(bad);
            FAIL("accepted");
        }
        catch (const Error& e)
        {
            CHECK(e.kind() == ErrorKind::MalformedPermutation);
        }
    }
    CHECK(all_permutations(3).size() == 24);
}

TEST_CASE("d-table examples")
{
    DTable d(Permutation::parse("3,1,0,2"));
    CHECK(d.row(1) == std::vector<int>{-1, 0, 0, 1});
    CHECK(d.row(2) == std::vector<int>{0, 1, 1, 2});
    for (int n = 0; n <= 4; ++n)
    {
        DTable id(Permutation::identity(n)), rev(Permutation::reversal(n));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
            {
                CHECK(id(i, j) == std::min(i, j));
                CHECK(rev(i, j) == std::max(-1, i + j - n));
            }
    }
}

TEST_CASE("d-table matches direct counting and the basic laws, n <= 5")
{
    for (int n = 0; n <= 5; ++n)
        for (const Permutation& pi : all_permutations(n))
        {
            DTable d(pi);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                {
                    REQUIRE(d(i, j) == d_direct(pi.values(), i, j));
                    CHECK(d(i, j) <= std::min(i, j));
                    if (i > 0)
                        CHECK((d(i, j) - d(i - 1, j) == 0 || d(i, j) - d(i - 1, j) == 1));
                    if (j > 0)
                        CHECK((d(i, j) - d(i, j - 1) == 0 || d(i, j) - d(i, j - 1) == 1));
                }
            for (int j = 0; j <= n; ++j)
                CHECK(d(n, j) == j);
            for (int i = 0; i <= n; ++i)
                CHECK(d(i, n) == i);
        }
}

TEST_CASE("allowability examples and witnesses")
{
    CHECK(is_allowable(Permutation::parse("1,0,2")).allowable);
    AllowabilityResult r = is_allowable(Permutation::parse("0,2,1"));
    REQUIRE_FALSE(r.allowable);
    CHECK(r.witness->i == 0);
    CHECK(r.witness->j == 1);
    for (int n = 0; n <= 5; ++n)
        CHECK(is_allowable(Permutation::reversal(n)).allowable);

    Permutation p = Permutation::parse("0,2,1");
    CHECK(is_filtration_allowable(p, {2}).allowable);
    AllowabilityResult f = is_filtration_allowable(p, {1, 2});
    CHECK_FALSE(f.allowable);
    CHECK(f.witness->j == 1);
    for (const Permutation& pi : all_permutations(3))
        CHECK(is_filtration_allowable(pi, {3}).allowable);
}

TEST_CASE("V-shape data")
{
    auto v = is_v_shaped(Permutation::parse("3,1,0,2"));
    REQUIRE(v);
    CHECK(v->pivot == 2);
    CHECK(v->before_pivot == std::set<int>{1, 3});
    CHECK(v->q == std::vector<int>{2, 1, 1, 0});
    auto id = is_v_shaped(Permutation::identity(4));
    REQUIRE(id);
    CHECK(id->pivot == 0);
    CHECK(id->before_pivot.empty());
    CHECK_FALSE(is_v_shaped(Permutation::parse("0,2,1")));
    for (int n = 0; n <= 5; ++n)
        for (const Permutation& pi : all_permutations(n))
            CHECK(is_v_shaped(pi).has_value() == v_shape_direct(pi.values()));
}

TEST_CASE("perversities and their permutations")
{
    CHECK(perversity_to_permutation(Perversity::zero(3)) == Permutation::reversal(3));
    CHECK(perversity_to_permutation(Perversity::top(3)) == Permutation::identity(3));
    CHECK(perversity_to_permutation(Perversity::parse("0,0,1,1")).str() == "3,1,0,2");
    CHECK(perversity_to_permutation(Perversity::parse("0,0,1")).str() == "2,0,1");
    CHECK(permutation_to_perversity(Permutation::parse("3,1,0,2")).str() == "0,0,1,1");
    CHECK(permutation_to_perversity(Permutation::identity(4)) == Perversity::top(4));
    CHECK(permutation_to_perversity(Permutation::reversal(4)) == Perversity::zero(4));
    CHECK_THROWS_AS(permutation_to_perversity(Permutation::parse("0,2,1")), Error);
    for (const char* bad : {"1,1", "0,2", "0,1,0", "x"})
    {
        INFO(bad);
        CHECK_THROWS_AS(Perversity::parse(bad), Error);
    }
    for (int n = 0; n <= 6; ++n)
    {
        CHECK(all_perversities(n).size() == (std::size_t{1} << n));
        for (const Perversity& p : all_perversities(n))
        {
            Permutation pi = perversity_to_permutation(p);
            CHECK(is_v_shaped(pi).has_value());
            CHECK(permutation_to_perversity(pi) == p);
            DTable d(pi);
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j)
                    CHECK(d(i, j) == std::max(-1, std::min(j, i + j - n + p(n - j))));
        }
    }
}

TEST_CASE("reduction")
{
    CHECK(reduce(Permutation::parse("3,1,0,2")).str() == "2,0,1");
    for (int n = 1; n <= 6; ++n)
    {
        CHECK(reduce(Permutation::identity(n)) == Permutation::identity(n - 1));
        CHECK(reduce(Permutation::reversal(n)) == Permutation::reversal(n - 1));
        for (const Permutation& pi : all_permutations(n))
        {
            if (!is_allowable(pi).allowable)
                continue;
            Permutation red = reduce(pi);
            DTable d(pi), dr(red);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(dr(i - 1, j - 1) == std::max(-1, d(i, j) - 1));
            CHECK(is_allowable(red).allowable);
        }
    }
    // the identity needs allowability: here d'(0,0) = 0 but d(1,1) - 1 = -1
    Permutation odd = Permutation::parse("1,2,0");
    CHECK(DTable(reduce(odd))(0, 0) == 0);
    CHECK(DTable(odd)(1, 1) == 0);
    CHECK_THROWS_AS(reduce(Permutation::identity(0)), Error);
}
