/**
 * Built-in example complexes.
 */

#ifndef PERMHOM_CORPUS_HPP
#define PERMHOM_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>
#include "complex.hpp"
#include "errors.hpp"

namespace permhom::corpus {

/** The full n-simplex on vertices 0..n. */
inline SimplicialComplex simplex(int n)
{
    Simplex s;
    for (int v = 0; v <= n; ++v)
        s.push_back(v);
    return build_complex({s});
}

/** Boundary of the (n+1)-simplex, a combinatorial n-sphere. */
inline SimplicialComplex sphere(int n)
{
    Simplex full;
    for (int v = 0; v <= n + 1; ++v)
        full.push_back(v);
    return build_complex(facets_of(full));
}

/** Seven-vertex (Mobius/Csaszar) torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7. */
inline std::vector<Simplex> torus7_triangles()
{
    std::vector<Simplex> tris;
    for (int i = 0; i < 7; ++i)
    {
        tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
        tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return tris;
}

inline SimplicialComplex torus7() { return build_complex(torus7_triangles()); }

/** Six-vertex projective plane (hemi-icosahedron). */
inline SimplicialComplex rp2_6()
{
    return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/** Five-vertex Mobius band {i, i+1, i+2} mod 5; boundary is the pentagon of edges {i, i+2}. */
inline SimplicialComplex moebius()
{
    std::vector<Simplex> tris;
    for (int i = 0; i < 5; ++i)
        tris.push_back({i, (i + 1) % 5, (i + 2) % 5});
    return build_complex(tris);
}

inline SimplicialComplex moebius_boundary()
{
    std::vector<Simplex> edges;
    for (int i = 0; i < 5; ++i)
        edges.push_back({i, (i + 2) % 5});
    return build_complex(edges);
}

/** Three triangular pages glued along the spine edge [0,1]. */
inline SimplicialComplex book3()
{
    return build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
}

/**
 * Two 2-spheres sharing two points: the suspension of two disjoint
 * triangles (circles {2,3,4} and {5,6,7}) with poles 0 and 1.
 */
inline SimplicialComplex x_pp()
{
    std::vector<Simplex> tris;
    for (int base : {2, 5})
        for (int i = 0; i < 3; ++i)
        {
            int u = base + i, v = base + (i + 1) % 3;
            tris.push_back({0, u, v});
            tris.push_back({1, u, v});
        }
    return build_complex(tris);
}

/** Suspension of the seven-vertex torus with cone points 7 and 8. */
inline SimplicialComplex susp_torus()
{
    std::vector<Simplex> tets;
    for (const Simplex& t : torus7_triangles())
        for (int apex : {7, 8})
        {
            Simplex s = t;
            s.push_back(apex);
            tets.push_back(s);
        }
    return build_complex(tets);
}

/** Cone on the seven-vertex torus with apex 7. */
inline SimplicialComplex cone_torus()
{
    std::vector<Simplex> tets;
    for (Simplex t : torus7_triangles())
    {
        t.push_back(7);
        tets.push_back(t);
    }
    return build_complex(tets);
}

inline const std::vector<std::string>& names()
{
    static const std::vector<std::string> all = {
        "simplex1", "simplex2", "simplex3", "sphere1", "sphere2", "sphere3", "torus7",
        "rp2_6", "moebius", "book3", "x_pp", "susp_torus", "cone_torus"};
    return all;
}

/** Looks up a builtin by name; "rp2" is accepted as a short alias of rp2_6. */
inline std::optional<SimplicialComplex> find(const std::string& name)
{
    for (int n = 1; n <= 3; ++n)
    {
        if (name == "simplex" + std::to_string(n))
            return simplex(n);
        if (name == "sphere" + std::to_string(n))
            return sphere(n);
    }
    if (name == "torus7")
        return torus7();
    if (name == "rp2_6" || name == "rp2")
        return rp2_6();
    if (name == "moebius")
        return moebius();
    if (name == "book3")
        return book3();
    if (name == "x_pp")
        return x_pp();
    if (name == "susp_torus")
        return susp_torus();
    if (name == "cone_torus")
        return cone_torus();
    return std::nullopt;
}

inline SimplicialComplex get(const std::string& name)
{
    auto K = find(name);
    if (!K)
        throw Error(ErrorKind::UndefinedInput, "unknown builtin complex '" + name + "'");
    return *K;
}

}   // namespace permhom::corpus

#endif
