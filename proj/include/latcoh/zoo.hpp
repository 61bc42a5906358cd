#pragma once

#include "latcoh/finabgroup.hpp"
#include "latcoh/lattice.hpp"

#include <string>
#include <vector>

namespace latcoh {

// Named lattice, addressable from the CLI as one of
//   L++  L+-  L-+  L--  R  A  radR  aug  Na  Nb  Nab
// with an optional @k suffix for the k-th AR translate (e.g. "A@-2").
struct ZooName {
    enum class Kind { luv, regular, overring, radr, aug, induced };
    Kind kind = Kind::regular;
    int u = 1, v = 1; // luv signs, +1 or -1
    int subgroup = 0; // induced: 0 = a, 1 = b, 2 = ab
    int k = 0;        // AR-translate power

    std::string to_string() const;
    static ZooName parse(const std::string& text); // BadParameters on bad input

    ZooName base() const {
        ZooName b = *this;
        b.k = 0;
        return b;
    }

    bool operator==(const ZooName& o) const {
        return kind == o.kind && u == o.u && v == o.v && subgroup == o.subgroup && k == o.k;
    }
};

// The eleven untranslated names in CLI listing order.
std::vector<ZooName> zoo_base_names();

// Build the lattice for a name (memoized, translate applied last).
Lattice zoo_build(const ZooName& name);

// A = R + Z*(tr/p), on the basis {e = tr/p} followed by the nonidentity group
// elements; contains the regular lattice with index p.
Lattice minimal_overring(const GroupSpec& G);

// One closed-form cohomology value. Pure formula evaluation; no lattice work.
struct Prediction {
    enum class Kind { prop6, thmpj, prop3, tube_hom, tube_special };
    Kind kind = Kind::prop6;
    int n = 0;                  // degree
    int u = 1, v = 1;           // prop6 / thmpj character signs
    bool base_overring = false; // thmpj over A (true) or over L_uv (false)
    int k = 0;                  // thmpj translate power; tube level
    long p = 2;                 // prop3
    int s = 2;                  // prop3
    int d = 1;                  // tube_hom: degree of the parametrizing polynomial
    int i = 1;                  // tube_special branch, 1 or 2

    static Prediction prop6(int u, int v, int n);
    static Prediction thmpj_overring(int k, int n);
    static Prediction thmpj_luv(int u, int v, int k, int n);
    static Prediction prop3(long p, int s, int n);
    static Prediction tube_hom(int d, int k, int n);
    static Prediction tube_special(int i, int k, int n);
};

FinAbGroup predict(const Prediction& pred);

} // namespace latcoh
