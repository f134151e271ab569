#pragma once

#include <string>
#include <vector>

#include "ietflip/iet.hpp"
#include "ietflip/orbits.hpp"
#include "ietflip/permutation.hpp"
#include "ietflip/rauzy.hpp"

namespace ietflip {

bool is_irreducible(const SignedPermutation& p);

struct Block {
    SignedPermutation v;   // local irreducible signed permutation
    int offset;            // entries preceding this block
    int size;
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    int s() const { return static_cast<int>(blocks.size()); }
};

// unique maximal splitting into irreducible blocks (s = 1 iff irreducible)
BlockDecomposition decompose(const SignedPermutation& q);
SignedPermutation recombine(const BlockDecomposition& d);

enum class ComponentKind { Periodic, Minimal };

struct Component {
    ComponentKind kind;
    IntervalSet support;       // periodic: the cycle intervals; minimal: maximal intervals
    int period = 0;            // periodic only; interval count, doubled on reversal
    bool flipped = false;      // periodic only
    Scalar witness;
    int first_return = 0;      // chase diagnostics, periodic only
    int orientation = 0;
};

struct ClassifyCaps {
    int rauzy_cap = 2000;        // induction steps per expansion; also the
                                 // saddle-connection scan depth
    int recursion_cap = 64;
    long piece_budget = 200000;  // total support pieces materialized
    bool with_periods = true;    // run the witness chase per periodic component
};

struct ComponentReport {
    int n = 0;
    int n_per = 0;
    int n_min = 0;
    std::vector<Component> components;          // sorted by leftmost support point
    std::vector<std::string> expansion_words;   // provenance, recursion order
    std::string summary() const;                // "n_per=<k> n_min=<l> bound=<n>"
};

// The decomposition pipeline: split off irreducible blocks, certify oriented
// blocks minimal via a depth-checked connection scan, induce flipped blocks
// until reducible and recurse, then pull supports back to the original
// coordinates through the recorded induction steps.
ComponentReport classify(const LengthVector& lambda, const SignedPermutation& p,
                         const ClassifyCaps& caps = {});

bool check_component_bound(const ComponentReport& report, int n);

// Structural checks used by the test harnesses.
// every minimal component contains a singular point strictly inside a piece
bool minimal_components_contain_singular(const ComponentReport& report, const Iet& t);
// every support boundary point lies on a saddle connection (verified against
// the connection scan at a depth matched to the boundary's own orbit)
bool boundaries_on_saddle_connections(const ComponentReport& report, const Iet& t,
                                      int cap);

} // namespace ietflip
