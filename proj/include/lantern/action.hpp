#pragma once

#include <vector>

#include "lantern/free_word.hpp"

namespace lantern {

// Action of a planar mapping class on the free group F_n generated by the
// loops x_1..x_n around the inner boundary components, together with its
// action on the boundary-to-boundary arcs a_1..a_n, recorded as the prefixes
// u_i with a_i -> u_i . a_i.
//
// Composition convention: a twist word acts left to right (leftmost letter
// applied to the surface first), so compose(g, h) is "g then h" and its loop
// action is x -> h(g(x)).
//
// The pair (loop action, arc prefixes) determines the mapping class: loops
// and arcs together cut the surface to a disk (Alexander method). The arcs
// are what separates the central twists delta_i, which act trivially on all
// loops.
class MappingClassAction {
public:
    MappingClassAction(int n, std::vector<FreeWord> loop_images,
                       std::vector<FreeWord> arc_prefixes);

    static MappingClassAction identity(int n);

    int n() const { return n_; }
    const std::vector<FreeWord>& loop_images() const { return loop_images_; }
    const std::vector<FreeWord>& arc_prefixes() const { return arc_prefixes_; }

    // image of a word under the loop action
    FreeWord apply(const FreeWord& w) const;

    bool is_identity() const;

    bool operator==(const MappingClassAction&) const = default;

private:
    int n_ = 0;
    std::vector<FreeWord> loop_images_;
    std::vector<FreeWord> arc_prefixes_;
};

// "g then h"; throws on dimension mismatch
MappingClassAction compose(const MappingClassAction& g, const MappingClassAction& h);

// syntactic equality of reduced words on both loops and arcs
bool equal(const MappingClassAction& g, const MappingClassAction& h);

}  // namespace lantern
