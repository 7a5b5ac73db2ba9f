#include "lantern/action.hpp"

#include <cstdlib>
#include <stdexcept>

namespace lantern {

MappingClassAction::MappingClassAction(int n, std::vector<FreeWord> loop_images,
                                       std::vector<FreeWord> arc_prefixes)
    : n_(n), loop_images_(std::move(loop_images)), arc_prefixes_(std::move(arc_prefixes)) {
    if (n < 0 || loop_images_.size() != static_cast<std::size_t>(n) ||
        arc_prefixes_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("action dimension mismatch");
    for (const auto& w : loop_images_)
        if (w.max_index() > n)
            throw std::invalid_argument("loop image uses generator beyond n");
    for (const auto& w : arc_prefixes_)
        if (w.max_index() > n)
            throw std::invalid_argument("arc prefix uses generator beyond n");
}

MappingClassAction MappingClassAction::identity(int n) {
    std::vector<FreeWord> loops, arcs;
    loops.reserve(n);
    arcs.resize(n);
    for (int i = 1; i <= n; ++i)
        loops.push_back(FreeWord::generator(i));
    return MappingClassAction(n, std::move(loops), std::move(arcs));
}

FreeWord MappingClassAction::apply(const FreeWord& w) const {
    FreeWord out;
    for (int g : w.letters()) {
        int idx = std::abs(g);
        if (idx > n_)
            throw std::invalid_argument("word uses generator beyond n");
        const FreeWord& img = loop_images_[idx - 1];
        if (g > 0) {
            for (int h : img.letters())
                out.push_reduced(h);
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
                out.push_reduced(-*it);
        }
    }
    return out;
}

bool MappingClassAction::is_identity() const {
    for (int i = 1; i <= n_; ++i) {
        if (loop_images_[i - 1] != FreeWord::generator(i))
            return false;
        if (!arc_prefixes_[i - 1].empty())
            return false;
    }
    return true;
}

MappingClassAction compose(const MappingClassAction& g, const MappingClassAction& h) {
    if (g.n() != h.n())
        throw std::invalid_argument("composing actions of different dimension");
    std::vector<FreeWord> loops, arcs;
    loops.reserve(g.n());
    arcs.reserve(g.n());
    for (int i = 0; i < g.n(); ++i) {
        loops.push_back(h.apply(g.loop_images()[i]));
        arcs.push_back(h.apply(g.arc_prefixes()[i]) * h.arc_prefixes()[i]);
    }
    return MappingClassAction(g.n(), std::move(loops), std::move(arcs));
}

bool equal(const MappingClassAction& g, const MappingClassAction& h) {
    if (g.n() != h.n())
        throw std::invalid_argument("comparing actions of different dimension");
    return g == h;
}

}  // namespace lantern
