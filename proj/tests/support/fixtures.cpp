#include "fixtures.hpp"

namespace fixtures {

using namespace hocolim;

ADiagramCx pointed_constant(const Graph& g, const std::vector<TwoComplex>& xs)
{
    ADiagramCx d;
    d.underlying.shape = g;
    d.base = share(TwoComplex::point());
    for (const auto& x : xs) {
        auto p = share(x);
        d.underlying.objects.push_back(p);
        d.basepoints.push_back(CellMap::constant(d.base, p, 0));
    }
    for (const auto& e : g.edges()) {
        d.underlying.arrows.push_back(
            CellMap::constant(d.underlying.objects[e.src], d.underlying.objects[e.dst], 0));
        d.pointedness.push_back({empty_word(0)});
    }
    return d;
}

}  // namespace fixtures
