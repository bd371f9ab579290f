#include "hocolim/homology.hpp"

#include "hocolim/errors.hpp"

namespace hocolim {

ChainData chain_data(const TwoComplex& x)
{
    ChainData c{IntMatrix(x.vertex_count(), x.edge_count()), IntMatrix(x.edge_count(), x.face_count())};
    for (std::size_t e = 0; e < x.edge_count(); ++e) {
        const auto& edge = x.edge(e);
        c.d1(edge.src, e) -= 1;
        c.d1(edge.dst, e) += 1;
    }
    for (std::size_t f = 0; f < x.face_count(); ++f)
        for (const auto& s : x.face(f).boundary)
            c.d2(s.edge, f) += s.sign;
    return c;
}

HomologyGroups homology_groups(const TwoComplex& x)
{
    return {cokernel_group(chain_data(x).d1.transpose()), h1_data(x).group};
}

FgAbelianGroup cohomology_h1(const TwoComplex& x)
{
    ChainData c = chain_data(x);
    IntMatrix d2t = c.d2.transpose();
    SmithForm s = smith_normal_form(d2t);
    const std::size_t m = x.edge_count() - s.rank;
    // Coboundaries of 0-cochains, in coordinates on the cocycle basis.
    IntMatrix coords = s.V_inv.row_block(s.rank, m) * c.d1.transpose();
    return cokernel_group(coords.transpose());
}

H1Data h1_data(const TwoComplex& x)
{
    ChainData c = chain_data(x);
    SmithForm s1 = smith_normal_form(c.d1);
    const std::size_t k = x.edge_count() - s1.rank;

    H1Data h;
    h.kernel = s1.V.column_block(s1.rank, k);
    h.coordinates = s1.V_inv.row_block(s1.rank, k);
    h.relations = h.coordinates * c.d2;
    h.snf = smith_normal_form(h.relations);
    for (std::size_t t = 0; t < k; ++t) {
        if (t < h.snf.rank) {
            const Integer& d = h.snf.D(t, t);
            if (d == 1)
                continue;
            h.generators.push_back(t);
            h.orders.push_back(d);
            h.group.torsion.push_back(d);
        } else {
            h.generators.push_back(t);
            h.orders.push_back(0);
            ++h.group.rank;
        }
    }
    return h;
}

IntMatrix chain_map_1(const CellMap& f)
{
    IntMatrix m(f.target->edge_count(), f.source->edge_count());
    for (std::size_t e = 0; e < f.edge_map.size(); ++e)
        for (const auto& s : f.edge_map[e].steps)
            m(s.edge, e) += s.sign;
    return m;
}

InducedH1 induced_h1(const CellMap& f) { return induced_h1(f, h1_data(*f.source), h1_data(*f.target)); }

InducedH1 induced_h1(const CellMap& f, const H1Data& hs, const H1Data& ht)
{
    f.validate();
    IntMatrix chain = chain_map_1(f);
    IntMatrix face_images = ht.coordinates * (chain * chain_data(*f.source).d2);
    if (!lattice_contains(ht.relations, face_images))
        throw ValidationError("induced_h1: a face boundary maps to a cycle that does not bound in the target");

    InducedH1 out;
    out.source = hs.group;
    out.target = ht.group;
    out.cycle_matrix = ht.coordinates * chain * hs.kernel;

    IntMatrix full = ht.snf.U * out.cycle_matrix * hs.snf.U_inv;
    out.matrix = IntMatrix(ht.generators.size(), hs.generators.size());
    for (std::size_t r = 0; r < ht.generators.size(); ++r)
        for (std::size_t c = 0; c < hs.generators.size(); ++c) {
            Integer v = full(ht.generators[r], hs.generators[c]);
            if (ht.orders[r] != 0)
                mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), ht.orders[r].get_mpz_t());
            out.matrix(r, c) = v;
        }

    out.surjective = cokernel_group(out.cycle_matrix.hconcat(ht.relations).transpose()).is_trivial();
    // A surjection between isomorphic finitely generated abelian groups is
    // an isomorphism.
    out.isomorphism = out.surjective && out.source == out.target;
    return out;
}

IntMatrix h1_dual_lattice(const H1Data& h) { return integer_kernel(h.relations.transpose()); }

}  // namespace hocolim
