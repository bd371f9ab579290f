#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "hocolim/homology.hpp"

namespace oracle {

namespace {

// closure by repeated squaring-free sweeps until nothing changes
std::vector<std::size_t> classes_from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t x = 0; x < n; ++x)
        rel[x][x] = 1;
    for (auto [a, b] : pairs)
        rel[a][b] = rel[b][a] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (rel[a][b])
                    for (std::size_t c = 0; c < n; ++c)
                        if (rel[b][c] && !rel[a][c]) {
                            rel[a][c] = rel[c][a] = 1;
                            changed = true;
                        }
    }
    std::vector<std::size_t> cls(n, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
        if (cls[x] != SIZE_MAX)
            continue;
        for (std::size_t y = x; y < n; ++y)
            if (rel[x][y])
                cls[y] = next;
        ++next;
    }
    return cls;
}

std::vector<std::size_t> offsets(const hocolim::SetDiagram& d, std::size_t start)
{
    std::vector<std::size_t> off{start};
    for (const auto& o : d.objects)
        off.push_back(off.back() + o.size());
    return off;
}

void arrow_pairs(const hocolim::SetDiagram& d, const std::vector<std::size_t>& off,
                 std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    for (std::size_t e = 0; e < d.arrows.size(); ++e) {
        const auto& edge = d.shape.edge(e);
        for (std::size_t x = 0; x < d.arrows[e].dom(); ++x)
            pairs.push_back({off[edge.src] + x, off[edge.dst] + d.arrows[e](x)});
    }
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t base)
{
    for (std::size_t k = t.size(); k-- > 0;) {
        if (++t[k] < base)
            return true;
        t[k] = 0;
    }
    return false;
}

Integer permutation_det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    std::size_t k = rows.size();
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    Integer det = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (p[a] > p[b])
                    ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t a = 0; a < k; ++a)
            term *= m(rows[a], cols[p[a]]);
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    if (k > n)
        return;
    for (;;) {
        visit(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j)
            s[j] = s[j - 1] + 1;
    }
}

bool in_span_search(const IntMatrix& gens, const IntMatrix& target, std::size_t col, long bound)
{
    std::size_t n = gens.cols();
    std::vector<std::size_t> t(n, 0);
    std::size_t width = static_cast<std::size_t>(2 * bound + 1);
    do {
        bool ok = true;
        for (std::size_t r = 0; r < gens.rows() && ok; ++r) {
            Integer sum = 0;
            for (std::size_t c = 0; c < n; ++c)
                sum += gens(r, c) * (static_cast<long>(t[c]) - bound);
            ok = sum == target(r, col);
        }
        if (ok)
            return true;
    } while (n > 0 && next_tuple(t, width));
    return false;
}

}  // namespace

std::vector<std::size_t> colim_classes(const hocolim::SetDiagram& d)
{
    auto off = offsets(d, 0);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    arrow_pairs(d, off, pairs);
    return classes_from_pairs(off.back(), pairs);
}

std::vector<std::size_t> coslice_colim_classes(const hocolim::CosliceSetDiagram& d)
{
    std::size_t na = d.base.size();
    auto off = offsets(d.diagram, na);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    arrow_pairs(d.diagram, off, pairs);
    for (std::size_t i = 0; i < d.basepoints.size(); ++i)
        for (std::size_t a = 0; a < na; ++a)
            pairs.push_back({a, off[i] + d.basepoints[i](a)});
    return classes_from_pairs(off.back(), pairs);
}

std::vector<std::size_t> pushout_classes(const FinFun& f, const FinFun& g)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < f.dom(); ++c)
        pairs.push_back({f(c), f.cod + g(c)});
    return classes_from_pairs(f.cod + g.cod, pairs);
}

bool factorizations_unique(const FinFun& f, const hocolim::Factorization& given)
{
    std::size_t n = f.dom(), m = f.cod;
    for (std::size_t k = 0; k <= std::max(n, m); ++k) {
        std::vector<std::size_t> s(n, 0);
        if (n > 0 && k == 0)
            continue;
        do {
            FinFun sf{k, s};
            if (!sf.is_surjective())
                continue;
            // t is forced on the image of s
            std::vector<std::size_t> t(k, SIZE_MAX);
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x) {
                if (t[s[x]] == SIZE_MAX)
                    t[s[x]] = f(x);
                else if (t[s[x]] != f(x))
                    ok = false;
            }
            if (!ok || !FinFun{m, t}.is_injective())
                continue;
            if (k != given.image_size)
                return false;
            // count bijections phi: given image -> k with phi s0 = s and t phi = t0
            std::size_t compatible = 0;
            std::vector<std::size_t> phi(k);
            std::iota(phi.begin(), phi.end(), 0);
            do {
                bool good = true;
                for (std::size_t x = 0; x < n && good; ++x)
                    good = phi[given.surjection(x)] == s[x];
                for (std::size_t y = 0; y < k && good; ++y)
                    good = t[phi[y]] == given.injection(y);
                if (good)
                    ++compatible;
            } while (std::next_permutation(phi.begin(), phi.end()));
            if (compatible != 1)
                return false;
        } while (n > 0 && next_tuple(s, k));
    }
    return true;
}

std::vector<FinFun> fillers(const FinFun& l, const FinFun& r, const FinFun& top, const FinFun& bottom)
{
    std::size_t b = l.cod, c = r.dom();
    std::vector<FinFun> out;
    if (b > 0 && c == 0)
        return out;
    std::vector<std::size_t> t(b, 0);
    do {
        FinFun d{c, t};
        if (hocolim::compose(d, l) == top && hocolim::compose(r, d) == bottom)
            out.push_back(d);
    } while (b > 0 && next_tuple(t, c));
    return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& m)
{
    std::vector<Integer> out;
    Integer previous = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        Integer g = 0;
        for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                Integer det = permutation_det(m, rows, cols);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
            });
        });
        if (g == 0)
            break;
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

bool lattice_equal_search(const IntMatrix& a, const IntMatrix& b, long bound)
{
    if (a.rows() != b.rows())
        return false;
    for (std::size_t c = 0; c < b.cols(); ++c)
        if (!in_span_search(a, b, c, bound))
            return false;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!in_span_search(b, a, c, bound))
            return false;
    return true;
}

long exponent_sum(const std::vector<hocolim::SignedEdge>& word, std::size_t e)
{
    long s = 0;
    for (const auto& step : word)
        if (step.edge == e)
            s += step.sign;
    return s;
}

bool tree_by_homology(const hocolim::Graph& g)
{
    auto h = hocolim::homology_groups(hocolim::realize(g));
    return h.h0.rank == 1 && h.h1.is_trivial();
}

std::vector<hocolim::Walk> walks(const hocolim::Graph& g, std::size_t i, std::size_t j, std::size_t max_len)
{
    std::vector<hocolim::Walk> out;
    std::size_t ne = g.edge_count();
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && ne == 0)
            break;
        std::vector<std::size_t> seq(len, 0);
        do {
            std::size_t at = i;
            bool ok = true;
            for (auto e : seq) {
                if (g.edge(e).src != at) {
                    ok = false;
                    break;
                }
                at = g.edge(e).dst;
            }
            if (ok && at == j)
                out.push_back(hocolim::Walk{i, seq});
        } while (len > 0 && next_tuple(seq, ne));
    }
    std::sort(out.begin(), out.end(), [](const hocolim::Walk& a, const hocolim::Walk& b) { return a.steps < b.steps; });
    return out;
}

hocolim::FgAbelianGroup abelianized_pi1(const hocolim::TwoComplex& x)
{
    hocolim::Partition p = hocolim::pi0(x);
    std::vector<hocolim::Presentation> parts;
    std::size_t gens = 0, rels = 0;
    for (const auto& cls : p.classes) {
        parts.push_back(hocolim::pi1_presentation(x, cls.front()));
        gens += parts.back().generators.size();
        rels += parts.back().relators.size();
    }
    // one relator per row, block diagonal over components
    IntMatrix m(rels, gens);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& pr : parts) {
        for (std::size_t r = 0; r < pr.relators.size(); ++r)
            for (auto [gen, sign] : pr.relators[r])
                m(r0 + r, c0 + gen) += sign;
        r0 += pr.relators.size();
        c0 += pr.generators.size();
    }
    return hocolim::cokernel_group(m);
}

}  // namespace oracle
