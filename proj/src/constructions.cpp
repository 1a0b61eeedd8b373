#include "imprim/constructions.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace imprim {

std::vector<ThreeArcOrbit> three_arc_orbits(const Graph & sigma, const GeneratedGroup & group)
{
    require_automorphisms(sigma, group);
    auto arcs = s_arcs(sigma, 3);
    std::vector<bool> seen(arcs.size(), false);
    auto index = [&](const SArc & a) {
        return static_cast<std::size_t>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
    };

    std::vector<ThreeArcOrbit> out;
    for (std::size_t start = 0; start < arcs.size(); ++start) {
        if (seen[start])
            continue;
        seen[start] = true;
        std::vector<std::size_t> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const auto & g : group.generators()) {
                SArc image(arcs[queue[head]]);
                for (auto & x : image)
                    x = g(x);
                auto idx = index(image);
                if (! seen[idx]) {
                    seen[idx] = true;
                    queue.push_back(idx);
                }
            }
        ThreeArcOrbit orbit;
        std::sort(queue.begin(), queue.end());
        for (auto idx : queue)
            orbit.members.push_back(arcs[idx]);
        orbit.representative = orbit.members.front();
        SArc reversed(orbit.representative.rbegin(), orbit.representative.rend());
        orbit.self_paired = std::binary_search(orbit.members.begin(), orbit.members.end(), reversed);
        out.push_back(std::move(orbit));
    }
    // the scan visits starts in increasing order, so representatives are already sorted
    return out;
}

namespace {
    void require_self_paired(const Graph & sigma, const ThreeArcOrbit & delta)
    {
        if (! delta.self_paired)
            throw NotSelfPaired("3-arc set is not closed under reversal");
        for (const auto & arc : delta.members) {
            if (arc.size() != 4 || arc[0] == arc[2] || arc[1] == arc[3] || ! sigma.has_edge(arc[0], arc[1])
                || ! sigma.has_edge(arc[1], arc[2]) || ! sigma.has_edge(arc[2], arc[3]))
                throw std::invalid_argument("member of the 3-arc set is not a 3-arc of the graph");
            SArc reversed(arc.rbegin(), arc.rend());
            if (! std::binary_search(delta.members.begin(), delta.members.end(), reversed))
                throw NotSelfPaired("reverse of a member is missing");
        }
    }

    std::vector<SArc> arcs_of(const Graph & sigma)
    {
        std::vector<SArc> out;
        for (Vertex x = 0; x < sigma.vertex_count(); ++x)
            for (auto y : sigma.neighbours(x))
                out.push_back({x, y});
        return out;
    }

    // Groups vertex indices by the entry of `vertices` at position `key`.
    Partition group_by(const std::vector<SArc> & vertices, std::size_t key)
    {
        std::map<Vertex, Block> groups;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            groups[vertices[i][key]].push_back(static_cast<Vertex>(i));
        Partition out;
        for (auto & [k, block] : groups)
            out.push_back(std::move(block));
        return canonical_partition(std::move(out));
    }

    Graph graph_from_pairs(std::size_t n, const std::set<Edge> & edges)
    {
        return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }

    Edge ordered(Vertex u, Vertex v)
    {
        return {std::min(u, v), std::max(u, v)};
    }

    SArc two_path(Vertex end1, Vertex middle, Vertex end2)
    {
        return {std::min(end1, end2), middle, std::max(end1, end2)};
    }

    bool by_middle(const SArc & x, const SArc & y)
    {
        return std::tie(x[1], x[0], x[2]) < std::tie(y[1], y[0], y[2]);
    }
}

LiftedGraph three_arc_graph(const Graph & sigma, const ThreeArcOrbit & delta)
{
    require_self_paired(sigma, delta);
    auto arcs = arcs_of(sigma);
    auto index = [&](Vertex x, Vertex y) {
        SArc a{x, y};
        return static_cast<Vertex>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin());
    };
    std::set<Edge> edges;
    for (const auto & d : delta.members)
        edges.insert(ordered(index(d[1], d[0]), index(d[2], d[3])));
    auto graph = graph_from_pairs(arcs.size(), edges);
    auto partition = group_by(arcs, 0);
    return {std::move(graph), std::move(partition), std::move(arcs)};
}

LiftedGraph gamma2_graph(const Graph & sigma, const ThreeArcOrbit & delta)
{
    require_self_paired(sigma, delta);
    auto valency = sigma.valency();
    if (valency < 2)
        throw NotRegular("2-path graph needs a regular graph of valency at least 2");

    std::vector<SArc> paths;
    for (Vertex m = 0; m < sigma.vertex_count(); ++m) {
        const auto & nbrs = sigma.neighbours(m);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                paths.push_back({nbrs[i], m, nbrs[j]});
    }
    std::sort(paths.begin(), paths.end(), by_middle);
    auto index = [&](const SArc & p) {
        return static_cast<Vertex>(std::lower_bound(paths.begin(), paths.end(), p, by_middle) - paths.begin());
    };

    std::set<Edge> edges;
    for (const auto & d : delta.members)
        edges.insert(ordered(index(two_path(d[0], d[1], d[2])), index(two_path(d[1], d[2], d[3]))));
    auto graph = graph_from_pairs(paths.size(), edges);
    auto partition = group_by(paths, 1);
    return {std::move(graph), std::move(partition), std::move(paths)};
}

LiftedGraph arc_pair_graph(const Graph & sigma)
{
    if (sigma.edge_count() == 0)
        throw std::invalid_argument("arc-pair graph needs at least one edge");
    auto arcs = arcs_of(sigma);
    std::set<Edge> edges;
    for (Vertex i = 0; i < arcs.size(); ++i) {
        SArc back{arcs[i][1], arcs[i][0]};
        auto j = static_cast<Vertex>(std::lower_bound(arcs.begin(), arcs.end(), back) - arcs.begin());
        edges.insert(ordered(i, j));
    }
    auto graph = graph_from_pairs(arcs.size(), edges);
    auto partition = group_by(arcs, 0);
    return {std::move(graph), std::move(partition), std::move(arcs)};
}

GeneratedGroup lift_group(const GeneratedGroup & group, const std::vector<SArc> & vertices)
{
    std::map<SArc, Point> index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[vertices[i]] = static_cast<Point>(i);
    std::vector<Permutation> gens;
    for (const auto & g : group.generators()) {
        std::vector<Point> images;
        for (const auto & v : vertices) {
            SArc image(v);
            for (auto & x : image)
                x = g(x);
            if (image.size() == 3)
                image = two_path(image[0], image[1], image[2]);
            auto it = index.find(image);
            if (it == index.end())
                throw NotAutomorphism("generator does not preserve the lifted vertex set");
            images.push_back(it->second);
        }
        gens.emplace_back(std::move(images));
    }
    return GeneratedGroup(vertices.size(), std::move(gens));
}

SymmetricTriple arc_pair_triple(const Graph & sigma, const GeneratedGroup & group)
{
    require_automorphisms(sigma, group);
    auto lifted = arc_pair_graph(sigma);
    return SymmetricTriple(lifted.graph, lift_group(group, lifted.vertices), lifted.partition);
}

SymmetricTriple three_arc_triple(const Graph & sigma, const GeneratedGroup & group, const ThreeArcOrbit & delta)
{
    require_automorphisms(sigma, group);
    auto lifted = three_arc_graph(sigma, delta);
    return SymmetricTriple(lifted.graph, lift_group(group, lifted.vertices), lifted.partition);
}

SymmetricTriple gamma2_triple(const Graph & sigma, const GeneratedGroup & group, const ThreeArcOrbit & delta)
{
    require_automorphisms(sigma, group);
    auto lifted = gamma2_graph(sigma, delta);
    return SymmetricTriple(lifted.graph, lift_group(group, lifted.vertices), lifted.partition);
}

SymmetricTriple matched_cycle_chain(long n)
{
    if (n < 3)
        throw std::invalid_argument("matched cycle chain needs at least 3 blocks");
    auto graph = build_named_graph("matched-cycle-chain", {n});
    const auto blocks = static_cast<Point>(n);
    const auto size = 6 * blocks;
    std::vector<Point> rotate(size), spin(size), reflect(size);
    for (Point i = 0; i < blocks; ++i)
        for (Point j = 0; j < 3; ++j) {
            Point back = (blocks - i) % blocks;
            rotate[6 * i + j] = 6 * ((i + 1) % blocks) + j;
            rotate[6 * i + 3 + j] = 6 * ((i + 1) % blocks) + 3 + j;
            spin[6 * i + j] = 6 * i + (j + 1) % 3;
            spin[6 * i + 3 + j] = 6 * i + 3 + (j + 1) % 3;
            reflect[6 * i + j] = 6 * back + 3 + j;
            reflect[6 * i + 3 + j] = 6 * back + j;
        }
    GeneratedGroup group(size, {Permutation(rotate), Permutation(spin), Permutation(reflect)});
    Partition partition;
    for (Point i = 0; i < blocks; ++i)
        partition.push_back({6 * i, 6 * i + 1, 6 * i + 2, 6 * i + 3, 6 * i + 4, 6 * i + 5});
    return SymmetricTriple(std::move(graph), std::move(group), std::move(partition));
}

namespace {
    unsigned poly_degree(std::uint32_t p)
    {
        unsigned d = 0;
        while (p >>= 1)
            ++d;
        return d;
    }

    std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m)
    {
        const auto dm = poly_degree(m);
        while (a != 0 && poly_degree(a) >= dm)
            a ^= m << (poly_degree(a) - dm);
        return a;
    }
}

std::uint32_t BinaryField::default_modulus(unsigned n)
{
    switch (n) {
    case 2:
        return 0b111;
    case 3:
        return 0b1011;
    case 4:
        return 0b10011;
    case 5:
        return 0b100101;
    case 6:
        return 0b1000011;
    case 7:
        return 0b10000011;
    case 8:
        return 0b100011011;
    default:
        throw std::invalid_argument("GF(2^n) is supported for 2 <= n <= 8, got n = " + std::to_string(n));
    }
}

bool BinaryField::is_irreducible(std::uint32_t poly)
{
    const auto d = poly_degree(poly);
    if (d == 0)
        return false;
    for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f)
        if (poly_mod(poly, f) == 0)
            return false;
    return true;
}

BinaryField::BinaryField(unsigned n, std::optional<std::uint32_t> modulus) :
    n_(n),
    modulus_(modulus ? *modulus : default_modulus(n))
{
    if (n < 2 || n > 8)
        throw std::invalid_argument("GF(2^n) is supported for 2 <= n <= 8, got n = " + std::to_string(n));
    if (poly_degree(modulus_) != n || ! is_irreducible(modulus_))
        throw std::invalid_argument("modulus " + std::to_string(modulus_) + " is not an irreducible polynomial of degree "
            + std::to_string(n));
}

std::uint32_t BinaryField::mul(std::uint32_t x, std::uint32_t y) const
{
    std::uint32_t out = 0;
    for (; y != 0; y >>= 1) {
        if (y & 1)
            out ^= x;
        x <<= 1;
        if (x & size())
            x ^= modulus_;
    }
    return out;
}

std::uint32_t BinaryField::pow(std::uint32_t x, std::uint64_t e) const
{
    std::uint32_t out = 1;
    for (; e != 0; e >>= 1) {
        if (e & 1)
            out = mul(out, x);
        x = mul(x, x);
    }
    return out;
}

std::uint32_t BinaryField::inv(std::uint32_t x) const
{
    if (x == 0)
        throw std::domain_error("zero has no inverse");
    return pow(x, size() - 2);
}

std::uint32_t BinaryField::multiplicative_order(std::uint32_t x) const
{
    if (x == 0)
        throw std::domain_error("zero has no multiplicative order");
    std::uint32_t order = 1;
    for (auto y = x; y != 1; y = mul(y, x))
        ++order;
    return order;
}

std::uint32_t BinaryField::primitive_element() const
{
    for (std::uint32_t g = 2; g < size(); ++g)
        if (multiplicative_order(g) == size() - 1)
            return g;
    return 1; // GF(2) only; unreachable for n >= 2
}

AffineDesign affine_orbit_design(unsigned n, unsigned m, const AffineDesignOptions & options)
{
    if (n < 2 || n > 8)
        throw std::invalid_argument("affine orbit design needs 2 <= n <= 8, got n = " + std::to_string(n));
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("affine orbit design needs 1 <= m <= n-1, got m = " + std::to_string(m));
    BinaryField field(n, options.modulus);
    const auto q = field.size();

    std::vector<std::uint32_t> basis;
    if (options.subspace_basis)
        basis = *options.subspace_basis;
    else
        for (unsigned i = 0; i < n - m; ++i)
            basis.push_back(std::uint32_t{1} << i);
    if (basis.size() != n - m)
        throw std::invalid_argument("subspace basis must have n - m elements");

    std::set<std::uint32_t> span{0};
    for (auto b : basis) {
        if (b >= q)
            throw std::invalid_argument("subspace basis element outside the field");
        std::set<std::uint32_t> next(span);
        for (auto x : span)
            next.insert(x ^ b);
        span = std::move(next);
    }
    if (span.size() != (std::size_t{1} << (n - m)))
        throw std::invalid_argument("subspace basis is linearly dependent");

    std::set<Block> images;
    for (std::uint32_t c = 1; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
            Block image;
            for (auto h : span)
                image.push_back(field.mul(c, h) ^ d);
            std::sort(image.begin(), image.end());
            images.insert(std::move(image));
        }
    std::vector<Block> blocks;
    for (const auto & image : images) {
        Block complement;
        for (Point x = 0; x < q; ++x)
            if (! std::binary_search(image.begin(), image.end(), x))
                complement.push_back(x);
        blocks.push_back(std::move(complement));
    }

    std::vector<Permutation> gens;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Point> images_of(q);
        for (Point x = 0; x < q; ++x)
            images_of[x] = x ^ (Point{1} << i);
        gens.emplace_back(std::move(images_of));
    }
    const auto g = field.primitive_element();
    std::vector<Point> scale(q);
    for (Point x = 0; x < q; ++x)
        scale[x] = field.mul(g, x);
    gens.emplace_back(std::move(scale));

    return {IncidenceStructure(q, std::move(blocks)), GeneratedGroup(q, std::move(gens))};
}

} // namespace imprim
