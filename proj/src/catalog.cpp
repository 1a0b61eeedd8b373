#include "imprim/catalog.hpp"

#include "imprim/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace imprim {

GeneratedGroup symmetric_group(std::size_t n)
{
    std::vector<Point> swap(n), cycle(n);
    for (Point i = 0; i < n; ++i) {
        swap[i] = i;
        cycle[i] = static_cast<Point>((i + 1) % n);
    }
    if (n >= 2)
        std::swap(swap[0], swap[1]);
    return GeneratedGroup(n, {Permutation(swap), Permutation(cycle)});
}

GeneratedGroup dihedral_group(std::size_t n)
{
    std::vector<Point> rotate(n), reflect(n);
    for (Point i = 0; i < n; ++i) {
        rotate[i] = static_cast<Point>((i + 1) % n);
        reflect[i] = static_cast<Point>((n - i) % n);
    }
    return GeneratedGroup(n, {Permutation(rotate), Permutation(reflect)});
}

IncidenceStructure fano_plane()
{
    std::vector<Block> lines;
    for (Point i = 0; i < 7; ++i)
        lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
    return IncidenceStructure(7, lines);
}

namespace {
    // Petersen labelling of build_named_graph read as 2-subsets of {0..4}
    // (adjacent iff disjoint); S5 then acts on the subsets.
    GeneratedGroup petersen_group()
    {
        const std::vector<std::pair<Point, Point>> subsets{
            {0, 1}, {2, 3}, {0, 4}, {1, 2}, {3, 4}, {2, 4}, {1, 4}, {1, 3}, {0, 3}, {0, 2}};
        auto index = [&](Point a, Point b) {
            auto key = std::make_pair(std::min(a, b), std::max(a, b));
            return static_cast<Point>(std::find(subsets.begin(), subsets.end(), key) - subsets.begin());
        };
        auto s5 = symmetric_group(5);
        std::vector<Permutation> gens;
        for (const auto & g : s5.generators()) {
            std::vector<Point> images;
            for (auto [a, b] : subsets)
                images.push_back(index(g(a), g(b)));
            gens.emplace_back(std::move(images));
        }
        return GeneratedGroup(10, std::move(gens));
    }

    GeneratedGroup affine_line_group(std::size_t q)
    {
        // x -> x + 1 and x -> g x over Z/q with g = 2 (a generator mod 5)
        std::vector<Point> shift(q), scale(q);
        for (Point x = 0; x < q; ++x) {
            shift[x] = static_cast<Point>((x + 1) % q);
            scale[x] = static_cast<Point>((2 * x) % q);
        }
        return GeneratedGroup(q, {Permutation(shift), Permutation(scale)});
    }

    const ThreeArcOrbit & orbit_of_size(const std::vector<ThreeArcOrbit> & orbits, std::size_t size)
    {
        for (const auto & o : orbits)
            if (o.members.size() == size)
                return o;
        throw std::logic_error("no 3-arc orbit of size " + std::to_string(size));
    }

    long parse_number(const std::string & text, const std::string & key)
    {
        if (text.empty() || ! std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })
            || text.size() > 6)
            throw std::invalid_argument("malformed catalog key '" + key + "'");
        return std::stol(text);
    }
}

std::vector<CatalogInfo> catalog_listing()
{
    return {
        {"arc-pair-k5", "triple", "arcs of K5 matched to their reverses, S5, blocks by first vertex (p = 3)"},
        {"arc-pair-k5-affine", "triple", "same graph and blocks with AGL(1,5) of order 20 (p = 3)"},
        {"arc-pair-k7", "triple", "arcs of K7 matched to their reverses, S7 (p = 5)"},
        {"gamma2-k5", "triple", "2-path graph of K5 for the 3-arc orbit of size 120, S5 (p = 3)"},
        {"xi-k4", "triple", "3-arc graph of K4 for the orbit of 3-arcs with distinct ends, S4"},
        {"chain-N", "triple", "matched-cycle chain on N >= 3 blocks of six (p = 3)"},
        {"c6-antipodal", "triple", "6-cycle, dihedral group of order 12, antipodal pairs"},
        {"fano", "design", "Fano plane, lines {i, i+1, i+3} mod 7, with x -> x+1, x -> 2x"},
        {"affine-N-M", "design", "complements of the sets cH + d in GF(2^N), |H| = 2^(N-M)"},
        {"k4", "graph", "K4 with S4"},
        {"k5", "graph", "K5 with S5"},
        {"k7", "graph", "K7 with S7"},
        {"c6", "graph", "C6 with the dihedral group of order 12"},
        {"petersen", "graph", "Petersen graph with S5"},
    };
}

std::vector<std::string> catalog_triple_keys()
{
    return {"arc-pair-k5", "arc-pair-k5-affine", "arc-pair-k7", "gamma2-k5", "xi-k4", "chain-3", "chain-4",
        "c6-antipodal"};
}

CatalogEntry catalog_lookup(const std::string & key)
{
    CatalogEntry entry;
    auto triple = [&](SymmetricTriple t) {
        entry.kind = "triple";
        entry.triple = std::move(t);
        return entry;
    };
    auto graph = [&](Graph g, GeneratedGroup group) {
        entry.kind = "graph";
        entry.graph = std::move(g);
        entry.group = std::move(group);
        return entry;
    };

    if (key == "arc-pair-k5")
        return triple(arc_pair_triple(build_named_graph("complete", {5}), symmetric_group(5)));
    if (key == "arc-pair-k5-affine")
        return triple(arc_pair_triple(build_named_graph("complete", {5}), affine_line_group(5)));
    if (key == "arc-pair-k7")
        return triple(arc_pair_triple(build_named_graph("complete", {7}), symmetric_group(7)));
    if (key == "gamma2-k5") {
        auto k5 = build_named_graph("complete", {5});
        auto s5 = symmetric_group(5);
        return triple(gamma2_triple(k5, s5, orbit_of_size(three_arc_orbits(k5, s5), 120)));
    }
    if (key == "xi-k4") {
        auto k4 = build_named_graph("complete", {4});
        auto s4 = symmetric_group(4);
        for (const auto & o : three_arc_orbits(k4, s4))
            if (o.representative.front() != o.representative.back())
                return triple(three_arc_triple(k4, s4, o));
        throw std::logic_error("K4 has no 3-arc orbit with distinct ends");
    }
    if (key == "c6-antipodal")
        return triple(SymmetricTriple(build_named_graph("cycle", {6}), dihedral_group(6), {{0, 3}, {1, 4}, {2, 5}}));
    if (key.rfind("chain-", 0) == 0) {
        long n = parse_number(key.substr(6), key);
        if (n < 3)
            throw std::invalid_argument("chain-N needs N >= 3");
        return triple(matched_cycle_chain(n));
    }
    if (key == "fano") {
        entry.kind = "design";
        entry.design = fano_plane();
        std::vector<Point> shift(7), scale(7);
        for (Point x = 0; x < 7; ++x) {
            shift[x] = (x + 1) % 7;
            scale[x] = (2 * x) % 7;
        }
        entry.group = GeneratedGroup(7, {Permutation(shift), Permutation(scale)});
        return entry;
    }
    if (key.rfind("affine-", 0) == 0) {
        auto rest = key.substr(7);
        auto dash = rest.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("malformed catalog key '" + key + "'");
        auto n = parse_number(rest.substr(0, dash), key);
        auto m = parse_number(rest.substr(dash + 1), key);
        auto built = affine_orbit_design(static_cast<unsigned>(n), static_cast<unsigned>(m));
        entry.kind = "design";
        entry.design = std::move(built.design);
        entry.group = std::move(built.group);
        return entry;
    }
    if (key == "k4" || key == "k5" || key == "k7") {
        std::size_t n = static_cast<std::size_t>(key[1] - '0');
        return graph(build_named_graph("complete", {static_cast<long>(n)}), symmetric_group(n));
    }
    if (key == "c6")
        return graph(build_named_graph("cycle", {6}), dihedral_group(6));
    if (key == "petersen")
        return graph(build_named_graph("petersen", {}), petersen_group());
    throw std::invalid_argument("unknown catalog key '" + key + "'");
}

} // namespace imprim
