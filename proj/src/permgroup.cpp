#include "imprim/permgroup.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace imprim {

namespace {
    std::vector<Point> sorted_unique(std::span<const Point> xs)
    {
        std::vector<Point> out(xs.begin(), xs.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    struct TupleHash
    {
        std::size_t operator()(const std::vector<Point> & t) const noexcept
        {
            std::size_t h = 1469598103934665603ull;
            for (auto x : t)
                h = (h ^ x) * 1099511628211ull;
            return h;
        }
    };
}

Permutation::Permutation(std::vector<Point> images) :
    images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x])
            throw std::invalid_argument("permutation image array is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i)
        images[i] = static_cast<Point>(i);
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>> & cycles)
{
    auto images = identity(degree).images_;
    std::vector<bool> used(degree, false);
    for (const auto & cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Point x = cycle[i];
            if (x >= degree || used[x])
                throw std::invalid_argument("cycles are not disjoint or leave the domain");
            used[x] = true;
            images[x] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

std::size_t PermutationHash::operator()(const Permutation & p) const noexcept
{
    return TupleHash{}(p.images());
}

Permutation compose(const Permutation & p, const Permutation & q)
{
    if (p.degree() != q.degree())
        throw std::invalid_argument("cannot compose permutations of degree " + std::to_string(p.degree()) + " and "
            + std::to_string(q.degree()));
    std::vector<Point> images(p.degree());
    for (std::size_t x = 0; x < images.size(); ++x)
        images[x] = p(q(static_cast<Point>(x)));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation & p)
{
    std::vector<Point> images(p.degree());
    for (std::size_t x = 0; x < images.size(); ++x)
        images[p(static_cast<Point>(x))] = static_cast<Point>(x);
    return Permutation(std::move(images));
}

Permutation compose_inverse(const Permutation & p, const std::optional<Permutation> & q)
{
    return q ? compose(p, *q) : inverse(p);
}

GeneratedGroup::GeneratedGroup(std::size_t degree, std::vector<Permutation> generators) :
    degree_(degree),
    generators_(std::move(generators)),
    cache_(std::make_shared<Cache>())
{
    if (degree_ == 0)
        throw std::invalid_argument("group degree must be positive");
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].degree() != degree_)
            throw std::invalid_argument("generator " + std::to_string(i) + " has degree "
                + std::to_string(generators_[i].degree()) + ", expected " + std::to_string(degree_));
}

GeneratedGroup GeneratedGroup::from_elements(std::size_t degree, std::vector<Permutation> elements)
{
    std::sort(elements.begin(), elements.end());
    GeneratedGroup g(degree, elements);
    g.cache_->elements = std::move(elements);
    return g;
}

GeneratedGroup GeneratedGroup::trivial(std::size_t degree)
{
    return from_elements(degree, {Permutation::identity(degree)});
}

const std::vector<Permutation> & GeneratedGroup::elements(std::size_t bound) const
{
    std::lock_guard lock(cache_->mutex);
    if (! cache_->elements)
        cache_->elements = enumerate_group(*this, bound).elements;
    else if (cache_->elements->size() > bound)
        throw ExceedsBound("group of order " + std::to_string(cache_->elements->size()) + " exceeds bound "
            + std::to_string(bound));
    return *cache_->elements;
}

bool GeneratedGroup::has_cached_elements() const
{
    std::lock_guard lock(cache_->mutex);
    return cache_->elements.has_value();
}

Enumeration enumerate_group(const GeneratedGroup & group, std::size_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("enumeration bound must be at least 1");

    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> elements;
    auto id = Permutation::identity(group.degree());
    seen.insert(id);
    elements.push_back(id);

    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto & gen : group.generators()) {
            auto next = compose(gen, elements[head]);
            if (seen.insert(next).second) {
                if (elements.size() >= bound)
                    throw ExceedsBound("group closure exceeds bound of " + std::to_string(bound) + " elements");
                elements.push_back(std::move(next));
            }
        }
    }

    std::sort(elements.begin(), elements.end());
    Enumeration result;
    result.order = elements.size();
    result.elements = std::move(elements);
    return result;
}

std::vector<Point> orbit(const GeneratedGroup & group, Point point)
{
    if (point >= group.degree())
        throw std::out_of_range("point " + std::to_string(point) + " outside degree " + std::to_string(group.degree()));
    std::vector<bool> seen(group.degree(), false);
    std::vector<Point> out{point};
    seen[point] = true;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto & gen : group.generators()) {
            Point y = gen(out[head]);
            if (! seen[y]) {
                seen[y] = true;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Point>> orbits(const GeneratedGroup & group)
{
    std::vector<bool> seen(group.degree(), false);
    std::vector<std::vector<Point>> out;
    for (Point x = 0; x < group.degree(); ++x) {
        if (seen[x])
            continue;
        auto o = orbit(group, x);
        for (auto y : o)
            seen[y] = true;
        out.push_back(std::move(o));
    }
    return out;
}

bool is_k_transitive(const GeneratedGroup & group, std::span<const Point> domain_in, std::size_t k)
{
    auto domain = sorted_unique(domain_in);
    if (k > domain.size())
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds domain size " + std::to_string(domain.size()));
    for (auto x : domain)
        if (x >= group.degree())
            throw std::out_of_range("domain point outside group degree");
    for (std::size_t i = 0; i < group.generators().size(); ++i)
        for (auto x : domain)
            if (! std::binary_search(domain.begin(), domain.end(), group.generators()[i](x)))
                throw NotInvariant("generator " + std::to_string(i) + " maps domain point " + std::to_string(x)
                    + " outside the domain");
    if (k == 0)
        return true;

    // number of ordered k-tuples of distinct points, saturating
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t f = domain.size() - i;
        if (total > std::numeric_limits<std::size_t>::max() / f)
            return false;
        total *= f;
    }

    std::vector<Point> start(domain.begin(), domain.begin() + static_cast<std::ptrdiff_t>(k));
    std::unordered_set<std::vector<Point>, TupleHash> seen{start};
    std::deque<std::vector<Point>> queue{start};
    while (! queue.empty() && seen.size() < total) {
        auto t = std::move(queue.front());
        queue.pop_front();
        for (const auto & gen : group.generators()) {
            std::vector<Point> u(k);
            for (std::size_t i = 0; i < k; ++i)
                u[i] = gen(t[i]);
            if (seen.insert(u).second)
                queue.push_back(std::move(u));
        }
    }
    return seen.size() == total;
}

std::size_t transitivity_degree(const GeneratedGroup & group, std::span<const Point> domain, std::size_t max_k)
{
    std::size_t limit = std::min(max_k, sorted_unique(domain).size());
    std::size_t k = 0;
    while (k < limit && is_k_transitive(group, domain, k + 1))
        ++k;
    return k;
}

GeneratedGroup stabilizer(const GeneratedGroup & group, std::span<const Point> target_in, StabilizerMode mode,
    std::size_t bound)
{
    auto target = sorted_unique(target_in);
    if (mode == StabilizerMode::point && target.size() != 1)
        throw std::invalid_argument("point stabilizer needs exactly one target point");
    for (auto x : target)
        if (x >= group.degree())
            throw std::out_of_range("stabilizer target outside group degree");

    std::vector<Permutation> kept;
    for (const auto & g : group.elements(bound)) {
        bool keep = true;
        for (auto x : target) {
            Point y = g(x);
            if (mode == StabilizerMode::setwise ? ! std::binary_search(target.begin(), target.end(), y) : y != x) {
                keep = false;
                break;
            }
        }
        if (keep)
            kept.push_back(g);
    }
    return GeneratedGroup::from_elements(group.degree(), std::move(kept));
}

ActionTable::ActionTable(GeneratedGroup group, std::size_t domain_size, std::vector<std::vector<Point>> rows) :
    group_(std::move(group)),
    domain_size_(domain_size),
    rows_(std::move(rows))
{
    if (domain_size_ == 0)
        throw std::invalid_argument("action domain must be nonempty");
    if (rows_.size() != group_.generators().size())
        throw std::invalid_argument("action table needs one row per generator");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != domain_size_)
            throw std::invalid_argument("action row " + std::to_string(i) + " has wrong length");
        std::vector<bool> seen(domain_size_, false);
        for (auto x : rows_[i]) {
            if (x >= domain_size_ || seen[x])
                throw std::invalid_argument("action row " + std::to_string(i) + " is not a bijection");
            seen[x] = true;
        }
    }
}

GeneratedGroup ActionTable::image_group() const
{
    std::vector<Permutation> gens;
    gens.reserve(rows_.size());
    for (const auto & row : rows_)
        gens.emplace_back(row);
    return GeneratedGroup(domain_size_, std::move(gens));
}

bool ActionTable::is_homomorphism(std::size_t bound) const
{
    // Enumerate the diagonal subgroup of G x Sym(domain); every g must appear with one image only.
    std::unordered_map<Permutation, Permutation, PermutationHash> image_of;
    std::vector<std::pair<Permutation, Permutation>> queue;
    auto start = std::make_pair(Permutation::identity(group_.degree()), Permutation::identity(domain_size_));
    image_of.emplace(start.first, start.second);
    queue.push_back(start);

    std::vector<Permutation> row_perms;
    for (const auto & row : rows_)
        row_perms.emplace_back(row);

    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto g = compose(group_.generators()[i], queue[head].first);
            auto a = compose(row_perms[i], queue[head].second);
            auto [it, inserted] = image_of.emplace(g, a);
            if (! inserted) {
                if (it->second != a)
                    return false;
                continue;
            }
            if (queue.size() >= bound)
                throw ExceedsBound("homomorphism check exceeds bound of " + std::to_string(bound) + " elements");
            queue.emplace_back(std::move(g), std::move(a));
        }
    }
    return true;
}

ActionTable restricted_action(const GeneratedGroup & group, std::span<const Point> domain_in)
{
    auto domain = sorted_unique(domain_in);
    std::vector<std::vector<Point>> rows;
    for (std::size_t i = 0; i < group.generators().size(); ++i) {
        const auto & gen = group.generators()[i];
        std::vector<Point> row(domain.size());
        for (std::size_t j = 0; j < domain.size(); ++j) {
            auto it = std::lower_bound(domain.begin(), domain.end(), gen(domain[j]));
            if (it == domain.end() || *it != gen(domain[j]))
                throw NotInvariant("generator " + std::to_string(i) + " does not preserve the domain");
            row[j] = static_cast<Point>(it - domain.begin());
        }
        rows.push_back(std::move(row));
    }
    return ActionTable(group, domain.size(), std::move(rows));
}

ActionTable block_action(const GeneratedGroup & group, const std::vector<std::vector<Point>> & blocks)
{
    std::vector<std::size_t> block_of(group.degree(), blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("empty block");
        for (auto x : blocks[b]) {
            if (x >= group.degree() || block_of[x] != blocks.size())
                throw std::invalid_argument("blocks do not form a partition of the domain");
            block_of[x] = b;
        }
    }
    for (auto b : block_of)
        if (b == blocks.size())
            throw std::invalid_argument("blocks do not cover the domain");

    std::vector<std::vector<Point>> rows;
    for (std::size_t i = 0; i < group.generators().size(); ++i) {
        const auto & gen = group.generators()[i];
        std::vector<Point> row(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            std::size_t target = block_of[gen(blocks[b].front())];
            for (auto x : blocks[b])
                if (block_of[gen(x)] != target || blocks[target].size() != blocks[b].size())
                    throw NotInvariant("generator " + std::to_string(i) + " splits block " + std::to_string(b)
                        + " (point " + std::to_string(x) + ")");
            row[b] = static_cast<Point>(target);
        }
        rows.push_back(std::move(row));
    }
    return ActionTable(group, blocks.size(), std::move(rows));
}

InducedAction induced_action(const GeneratedGroup & group, const std::vector<std::vector<Point>> & blocks,
    std::size_t bound)
{
    auto action = block_action(group, blocks);
    std::vector<std::size_t> block_of(group.degree());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto x : blocks[b])
            block_of[x] = b;

    std::vector<Permutation> kernel;
    for (const auto & g : group.elements(bound)) {
        bool fixes = true;
        for (const auto & block : blocks)
            if (block_of[g(block.front())] != block_of[block.front()]) {
                fixes = false;
                break;
            }
        if (fixes)
            kernel.push_back(g);
    }
    return InducedAction{std::move(action), GeneratedGroup::from_elements(group.degree(), std::move(kernel))};
}

namespace {
    // Orbit of (x, y) under the diagonal action; nothing unless it is the graph of an injective map
    // avoiding `used`.
    std::optional<std::vector<std::pair<Point, Point>>> diagonal_orbit(const ActionTable & a, const ActionTable & b,
        Point x, Point y, const std::vector<bool> & used)
    {
        std::map<Point, Point> forward;
        std::set<Point> targets;
        std::vector<std::pair<Point, Point>> out{{x, y}};
        forward[x] = y;
        targets.insert(y);
        for (std::size_t head = 0; head < out.size(); ++head)
            for (std::size_t g = 0; g < a.rows().size(); ++g) {
                Point u = a.image(g, out[head].first), w = b.image(g, out[head].second);
                auto it = forward.find(u);
                if (it != forward.end()) {
                    if (it->second != w)
                        return std::nullopt;
                    continue;
                }
                if (used[w] || ! targets.insert(w).second)
                    return std::nullopt;
                forward[u] = w;
                out.emplace_back(u, w);
            }
        return out;
    }

    bool extend(const ActionTable & a, const ActionTable & b, const std::vector<std::vector<Point>> & orbit_reps,
        std::size_t next, std::vector<Point> & rho, std::vector<bool> & used)
    {
        if (next == orbit_reps.size())
            return true;
        Point x = orbit_reps[next].front();
        for (Point y = 0; y < b.domain_size(); ++y) {
            if (used[y])
                continue;
            auto graph = diagonal_orbit(a, b, x, y, used);
            if (! graph || graph->size() != orbit_reps[next].size())
                continue;
            for (auto [u, w] : *graph) {
                rho[u] = w;
                used[w] = true;
            }
            if (extend(a, b, orbit_reps, next + 1, rho, used))
                return true;
            for (auto [u, w] : *graph)
                used[w] = false;
        }
        return false;
    }
}

std::optional<std::vector<Point>> equivariant_bijection(const ActionTable & first, const ActionTable & second)
{
    if (first.group().degree() != second.group().degree()
        || first.group().generators() != second.group().generators())
        throw std::invalid_argument("equivariant_bijection needs two actions of the same group");
    if (first.domain_size() != second.domain_size())
        return std::nullopt;

    auto reps = orbits(first.image_group());
    std::vector<Point> rho(first.domain_size());
    std::vector<bool> used(second.domain_size(), false);
    if (! extend(first, second, reps, 0, rho, used))
        return std::nullopt;
    return rho;
}

} // namespace imprim
