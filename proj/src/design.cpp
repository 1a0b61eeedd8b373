#include "imprim/design.hpp"

#include "imprim/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace imprim {

IncidenceStructure::IncidenceStructure(std::size_t point_count, std::vector<Block> blocks,
    std::vector<std::uint32_t> labels) :
    point_count_(point_count)
{
    if (! labels.empty() && labels.size() != blocks.size())
        throw std::invalid_argument("labels must be parallel to blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto & block = blocks[i];
        std::sort(block.begin(), block.end());
        if (std::adjacent_find(block.begin(), block.end()) != block.end())
            throw std::invalid_argument("block " + std::to_string(i) + " repeats a point");
        if (! block.empty() && block.back() >= point_count)
            throw std::invalid_argument("block " + std::to_string(i) + " contains point " + std::to_string(block.back())
                + " outside 0.." + std::to_string(point_count) + "-1");
    }
    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
        if (blocks[x] != blocks[y])
            return blocks[x] < blocks[y];
        return ! labels.empty() && labels[x] < labels[y];
    });
    for (auto i : order) {
        blocks_.push_back(std::move(blocks[i]));
        if (! labels.empty())
            labels_.push_back(labels[i]);
    }
}

IncidenceStructure IncidenceStructure::complement() const
{
    std::vector<Block> out;
    for (const auto & block : blocks_) {
        Block c;
        for (Point x = 0; x < point_count_; ++x)
            if (! std::binary_search(block.begin(), block.end(), x))
                c.push_back(x);
        out.push_back(std::move(c));
    }
    return IncidenceStructure(point_count_, std::move(out), labels_);
}

IncidenceStructure IncidenceStructure::dual() const
{
    std::vector<Block> out(point_count_);
    std::vector<std::uint32_t> labels(point_count_);
    for (std::size_t j = 0; j < blocks_.size(); ++j)
        for (auto x : blocks_[j])
            out[x].push_back(static_cast<Point>(j));
    std::iota(labels.begin(), labels.end(), 0);
    return IncidenceStructure(blocks_.size(), std::move(out), std::move(labels));
}

IncidenceStructure IncidenceStructure::relabel_points(const std::vector<Point> & map) const
{
    if (map.size() != point_count_)
        throw std::invalid_argument("relabelling map has the wrong length");
    std::vector<Block> out;
    for (const auto & block : blocks_) {
        Block b;
        for (auto x : block)
            b.push_back(map[x]);
        out.push_back(std::move(b));
    }
    return IncidenceStructure(point_count_, std::move(out), labels_);
}

IncidenceStructure design_from_triple(const SymmetricTriple & t, std::size_t block, DesignKind kind)
{
    if (block >= t.partition.size())
        throw std::invalid_argument("block index " + std::to_string(block) + " out of range");
    auto table = compute_traces(t.graph, t.partition);
    const auto & nbrs = table.neighbour_blocks[block];
    if (nbrs.empty())
        throw PreconditionError("block " + std::to_string(block) + " has no neighbouring block");
    const auto & members = t.partition[block];

    std::vector<Block> blocks;
    std::vector<std::uint32_t> labels;
    if (kind == DesignKind::base || kind == DesignKind::complement) {
        for (auto c : nbrs) {
            const auto & trace = table.trace(block, c);
            Block local;
            for (Point i = 0; i < members.size(); ++i)
                if (std::binary_search(trace.begin(), trace.end(), members[i]) == (kind == DesignKind::base))
                    local.push_back(i);
            blocks.push_back(std::move(local));
            labels.push_back(static_cast<std::uint32_t>(c));
        }
        return IncidenceStructure(members.size(), std::move(blocks), std::move(labels));
    }

    for (auto alpha : members) {
        const auto & seen = table.vertex_blocks[alpha];
        Block local;
        for (Point j = 0; j < nbrs.size(); ++j)
            if (std::binary_search(seen.begin(), seen.end(), nbrs[j]) == (kind == DesignKind::dual))
                local.push_back(j);
        blocks.push_back(std::move(local));
        labels.push_back(alpha);
    }
    return IncidenceStructure(nbrs.size(), std::move(blocks), std::move(labels));
}

namespace {
    std::size_t binomial(std::size_t n, std::size_t k)
    {
        if (k > n)
            return 0;
        std::size_t out = 1;
        for (std::size_t i = 1; i <= k; ++i)
            out = out * (n - k + i) / i;
        return out;
    }

    void for_each_subset(const Block & block, std::size_t t, const std::function<void(const Block &)> & visit)
    {
        Block current;
        auto rec = [&](auto & self, std::size_t start) -> void {
            if (current.size() == t) {
                visit(current);
                return;
            }
            for (std::size_t i = start; i + (t - current.size()) <= block.size(); ++i) {
                current.push_back(block[i]);
                self(self, i + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
    }
}

std::optional<DesignParameters> is_t_design(const IncidenceStructure & d, std::size_t t)
{
    if (t == 0 || t > d.point_count() || d.blocks().empty())
        return std::nullopt;
    const auto k = d.blocks().front().size();
    for (const auto & block : d.blocks())
        if (block.size() != k)
            return std::nullopt;

    DesignParameters out{t, d.point_count(), k, 0, d.blocks().size(), 0};
    if (k >= t) {
        std::map<Block, std::size_t> counts;
        for (const auto & block : d.blocks())
            for_each_subset(block, t, [&](const Block & s) { ++counts[s]; });
        if (counts.size() != binomial(d.point_count(), t))
            return std::nullopt;
        out.lambda = counts.begin()->second;
        for (const auto & [subset, count] : counts)
            if (count != out.lambda)
                return std::nullopt;
    }

    std::vector<std::size_t> through(d.point_count(), 0);
    for (const auto & block : d.blocks())
        for (auto x : block)
            ++through[x];
    if (std::adjacent_find(through.begin(), through.end(), std::not_equal_to<>()) != through.end())
        return std::nullopt;
    out.replication = through.front();

    if (out.lambda * binomial(out.v, t) != out.block_count * binomial(k, t))
        throw std::logic_error("design counting identity failed");
    return out;
}

namespace {
    // Extends a partial point map one point at a time, keeping for every block
    // the set of assignment steps whose point it contains. A partial map can
    // only extend to an isomorphism if the two multisets of these masks agree.
    class IsomorphismSearch
    {
    public:
        IsomorphismSearch(const IncidenceStructure & first, const IncidenceStructure & second) :
            first_(first),
            second_(second),
            mask1_(first.blocks().size(), 0),
            mask2_(second.blocks().size(), 0),
            incident1_(first.point_count()),
            incident2_(second.point_count()),
            map_(first.point_count()),
            used_(second.point_count(), false)
        {
            for (std::size_t j = 0; j < first.blocks().size(); ++j)
                for (auto x : first.blocks()[j])
                    incident1_[x].push_back(j);
            for (std::size_t j = 0; j < second.blocks().size(); ++j)
                for (auto x : second.blocks()[j])
                    incident2_[x].push_back(j);
        }

        /// Calls `found` for every isomorphism until it returns false.
        void run(const std::function<bool(const DesignIsomorphism &)> & found)
        {
            if (! compatible())
                return;
            found_ = &found;
            stop_ = false;
            extend(0);
        }

    private:
        bool compatible() const
        {
            if (first_.point_count() != second_.point_count() || first_.blocks().size() != second_.blocks().size())
                return false;
            auto sizes = [](const IncidenceStructure & d) {
                std::vector<std::size_t> out;
                for (const auto & b : d.blocks())
                    out.push_back(b.size());
                std::sort(out.begin(), out.end());
                return out;
            };
            auto degrees = [](const std::vector<std::vector<std::size_t>> & inc) {
                std::vector<std::size_t> out;
                for (const auto & i : inc)
                    out.push_back(i.size());
                std::sort(out.begin(), out.end());
                return out;
            };
            return sizes(first_) == sizes(second_) && degrees(incident1_) == degrees(incident2_);
        }

        bool masks_agree() const
        {
            std::vector<std::pair<std::uint64_t, std::size_t>> a, b;
            for (std::size_t j = 0; j < mask1_.size(); ++j)
                a.emplace_back(mask1_[j], first_.blocks()[j].size());
            for (std::size_t j = 0; j < mask2_.size(); ++j)
                b.emplace_back(mask2_[j], second_.blocks()[j].size());
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
        }

        void extend(std::size_t step)
        {
            if (stop_)
                return;
            if (step == first_.point_count()) {
                emit();
                return;
            }
            const auto x = static_cast<Point>(step);
            const std::uint64_t bit = std::uint64_t{1} << step;
            for (Point y = 0; y < second_.point_count() && ! stop_; ++y) {
                if (used_[y] || incident1_[x].size() != incident2_[y].size())
                    continue;
                for (auto j : incident1_[x])
                    mask1_[j] |= bit;
                for (auto j : incident2_[y])
                    mask2_[j] |= bit;
                if (masks_agree()) {
                    used_[y] = true;
                    map_[x] = y;
                    extend(step + 1);
                    used_[y] = false;
                }
                for (auto j : incident1_[x])
                    mask1_[j] &= ~bit;
                for (auto j : incident2_[y])
                    mask2_[j] &= ~bit;
            }
        }

        void emit()
        {
            DesignIsomorphism iso{map_, std::vector<std::size_t>(mask1_.size())};
            std::vector<bool> taken(mask2_.size(), false);
            for (std::size_t j = 0; j < mask1_.size(); ++j)
                for (std::size_t i = 0; i < mask2_.size(); ++i)
                    if (! taken[i] && mask2_[i] == mask1_[j]) {
                        taken[i] = true;
                        iso.blocks[j] = i;
                        break;
                    }
            stop_ = ! (*found_)(iso);
        }

        const IncidenceStructure & first_;
        const IncidenceStructure & second_;
        std::vector<std::uint64_t> mask1_, mask2_;
        std::vector<std::vector<std::size_t>> incident1_, incident2_;
        std::vector<Point> map_;
        std::vector<bool> used_;
        const std::function<bool(const DesignIsomorphism &)> * found_ = nullptr;
        bool stop_ = false;
    };

    void require_searchable(const IncidenceStructure & d)
    {
        if (d.point_count() > isomorphism_point_limit)
            throw TooLarge("isomorphism search is limited to " + std::to_string(isomorphism_point_limit) + " points, got "
                + std::to_string(d.point_count()));
    }
}

std::optional<DesignIsomorphism> design_isomorphic(const IncidenceStructure & first, const IncidenceStructure & second)
{
    require_searchable(first);
    require_searchable(second);
    std::optional<DesignIsomorphism> out;
    IsomorphismSearch(first, second).run([&](const DesignIsomorphism & iso) {
        out = iso;
        return false;
    });
    return out;
}

std::vector<Permutation> design_automorphisms(const IncidenceStructure & d, std::size_t bound)
{
    require_searchable(d);
    std::vector<Permutation> out;
    IsomorphismSearch(d, d).run([&](const DesignIsomorphism & iso) {
        if (out.size() == bound)
            throw ExceedsBound("more than " + std::to_string(bound) + " design automorphisms");
        out.emplace_back(iso.points);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

AutomorphismReport two_transitive_automorphism_check(const IncidenceStructure & d, const GeneratedGroup & group,
    std::size_t bound)
{
    if (group.degree() != d.point_count())
        throw std::invalid_argument("group degree " + std::to_string(group.degree()) + " differs from point count "
            + std::to_string(d.point_count()));
    for (std::size_t i = 0; i < group.generators().size(); ++i)
        if (d.relabel_points(group.generators()[i].images()) != d)
            throw NotAutomorphism("generator " + std::to_string(i) + " does not permute the blocks");

    AutomorphismReport report;
    report.group_order = group.order(bound);

    std::vector<Point> points(d.point_count());
    std::iota(points.begin(), points.end(), 0);
    report.point_two_transitive = d.point_count() >= 2 && is_k_transitive(group, points, 2);

    std::vector<Block> distinct(d.blocks().begin(), d.blocks().end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto image = [&](const Permutation & g, const Block & block) {
        Block out;
        for (auto x : block)
            out.push_back(g(x));
        std::sort(out.begin(), out.end());
        return out;
    };

    if (distinct.empty())
        return report;

    std::set<Block> reached{distinct.front()};
    std::vector<Block> queue{distinct.front()};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto & g : group.generators()) {
            auto next = image(g, queue[head]);
            if (reached.insert(next).second)
                queue.push_back(next);
        }
    report.block_transitive = reached.size() == distinct.size();

    std::size_t flags = 0;
    for (const auto & block : distinct)
        flags += block.size();
    if (flags == 0)
        return report;
    using Flag = std::pair<Point, Block>;
    Flag start{distinct.front().front(), distinct.front()};
    std::set<Flag> seen{start};
    std::vector<Flag> fqueue{start};
    for (std::size_t head = 0; head < fqueue.size(); ++head)
        for (const auto & g : group.generators()) {
            Flag next{g(fqueue[head].first), image(g, fqueue[head].second)};
            if (seen.insert(next).second)
                fqueue.push_back(next);
        }
    report.flag_transitive = seen.size() == flags;
    return report;
}

} // namespace imprim
