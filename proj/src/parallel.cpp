#include "kcenter/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace kcenter {

bool dominates(const Configuration& c1, const Configuration& c2) {
    if (c1.count <= c2.count - 2) return true;
    if (c1.count == c2.count) return c1.x1 >= c2.x1 && c1.x2 >= c2.x2;
    if (c1.count == c2.count - 1) return c1.x1 >= c2.x1 || c1.x2 >= c2.x2;
    return false;
}

FrontierSet::FrontierSet() {
    blocks_[0].emplace(kAbsent, Entry{kAbsent, nullptr});
    configs_created_ = 1;
}

std::size_t FrontierSet::size() const {
    std::size_t n = 0;
    for (const auto& [cnt, blk] : blocks_) n += blk.size();
    return n;
}

std::vector<Configuration> FrontierSet::members() const {
    std::vector<Configuration> out;
    out.reserve(size());
    for (const auto& [cnt, blk] : blocks_)
        for (const auto& [x1, e] : blk) out.push_back(Configuration{x1, e.x2, cnt, e.chain});
    return out;
}

std::optional<std::string> FrontierSet::check_invariants() const {
    if (blocks_.empty()) return "frontier is empty";
    const int zmin = blocks_.begin()->first;
    const int zmax = blocks_.rbegin()->first;
    if (zmax - zmin > 1) {
        std::ostringstream os;
        os << "counts spread over more than two values: " << zmin << ".." << zmax;
        return os.str();
    }
    const auto ms = members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const auto& a = ms[i];
            const auto& b = ms[j];
            if (a.count == b.count) {
                const bool cross = (a.x1 < b.x1 && a.x2 > b.x2) || (a.x1 > b.x1 && a.x2 < b.x2);
                if (!cross) {
                    std::ostringstream os;
                    os << "equal-count members do not cross: (" << a.x1 << "," << a.x2 << ";"
                       << a.count << ") vs (" << b.x1 << "," << b.x2 << ";" << b.count << ")";
                    return os.str();
                }
            } else {
                const auto& hi = a.count > b.count ? a : b;
                const auto& lo = a.count > b.count ? b : a;
                if (!(hi.x1 > lo.x1 && hi.x2 > lo.x2)) {
                    std::ostringstream os;
                    os << "higher-count member not strictly above lower-count one: (" << hi.x1
                       << "," << hi.x2 << ";" << hi.count << ") vs (" << lo.x1 << "," << lo.x2
                       << ";" << lo.count << ")";
                    return os.str();
                }
            }
            if (dominates(a, b) || dominates(b, a)) {
                std::ostringstream os;
                os << "domination inside frontier: (" << a.x1 << "," << a.x2 << ";" << a.count
                   << ") vs (" << b.x1 << "," << b.x2 << ";" << b.count << ")";
                return os.str();
            }
        }
    }
    return std::nullopt;
}

FrontierSet FrontierSet::from_members(const std::vector<Configuration>& configs) {
    FrontierSet f;
    f.blocks_.clear();
    f.configs_created_ = 0;
    for (const auto& c : configs) {
        f.blocks_[c.count].emplace(c.x1, Entry{c.x2, c.chain});
        ++f.configs_created_;
    }
    return f;
}

const PierceChain* FrontierSet::extend_chain(const PierceChain* parent, LineTag line, double pos) {
    if (is_absent(pos)) return parent;  // nothing was evicted
    const int len = parent ? parent->length + 1 : 1;
    arena_.push_back(PierceChain{line, pos, parent, len});
    return &arena_.back();
}

bool FrontierSet::dominated_by_member(const Configuration& cand) const {
    for (const auto& [cnt, blk] : blocks_) {
        if (blk.empty()) continue;
        if (cnt <= cand.count - 2) return true;
        if (cnt == cand.count) {
            // Among members with x1 >= cand.x1 the smallest such x1 carries
            // the largest x2, so one lookup decides componentwise domination.
            auto it = blk.lower_bound(cand.x1);
            if (it != blk.end() && it->second.x2 >= cand.x2) return true;
        } else if (cnt == cand.count - 1) {
            if (blk.rbegin()->first >= cand.x1) return true;       // max x1
            if (blk.begin()->second.x2 >= cand.x2) return true;    // max x2
        }
    }
    return false;
}

void FrontierSet::remove_members_dominated_by(const Configuration& cand) {
    for (auto& [cnt, blk] : blocks_) {
        if (cnt >= cand.count + 2) {
            blk.clear();
        } else if (cnt == cand.count) {
            // x1 <= cand.x1 and x2 <= cand.x2 is a tail of the x1-prefix.
            auto it = blk.upper_bound(cand.x1);
            while (it != blk.begin()) {
                auto prev = std::prev(it);
                if (prev->second.x2 > cand.x2) break;
                blk.erase(prev);
            }
        } else if (cnt == cand.count + 1) {
            auto it = blk.begin();
            while (it != blk.end() && it->first <= cand.x1) it = blk.erase(it);
            while (!blk.empty()) {
                auto last = std::prev(blk.end());
                if (last->second.x2 > cand.x2) break;
                blk.erase(last);
            }
        }
    }
    drop_empty_blocks();
}

void FrontierSet::insert_if_not_dominated(const Configuration& cand) {
    if (dominated_by_member(cand)) return;
    remove_members_dominated_by(cand);
    blocks_[cand.count].emplace(cand.x1, Entry{cand.x2, cand.chain});
    ++configs_created_;
}

void FrontierSet::drop_empty_blocks() {
    for (auto it = blocks_.begin(); it != blocks_.end();) {
        if (it->second.empty())
            it = blocks_.erase(it);
        else
            ++it;
    }
}

namespace {

// Between two candidates sharing their first (or second) component the
// domination order is total; prefer c1 on full ties.
const Configuration& pick_dominating(const Configuration& c1, const Configuration& c2) {
    if (dominates(c1, c2)) return c1;
    assert(dominates(c2, c1));
    return c2;
}

}  // namespace

void apply_nonbuddy(FrontierSet& f, const Interval& j, LineTag line) {
    std::vector<FrontierSet::Deleted> del_low, del_high;

    for (auto& [cnt, blk] : f.blocks_) {
        if (line == LineTag::L1) {
            auto it = blk.begin();
            while (it != blk.end() && it->first < j.lo) {
                del_low.push_back({cnt, it->first, it->second.x2, it->second.chain});
                it = blk.erase(it);
            }
            while (!blk.empty()) {
                auto last = std::prev(blk.end());
                if (!(last->first > j.hi)) break;
                del_high.push_back({cnt, last->first, last->second.x2, last->second.chain});
                blk.erase(last);
            }
        } else {
            // The L2 component decreases as x1 grows, so low-side deletions
            // sit at the block tail and high-side ones at the head.
            while (!blk.empty()) {
                auto last = std::prev(blk.end());
                if (!(last->second.x2 < j.lo)) break;
                del_low.push_back({cnt, last->first, last->second.x2, last->second.chain});
                blk.erase(last);
            }
            auto it = blk.begin();
            while (it != blk.end() && it->second.x2 > j.hi) {
                del_high.push_back({cnt, it->first, it->second.x2, it->second.chain});
                it = blk.erase(it);
            }
        }
    }
    f.drop_empty_blocks();

    const auto key = [line](const FrontierSet::Deleted& d) { return line == LineTag::L1 ? d.x1 : d.x2; };
    std::optional<Configuration> fresh, clamped;
    if (!del_low.empty()) {
        const auto& c = *std::min_element(del_low.begin(), del_low.end(),
                                          [&](const auto& a, const auto& b) { return key(a) < key(b); });
        if (line == LineTag::L1)
            fresh = Configuration{j.hi, c.x2, c.count + 1, f.extend_chain(c.chain, LineTag::L1, c.x1)};
        else
            fresh = Configuration{c.x1, j.hi, c.count + 1, f.extend_chain(c.chain, LineTag::L2, c.x2)};
    }
    if (!del_high.empty()) {
        const auto& c = *std::min_element(del_high.begin(), del_high.end(),
                                          [&](const auto& a, const auto& b) { return key(a) < key(b); });
        if (line == LineTag::L1)
            clamped = Configuration{j.hi, c.x2, c.count, c.chain};
        else
            clamped = Configuration{c.x1, j.hi, c.count, c.chain};
    }

    if (fresh && clamped)
        f.insert_if_not_dominated(pick_dominating(*clamped, *fresh));
    else if (fresh)
        f.insert_if_not_dominated(*fresh);
    else if (clamped)
        f.insert_if_not_dominated(*clamped);
}

void apply_buddy(FrontierSet& f, const Interval& j1, const Interval& j2) {
    std::vector<FrontierSet::Deleted> deleted;

    // A configuration survives iff its rightmost stab on some line can pierce
    // the new point's interval there. Deletions are the ones outside both
    // intervals; inside a count block they form up to four contiguous runs.
    for (auto& [cnt, blk] : f.blocks_) {
        auto grab = [&](FrontierSet::Block::iterator it) {
            deleted.push_back({cnt, it->first, it->second.x2, it->second.chain});
            return blk.erase(it);
        };
        // x1 < lo(J1), x2 > hi(J2): head of the block.
        auto it = blk.begin();
        while (it != blk.end() && it->first < j1.lo && it->second.x2 > j2.hi) it = grab(it);
        // x1 < lo(J1), x2 < lo(J2): tail of the x1-prefix below J1.
        auto bound = blk.lower_bound(j1.lo);
        while (bound != blk.begin()) {
            auto prev = std::prev(bound);
            if (!(prev->second.x2 < j2.lo)) break;
            grab(prev);
        }
        // x1 > hi(J1), x2 > hi(J2): head of the x1-suffix above J1.
        it = blk.upper_bound(j1.hi);
        while (it != blk.end() && it->second.x2 > j2.hi) it = grab(it);
        // x1 > hi(J1), x2 < lo(J2): block tail.
        while (!blk.empty()) {
            auto last = std::prev(blk.end());
            if (!(last->first > j1.hi && last->second.x2 < j2.lo)) break;
            grab(last);
        }
    }
    f.drop_empty_blocks();
    if (deleted.empty()) return;

    auto best = [&](auto&& in_group, auto&& key) {
        std::optional<FrontierSet::Deleted> out;
        for (const auto& d : deleted) {
            if (!in_group(d)) continue;
            if (!out || key(d) < key(*out)) out = d;
        }
        return out;
    };

    // Two candidates per line, as in the non-buddy update; the pair per line
    // is totally ordered by domination.
    std::optional<Configuration> on_l1, on_l2;
    {
        auto low = best([&](const auto& d) { return d.x1 < j1.lo; },
                        [](const auto& d) { return d.x1; });
        auto high = best([&](const auto& d) { return d.x1 > j1.hi; },
                         [](const auto& d) { return d.x1; });
        std::optional<Configuration> fresh, clamped;
        if (low)
            fresh = Configuration{j1.hi, low->x2, low->count + 1,
                                  f.extend_chain(low->chain, LineTag::L1, low->x1)};
        if (high) clamped = Configuration{j1.hi, high->x2, high->count, high->chain};
        if (fresh && clamped)
            on_l1 = pick_dominating(*clamped, *fresh);
        else if (fresh)
            on_l1 = fresh;
        else if (clamped)
            on_l1 = clamped;
    }
    {
        auto low = best([&](const auto& d) { return d.x2 < j2.lo; },
                        [](const auto& d) { return d.x2; });
        auto high = best([&](const auto& d) { return d.x2 > j2.hi; },
                         [](const auto& d) { return d.x2; });
        std::optional<Configuration> fresh, clamped;
        if (low)
            fresh = Configuration{low->x1, j2.hi, low->count + 1,
                                  f.extend_chain(low->chain, LineTag::L2, low->x2)};
        if (high) clamped = Configuration{high->x1, j2.hi, high->count, high->chain};
        if (fresh && clamped)
            on_l2 = pick_dominating(*clamped, *fresh);
        else if (fresh)
            on_l2 = fresh;
        else if (clamped)
            on_l2 = clamped;
    }

    if (on_l1) f.insert_if_not_dominated(*on_l1);
    if (on_l2) f.insert_if_not_dominated(*on_l2);
}

Configuration extract_best(const FrontierSet& f) {
    assert(!f.blocks_.empty());
    const auto& [cnt, blk] = *f.blocks_.begin();
    const auto& [x1, e] = *blk.begin();
    return Configuration{x1, e.x2, cnt, e.chain};
}

std::vector<std::pair<LineTag, double>> reconstruct_solution(const Configuration& c) {
    std::vector<std::pair<LineTag, double>> stabs;
    stabs.reserve((c.chain ? static_cast<std::size_t>(c.chain->length) : 0) + 2);
    for (const PierceChain* node = c.chain; node; node = node->parent)
        stabs.emplace_back(node->line, node->position);
    std::reverse(stabs.begin(), stabs.end());
    if (!is_absent(c.x1)) stabs.emplace_back(LineTag::L1, c.x1);
    if (!is_absent(c.x2)) stabs.emplace_back(LineTag::L2, c.x2);
    return stabs;
}

FeasibilityResult decide_parallel(const Instance& inst, double r, const DecideOptions& opts) {
    FeasibilityResult res;
    FrontierSet frontier;
    res.stats.max_frontier = 1;

    for (const auto& p : inst.points) {
        const auto j1 = interval_on_horizontal_line(p, inst.layout.y1, r);
        const auto j2 = interval_on_horizontal_line(p, inst.layout.y2, r);
        if (!j1 && !j2) {
            res.feasible = false;
            res.stats.configs_created = frontier.configs_created();
            return res;  // the point reaches neither line at this radius
        }
        if (j1 && j2)
            apply_buddy(frontier, *j1, *j2);
        else if (j1)
            apply_nonbuddy(frontier, *j1, LineTag::L1);
        else
            apply_nonbuddy(frontier, *j2, LineTag::L2);

        res.stats.max_frontier = std::max(res.stats.max_frontier, frontier.size());
        if (opts.check_invariants && !res.invariant_violation) {
            if (auto bad = frontier.check_invariants()) {
                std::ostringstream os;
                os << "after point " << p.id << ": " << *bad;
                res.invariant_violation = os.str();
            }
        }
    }

    const Configuration best = extract_best(frontier);
    res.min_count = best.count;
    res.feasible = best.count <= inst.k;
    res.stats.configs_created = frontier.configs_created();

    if (res.feasible && opts.want_witness) {
        Solution sol;
        sol.radius = r;
        for (const auto& [line, pos] : reconstruct_solution(best))
            sol.centers.push_back(make_center(inst.layout, line, pos));
        res.solution = std::move(sol);
    }
    return res;
}

}  // namespace kcenter
