#include "ietflip/classify.hpp"

#include <algorithm>

namespace ietflip {

bool is_irreducible(const SignedPermutation& p) { return p.irreducible(); }

BlockDecomposition decompose(const SignedPermutation& q) {
    BlockDecomposition out;
    const int n = q.n();
    int start = 0;
    int seen_max = 0;
    for (int i = 1; i <= n; ++i) {
        seen_max = std::max(seen_max, q.pi(i));
        if (seen_max == i) {
            std::vector<int> local;
            local.reserve(i - start);
            for (int j = start + 1; j <= i; ++j)
                local.push_back(q.theta(j) * (q.pi(j) - start));
            out.blocks.push_back({SignedPermutation(std::move(local)), start, i - start});
            start = i;
        }
    }
    return out;
}

SignedPermutation recombine(const BlockDecomposition& d) {
    std::vector<int> entries;
    for (const auto& block : d.blocks)
        for (int i = 1; i <= block.v.n(); ++i)
            entries.push_back(block.v.theta(i) * (block.v.pi(i) + block.offset));
    return SignedPermutation(entries);
}

std::string ComponentReport::summary() const {
    return "n_per=" + std::to_string(n_per) + " n_min=" + std::to_string(n_min) +
           " bound=" + std::to_string(n);
}

bool check_component_bound(const ComponentReport& report, int n) {
    return report.n_per + 2 * report.n_min <= n;
}

namespace {

const Scalar& scalar_min(const Scalar& a, const Scalar& b) {
    return Scalar::cmp(a, b) <= 0 ? a : b;
}
const Scalar& scalar_max(const Scalar& a, const Scalar& b) {
    return Scalar::cmp(a, b) >= 0 ? a : b;
}

struct Ctx {
    const ClassifyCaps& caps;
    long pieces_used = 0;
    std::vector<std::string> words;

    void charge(long count) {
        pieces_used += count;
        if (pieces_used > caps.piece_budget)
            throw CapExceeded("support piece budget exhausted");
    }
};

IntervalSet merge_adjacent(IntervalSet pieces) {
    sort_intervals(pieces);
    IntervalSet out;
    for (auto& p : pieces) {
        if (!out.empty() && out.back().hi == p.lo) out.back().hi = p.hi;
        else out.push_back(std::move(p));
    }
    return out;
}

// S := S union (T(S) beyond the induction cut); the first-return structure of
// one induction step brings everything back after a single excursion
IntervalSet pull_back_once(const Iet& t, const Scalar& xi, const IntervalSet& s, Ctx& ctx) {
    IntervalSet out = s;
    for (const auto& piece : s) {
        Scalar lo = piece.lo;
        while (lo < piece.hi) {
            int i = 1;
            while (Scalar::cmp(t.breakpoint(i), lo) <= 0) ++i;
            Interval part{lo, scalar_min(piece.hi, t.breakpoint(i))};
            Interval img = t.map_interval(part, i);
            if (img.hi > xi) {
                Interval keep{scalar_max(img.lo, xi), img.hi};
                if (keep.lo < keep.hi) out.push_back(std::move(keep));
            }
            lo = part.hi;
        }
    }
    ctx.charge(static_cast<long>(out.size()));
    sort_intervals(out);
    return out;
}

std::vector<Component> classify_rec(const LengthVector& lambda, const SignedPermutation& p,
                                    Ctx& ctx, int depth) {
    if (depth > ctx.caps.recursion_cap) throw CapExceeded("recursion depth exhausted");
    const int n = p.n();
    const BasisPtr& basis = lambda.basis();

    if (p.irreducible()) {
        if (n == 1) {
            Interval whole{Scalar(basis), lambda.at(1)};
            Component c;
            c.kind = ComponentKind::Periodic;
            c.witness = whole.midpoint();
            c.support = {std::move(whole)};
            c.orientation = p.theta(1);
            c.first_return = 1;
            c.period = c.orientation < 0 ? 2 : 1;
            c.flipped = c.orientation < 0;
            ctx.charge(1);
            return {std::move(c)};
        }
        if (!p.has_flips()) {
            // oriented irreducible: certified minimal when the connection
            // scan stays clean to the checked depth. Rational or rationally
            // dependent data produces an interior connection and lands in
            // DegenerateBlock instead of being guessed at.
            Iet t(lambda, p);
            auto conns = saddle_connections(t, ctx.caps.rauzy_cap);
            if (has_interior_connection(conns, n))
                throw DegenerateBlock(
                    "oriented block has a saddle connection within scan depth");
            Component c;
            c.kind = ComponentKind::Minimal;
            c.support = {{Scalar(basis), t.total()}};
            c.witness = t.domain_interval(1).midpoint();
            ctx.charge(1);
            return {std::move(c)};
        }
        // irreducible with flips: induce until reducible, classify the
        // induced map, then pull its components back step by step
        FiniteExpansion fe = finite_expansion(lambda, p, ctx.caps.rauzy_cap);
        ctx.words.push_back(fe.trajectory.word);
        std::vector<Component> comps =
            classify_rec(LengthVector(fe.trajectory.final_lambda),
                         SignedPermutation(fe.trajectory.final_p), ctx, depth + 1);
        for (int k = static_cast<int>(fe.trajectory.records.size()) - 1; k >= 0; --k) {
            const auto& rec = fe.trajectory.records[k];
            Iet t_k(LengthVector(rec.lambda_before), rec.p_before);
            for (auto& comp : comps) {
                comp.support = pull_back_once(t_k, rec.xi, comp.support, ctx);
                if (comp.kind == ComponentKind::Minimal)
                    comp.support = merge_adjacent(std::move(comp.support));
            }
        }
        return comps;
    }

    // reducible: each block acts on its own subinterval
    BlockDecomposition dec = decompose(p);
    std::vector<Component> all;
    Scalar offset(basis);
    for (const auto& block : dec.blocks) {
        std::vector<Scalar> sub(lambda.values().begin() + block.offset,
                                lambda.values().begin() + block.offset + block.size);
        std::vector<Component> comps = classify_rec(LengthVector(std::move(sub)), block.v,
                                                    ctx, depth + 1);
        for (auto& c : comps) {
            for (auto& piece : c.support) {
                piece.lo = piece.lo + offset;
                piece.hi = piece.hi + offset;
            }
            c.witness = c.witness + offset;
            all.push_back(std::move(c));
        }
        for (int i = 0; i < block.size; ++i)
            offset = offset + lambda.values()[block.offset + i];
    }
    return all;
}

} // namespace

ComponentReport classify(const LengthVector& lambda, const SignedPermutation& p,
                         const ClassifyCaps& caps) {
    Ctx ctx{caps, 0, {}};
    std::vector<Component> comps = classify_rec(lambda, p, ctx, 0);

    for (auto& c : comps) sort_intervals(c.support);
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
        return a.support.front().lo < b.support.front().lo;
    });

    Iet t(lambda, p);
    for (auto& c : comps) {
        if (c.kind != ComponentKind::Periodic) {
            // pick a witness off the breakpoint grid: widest piece midpoint
            const Interval* widest = &c.support.front();
            for (const auto& piece : c.support)
                if (piece.length() > widest->length()) widest = &piece;
            c.witness = widest->midpoint();
            continue;
        }
        c.witness = c.support.front().midpoint();
        const int m = static_cast<int>(c.support.size());
        c.first_return = m;
        c.period = c.orientation < 0 ? 2 * m : m;
        c.flipped = c.orientation < 0;
        if (caps.with_periods) {
            ChaseCaps chase_caps;
            chase_caps.max_return = m + 1;
            auto sig = chase_interval(t, c.support.front(), chase_caps);
            if (!sig || !sets_equal(sig->cycle, c.support) || sig->orientation != c.orientation)
                throw HarnessFailure("pulled-back support disagrees with the direct chase");
            c.period = sig->period();
            c.flipped = sig->flipped();
        }
    }

    ComponentReport report;
    report.n = p.n();
    report.components = std::move(comps);
    report.expansion_words = std::move(ctx.words);
    for (const auto& c : report.components) {
        if (c.kind == ComponentKind::Periodic) ++report.n_per;
        else ++report.n_min;
    }
    if (!check_component_bound(report, report.n))
        throw HarnessFailure("component bound violated: " + report.summary());
    return report;
}

bool minimal_components_contain_singular(const ComponentReport& report, const Iet& t) {
    for (const auto& c : report.components) {
        if (c.kind != ComponentKind::Minimal) continue;
        bool found = false;
        for (int i = 1; i <= t.n() - 1 && !found; ++i)
            for (const auto& piece : c.support)
                if (piece.contains(t.breakpoint(i))) {
                    found = true;
                    break;
                }
        if (!found) return false;
    }
    return true;
}

bool boundaries_on_saddle_connections(const ComponentReport& report, const Iet& t,
                                      int cap) {
    auto is_breakpoint_or_end = [&](const Scalar& u) {
        for (int r = 0; r <= t.n(); ++r)
            if (Scalar::cmp(u, t.breakpoint(r)) == 0) return true;
        return false;
    };

    std::vector<const Scalar*> pending;
    for (const auto& c : report.components)
        for (const auto& piece : c.support)
            for (const Scalar* u : {&piece.lo, &piece.hi})
                if (!is_breakpoint_or_end(*u)) pending.push_back(u);
    if (pending.empty()) return true;

    // scan at doubled depths until every boundary point lands on a recorded
    // connection; the point set is sorted for binary-search membership
    for (int depth = 64;; depth *= 2) {
        if (depth > cap) depth = cap;
        std::vector<Scalar> on_connections;
        for (const auto& conn : saddle_connections(t, depth))
            for (const auto& pt : conn.itinerary) on_connections.push_back(pt);
        std::sort(on_connections.begin(), on_connections.end());
        auto member = [&](const Scalar& u) {
            auto it = std::lower_bound(on_connections.begin(), on_connections.end(), u);
            return it != on_connections.end() && *it == u;
        };
        bool all = true;
        for (const Scalar* u : pending)
            if (!member(*u)) {
                all = false;
                break;
            }
        if (all) return true;
        if (depth == cap) return false;
    }
}

} // namespace ietflip
