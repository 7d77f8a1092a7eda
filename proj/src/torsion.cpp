#include "valence/torsion.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

// The extraction pipeline, per state set S of the edge-alphabet automaton:
//
//   * L_S: simple loops usable inside computations visiting exactly S.
//   * F_S: skeletons; initial-to-final computations with visited set S. Any
//     accepting computation arises from a skeleton by inserting loops from
//     L_S, so only insertion-minimal skeletons are kept (removing a simple
//     loop from a longer one, when that keeps the visited set, subsumes its
//     contribution).
//   * k: a modulus with trivial k-th powers of all loop values.
//   * U_v: the loop multisets whose insertion into skeleton v can reach an
//     accepting computation. U_v is upward closed under the componentwise
//     order refined by congruence mod k, hence determined by finitely many
//     minimal elements; these are mined by a graded scan backed by an exact
//     reachability table over (inserted letter counts, storage value).
//
// Assembled components: base = letter counts of v plus a minimal multiset,
// periods = k-fold letter counts of each loop.

namespace valence {

std::size_t default_skeleton_bound(int num_states) {
    if (num_states <= 0) return 0;
    return static_cast<std::size_t>(num_states) *
           ((std::size_t{1} << std::min(num_states, 40)) + 1);
}

namespace {

bool in_set(std::uint64_t mask, int q) {
    return (mask >> q) & 1;
}

}  // namespace

LoopAlphabet simple_loops(const ValenceAutomaton& hat, std::uint64_t state_set) {
    LoopAlphabet out;
    out.state_set = state_set;
    const auto& edges = hat.edges();
    for (int base = 0; base < static_cast<int>(hat.states().size()); ++base) {
        if (!in_set(state_set, base)) continue;
        // Walks from base whose targets stay inside S and never repeat; the
        // walk closes exactly when the target returns to base.
        std::vector<int> walk;
        std::uint64_t used = 0;
        std::function<void(int)> dfs = [&](int cur) {
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (edges[e].from != cur) continue;
                int to = edges[e].to;
                if (!in_set(state_set, to)) continue;
                if (to == base) {
                    walk.push_back(static_cast<int>(e));
                    out.loops.push_back(SimpleLoop{base, walk});
                    walk.pop_back();
                } else if (!in_set(used, to)) {
                    used |= std::uint64_t{1} << to;
                    walk.push_back(static_cast<int>(e));
                    dfs(to);
                    walk.pop_back();
                    used &= ~(std::uint64_t{1} << to);
                }
            }
        };
        dfs(base);
    }
    std::vector<std::string> symbols;
    symbols.reserve(out.loops.size());
    for (std::size_t i = 0; i < out.loops.size(); ++i) symbols.push_back("y" + std::to_string(i));
    out.symbols = Alphabet::make(std::move(symbols));
    return out;
}

namespace {

/// True when the walk (given by the state sequence s_0..s_n) contains a
/// simple loop segment whose removal keeps the set of visited states.
bool has_removable_simple_loop(const std::vector<int>& states) {
    const int n = static_cast<int>(states.size()) - 1;  // number of edges
    int total[64] = {0};
    for (int s : states) ++total[s];
    for (int i = 0; i < n; ++i) {
        std::uint64_t targets = 0;
        int window[64] = {0};
        for (int j = i + 1; j <= n; ++j) {
            int t = states[j];
            if (in_set(targets, t)) break;  // repeated target: no longer simple
            targets |= std::uint64_t{1} << t;
            ++window[t];
            if (t == states[i]) {
                bool preserves = true;
                for (int u = 0; u < 64 && preserves; ++u)
                    if (in_set(targets, u) && window[u] == total[u]) preserves = false;
                if (preserves) return true;
                break;  // any larger window repeats the base target
            }
        }
    }
    return false;
}

}  // namespace

SkeletonSet skeletons(const ValenceAutomaton& hat, std::uint64_t state_set,
                      std::size_t length_bound, bool prune_subsumed, std::size_t node_budget) {
    SkeletonSet out;
    out.state_set = state_set;
    if (state_set == 0) {
        // The empty computation visits no states at all.
        if (hat.is_final(hat.initial())) out.members.push_back({});
        return out;
    }
    if (!in_set(state_set, hat.initial())) return out;
    bool touches_final = false;
    for (int f : hat.finals()) touches_final |= in_set(state_set, f);
    if (!touches_final) return out;

    const auto& edges = hat.edges();
    std::vector<int> walk;
    std::vector<int> states{hat.initial()};
    std::uint64_t visited = std::uint64_t{1} << hat.initial();
    std::size_t nodes = 0;

    std::function<void(int)> dfs = [&](int cur) {
        if (out.truncated) return;
        if (++nodes > node_budget) {
            out.truncated = true;
            return;
        }
        if (!walk.empty() && visited == state_set && hat.is_final(cur))
            out.members.push_back(walk);
        if (walk.size() == length_bound) return;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].from != cur) continue;
            int to = edges[e].to;
            if (!in_set(state_set, to)) continue;
            std::uint64_t saved = visited;
            visited |= std::uint64_t{1} << to;
            walk.push_back(static_cast<int>(e));
            states.push_back(to);
            if (!(prune_subsumed && has_removable_simple_loop(states))) dfs(to);
            states.pop_back();
            walk.pop_back();
            visited = saved;
        }
    };
    dfs(hat.initial());
    return out;
}

std::uint64_t loop_modulus(const ValenceAutomaton& hat, const LoopAlphabet& loops,
                           std::uint64_t order_cap) {
    std::uint64_t k = 1;
    for (const auto& loop : loops.loops) {
        MonoidElement value = identity(hat.monoid());
        for (int e : loop.edges) value = value * hat.edges()[e].element;
        auto order = element_order(value, order_cap);
        if (std::holds_alternative<TooLarge>(order))
            throw TorsionCapError("loop value order exceeds cap (non-torsion storage?)");
        std::uint64_t o = std::get<std::uint64_t>(order);
        std::uint64_t g = std::gcd(k, o);
        if (k / g > (std::uint64_t{1} << 40) / o)
            throw TorsionCapError("loop modulus overflow");
        k = k / g * o;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Insertion reachability

namespace {

struct DpAbort {};

/// Group elements interned as small ids. For storage groups without
/// canonical payloads (Grigorchuk) two ids may denote one element; that only
/// enlarges value sets, and identity detection stays exact.
class GroupUniverse {
public:
    explicit GroupUniverse(DescriptorPtr d) : desc_(std::move(d)) { id_of(identity(desc_)); }

    int id_of(const MonoidElement& e) {
        auto key = e.key();
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(elems_.size());
        elems_.push_back(e);
        index_.emplace(std::move(key), id);
        is_id_.push_back(e.is_identity());
        return id;
    }

    int mul(int a, int b) {
        auto it = prod_.find({a, b});
        if (it != prod_.end()) return it->second;
        MonoidElement x = elems_[a];
        MonoidElement y = elems_[b];
        int r = id_of(x * y);
        prod_.emplace(std::make_pair(a, b), r);
        return r;
    }

    int identity_id() const { return 0; }

    bool is_identity_id(int a) const { return is_id_[a]; }

private:
    DescriptorPtr desc_;
    std::vector<MonoidElement> elems_;
    std::unordered_map<std::string, int> index_;
    std::map<std::pair<int, int>, int> prod_;
    std::vector<char> is_id_;
};

using Tau = std::vector<std::uint32_t>;  // per-edge counts of inserted letters
using ValueSet = std::vector<int>;       // sorted unique group ids
using TauTable = std::map<Tau, ValueSet>;

std::uint64_t tau_total(const Tau& t) {
    std::uint64_t s = 0;
    for (auto c : t) s += c;
    return s;
}

Tau tau_add(const Tau& a, const Tau& b) {
    Tau out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

bool merge_values(ValueSet& into, const ValueSet& add) {
    bool grew = false;
    for (int v : add) {
        auto it = std::lower_bound(into.begin(), into.end(), v);
        if (it == into.end() || *it != v) {
            into.insert(it, v);
            grew = true;
        }
    }
    return grew;
}

struct LoopData {
    Tau tau;                      // letter counts of the loop itself
    std::vector<int> gap_states;  // states after each edge but the last
    std::vector<int> edge_gids;
};

struct DpContext {
    const ValenceAutomaton& hat;
    GroupUniverse universe;
    std::vector<int> edge_gid;
    std::vector<LoopData> loops;
    std::vector<int> loop_base;

    std::uint64_t cap = 0;  // total inserted letters
    std::size_t cell_budget = 0;
    std::uint64_t op_budget = 0;
    std::size_t cells = 0;
    std::uint64_t ops = 0;

    explicit DpContext(const ValenceAutomaton& h, const LoopAlphabet& alphabet)
        : hat(h), universe(h.monoid()) {
        edge_gid.reserve(h.edges().size());
        for (const auto& e : h.edges()) edge_gid.push_back(universe.id_of(e.element));
        for (const auto& loop : alphabet.loops) {
            LoopData data;
            data.tau.assign(h.edges().size(), 0);
            for (int e : loop.edges) ++data.tau[e];
            for (std::size_t i = 0; i + 1 < loop.edges.size(); ++i)
                data.gap_states.push_back(h.edges()[loop.edges[i]].to);
            for (int e : loop.edges) data.edge_gids.push_back(edge_gid[e]);
            loops.push_back(std::move(data));
            loop_base.push_back(loop.base);
        }
    }

    void charge_op() {
        if (++ops > op_budget) throw DpAbort{};
    }

    void charge_cell() {
        if (++cells > cell_budget) throw DpAbort{};
    }

    /// out := out U (a * b), entrywise convolution under the total cap.
    bool convolve_into(TauTable& out, const TauTable& a, const TauTable& b) {
        bool grew = false;
        for (const auto& [ta, sa] : a) {
            std::uint64_t base = tau_total(ta);
            if (base > cap) continue;
            for (const auto& [tb, sb] : b) {
                if (base + tau_total(tb) > cap) continue;
                ValueSet prod;
                for (int x : sa)
                    for (int y : sb) {
                        charge_op();
                        int r = universe.mul(x, y);
                        auto it = std::lower_bound(prod.begin(), prod.end(), r);
                        if (it == prod.end() || *it != r) prod.insert(it, r);
                    }
                auto [slot, inserted] = out.try_emplace(tau_add(ta, tb));
                if (inserted) charge_cell();
                grew |= merge_values(slot->second, prod);
            }
        }
        return grew;
    }

    TauTable scaled_right(const TauTable& a, int gid) {
        TauTable out;
        for (const auto& [t, s] : a) {
            ValueSet vs;
            for (int x : s) {
                charge_op();
                int r = universe.mul(x, gid);
                auto it = std::lower_bound(vs.begin(), vs.end(), r);
                if (it == vs.end() || *it != r) vs.insert(it, r);
            }
            out.emplace(t, std::move(vs));
        }
        return out;
    }

    /// Value table of one decorated loop: its own letters plus arbitrary gap
    /// contents drawn from the current state tables.
    TauTable decorated_loop(const LoopData& loop, const std::map<int, TauTable>& E) {
        TauTable acc;
        acc.emplace(Tau(hat.edges().size(), 0), ValueSet{loop.edge_gids[0]});
        for (std::size_t g = 0; g < loop.gap_states.size(); ++g) {
            TauTable with_gap;
            convolve_into(with_gap, acc, E.at(loop.gap_states[g]));
            acc = scaled_right(with_gap, loop.edge_gids[g + 1]);
        }
        TauTable out;
        for (auto& [t, s] : acc) {
            Tau shifted = tau_add(t, loop.tau);
            if (tau_total(shifted) > cap) continue;
            out.emplace(std::move(shifted), std::move(s));
        }
        return out;
    }

    /// Gap-content tables per state: all values reachable by inserting any
    /// sequence of (recursively decorated) loops based at that state.
    std::map<int, TauTable> saturate(std::uint64_t state_set) {
        std::map<int, TauTable> E;
        Tau zero(hat.edges().size(), 0);
        for (int q = 0; q < static_cast<int>(hat.states().size()); ++q)
            if (in_set(state_set, q) || state_set == 0)
                E[q].emplace(zero, ValueSet{universe.identity_id()});
        if (E.empty()) E[hat.initial()].emplace(zero, ValueSet{universe.identity_id()});

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t l = 0; l < loops.size(); ++l) {
                TauTable d = decorated_loop(loops[l], E);
                TauTable additions;
                convolve_into(additions, d, E[loop_base[l]]);
                for (auto& [t, s] : additions) {
                    auto [slot, inserted] = E[loop_base[l]].try_emplace(t);
                    if (inserted) charge_cell();
                    changed |= merge_values(slot->second, s);
                }
            }
        }
        return E;
    }

    /// Achievable (inserted letter counts, storage value) pairs of the
    /// skeleton with gap contents spliced between its edges.
    TauTable sweep(const std::vector<int>& skeleton, const std::map<int, TauTable>& E) {
        int start = skeleton.empty() ? hat.initial() : hat.edges()[skeleton[0]].from;
        TauTable acc = E.at(start);
        for (int e : skeleton) {
            TauTable stepped = scaled_right(acc, edge_gid[e]);
            TauTable next;
            convolve_into(next, stepped, E.at(hat.edges()[e].to));
            acc = std::move(next);
        }
        return acc;
    }
};

std::uint64_t count_multisets_upto(std::uint64_t radius, int symbols, std::uint64_t clamp) {
    // C(radius + symbols, symbols), clamped.
    std::uint64_t count = 1;
    for (int i = 1; i <= symbols; ++i) {
        if (count > clamp) return clamp + 1;
        count = count * (radius + i) / i;
    }
    return count;
}

void enumerate_level(std::uint64_t level, int symbols,
                     const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> mu(symbols, 0);
    std::function<void(int, std::uint64_t)> rec = [&](int i, std::uint64_t rest) {
        if (i + 1 == symbols) {
            mu[i] = rest;
            fn(mu);
            return;
        }
        for (std::uint64_t c = 0; c <= rest; ++c) {
            mu[i] = c;
            rec(i + 1, rest - c);
        }
        mu[i] = 0;
    };
    if (symbols == 0) {
        if (level == 0) fn(mu);
        return;
    }
    rec(0, level);
}

}  // namespace

MinimalBasis uv_minimals(const ValenceAutomaton& hat, const std::vector<int>& skeleton,
                         const LoopAlphabet& loops, std::uint64_t k, std::uint64_t radius,
                         const SearchBudget& budget) {
    if (k == 0) throw std::invalid_argument("uv_minimals: modulus must be positive");
    const int m = static_cast<int>(loops.loops.size());
    MinimalBasis basis;

    std::uint64_t radius_eff = radius;
    while (radius_eff > 0 &&
           count_multisets_upto(radius_eff, m, budget.scan_budget) > budget.scan_budget)
        --radius_eff;

    std::uint64_t max_loop_len = 1;
    for (const auto& loop : loops.loops)
        max_loop_len = std::max(max_loop_len, static_cast<std::uint64_t>(loop.edges.size()));

    // Exact reachability table; on budget overrun retry with a smaller scan
    // radius and report the reduction through the completeness fields.
    TauTable member_table;
    DpContext* ctx_ptr = nullptr;
    std::unique_ptr<DpContext> ctx;
    while (true) {
        ctx = std::make_unique<DpContext>(hat, loops);
        ctx->cap = radius_eff * max_loop_len;
        ctx->cell_budget = budget.dp_cell_budget;
        ctx->op_budget = budget.dp_op_budget;
        try {
            auto E = ctx->saturate(loops.state_set);
            member_table = ctx->sweep(skeleton, E);
            ctx_ptr = ctx.get();
            break;
        } catch (const DpAbort&) {
            if (radius_eff == 0) throw TorsionCapError("insertion search out of budget");
            radius_eff /= 2;
        }
    }

    basis.scanned_radius = radius_eff;
    basis.complete = radius_eff >= radius;

    auto loop_counts_to_tau = [&](const std::vector<std::uint64_t>& mu) {
        Tau t(hat.edges().size(), 0);
        for (int y = 0; y < m; ++y)
            for (std::size_t i = 0; i < t.size(); ++i)
                t[i] += static_cast<std::uint32_t>(mu[y] * ctx_ptr->loops[y].tau[i]);
        return t;
    };
    auto is_member = [&](const std::vector<std::uint64_t>& mu) {
        auto it = member_table.find(loop_counts_to_tau(mu));
        if (it == member_table.end()) return false;
        return std::any_of(it->second.begin(), it->second.end(),
                           [&](int id) { return ctx_ptr->universe.is_identity_id(id); });
    };

    std::vector<std::vector<std::uint64_t>> minimal_vectors;
    auto dominated = [&](const std::vector<std::uint64_t>& mu) {
        for (const auto& alpha : minimal_vectors) {
            bool dom = true;
            for (int y = 0; y < m && dom; ++y)
                dom = alpha[y] <= mu[y] && (mu[y] - alpha[y]) % k == 0;
            if (dom) return true;
        }
        return false;
    };

    for (std::uint64_t level = 0; level <= radius_eff; ++level) {
        enumerate_level(level, m, [&](const std::vector<std::uint64_t>& mu) {
            if (dominated(mu)) return;  // member by upward closure
            if (is_member(mu)) minimal_vectors.push_back(mu);
        });
        if (m == 0) break;
    }

    // Upward-closure audit: each minimal plus k copies of any loop must stay
    // a member as long as it is still inside the scanned radius.
    for (const auto& alpha : minimal_vectors) {
        for (int y = 0; y < m; ++y) {
            std::vector<std::uint64_t> nu = alpha;
            nu[y] += k;
            std::uint64_t total = 0;
            for (auto c : nu) total += c;
            if (total > radius_eff) continue;
            if (!is_member(nu) && !dominated(nu)) ++basis.audit_violations;
        }
    }

    basis.minimals.reserve(minimal_vectors.size());
    for (const auto& mu : minimal_vectors)
        basis.minimals.emplace_back(loops.symbols, std::vector<std::uint64_t>(mu));
    return basis;
}

// ---------------------------------------------------------------------------
// Full extraction

namespace {

struct StateSetOutcome {
    PerStateSetData data;
    std::vector<LinearSet> edge_components;
    std::uint64_t audit_violations = 0;
    bool any_incomplete = false;
    std::uint64_t min_scanned_radius = UINT64_MAX;
};

StateSetOutcome process_state_set(const ValenceAutomaton& hat, std::uint64_t mask,
                                  const AlphabetPtr& edge_alphabet,
                                  const ExtractionOptions& opts) {
    StateSetOutcome out;
    out.data.state_set = mask;
    std::size_t bound = opts.skeleton_bound
                            ? opts.skeleton_bound
                            : default_skeleton_bound(static_cast<int>(hat.states().size()));
    out.data.skeleton_set = skeletons(hat, mask, bound, /*prune_subsumed=*/true,
                                      opts.skeleton_budget);
    if (out.data.skeleton_set.truncated) out.any_incomplete = true;
    if (out.data.skeleton_set.members.empty()) {
        out.data.loops = simple_loops(hat, mask);
        return out;
    }
    out.data.loops = simple_loops(hat, mask);
    out.data.modulus = loop_modulus(hat, out.data.loops, opts.order_cap);
    std::uint64_t radius = opts.radius
                               ? opts.radius
                               : 2 * out.data.modulus * out.data.loops.loops.size();
    out.data.requested_radius = radius;

    std::vector<Multiset> loop_edge_parikh;
    for (const auto& loop : out.data.loops.loops) {
        Multiset t(edge_alphabet);
        for (int e : loop.edges) ++t.count(e);
        loop_edge_parikh.push_back(std::move(t));
    }

    for (const auto& v : out.data.skeleton_set.members) {
        MinimalBasis basis =
            uv_minimals(hat, v, out.data.loops, out.data.modulus, radius, opts.search);
        out.audit_violations += basis.audit_violations;
        out.any_incomplete |= !basis.complete;
        out.min_scanned_radius = std::min(out.min_scanned_radius, basis.scanned_radius);

        // base = skeleton letters + minimal insertion; periods = k-fold loops
        SemilinearSet upward =
            upward_closure_k(basis.minimals, out.data.modulus, out.data.loops.symbols);
        SemilinearSet on_edges = morph_image(upward, edge_alphabet, loop_edge_parikh);
        SemilinearSet shift(edge_alphabet);
        Multiset skeleton_parikh(edge_alphabet);
        for (int e : v) ++skeleton_parikh.count(e);
        shift.add(LinearSet(skeleton_parikh, {}));
        SemilinearSet piece = set_sum(shift, on_edges);
        for (const auto& c : piece.components()) out.edge_components.push_back(c);

        out.data.per_skeleton.push_back(
            PerSkeletonData{v, basis.minimals, basis.scanned_radius, basis.complete});
    }
    return out;
}

}  // namespace

ExtractionResult extract(const ValenceAutomaton& a, const ExtractionOptions& opts) {
    if (!a.monoid()->is_group())
        throw std::invalid_argument("extract: storage monoid must be a group");
    const int q = static_cast<int>(a.states().size());
    if (q > 16) throw std::invalid_argument("extract: too many states for subset enumeration");

    ValenceAutomaton hat = hat_automaton(a);
    AlphabetPtr edge_alphabet = hat.alphabet();

    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << q); ++mask) {
        if (mask != 0) {
            if (!in_set(mask, a.initial())) continue;
            bool has_final = false;
            for (int f : a.finals()) has_final |= in_set(mask, f);
            if (!has_final) continue;
        }
        masks.push_back(mask);
    }

    int threads = opts.threads;
    if (threads == 0) {
        if (const char* env = std::getenv("VALENCE_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = 1;
    }

    std::vector<StateSetOutcome> outcomes(masks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < masks.size(); ++i)
            outcomes[i] = process_state_set(hat, masks[i], edge_alphabet, opts);
    } else {
        std::vector<std::future<StateSetOutcome>> futures;
        futures.reserve(masks.size());
        for (std::size_t i = 0; i < masks.size(); ++i)
            futures.push_back(std::async(std::launch::async, [&, i] {
                return process_state_set(hat, masks[i], edge_alphabet, opts);
            }));
        for (std::size_t i = 0; i < masks.size(); ++i) outcomes[i] = futures[i].get();
    }

    SemilinearSet edge_level(edge_alphabet);
    std::uint64_t audit = 0;
    bool complete = true;
    std::uint64_t min_radius = UINT64_MAX;
    std::vector<PerStateSetData> per_state_set;
    for (auto& outcome : outcomes) {
        for (auto& c : outcome.edge_components) edge_level.add(std::move(c));
        audit += outcome.audit_violations;
        complete &= !outcome.any_incomplete;
        if (!outcome.data.per_skeleton.empty())
            min_radius = std::min(min_radius, outcome.min_scanned_radius);
        per_state_set.push_back(std::move(outcome.data));
    }
    edge_level.normalize();

    SemilinearSet assembled =
        morph_image(edge_level, a.alphabet(), edge_input_parikh(a));
    assembled.normalize();

    std::uint64_t reported_radius = min_radius == UINT64_MAX ? opts.radius : min_radius;
    return ExtractionResult{edge_alphabet,
                            std::move(per_state_set),
                            std::move(edge_level),
                            std::move(assembled),
                            reported_radius,
                            complete,
                            audit};
}

}  // namespace valence
