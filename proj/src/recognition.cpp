#include "carc/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "carc/error.hpp"
#include "carc/gtc.hpp"
#include "carc/r_circular.hpp"

namespace carc {

namespace {

// Depth-first placement of vertices on markers 1, 2, ... A placement is
// rejected as soon as the placed prefix contains a template-A or template-B
// quadruple; those never disappear when more markers are filled. Vertex 1
// is pinned to marker 1 (the check is invariant under rotation) and twins
// (same part, same neighbourhood) appear in increasing id order.
class Search {
public:
    Search(const RPartiteGraph& g, bool by_degree) : g_(g), n_(g.order()) {
        const auto un = static_cast<std::size_t>(n_) + 1;
        bad_.assign(un, std::vector<char>(un, 0));
        adj_.assign(un, std::vector<char>(un, 0));
        for (int u = 1; u <= n_; ++u)
            for (int w = 1; w <= n_; ++w) {
                if (u == w)
                    continue;
                adj_[idx(u)][idx(w)] = g.adjacent(u, w);
                bad_[idx(u)][idx(w)] = !g.same_part(u, w) && !g.adjacent(u, w);
            }

        twin_prev_.assign(un, 0);
        for (int w = 1; w <= n_; ++w)
            for (int u = w - 1; u >= 1; --u)
                if (g.same_part(u, w) && adj_[idx(u)] == adj_[idx(w)]) {
                    // Rows differ at u and w themselves only via the zero diagonal.
                    twin_prev_[idx(w)] = u;
                    break;
                }

        candidates_.resize(static_cast<std::size_t>(n_));
        std::iota(candidates_.begin(), candidates_.end(), 1);
        if (by_degree)
            std::stable_sort(candidates_.begin(), candidates_.end(),
                             [&](int a, int b) { return g.degree(a) > g.degree(b); });

        seq_.assign(un, 0);
        placed_.assign(un, 0);
        bad_before_.assign(un, 0);
        blocked_.assign(un, 0);
    }

    // Places v on the next marker if no quadruple appears; returns false
    // (state unchanged) otherwise.
    bool push(int v) {
        const int t = depth_ + 1;
        if (!can_place(v))
            return false;
        const int last_bad = last_blocker(v, t);
        for (int i = 1; i < t; ++i)
            if (blocks_a_as_l(i, v) || closes_b(i, v, last_bad))
                return false;

        seq_[idx(t)] = v;
        placed_[idx(v)] = 1;
        depth_ = t;
        bad_before_[idx(t)] = 0;
        for (int i = 1; i < t; ++i)
            if (bad_[idx(seq_[idx(i)])][idx(v)]) {
                bad_before_[idx(t)] = 1;
                break;
            }
        undo_.push_back(static_cast<int>(blocked_log_.size()));
        for (int i = 1; i < last_bad; ++i)
            if (adj_[idx(seq_[idx(i)])][idx(v)]) {
                ++blocked_[idx(i)];
                blocked_log_.push_back(i);
            }
        ++nodes_;
        return true;
    }

    void pop() {
        const int t = depth_;
        const auto mark = static_cast<std::size_t>(undo_.back());
        undo_.pop_back();
        while (blocked_log_.size() > mark) {
            --blocked_[idx(blocked_log_.back())];
            blocked_log_.pop_back();
        }
        placed_[idx(seq_[idx(t)])] = 0;
        seq_[idx(t)] = 0;
        --depth_;
    }

    // Some unplaced vertex would complete a quadruple wherever it goes.
    bool doomed() const {
        for (int u = 1; u <= n_; ++u) {
            if (placed_[idx(u)])
                continue;
            const int t = depth_ + 1;
            const int last_bad = last_blocker(u, t);
            for (int i = 1; i < t; ++i)
                if (blocks_a_as_l(i, u) || closes_b(i, u, last_bad))
                    return true;
        }
        return false;
    }

    bool complete() const { return depth_ == n_; }

    // Exhaustive DFS below the current prefix. Stops early when `stop` is set.
    bool extend(const std::atomic<bool>* stop) {
        if (complete())
            return true;
        if (stop && stop->load(std::memory_order_relaxed))
            return false;
        if (doomed())
            return false;
        for (int v : candidates_) {
            if (!push(v))
                continue;
            if (extend(stop))
                return true;
            pop();
        }
        return false;
    }

    std::vector<int> sequence() const {
        return {seq_.begin() + 1, seq_.begin() + 1 + depth_};
    }

    const std::vector<int>& candidates() const { return candidates_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    static std::size_t idx(int x) { return static_cast<std::size_t>(x); }

    bool can_place(int v) const {
        if (placed_[idx(v)])
            return false;
        if (depth_ == 0 && v != 1)
            return false;
        const int prev = twin_prev_[idx(v)];
        return prev == 0 || placed_[idx(prev)];
    }

    // Largest marker x < t holding a vertex that blocks v.
    int last_blocker(int v, int t) const {
        for (int x = t - 1; x >= 1; --x)
            if (bad_[idx(seq_[idx(x)])][idx(v)])
                return x;
        return 0;
    }

    // Template A with l = v: marker i already carries an edge (i, k) with a
    // blocker between, and v blocks seq(i).
    bool blocks_a_as_l(int i, int v) const {
        return blocked_[idx(i)] > 0 && bad_[idx(seq_[idx(i)])][idx(v)];
    }

    // Template B with l = v and j = i: edge (j, v), a blocker of v after j,
    // and a blocker of seq(j) before j.
    bool closes_b(int j, int v, int last_bad) const {
        return bad_before_[idx(j)] && adj_[idx(seq_[idx(j)])][idx(v)] && last_bad > j;
    }

    const RPartiteGraph& g_;
    int n_;
    std::vector<std::vector<char>> bad_;
    std::vector<std::vector<char>> adj_;
    std::vector<int> twin_prev_;
    std::vector<int> candidates_;

    std::vector<int> seq_;
    std::vector<char> placed_;
    std::vector<char> bad_before_;
    std::vector<int> blocked_;
    std::vector<int> blocked_log_;
    std::vector<int> undo_;
    int depth_ = 0;
    std::uint64_t nodes_ = 0;
};

Decision certify(const RPartiteGraph& g, std::vector<int> seq, Decision d) {
    CircularOrdering order(std::move(seq));
    auto model = build_model(g, order);
    if (!verify_gtc(g, order).pass || !validate_model(g, model).pass)
        throw std::logic_error("recognition produced a certificate that does not verify");
    d.yes = true;
    d.ordering = std::move(order);
    d.model = std::move(model);
    return d;
}

Decision recognize_parallel(const RPartiteGraph& g, unsigned threads) {
    Decision d;
    d.mode = SearchMode::parallel;

    // Work items: the vertex on marker 2 (marker 1 is pinned).
    Search root(g, true);
    if (!root.push(1))
        throw std::logic_error("recognition: cannot pin first vertex");
    std::vector<int> items;
    for (int v : root.candidates())
        if (v != 1)
            items.push_back(v);

    std::atomic<bool> found{false};
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> nodes{1};
    std::mutex mu;
    std::vector<int> certificate;

    auto worker = [&] {
        Search s(g, true);
        s.push(1);
        std::uint64_t base = s.nodes();
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= items.size() || found.load())
                break;
            if (!s.push(items[k]))
                continue;
            const bool ok = !s.doomed() && s.extend(&found);
            if (ok && !found.exchange(true)) {
                std::lock_guard lock(mu);
                certificate = s.sequence();
            }
            if (ok)
                break;
            s.pop();
        }
        nodes += s.nodes() - base;
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, items.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    d.orderings_searched = nodes.load();
    if (found.load())
        return certify(g, std::move(certificate), std::move(d));
    d.exhaustive = true;
    return d;
}

} // namespace

Decision recognize(const RPartiteGraph& g, const SearchLimits& limits) {
    if (!g.has_complete_host())
        throw Error(Errc::unsupported_host, "recognition requires a complete host graph");
    if (g.order() > limits.max_vertices) {
        std::ostringstream os;
        os << "limit exceeded: " << g.order() << " vertices, limit " << limits.max_vertices;
        throw Error(Errc::limit_exceeded, os.str());
    }
    if (g.order() <= 1) {
        Decision d;
        d.mode = limits.mode;
        return certify(g, CircularOrdering::identity(g.order()).sequence(), std::move(d));
    }
    if (limits.mode == SearchMode::parallel)
        return recognize_parallel(g, limits.threads);

    Search s(g, false);
    Decision d;
    d.mode = SearchMode::sequential;
    const bool yes = s.extend(nullptr);
    d.orderings_searched = s.nodes();
    if (yes)
        return certify(g, s.sequence(), std::move(d));
    d.exhaustive = true;
    return d;
}

Decision recognize_bruteforce(const RPartiteGraph& g) {
    if (g.order() > 9)
        throw Error(Errc::limit_exceeded, "brute force is limited to 9 vertices");
    auto seq = CircularOrdering::identity(g.order()).sequence();
    Decision d;
    do {
        ++d.orderings_searched;
        CircularOrdering order(seq);
        if (verify_gtc(g, order).pass)
            return certify(g, std::move(seq), std::move(d));
    } while (std::next_permutation(seq.begin(), seq.end()));
    d.exhaustive = true;
    return d;
}

HarnessReport equivalence_harness(const RPartiteGraph& g) {
    if (g.order() > 10)
        throw Error(Errc::limit_exceeded, "equivalence harness is limited to 10 vertices");
    if (!g.has_complete_host())
        throw Error(Errc::unsupported_host, "equivalence harness requires a complete host graph");

    HarnessReport r;
    auto note = [&](const std::vector<int>& seq, const std::string& what) {
        if (!r.agree)
            return;
        r.agree = false;
        std::ostringstream os;
        os << "ordering [";
        for (std::size_t k = 0; k < seq.size(); ++k)
            os << (k ? "," : "") << seq[k];
        os << "]: " << what;
        r.disagreement = os.str();
    };

    auto seq = CircularOrdering::identity(g.order()).sequence();
    do {
        ++r.orderings_checked;
        const CircularOrdering order(seq);
        const bool gtc = verify_gtc(g, order).pass;
        const bool rc = verify_r_circular(g, order).pass;
        const bool free = scan_violations(g, order).empty();
        r.gtc_exists |= gtc;
        r.r_circular_exists |= rc;
        r.pattern_free_exists |= free;
        if (gtc != rc || gtc != free) {
            std::ostringstream os;
            os << "gtc=" << gtc << " r_circular=" << rc << " pattern_free=" << free;
            note(seq, os.str());
        }
        if (!gtc)
            continue;
        ++r.passing_orderings;
        const auto model = build_model(g, order);
        const auto valid = validate_model(g, model);
        if (!valid.pass) {
            std::ostringstream os;
            os << "built model fails at (" << valid.offending->first << ","
               << valid.offending->second << ")";
            note(seq, os.str());
            continue;
        }
        const auto back = extract_ordering(model);
        if (!(back == order) || !verify_gtc(g, back).pass)
            note(seq, "extracted ordering differs or fails re-verification");
        else
            ++r.round_trips;
    } while (std::next_permutation(seq.begin(), seq.end()));

    if (r.gtc_exists != r.r_circular_exists || r.gtc_exists != r.pattern_free_exists)
        note({}, "existence answers differ");
    return r;
}

} // namespace carc
