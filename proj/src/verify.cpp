#include "harness.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace krm::harness {

int worker_count() {
    if (const char* env = std::getenv("KRM_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

// Runs body(i) for i in [0, count) across workers; results are gathered
// per index so the caller sees them in a fixed order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, int workers, F body) {
    std::vector<R> out(count);
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count ? count : 1)));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = body(i);
        });
    for (auto& th : pool) th.join();
    return out;
}

struct ElementCheck {
    bool roundtrip = false;
    std::size_t traces = 0, steps = 0, skips = 0, passes = 0;
    std::vector<std::string> problems;
};

// ⪯ test from a base: rank(x) within [rank(prev), rank(target)]
bool advances(const LieType& t, int base, int prev, int x, int target) {
    int rp = circ_rank(t.family, t.rank, base, prev);
    int rx = circ_rank(t.family, t.rank, base, x);
    int rt = circ_rank(t.family, t.rank, base, target);
    return rx >= rp && rx <= rt;
}

} // namespace

bool sweep_monotone(const LieType& t, const std::vector<PathTrace>& sweep, const Column& target) {
    if (sweep.empty()) return true;
    int k = static_cast<int>(target.size());
    const Window& start = sweep.front().start;
    for (int r = 1; r <= k; ++r) {
        int base = start[r - 1], prev = base;
        for (const PathTrace& tr : sweep)
            for (std::size_t s = 0; s < tr.steps.size(); ++s) {
                int x = tr.steps[s].word[r - 1];
                if (x == prev) continue;
                if (tr.passed_target && s == 0 && r == k) {
                    base = prev = x;
                    continue;
                }
                if (!advances(t, base, prev, x, target[r - 1])) return false;
                prev = x;
            }
    }
    return true;
}

VerifyReport verify_suite(const LieType& t, const std::vector<int>& lambda, int workers) {
    if (workers <= 0) workers = worker_count();
    VerifyReport rep;
    rep.type = t;
    rep.lambda = trim_partition(lambda);
    LambdaChain ch = lambda_chain(t, lambda);
    rep.chain_length = ch.size();
    auto adm = enumerate_admissible(ch);
    auto tensor = enumerate_tensor(t, ch.heights);
    rep.admissible = adm.size();
    rep.tensor = tensor.size();
    auto note = [&](std::string s) {
        if (rep.mismatches.size() < 100) rep.mismatches.push_back(std::move(s));
    };
    if (adm.size() != tensor.size())
        note("cardinality: " + std::to_string(adm.size()) + " admissible vs " + std::to_string(tensor.size()) + " tensor");

    std::set<std::vector<Column>> tensor_set;
    for (const auto& e : tensor) tensor_set.insert(e.filling);
    if (tensor_set.size() != tensor.size()) note("tensor enumeration has repeated split fillings");

    // forward: sfill image and invert(sfill(J)) == J
    auto images = parallel_map<std::pair<std::vector<Column>, bool>>(adm.size(), workers, [&](std::size_t a) {
        std::vector<Column> s = sfill(ch, adm[a]);
        PathResult pr = invert(ch, s, false);
        return std::make_pair(s, pr.ok && pr.J == adm[a]);
    });
    std::map<std::vector<Column>, std::size_t> seen;
    for (std::size_t a = 0; a < adm.size(); ++a) {
        const auto& [img, rt] = images[a];
        if (rt) ++rep.roundtrip_forward;
        else note("invert(sfill(J)) != J for J=" + format_positions(adm[a]));
        auto [it, fresh] = seen.emplace(img, a);
        if (!fresh) note("sfill not injective: " + format_positions(adm[it->second]) + " and " + format_positions(adm[a]));
        if (!tensor_set.count(img)) note("sfill image outside the tensor set: " + format_filling(img));
    }

    // backward, with per-trace checks
    Qbg graph = build_qbg(t);
    auto checks = parallel_map<ElementCheck>(tensor.size(), workers, [&](std::size_t x) {
        ElementCheck ec;
        const auto& fill_x = tensor[x].filling;
        std::string tag = format_filling(fill_x);
        PathResult pr = invert(ch, fill_x, true);
        if (!pr.ok) {
            ec.problems.push_back("invert failed (" + pr.error + ") on " + tag);
            return ec;
        }
        if (!is_admissible(ch, pr.J)) ec.problems.push_back("inverted subset not admissible on " + tag);
        ec.roundtrip = sfill(ch, pr.J) == fill_x;
        if (!ec.roundtrip) ec.problems.push_back("sfill(invert(x)) != x on " + tag);

        std::vector<Column> ord = reorder(t, fill_x);
        std::size_t ti = 0;
        for (std::size_t s = 0; s < ch.segments.size(); ++s) {
            const Segment& seg = ch.segments[s];
            std::size_t rows = seg.side == Side::Right && t.family != Family::B ? seg.height - 1 : seg.height;
            std::vector<PathTrace> sweep(pr.traces.begin() + ti, pr.traces.begin() + ti + rows);
            ti += rows;
            if (!sweep_monotone(t, sweep, ord[s])) ec.problems.push_back("row monotonicity fails on " + tag);
            for (const PathTrace& tr : sweep) {
                ++ec.traces;
                ec.steps += tr.steps.size();
                ec.skips += tr.skips.size();
                if (tr.passed_target) ++ec.passes;
                Window w = tr.start;
                for (const PathStep& st : tr.steps) {
                    if (!graph.has_edge(w, st.root) || apply_reflection(w, st.root) != st.word)
                        ec.problems.push_back("illegal step " + root_string(st.root) + " from " + format_window(w) + " on " + tag);
                    w = st.word;
                }
                for (const PathStep& sk : tr.skips)
                    if (sk.stage != Stage::I || tr.side == Side::Right)
                        ec.problems.push_back("skip outside stage I: " + root_string(sk.root) + " on " + tag);
            }
        }
        return ec;
    });
    for (const ElementCheck& ec : checks) {
        if (ec.roundtrip) ++rep.roundtrip_backward;
        rep.traces += ec.traces;
        rep.steps += ec.steps;
        rep.skips += ec.skips;
        rep.passes += ec.passes;
        for (const auto& p : ec.problems) note(p);
    }
    return rep;
}

} // namespace krm::harness
