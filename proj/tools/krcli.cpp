// krcli: enumeration, forward and inverse maps, verification and graph
// export from the command line.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "harness.hpp"
#include "krmodel/krmodel.hpp"

using json = nlohmann::json;
using namespace krm;

namespace {

struct Options {
    std::string family = "A";
    int rank = 3;
    std::string lambda;
    bool as_json = false;
    std::size_t max_chain = kMaxChainLength;
    std::size_t max_group = kMaxGroupOrder;
    std::string subset;
    std::string filling;
    bool kn_input = false;
    bool trace = false;
    std::string golden_dir = KRM_GOLDEN_DIR;
    int workers = 0;
};

[[noreturn]] void fail(const std::string& reason, int code = 2) {
    std::cerr << "error: " << reason << "\n";
    std::exit(code);
}

LieType lie_type(const Options& o, bool builds_graph = false) {
    LieType t{parse_family(o.family), o.rank};
    if (t.rank < 1 || t.rank > 10) fail("rank out of range");
    if (builds_graph && group_order(t) > o.max_group) fail("group order guard exceeded");
    return t;
}

LambdaChain chain_for(const Options& o, bool builds_graph = false) {
    LambdaChain ch = lambda_chain(lie_type(o, builds_graph), parse_partition(o.lambda));
    if (ch.size() > o.max_chain) fail("chain length guard exceeded (" + std::to_string(ch.size()) + ")");
    return ch;
}

json columns_json(const std::vector<Column>& f) {
    json a = json::array();
    for (const Column& c : f) a.push_back(c);
    return a;
}

json subset_json(const LambdaChain& ch, const std::vector<int>& J) {
    return json{{"lambda", ch.lambda},
                {"type", std::string(1, family_char(ch.type.family))},
                {"rank", ch.type.rank},
                {"J", J}};
}

int cmd_chain(const Options& o) {
    LambdaChain ch = chain_for(o);
    for (std::size_t p = 0; p < ch.size(); ++p) {
        const ChainPosition& cp = ch.positions[p];
        std::cout << p + 1 << "\t" << root_string(cp.root) << "\t" << cp.column + 1 << "\t" << side_name(cp.side) << "\t"
                  << stage_name(cp.stage) << "\n";
    }
    return 0;
}

int cmd_enumerate_admissible(const Options& o) {
    LambdaChain ch = chain_for(o);
    for (const auto& J : enumerate_admissible(ch)) {
        if (o.as_json) std::cout << subset_json(ch, J).dump() << "\n";
        else std::cout << format_positions(J) << "\n";
    }
    return 0;
}

int cmd_enumerate_tensor(const Options& o) {
    LieType t = lie_type(o);
    std::vector<int> heights = conjugate(trim_partition(parse_partition(o.lambda)));
    for (const TensorElement& e : enumerate_tensor(t, heights)) {
        if (o.as_json)
            std::cout << json{{"type", std::string(1, family_char(t.family))}, {"rank", t.rank}, {"columns", columns_json(e.filling)}}.dump()
                      << "\n";
        else
            std::cout << format_filling(e.filling) << "\n";
    }
    return 0;
}

int cmd_fill(const Options& o) {
    LambdaChain ch = chain_for(o);
    std::vector<int> J = parse_int_list(o.subset, ',');
    FillResult f = fill(ch, J);
    std::cout << json{{"J", J}, {"raw", columns_json(f.raw)}, {"sorted", columns_json(f.sorted)}}.dump() << "\n";
    return 0;
}

int cmd_invert(const Options& o) {
    LambdaChain ch = chain_for(o);
    std::vector<Column> f = parse_filling(o.filling);
    if (o.kn_input) f = split_filling(ch.type, ch.heights, f);
    PathResult pr = invert(ch, f, o.trace);
    if (!pr.ok) fail(pr.error, 1);
    if (o.trace)
        for (const PathTrace& tr : pr.traces)
            for (const PathStep& s : tr.steps)
                std::cout << json{{"root", root_string(s.root)},
                                  {"window", format_window(s.word)},
                                  {"stage", stage_name(s.stage)},
                                  {"side", side_name(tr.side)},
                                  {"row", tr.row}}
                                 .dump()
                          << "\n";
    std::cout << subset_json(ch, pr.J).dump() << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    LambdaChain ch = chain_for(o, true);
    harness::VerifyReport rep = harness::verify_suite(ch.type, ch.lambda, o.workers);
    json out{{"type", std::string(1, family_char(rep.type.family))},
             {"rank", rep.type.rank},
             {"lambda", rep.lambda},
             {"counts",
              {{"chain", rep.chain_length},
               {"admissible", rep.admissible},
               {"tensor", rep.tensor},
               {"roundtrip_forward", rep.roundtrip_forward},
               {"roundtrip_backward", rep.roundtrip_backward},
               {"traces", rep.traces},
               {"steps", rep.steps},
               {"skips", rep.skips},
               {"passes", rep.passes}}},
             {"mismatches", rep.mismatches}};
    std::cout << out.dump(2) << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_examples(const Options& o) {
    int bad = 0;
    for (const auto& r : harness::run_golden(o.golden_dir)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass) {
            std::cout << "  " << r.detail;
            ++bad;
        }
        std::cout << "\n";
    }
    return bad ? 1 : 0;
}

int cmd_qbg(const Options& o) {
    Qbg g = build_qbg(lie_type(o, true));
    if (!o.as_json) {
        std::cout << export_dot(g);
        return 0;
    }
    json a = json::array();
    for (const QbgEdge& e : g.edges)
        a.push_back({{"source", format_window(e.source)},
                     {"target", format_window(e.target)},
                     {"label", root_string(e.label)},
                     {"kind", edge_kind_name(e.kind)}});
    std::cout << a.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum alcove model and KN tableaux for column-shape KR crystals"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_lambda) {
        sub->add_option("--type", o.family, "A, B, C or D")->required();
        sub->add_option("--rank", o.rank, "rank n (window size for type A)")->required();
        if (needs_lambda) sub->add_option("--lambda", o.lambda, "partition, e.g. 3,2")->required();
        sub->add_option("--max-chain", o.max_chain, "chain length guard");
        sub->add_option("--max-group", o.max_group, "group order guard");
        sub->add_flag("--json", o.as_json, "JSON output");
    };

    auto* chain = app.add_subcommand("chain", "dump the λ-chain with column/side/stage");
    common(chain, true);
    auto* adm = app.add_subcommand("enumerate-admissible", "all admissible subsets");
    common(adm, true);
    auto* ten = app.add_subcommand("enumerate-tensor", "all tensor elements in split form");
    common(ten, true);
    auto* fil = app.add_subcommand("fill", "fill and sfill of a subset");
    common(fil, true);
    fil->add_option("--J", o.subset, "1-based positions, e.g. 1,2,3,5")->required();
    auto* inv = app.add_subcommand("invert", "subset for a filling");
    common(inv, true);
    inv->add_option("--filling", o.filling, "columns joined by |, e.g. 2,3|1,2|1")->required();
    inv->add_flag("--kn", o.kn_input, "filling holds raw KN columns, one per column of λ");
    inv->add_flag("--trace", o.trace, "emit the path steps as JSON lines");
    auto* ver = app.add_subcommand("verify", "exhaustive bijection checks");
    common(ver, true);
    ver->add_option("--workers", o.workers, "worker threads (default KRM_WORKERS or all cores)");
    auto* ex = app.add_subcommand("examples", "replay the golden cases");
    ex->add_option("--golden-dir", o.golden_dir, "directory of golden files");
    auto* dot = app.add_subcommand("qbg-dot", "quantum Bruhat graph as DOT (or JSON edges)");
    common(dot, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*chain) return cmd_chain(o);
        if (*adm) return cmd_enumerate_admissible(o);
        if (*ten) return cmd_enumerate_tensor(o);
        if (*fil) return cmd_fill(o);
        if (*inv) return cmd_invert(o);
        if (*ver) return cmd_verify(o);
        if (*ex) return cmd_examples(o);
        if (*dot) return cmd_qbg(o);
    } catch (const std::exception& e) {
        fail(e.what());
    }
    return 0;
}
