#include "harness.hpp"

#include <fstream>
#include <sstream>

namespace krm::harness {

namespace {

std::string chain_text(const LambdaChain& ch) {
    std::string s;
    for (std::size_t g = 0; g < ch.segments.size(); ++g) {
        const Segment& seg = ch.segments[g];
        if (g && (ch.type.family == Family::A || seg.side == Side::Left)) s += " |";
        else if (g) s += " /";
        for (std::size_t p = seg.begin; p < seg.end; ++p) s += " " + root_string(ch.positions[p].root);
    }
    return s.empty() ? s : s.substr(1);
}

std::vector<Root> roots_at(const LambdaChain& ch, const std::vector<int>& J) {
    std::vector<Root> out;
    for (int p : J) out.push_back(ch.positions[p - 1].root);
    return out;
}

std::string type_line(const LieType& t) {
    return std::string("type ") + family_char(t.family) + " rank " + std::to_string(t.rank);
}

std::string a2_fill() {
    LieType t{Family::A, 3};
    LambdaChain ch = lambda_chain(t, {3, 2});
    std::vector<int> J{1, 2, 3, 5};
    std::ostringstream os;
    os << type_line(t) << " lambda 3,2\n";
    os << "chain " << chain_text(ch) << "\n";
    os << "J " << format_positions(J) << "\n";
    os << "admissible " << (is_admissible(ch, J) ? "yes" : "no") << "\n";
    os << render_steps(t, identity_window(3), roots_at(ch, J));
    FillResult f = fill(ch, J);
    os << "fill " << format_filling(f.raw) << "\n";
    os << "sfill " << format_filling(f.sorted) << "\n";
    PathResult inv = invert(ch, f.sorted);
    os << "invert " << (inv.ok ? format_positions(inv.J) : inv.error) << "\n";
    return os.str();
}

std::string a_reorder() {
    LieType t{Family::A, 6};
    std::vector<Column> b = parse_filling("3,5,6|2,3,4|1,2,4|2");
    std::ostringstream os;
    os << type_line(t) << "\n";
    os << "input " << format_filling(b) << "\n";
    os << "ord " << format_filling(reorder(t, b)) << "\n";
    return os.str();
}

std::string a3_path() {
    LieType t{Family::A, 4};
    LambdaChain ch = lambda_chain(t, {3, 2, 1});
    std::vector<Column> b = parse_filling("1,3,4|1,2|2");
    std::ostringstream os;
    os << type_line(t) << " lambda 3,2,1\n";
    os << "chain " << chain_text(ch) << "\n";
    os << "input " << format_filling(b) << "\n";
    std::vector<Column> ord = reorder(t, b);
    os << "ord " << format_filling(ord) << "\n";
    PathResult pr = path(ch, ord);
    if (!pr.ok) return os.str() + "error " + pr.error + "\n";
    std::string s;
    int col = -1;
    for (int p : pr.J) {
        const ChainPosition& cp = ch.positions[p - 1];
        if (col >= 0 && cp.column != col) s += " |";
        col = cp.column;
        s += " " + root_string(cp.root);
    }
    os << "S" << s << "\n";
    os << "J " << format_positions(pr.J) << "\n";
    os << render_steps(t, identity_window(4), roots_at(ch, pr.J));
    os << "sfill " << format_filling(sfill(ch, pr.J)) << "\n";
    return os.str();
}

std::string b6_column() {
    LieType t{Family::B, 6};
    Column c = parse_column("2,3,0,0,-2");
    return type_line(t) + "\ncolumn " + format_column(c) + "\nvalid " + (validate_kn(t, c) ? "yes" : "no") + "\n";
}

std::string b8_split() {
    LieType t{Family::B, 8};
    Column c = parse_column("5,0,-8,-5");
    SplitPair sp = split(t, c);
    SplitPair ex = extend(sp, 6, 8);
    std::ostringstream os;
    os << type_line(t) << "\n";
    os << "column " << format_column(c) << "\n";
    os << "split " << format_filling({sp.left, sp.right}) << "\n";
    os << "extend 6 " << format_filling({ex.left, ex.right}) << "\n";
    return os.str();
}

std::string blocked_example() {
    LieType t{Family::B, 8};
    Column l = parse_column("1,4,-2,-3,5"), r = parse_column("1,5,-2,3,8");
    BlockedOffReport rep = is_blocked_off(t, l, r, 4);
    std::ostringstream os;
    os << type_line(t) << "\n";
    os << "left " << format_column(l) << "\n";
    os << "right " << format_column(r) << "\n";
    os << "row 4 " << (rep.blocked ? "blocked by " + std::to_string(rep.bound) : std::string("not blocked")) << "\n";
    return os.str();
}

std::string b_reorder() {
    LieType t{Family::B, 8};
    std::vector<Column> b = parse_filling("1,4,-2,-3,5|1,3,5,8,-2");
    std::ostringstream os;
    os << type_line(t) << "\n";
    os << "input " << format_filling(b) << "\n";
    os << "ord " << format_filling(reorder(t, b)) << "\n";
    return os.str();
}

std::string b3_path() {
    LieType t{Family::B, 3};
    Window u = parse_window("-3 -2 1");
    Column target = parse_column("1,3,2");
    int k = 2;
    std::ostringstream os;
    os << type_line(t) << "\n";
    std::string seg;
    for (const ChainPosition& p : omega_chain_left(t, k)) seg += " " + root_string(p.root);
    os << "left half" << seg << "\n";
    os << "start " << format_window(u) << "\n";
    os << "target " << format_column(target) << "\n";
    for (int i = k; i >= 1; --i) {
        PathTrace tr = path_segment(t, u, i, target, k);
        for (const PathStep& s : tr.skips) os << "skip " << root_string(s.root) << "\n";
        for (const PathStep& s : tr.steps) {
            os << "step " << format_window(u) << " -> " << format_window(s.word) << " by " << root_string(s.root) << "\n";
            u = s.word;
        }
    }
    return os.str();
}

std::string b8_path() {
    LieType t{Family::B, 8};
    Window u = parse_window("1 4 -2 -3 8 7 5 6");
    std::vector<Root> roots;
    for (const char* r : {"(6,-6)", "(6,-8)", "(6,-7)", "(6,-4)", "(4,7)", "(2,7)"}) roots.push_back(parse_root(r));
    return type_line(t) + "\n" + render_steps(t, u, roots);
}

} // namespace

std::string render_steps(const LieType& t, const Window& start, const std::vector<Root>& roots) {
    std::ostringstream os;
    Window w = start;
    for (const Root& r : roots) {
        Window v = apply_reflection(w, r);
        auto k = edge_kind(t, w, r);
        os << "step " << format_window(w) << " -> " << format_window(v) << " by " << root_string(r) << " "
           << (k ? edge_kind_name(*k) : "none") << "\n";
        w = v;
    }
    return os.str();
}

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases{
        {"a2_chain_fill", a2_fill},
        {"a6_reorder", a_reorder},
        {"a4_path", a3_path},
        {"b6_column", b6_column},
        {"b8_split_extend", b8_split},
        {"b8_blocked_off", blocked_example},
        {"b8_reorder", b_reorder},
        {"b3_left_path", b3_path},
        {"b8_qbg_path", b8_path},
    };
    return cases;
}

std::vector<GoldenOutcome> run_golden(const std::string& dir) {
    std::vector<GoldenOutcome> out;
    for (const GoldenCase& c : golden_cases()) {
        GoldenOutcome o{c.name, false, ""};
        std::ifstream in(dir + "/" + c.name + ".txt", std::ios::binary);
        if (!in) {
            o.detail = "missing golden file";
            out.push_back(o);
            continue;
        }
        std::stringstream want;
        want << in.rdbuf();
        std::string got;
        try {
            got = c.render();
        } catch (const std::exception& e) {
            o.detail = std::string("error: ") + e.what();
            out.push_back(o);
            continue;
        }
        o.pass = got == want.str();
        if (!o.pass) {
            std::istringstream a(got), b(want.str());
            std::string la, lb;
            int line = 1;
            while (true) {
                bool ga = static_cast<bool>(std::getline(a, la)), gb = static_cast<bool>(std::getline(b, lb));
                if (!ga && !gb) break;
                if (!ga || !gb || la != lb) {
                    o.detail = "line " + std::to_string(line) + ": got '" + (ga ? la : "<eof>") + "' want '" +
                               (gb ? lb : "<eof>") + "'";
                    break;
                }
                ++line;
            }
            if (o.detail.empty()) o.detail = "trailing bytes differ";
        }
        out.push_back(o);
    }
    return out;
}

} // namespace krm::harness
