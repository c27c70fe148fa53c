#pragma once

// Text forms: windows "1 -4 3 2", columns "5,0,-8,-5", fillings of columns
// joined by '|', partitions "3,2".

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl.hpp"

namespace krm {

inline std::string format_window(const Window& w) {
    std::string s;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) s += ' ';
        s += std::to_string(w[p]);
    }
    return s;
}

inline Window parse_window(const std::string& text) {
    std::istringstream is(text);
    Window w;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (!used || used != tok.size()) throw std::invalid_argument("bad window entry: " + tok);
        if (x == 0) throw std::invalid_argument("0 is not allowed in a window");
        w.push_back(x);
    }
    if (!is_signed_permutation(w)) throw std::invalid_argument("not a signed permutation: " + text);
    return w;
}

inline std::string format_column(const Column& c) {
    std::string s;
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (p) s += ',';
        s += std::to_string(c[p]);
    }
    return s;
}

inline std::vector<int> parse_int_list(const std::string& text, char sep) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, sep)) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (!used || used != tok.size()) throw std::invalid_argument("bad integer: " + tok);
        out.push_back(x);
    }
    return out;
}

inline Column parse_column(const std::string& text) { return parse_int_list(text, ','); }

inline std::string format_filling(const std::vector<Column>& f) {
    std::string s;
    for (std::size_t c = 0; c < f.size(); ++c) {
        if (c) s += '|';
        s += format_column(f[c]);
    }
    return s;
}

inline std::vector<Column> parse_filling(const std::string& text) {
    std::vector<Column> f;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, '|')) f.push_back(parse_column(tok));
    return f;
}

inline std::vector<int> parse_partition(const std::string& text) { return parse_int_list(text, ','); }

inline std::string format_positions(const std::vector<int>& J) {
    std::string s = "{";
    for (std::size_t p = 0; p < J.size(); ++p) {
        if (p) s += ',';
        s += std::to_string(J[p]);
    }
    return s + "}";
}

} // namespace krm
