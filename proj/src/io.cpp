#include "rowcomplex/io.hpp"

#include <fstream>
#include <sstream>

namespace rowcomplex {

namespace {

std::string strip_comment(const std::string& line) {
    size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

int parse_int(const std::string& tok, const std::string& where) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(where + ": bad integer '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(where + ": bad integer '" + tok + "'");
    return v;
}

}  // namespace

SetFile parse_set_file(std::istream& in, const std::string& what) {
    SetFile out;
    std::string line;
    int lineno = 0;
    bool have_w = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream tokens(body);
        std::string tok;
        std::string where = what + " line " + std::to_string(lineno);
        if (!have_w) {
            tokens >> tok;
            out.w = parse_int(tok, where);
            if (out.w < 1) throw ParseError(where + ": w must be >= 1");
            if (tokens >> tok)
                throw ParseError(where + ": expected only w on the first line");
            have_w = true;
            continue;
        }
        std::vector<int> elems;
        while (tokens >> tok) {
            int v = parse_int(tok, where);
            if (v < 1 || v > out.w)
                throw ParseError(where + ": position " + std::to_string(v) +
                                 " outside 1.." + std::to_string(out.w));
            elems.push_back(v);
        }
        out.sets.emplace_back(std::move(elems));
    }
    if (!have_w) throw ParseError(what + ": missing width line");
    return out;
}

SetFile load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_set_file(in, path);
}

std::string format_set_file(int w, const std::vector<FaceSet>& sets) {
    std::string out = std::to_string(w) + "\n";
    for (const FaceSet& s : sets) {
        for (size_t i = 0; i < s.elements().size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(s.elements()[i]);
        }
        out += '\n';
    }
    return out;
}

Weights parse_weights(std::istream& in, int w) {
    Weights weights(static_cast<size_t>(w), 0);
    std::vector<char> seen(static_cast<size_t>(w) + 1, 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream tokens(body);
        std::string where = "weights line " + std::to_string(lineno);
        std::string ptok, wtok, extra;
        if (!(tokens >> ptok >> wtok))
            throw ParseError(where + ": expected 'position weight'");
        if (tokens >> extra)
            throw ParseError(where + ": trailing tokens");
        int pos = parse_int(ptok, where);
        if (pos < 1 || pos > w)
            throw ParseError(where + ": position outside 1.." +
                             std::to_string(w));
        if (seen[pos])
            throw ParseError(where + ": duplicate position " +
                             std::to_string(pos));
        seen[pos] = 1;
        try {
            weights[pos - 1] = std::stoll(wtok);
        } catch (const std::exception&) {
            throw ParseError(where + ": bad weight '" + wtok + "'");
        }
    }
    for (int pos = 1; pos <= w; ++pos)
        if (!seen[pos])
            throw ParseError("weights: position " + std::to_string(pos) +
                             " missing");
    return weights;
}

Weights load_weights(const std::string& path, int w) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_weights(in, w);
}

std::string format_partition(const Partition& p) {
    std::string out = "w=" + std::to_string(p.w) +
                      " kind=" + (p.kind == RowKind::E ? "E" : "N") +
                      " rows=" + std::to_string(p.rows.size()) + "\n";
    for (const Row& r : p.rows) out += r.render() + "\n";
    return out;
}

FaceSet parse_position_list(const std::string& text) {
    std::vector<int> elems;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw ParseError("position list: empty entry");
        elems.push_back(parse_int(tok, "position list"));
        if (elems.back() < 1) throw ParseError("position list: positions are 1-based");
    }
    return FaceSet(std::move(elems));
}

}  // namespace rowcomplex
