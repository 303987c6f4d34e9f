#include "rowcomplex/row.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rowcomplex {

RowKind flipped(RowKind k) { return k == RowKind::E ? RowKind::N : RowKind::E; }

char kind_letter(RowKind k) { return k == RowKind::E ? 'e' : 'n'; }

Row Row::from_symbols(RowKind kind, std::vector<int> symbols) {
    if (symbols.empty()) throw std::invalid_argument("Row: width must be >= 1");
    Row r;
    r.kind_ = kind;
    r.symbols_ = std::move(symbols);
    // Renumber bubble ids canonically: 1..t in first-occurrence order.
    std::map<int, int> remap;
    std::vector<std::vector<int>> positions;
    for (int pos = 1; pos <= r.width(); ++pos) {
        int s = r.symbols_[pos - 1];
        if (s < 0) throw std::invalid_argument("Row: bad symbol value");
        if (s <= 2) continue;
        auto [it, fresh] = remap.try_emplace(s, static_cast<int>(remap.size()) + 1);
        if (fresh) positions.emplace_back();
        r.symbols_[pos - 1] = bubble_symbol(it->second);
        positions[it->second - 1].push_back(pos);
    }
    r.bubbles_.reserve(positions.size());
    for (auto& p : positions) r.bubbles_.emplace_back(std::move(p));
    return r;
}

Row Row::full_cube(RowKind kind, int w) {
    return from_symbols(kind, std::vector<int>(static_cast<size_t>(w), 2));
}

Row Row::powerset(RowKind kind, int w, const FaceSet& inside) {
    if (inside.max_element() > w)
        throw std::invalid_argument("Row::powerset: set exceeds width");
    std::vector<int> symbols(static_cast<size_t>(w), 0);
    for (int e : inside.elements()) symbols[e - 1] = 2;
    return from_symbols(kind, std::move(symbols));
}

void Row::check_pos(int pos) const {
    if (pos < 1 || pos > width())
        throw std::invalid_argument("Row: position out of range");
}

int Row::symbol(int pos) const {
    check_pos(pos);
    return symbols_[pos - 1];
}

int Row::bubble_id(int pos) const {
    int s = symbol(pos);
    return s > 2 ? s - 2 : 0;
}

FaceSet Row::zeros() const {
    std::vector<int> out;
    for (int pos = 1; pos <= width(); ++pos)
        if (symbols_[pos - 1] == 0) out.push_back(pos);
    return FaceSet(std::move(out));
}

FaceSet Row::ones() const {
    std::vector<int> out;
    for (int pos = 1; pos <= width(); ++pos)
        if (symbols_[pos - 1] == 1) out.push_back(pos);
    return FaceSet(std::move(out));
}

FaceSet Row::twos() const {
    std::vector<int> out;
    for (int pos = 1; pos <= width(); ++pos)
        if (symbols_[pos - 1] == 2) out.push_back(pos);
    return FaceSet(std::move(out));
}

int Row::two_count() const {
    return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), 2));
}

int Row::one_count() const {
    return static_cast<int>(std::count(symbols_.begin(), symbols_.end(), 1));
}

bool Row::contains(const FaceSet& x) const {
    if (x.max_element() > width())
        throw std::invalid_argument("Row::contains: member out of range");
    std::vector<char> in(static_cast<size_t>(width()) + 1, 0);
    for (int e : x.elements()) in[e] = 1;
    for (int pos = 1; pos <= width(); ++pos) {
        int s = symbols_[pos - 1];
        if (s == 0 && in[pos]) return false;
        if (s == 1 && !in[pos]) return false;
    }
    for (const FaceSet& b : bubbles_) {
        bool all = true, any = false;
        for (int e : b.elements()) {
            if (in[e])
                any = true;
            else
                all = false;
        }
        if (kind_ == RowKind::E ? !any : all) return false;
    }
    return true;
}

BigInt Row::cardinality() const {
    BigInt n = pow2(two_count());
    for (const FaceSet& b : bubbles_) n *= pow2(b.size()) - 1;
    return n;
}

CountVector Row::size_histogram(int upto) const {
    if (upto < 0 || upto > width())
        throw std::invalid_argument("size_histogram: upto out of range");
    CountVector out(static_cast<size_t>(upto) + 1);
    int beta = one_count();
    int cap = upto - beta;
    if (cap < 0) return out;
    // Member sizes are beta plus the picks from the free positions and the
    // bubbles: coefficient of x^(k-beta) in (1+x)^gamma * prod P_j, where
    // P_j = (1+x)^eps - 1 for kind E and (1+x)^eps - x^eps for kind N.
    Poly acc = binomial_poly(two_count(), cap);
    for (const FaceSet& b : bubbles_) {
        int eps = b.size();
        Poly pj = binomial_poly(eps, cap);
        if (kind_ == RowKind::E) {
            pj[0] -= 1;
        } else if (eps <= cap) {
            pj[eps] -= 1;
        }
        acc = poly_mul(acc, pj, cap);
    }
    for (int d = 0; d < static_cast<int>(acc.size()); ++d)
        out[beta + d] = acc[d];
    return out;
}

Row Row::complemented() const {
    Row r = *this;
    r.kind_ = flipped(kind_);
    for (int& s : r.symbols_)
        if (s <= 1) s = 1 - s;
    return r;
}

std::optional<Row> Row::normalized() const {
    std::vector<int> symbols = symbols_;
    for (const FaceSet& b : bubbles_) {
        if (b.empty()) return std::nullopt;
        if (b.size() == 1)
            symbols[b.elements()[0] - 1] = kind_ == RowKind::E ? 1 : 0;
    }
    return from_symbols(kind_, std::move(symbols));
}

std::optional<Row> Row::with_zero(int pos) const {
    int s = symbol(pos);
    if (s == 0) return *this;
    if (s == 1) return std::nullopt;
    std::vector<int> symbols = symbols_;
    if (s == 2) {
        symbols[pos - 1] = 0;
        return from_symbols(kind_, std::move(symbols));
    }
    const FaceSet& b = bubbles_[s - 3];
    symbols[pos - 1] = 0;
    if (kind_ == RowKind::E) {
        // The bubble loses a chance to be hit.
        if (b.size() == 1) return std::nullopt;
        if (b.size() == 2)
            for (int e : b.elements())
                if (e != pos) symbols[e - 1] = 1;
    } else {
        // A forced 0 satisfies the bubble; its other positions go free.
        for (int e : b.elements())
            if (e != pos) symbols[e - 1] = 2;
    }
    return from_symbols(kind_, std::move(symbols));
}

std::optional<Row> Row::with_one(int pos) const {
    int s = symbol(pos);
    if (s == 1) return *this;
    if (s == 0) return std::nullopt;
    std::vector<int> symbols = symbols_;
    if (s == 2) {
        symbols[pos - 1] = 1;
        return from_symbols(kind_, std::move(symbols));
    }
    const FaceSet& b = bubbles_[s - 3];
    symbols[pos - 1] = 1;
    if (kind_ == RowKind::E) {
        for (int e : b.elements())
            if (e != pos) symbols[e - 1] = 2;
    } else {
        if (b.size() == 1) return std::nullopt;
        if (b.size() == 2)
            for (int e : b.elements())
                if (e != pos) symbols[e - 1] = 0;
    }
    return from_symbols(kind_, std::move(symbols));
}

std::string Row::render() const {
    std::string out;
    for (int pos = 1; pos <= width(); ++pos) {
        if (pos > 1) out += ' ';
        int s = symbols_[pos - 1];
        if (s <= 2)
            out += static_cast<char>('0' + s);
        else
            out += kind_letter(kind_) + std::to_string(s - 2);
    }
    return out;
}

Row Row::parse(const std::string& line, RowKind fallback) {
    std::istringstream in(line);
    std::vector<int> symbols;
    std::optional<RowKind> kind;
    std::string tok;
    while (in >> tok) {
        if (tok == "0" || tok == "1" || tok == "2") {
            symbols.push_back(tok[0] - '0');
            continue;
        }
        RowKind k;
        if (tok[0] == 'e')
            k = RowKind::E;
        else if (tok[0] == 'n')
            k = RowKind::N;
        else
            throw ParseError("bad row symbol '" + tok + "'");
        if (kind && *kind != k) throw ParseError("row mixes e and n bubbles");
        kind = k;
        int id = 1;
        if (tok.size() > 1) {
            size_t used = 0;
            try {
                id = std::stoi(tok.substr(1), &used);
            } catch (const std::exception&) {
                throw ParseError("bad row symbol '" + tok + "'");
            }
            if (used + 1 != tok.size() || id < 1)
                throw ParseError("bad row symbol '" + tok + "'");
        }
        symbols.push_back(bubble_symbol(id));
    }
    if (symbols.empty()) throw ParseError("empty row");
    return from_symbols(kind.value_or(fallback), std::move(symbols));
}

}  // namespace rowcomplex
