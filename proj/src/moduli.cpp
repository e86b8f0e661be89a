#include "gwcycle/moduli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gw {

std::vector<int> markset_elems(MarkSet s) {
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
        if (markset_has(s, i)) out.push_back(i);
    return out;
}

std::string markset_str(MarkSet s) {
    std::string out;
    for (int v : markset_elems(s)) {
        if (!out.empty()) out += ",";
        out += std::to_string(v);
    }
    return out;
}

int tcount(MarkSet t, int n) {
    if (t == 0 || t == markset_full(n)) return t == 0 ? 0 : 1;
    int runs = 0;
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        if (markset_has(t, i) && !markset_has(t, prev)) ++runs;
    }
    return runs;
}

FCurve::FCurve(int n_, std::array<MarkSet, 4> p) : n(n_), parts(p) {
    MarkSet seen = 0;
    for (MarkSet s : parts) {
        if (s == 0) throw domain_error("F-curve parts must be nonempty");
        if (seen & s) throw domain_error("F-curve parts must be disjoint");
        seen |= s;
    }
    if (seen != markset_full(n)) throw domain_error("F-curve parts must cover {1..n}");
    std::sort(parts.begin(), parts.end(), [](MarkSet a, MarkSet b) {
        return (a & -a) < (b & -b); // by least element
    });
}

std::string FCurve::str() const {
    std::string out = "F{";
    for (int j = 0; j < 4; ++j) {
        if (j) out += "|";
        out += markset_str(parts[j]);
    }
    return out + "}";
}

FCurve FCurve::parse(const std::string& text, int n) {
    std::string s = text;
    if (s.size() < 4 || (s[0] != 'F' && s[0] != 'f') || s[1] != '{' || s.back() != '}')
        throw domain_error("bad F-curve '" + text + "' (want F{..|..|..|..})");
    s = s.substr(2, s.size() - 3);
    std::array<MarkSet, 4> parts{};
    int part = 0;
    std::string tok;
    auto flush_tok = [&]() {
        if (tok.empty()) return;
        int v = 0;
        try { v = std::stoi(tok); } catch (...) { throw domain_error("bad mark '" + tok + "'"); }
        if (v < 1 || v > n) throw domain_error("mark " + tok + " out of range");
        parts[part] |= 1u << (v - 1);
        tok.clear();
    };
    for (char c : s) {
        if (c == '|') {
            flush_tok();
            if (++part > 3) throw domain_error("F-curve needs exactly 4 parts");
        } else if (c == ',' || c == ' ') {
            flush_tok();
        } else {
            tok.push_back(c);
        }
    }
    flush_tok();
    if (part != 3) throw domain_error("F-curve needs exactly 4 parts");
    return FCurve(n, parts);
}

BoundaryDivisor::BoundaryDivisor(int n_, MarkSet t_) : n(n_), t(t_) {
    int sz = markset_size(t);
    if (sz < 2 || sz > n - 2) throw domain_error("boundary divisor needs 2 <= |T| <= n-2");
    MarkSet comp = markset_full(n) & ~t;
    int csz = n - sz;
    // Smaller side, ties broken lexicographically on the element lists;
    // reproduces the nonadjacent-basis labels (d26, d135, d136, ...).
    if (csz < sz || (csz == sz && markset_elems(comp) < markset_elems(t))) t = comp;
}

std::string BoundaryDivisor::str() const { return "d{" + markset_str(t) + "}"; }

BoundaryDivisor BoundaryDivisor::parse(const std::string& text, int n) {
    std::string s = text;
    if (s.size() < 4 || (s[0] != 'd' && s[0] != 'D') || s[1] != '{' || s.back() != '}')
        throw domain_error("bad boundary divisor '" + text + "' (want d{..})");
    s = s.substr(2, s.size() - 3);
    MarkSet t = 0;
    std::string tok;
    auto flush_tok = [&]() {
        if (tok.empty()) return;
        int v = std::stoi(tok);
        if (v < 1 || v > n) throw domain_error("mark " + tok + " out of range");
        t |= 1u << (v - 1);
        tok.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ' ') flush_tok();
        else tok.push_back(c);
    }
    flush_tok();
    return BoundaryDivisor(n, t);
}

int fcurve_delta_pairing(const FCurve& f, const BoundaryDivisor& d) {
    if (f.n != d.n) throw domain_error("fcurve_delta_pairing: mismatched n");
    MarkSet t = d.t, comp = markset_full(d.n) & ~d.t;
    static constexpr int pairings[3][2] = {{0, 1}, {0, 2}, {0, 3}};
    for (auto [i, j] : pairings) {
        MarkSet u = f.parts[i] | f.parts[j];
        if (u == t || u == comp) return 1;
    }
    for (MarkSet p : f.parts)
        if (p == t || p == comp) return -1;
    return 0;
}

namespace {

FCurve fc(int n, const char* text) { return FCurve::parse(text, n); }
BoundaryDivisor bd(int n, const char* text) { return BoundaryDivisor::parse(text, n); }

DualCurveSystem build_n5() {
    DualCurveSystem s;
    s.n = 5;
    s.basis = {bd(5, "d{1,3}"), bd(5, "d{1,4}"), bd(5, "d{2,4}"), bd(5, "d{2,5}"), bd(5, "d{3,5}")};
    const char* duals[5] = {"F{1|2|3|4,5}", "F{1|4|5|2,3}", "F{2|3|4|1,5}", "F{1|2|5|3,4}",
                            "F{3|4|5|1,2}"};
    for (const char* d : duals) s.duals.push_back({{1, fc(5, d)}});
    return s;
}

DualCurveSystem build_n6() {
    DualCurveSystem s;
    s.n = 6;
    const char* basis[16] = {"d{1,3}",   "d{1,4}",   "d{1,5}",   "d{2,4}",  "d{2,5}",  "d{2,6}",
                             "d{3,5}",   "d{3,6}",   "d{4,6}",   "d{1,2,4}", "d{1,2,5}", "d{1,3,4}",
                             "d{1,3,5}", "d{1,3,6}", "d{1,4,5}", "d{1,4,6}"};
    for (const char* b : basis) s.basis.push_back(bd(6, b));
    const char* simple[16] = {"F{1|2|3|4,5,6}", "F{1|4|2,3|5,6}", "F{1|5|6|2,3,4}",
                              "F{2|3|4|1,5,6}", "F{2|5|1,6|3,4}", "F{1|2|6|3,4,5}",
                              "F{3|4|5|1,2,6}", "F{3|6|1,2|4,5}", "F{4|5|6|1,2,3}",
                              "F{3|4|1,2|5,6}", "F{5|6|1,2|3,4}", "F{1|2|3,4|5,6}",
                              "",               "F{2|3|1,6|4,5}", "F{1|6|2,3|4,5}",
                              "F{4|5|1,6|2,3}"};
    for (int k = 0; k < 16; ++k) {
        if (k == 12) {
            s.duals.push_back({{1, fc(6, "F{5|6|1,3|2,4}")},
                               {1, fc(6, "F{1|2|3|4,5,6}")},
                               {1, fc(6, "F{2|3|4|1,5,6}")},
                               {-1, fc(6, "F{2|3|1,6|4,5}")}});
        } else {
            s.duals.push_back({{1, fc(6, simple[k])}});
        }
    }
    return s;
}

} // namespace

const DualCurveSystem& nonadjacent_basis(int n) {
    static const DualCurveSystem s5 = build_n5();
    static const DualCurveSystem s6 = build_n6();
    if (n == 5) return s5;
    if (n == 6) return s6;
    throw domain_error("nonadjacent basis is available for n in {5, 6}");
}

std::vector<FCurve> all_fcurves(int n) {
    if (n < 4 || n > 12) throw domain_error("all_fcurves: n out of range");
    std::vector<FCurve> out;
    // Assign each of marks 2..n to a block; mark 1 goes in block 0; keep
    // only surjective assignments onto 4 blocks, counted once per set
    // partition by requiring first-use order.
    std::vector<int> assign(n, 0);
    std::vector<FCurve> result;
    auto rec = [&](auto&& self, int mark, int used) -> void {
        if (mark > n) {
            if (used != 4) return;
            std::array<MarkSet, 4> parts{};
            for (int i = 1; i <= n; ++i) parts[assign[i - 1]] |= 1u << (i - 1);
            result.push_back(FCurve(n, parts));
            return;
        }
        for (int b = 0; b <= used && b < 4; ++b) {
            assign[mark - 1] = b;
            self(self, mark + 1, b == used ? used + 1 : used);
        }
    };
    assign[0] = 0;
    rec(rec, 2, 1);
    return result;
}

int StratumTree::valence(int v) const {
    int val = markset_size(vertex_marks[v]);
    for (auto [a, b] : edges)
        if (a == v || b == v) ++val;
    return val;
}

int StratumTree::dimension() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d += valence(v) - 3;
    return d;
}

void StratumTree::validate() const {
    int nv = num_vertices();
    if (nv == 0) throw domain_error("stratum tree has no vertices");
    if (static_cast<int>(edges.size()) != nv - 1)
        throw domain_error("stratum tree edge count is not |V|-1");
    MarkSet seen = 0;
    for (MarkSet m : vertex_marks) {
        if (seen & m) throw domain_error("stratum tree markings overlap");
        seen |= m;
    }
    if (seen != markset_full(n)) throw domain_error("stratum tree markings must cover {1..n}");
    // Connectivity.
    std::vector<int> stack{0};
    std::vector<bool> vis(nv, false);
    vis[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : edges) {
            int w = a == v ? b : (b == v ? a : -1);
            if (w >= 0 && !vis[w]) { vis[w] = true; stack.push_back(w); }
        }
    }
    for (bool f : vis)
        if (!f) throw domain_error("stratum tree is disconnected");
    for (int v = 0; v < nv; ++v)
        if (valence(v) < 3) throw domain_error("stratum tree vertex of valence < 3");
}

std::string StratumTree::str() const {
    std::ostringstream os;
    os << "T{";
    for (int v = 0; v < num_vertices(); ++v) {
        if (v) os << "|";
        os << markset_str(vertex_marks[v]);
    }
    os << "}";
    for (auto [a, b] : edges) os << "e" << a << b;
    return os.str();
}

namespace {

// Dual graph of an F-curve with every leg degenerated to a trivalent chain;
// split_off[least element of a size-3 part] picks the mark that becomes its
// own vertex.
StratumTree fcurve_base_tree(const FCurve& f, const std::map<int, int>& split_off) {
    StratumTree t;
    t.n = f.n;
    t.vertex_marks.push_back(0); // spine
    for (MarkSet p : f.parts) {
        int sz = markset_size(p);
        if (sz == 1) {
            t.vertex_marks[0] |= p;
        } else if (sz == 2) {
            t.vertex_marks.push_back(p);
            t.edges.emplace_back(0, t.num_vertices() - 1);
        } else if (sz == 3) {
            auto elems = markset_elems(p);
            int lead = elems.front();
            int off = lead;
            auto it = split_off.find(lead);
            if (it != split_off.end()) off = it->second;
            if (!markset_has(p, off))
                throw domain_error("leg split choice is not a member of the part");
            MarkSet first = 1u << (off - 1);
            t.vertex_marks.push_back(first);
            int va = t.num_vertices() - 1;
            t.edges.emplace_back(0, va);
            t.vertex_marks.push_back(p & ~first);
            t.edges.emplace_back(va, t.num_vertices() - 1);
        } else {
            throw domain_error("pullback_fcurve supports parts of size <= 3");
        }
    }
    return t;
}

std::vector<StratumTree> pullback_impl(const FCurve& f, int forgotten,
                                       const std::map<int, int>& split_off) {
    if (forgotten != f.n + 1)
        throw domain_error("pullback_fcurve: the forgotten marking must be n+1");
    StratumTree base = fcurve_base_tree(f, split_off);
    std::vector<StratumTree> out;
    for (int v = 0; v < base.num_vertices(); ++v) {
        StratumTree t = base;
        t.n = f.n + 1;
        t.vertex_marks[v] |= 1u << (forgotten - 1);
        t.validate();
        if (t.dimension() != 2)
            throw internal_error("pullback component of unexpected dimension");
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

std::vector<StratumTree> pullback_fcurve(const FCurve& f, int forgotten) {
    return pullback_impl(f, forgotten, {});
}

std::vector<StratumTree> pullback_fcurve_with_splits(const FCurve& f, int forgotten,
                                                     const std::vector<int>& split_choices) {
    std::map<int, int> split_off;
    std::size_t idx = 0;
    for (MarkSet p : f.parts) {
        if (markset_size(p) == 3) {
            if (idx >= split_choices.size())
                throw domain_error("missing split choice for a size-3 part");
            split_off[markset_elems(p).front()] = split_choices[idx++];
        }
    }
    if (idx != split_choices.size()) throw domain_error("too many split choices");
    return pullback_impl(f, forgotten, split_off);
}

} // namespace gw
