#include "gwcycle/nef_cone.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include <json.hpp>

namespace gw {

void RayTable::validate() const {
    std::size_t len = nonadjacent_basis(n).basis.size();
    for (const auto& [name, v] : rays) {
        if (v.size() != len)
            throw domain_error("ray " + name + " has wrong length");
        bool nonzero = false;
        for (long long x : v) {
            if (x < 0) throw domain_error("ray " + name + " has a negative entry");
            if (x != 0) nonzero = true;
        }
        if (!nonzero) throw domain_error("ray " + name + " is zero");
    }
}

RayTable RayTable::defaults(int n) {
    if (n != 6) throw domain_error("default ray table exists for n = 6 only");
    RayTable t;
    t.n = 6;
    // Extremal rays of Nef(M_{0,6}) quoted in the worked examples, by their
    // numbers in Swinarski's enumeration.  Rays whose S6-class appears
    // through more than one representative carry letter suffixes.
    t.rays = {
        {"R1", {1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 2, 0, 0, 0}},
        {"R3", {0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"R5", {1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 2, 0, 0, 1}},
        {"R5b", {0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 0}},
        {"R6", {0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0}},
        {"R6b", {0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0}},
        {"R6c", {0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"R10", {1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0, 3, 0, 0, 1}},
        {"R16", {1, 0, 1, 0, 1, 1, 1, 0, 2, 0, 1, 1, 2, 0, 0, 1}},
        {"R20", {0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1}},
    };
    t.validate();
    return t;
}

RayTable RayTable::load_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RayTable t;
    t.n = j.at("n").get<int>();
    for (const auto& [name, arr] : j.at("rays").items()) {
        std::vector<long long> v;
        for (const auto& x : arr) v.push_back(x.get<long long>());
        t.rays[name] = std::move(v);
    }
    t.validate();
    return t;
}

std::string RayTable::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    nlohmann::json rays = nlohmann::json::object();
    for (const auto& [name, v] : this->rays) rays[name] = v;
    j["rays"] = rays;
    return j.dump();
}

namespace {

// Exact solve of A x = v for x over the rationals; returns false when the
// system is inconsistent.  A is dim x k with k <= 7.
bool solve_exact(const std::vector<std::vector<Rational>>& cols,
                 const std::vector<Rational>& v, std::vector<Rational>& x) {
    std::size_t dim = v.size(), k = cols.size();
    std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) m[i][j] = cols[j][i];
        m[i][k] = v[i];
    }
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < dim; ++col) {
        std::size_t p = row;
        while (p < dim && m[p][col].is_zero()) ++p;
        if (p == dim) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& c : m[row]) c *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t i = row; i < dim; ++i)
        if (!m[i][k].is_zero()) return false;
    // Free columns stay zero, so each pivot variable reads off directly.
    x.assign(k, Rational(0));
    for (std::size_t rr = 0; rr < pivot_col.size(); ++rr) x[pivot_col[rr]] = m[rr][k];
    // Verify the candidate exactly.
    for (std::size_t i = 0; i < dim; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < k; ++j) s += cols[j][i] * x[j];
        if (s != v[i]) return false;
    }
    return true;
}

} // namespace

std::optional<std::map<std::string, Rational>> decompose_in_rays(const ClassVector& v,
                                                                 const RayTable& table) {
    if (v.n != table.n) throw domain_error("decompose_in_rays: mismatched n");
    bool all_zero = true;
    for (const auto& c : v.coeffs) all_zero = all_zero && c.is_zero();
    if (all_zero) return std::map<std::string, Rational>{};

    std::vector<std::string> names;
    std::vector<std::vector<Rational>> cols;
    for (const auto& [name, ray] : table.rays) {
        names.push_back(name);
        std::vector<Rational> col;
        for (long long x : ray) col.emplace_back(x);
        cols.push_back(std::move(col));
    }
    std::size_t nrays = names.size();
    std::size_t max_support = std::min<std::size_t>(7, nrays);

    std::vector<int> idx;
    std::function<std::optional<std::map<std::string, Rational>>(std::size_t, std::size_t)> rec =
        [&](std::size_t start, std::size_t want) -> std::optional<std::map<std::string, Rational>> {
        if (idx.size() == want) {
            std::vector<std::vector<Rational>> sub;
            for (int i : idx) sub.push_back(cols[i]);
            std::vector<Rational> x;
            if (!solve_exact(sub, v.coeffs, x)) return std::nullopt;
            std::map<std::string, Rational> out;
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (x[j] < Rational(0)) return std::nullopt;
                if (!x[j].is_zero()) out[names[idx[j]]] = x[j];
            }
            return out;
        }
        for (std::size_t i = start; i < nrays; ++i) {
            idx.push_back(static_cast<int>(i));
            auto got = rec(i + 1, want);
            idx.pop_back();
            if (got) return got;
        }
        return std::nullopt;
    };
    for (std::size_t size = 1; size <= max_support; ++size) {
        idx.clear();
        auto got = rec(0, size);
        if (got) return got;
    }
    return std::nullopt;
}

std::set<FCurve> contracted_fcurves_odd_quadric(const TargetSpace& X,
                                                const std::vector<int>& codims,
                                                int degree, ContractRule rule) {
    if (X.kind != SpaceKind::OddQuadric)
        throw domain_error("contraction predicates apply to odd quadrics");
    int n = static_cast<int>(codims.size());
    for (int a : codims)
        if (a < 0 || a > X.r) throw domain_error("codimension out of range");
    std::set<FCurve> out;
    auto curves = all_fcurves(n);

    if (rule == ContractRule::Contract1) {
        // All subsets J with sum r, paired with an index i outside J with
        // a_i = r; contracted curves have I = J u {i} as a part.
        std::set<MarkSet> parts_i;
        for (int i = 1; i <= n; ++i) {
            if (codims[i - 1] != X.r) continue;
            for (MarkSet j = 1; j < markset_full(n); ++j) {
                if (markset_has(j, i)) continue;
                int s = 0;
                bool ok = true;
                for (int m : markset_elems(j)) {
                    if (codims[m - 1] < 1) { ok = false; break; }
                    s += codims[m - 1];
                }
                if (ok && s == X.r) parts_i.insert(j | (1u << (i - 1)));
            }
        }
        for (const auto& f : curves)
            for (MarkSet p : f.parts)
                if (parts_i.count(p)) { out.insert(f); break; }
        return out;
    }

    if (degree < 1 || degree > 4)
        throw domain_error("Contract2 is stated for degrees 1..4");
    // d disjoint pairs with codim sums > r, placed in d distinct parts.
    for (const auto& f : curves) {
        // pairs_in_part[p] = list of index pairs inside part p with sum > r
        std::array<std::vector<std::pair<int, int>>, 4> pairs_in_part;
        for (int p = 0; p < 4; ++p) {
            auto elems = markset_elems(f.parts[p]);
            for (std::size_t a = 0; a < elems.size(); ++a)
                for (std::size_t b = a + 1; b < elems.size(); ++b)
                    if (codims[elems[a] - 1] + codims[elems[b] - 1] > X.r)
                        pairs_in_part[p].emplace_back(elems[a], elems[b]);
        }
        // Match `degree` distinct parts with pairwise-disjoint index pairs.
        std::function<bool(int, int, MarkSet)> match = [&](int part, int need,
                                                           MarkSet used) -> bool {
            if (need == 0) return true;
            if (part == 4 || 4 - part < need) return false;
            if (match(part + 1, need, used)) return true;
            for (auto [a, b] : pairs_in_part[part]) {
                MarkSet m = (1u << (a - 1)) | (1u << (b - 1));
                if (used & m) continue;
                if (match(part + 1, need - 1, used | m)) return true;
            }
            return false;
        };
        if (match(0, degree, 0)) out.insert(f);
    }
    return out;
}

bool is_nef(const ClassVector& v) {
    for (const auto& f : all_fcurves(v.n))
        if (pair_class_fcurve(v, f) < Rational(0)) return false;
    return true;
}

} // namespace gw
