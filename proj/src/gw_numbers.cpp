#include "gwcycle/gw_numbers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace gw {

namespace {

std::mutex memo_mutex;

struct FourKey {
    SpaceKind kind;
    int r;
    int d;
    std::array<BasisClass, 4> cls;
    bool operator<(const FourKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (r != o.r) return r < o.r;
        if (d != o.d) return d < o.d;
        return cls < o.cls;
    }
};
std::map<FourKey, Rational>& four_memo() {
    static std::map<FourKey, Rational> m;
    return m;
}

struct BigKey {
    int r;
    int d;
    std::vector<int> codims; // sorted descending
    bool operator<(const BigKey& o) const {
        if (r != o.r) return r < o.r;
        if (d != o.d) return d < o.d;
        return codims < o.codims;
    }
};
std::map<BigKey, long long>& big_memo() {
    static std::map<BigKey, long long> m;
    return m;
}

// Same-(d, n) reconstruction nodes currently on this thread's stack; used
// to keep the growth-term recursion acyclic.
std::set<BigKey>& big_in_progress() {
    thread_local std::set<BigKey> s;
    return s;
}

struct ProgressGuard {
    BigKey key;
    explicit ProgressGuard(BigKey k) : key(std::move(k)) { big_in_progress().insert(key); }
    ~ProgressGuard() { big_in_progress().erase(key); }
};

long long checked_ll(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) throw overflow_error(what);
    return static_cast<long long>(v);
}

} // namespace

Rational npoint_codim0(const TargetSpace& X, int degree, const std::vector<QhElement>& insertions) {
    if (insertions.empty()) throw domain_error("npoint_codim0 needs at least one insertion");
    if (degree < 0) return 0;
    QhElement prod = insertions.front();
    for (const auto& t : prod.terms()) require_basis_class(X, t.cls);
    for (std::size_t i = 1; i < insertions.size(); ++i)
        prod = star_product(X, prod, insertions[i]);
    // Coefficient of q^degree [pt]; the q-powers carried by insertions
    // account for the Z-linear degree shifts, and a failed cycle condition
    // leaves this coefficient zero by homogeneity.
    Rational c = prod.coeff(degree, BasisClass::H(X.r));
    return X.is_quadric() ? c * 2 : c;
}

long long npoint_codim0_int(const TargetSpace& X, int degree, const std::vector<QhElement>& insertions) {
    Rational v = npoint_codim0(X, degree, insertions);
    if (!v.is_integer())
        throw internal_error("npoint_codim0 produced a non-integral value " + v.str());
    return v.as_integer();
}

namespace {

// ---- 4-point codimension-1 classes -------------------------------------

// Forward declarations of the mutually recursive pieces.
Rational eval4(const TargetSpace& X, int d, std::array<BasisClass, 4> cls, bool allow_shortcut);
Rational fp_power(const TargetSpace& X, int d, const BasisClass& ai, const BasisClass& aj,
                  const BasisClass& ak, int t, int depth);

// The divisor shortcut and vacuum/degree-0 vanishing; `cls` may contain
// anything the rewrite produced.  Every call from the rewrite has a
// hyperplane slot, so this never recurses back into the splitting.
Rational eval_term4(const TargetSpace& X, int d, const std::array<BasisClass, 4>& cls) {
    if (d <= 0) return 0;
    for (const auto& c : cls)
        if (c.is_h() && c.i == 0) return 0; // propagation of vacua
    for (std::size_t k = 0; k < 4; ++k) {
        if (cls[k].is_h() && cls[k].i == 1) {
            std::vector<QhElement> rest;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != k) rest.push_back(QhElement::term(cls[j]));
            return Rational(d) * npoint_codim0(X, d, rest);
        }
    }
    return eval4(X, d, cls, true);
}

// I^1_{d, {ai, aj, ak, H^{star t}}} by the three-term rewrite, iterated on
// the designated power slot; t strictly decreases, so this terminates.  The
// depth guard must never fire on valid inputs.
Rational fp_power(const TargetSpace& X, int d, const BasisClass& ai, const BasisClass& aj,
                  const BasisClass& ak, int t, int depth = 0) {
    if (depth > 64) throw internal_error("fourpoint: splitting recursion did not terminate");
    if (d <= 0) return 0;
    if (t == 0) return 0; // fundamental-class slot
    if (t == 1) return eval_term4(X, d, {ai, aj, ak, BasisClass::H(1)});
    Rational total = 0;
    // I^1{ai*H, ak, aj, H^{(t-1)}}
    for (const auto& tm : star_basis(X, ai, BasisClass::H(1)).terms())
        total += tm.coeff * fp_power(X, d - tm.qpow, tm.cls, ak, aj, t - 1, depth + 1);
    // I^1{ai, H, ak, H^{(t-1)} * aj}
    QhElement w = star_product(X, h_star_power(X, t - 1), QhElement::term(aj));
    for (const auto& tm : w.terms())
        total += tm.coeff * eval_term4(X, d - tm.qpow, {ai, BasisClass::H(1), ak, tm.cls});
    // - I^1{ai*aj, ak, H, H^{(t-1)}}
    QhElement p = star_basis(X, ai, aj);
    QhElement hp = h_star_power(X, t - 1);
    for (const auto& tp : p.terms())
        for (const auto& th : hp.terms())
            total -= tp.coeff * th.coeff *
                     eval_term4(X, d - tp.qpow - th.qpow, {tp.cls, ak, BasisClass::H(1), th.cls});
    return total;
}

Rational eval4(const TargetSpace& X, int d, std::array<BasisClass, 4> cls, bool allow_shortcut) {
    if (d <= 0) return 0;
    // Codimension-1 cycle condition; failing tuples evaluate to zero (on an
    // even quadric this also rules out four middle classes, so a splittable
    // hyperplane power is guaranteed below).
    int codim_sum = 0;
    for (const auto& c : cls) codim_sum += c.codim(X);
    if (codim_sum != 1 + X.fano_degree() * d + X.r) return 0;
    for (const auto& c : cls)
        if (c.is_h() && c.i == 0) return 0;
    if (allow_shortcut) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (cls[k].is_h() && cls[k].i == 1) {
                std::vector<QhElement> rest;
                for (std::size_t j = 0; j < 4; ++j)
                    if (j != k) rest.push_back(QhElement::term(cls[j]));
                return Rational(d) * npoint_codim0(X, d, rest);
            }
        }
    }

    std::array<BasisClass, 4> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    FourKey key{X.kind, X.r, d, sorted};
    if (allow_shortcut) {
        std::lock_guard<std::mutex> lk(memo_mutex);
        auto it = four_memo().find(key);
        if (it != four_memo().end()) return it->second;
    }

    // Designate the insertion of largest H-codimension (>= 2).  A 4-tuple
    // of middle classes never satisfies the codimension-1 condition, so on
    // an even quadric an H-slot always exists.
    int best = -1;
    for (int k = 0; k < 4; ++k)
        if (cls[k].is_h() && (best < 0 || cls[k].i > cls[best].i)) best = k;
    if (best < 0 || cls[best].i < 2)
        throw internal_error("fourpoint: no splittable hyperplane-power slot");

    std::vector<BasisClass> others;
    for (int k = 0; k < 4; ++k)
        if (k != best) others.push_back(cls[k]);
    // Canonical role order: descending codimension.
    std::sort(others.begin(), others.end(), [&](const BasisClass& a, const BasisClass& b) {
        int ca = a.codim(X), cb = b.codim(X);
        return ca != cb ? ca > cb : a < b;
    });
    // I^1(..., H_t) = I^1(..., H^{star t}]: the q-correction at t = r
    // multiplies a fundamental-class term, which vanishes.
    Rational v = fp_power(X, d, others[0], others[1], others[2], cls[best].i, 0);

    if (allow_shortcut) {
        std::lock_guard<std::mutex> lk(memo_mutex);
        four_memo().emplace(key, v);
    }
    return v;
}

Rational fourpoint_expand(const TargetSpace& X, int degree, const std::vector<QhElement>& ins,
                          bool allow_shortcut) {
    if (ins.size() != 4) throw domain_error("fourpoint_divisor needs exactly 4 insertions");
    for (const auto& e : ins)
        for (const auto& t : e.terms()) require_basis_class(X, t.cls);
    Rational total = 0;
    for (const auto& t0 : ins[0].terms())
        for (const auto& t1 : ins[1].terms())
            for (const auto& t2 : ins[2].terms())
                for (const auto& t3 : ins[3].terms()) {
                    int d = degree - t0.qpow - t1.qpow - t2.qpow - t3.qpow;
                    Rational c = t0.coeff * t1.coeff * t2.coeff * t3.coeff;
                    total += c * eval4(X, d, {t0.cls, t1.cls, t2.cls, t3.cls}, allow_shortcut);
                }
    return total;
}

} // namespace

long long fourpoint_divisor(const TargetSpace& X, int degree, const std::vector<QhElement>& ins) {
    Rational v = fourpoint_expand(X, degree, ins, true);
    if (!v.is_integer())
        throw internal_error("fourpoint_divisor produced a non-integral value " + v.str());
    return v.as_integer();
}

long long fourpoint_divisor_force_split(const TargetSpace& X, int degree,
                                        const std::vector<QhElement>& ins) {
    Rational v = fourpoint_expand(X, degree, ins, false);
    if (!v.is_integer())
        throw internal_error("fourpoint_divisor produced a non-integral value " + v.str());
    return v.as_integer();
}

namespace {

// ---- big genus-0 invariants of P^r --------------------------------------

long long big_rec(int r, int d, std::vector<int> a);

long long big_rec(int r, int d, std::vector<int> a) {
    if (d < 0) return 0;
    std::sort(a.begin(), a.end(), std::greater<int>());
    int n = static_cast<int>(a.size());
    long long sum = 0;
    for (int v : a) {
        if (v < 0 || v > r) throw domain_error("big_gw_projective: codim out of range");
        sum += v;
    }
    if (sum != static_cast<long long>(r + 1) * d + r + n - 3) return 0;

    if (d == 0) return (n == 3 && sum == r) ? 1 : 0;
    if (n > 0 && a.back() == 0) return 0; // fundamental class, d >= 1
    if (n > 0 && a.back() == 1) {        // divisor axiom
        std::vector<int> rest(a.begin(), a.end() - 1);
        return checked_ll(static_cast<__int128>(d) * big_rec(r, d, std::move(rest)),
                          "big_gw_projective overflow");
    }
    if (n == 0) return (r == 1 && d == 1) ? 1 : 0;
    if (n == 1) return 0;
    if (n == 2) return (d == 1 && a[0] == r && a[1] == r) ? 1 : 0;
    if (n == 3) return 1; // dimension-valid triple on P^r

    BigKey key{r, d, a};
    {
        std::lock_guard<std::mutex> lk(memo_mutex);
        auto it = big_memo().find(key);
        if (it != big_memo().end()) return it->second;
    }

    // Split some insertion H_b = H_1 . H_{b-1} and pull the M_{0,4} divisor
    // relation (01|23) = (02|13) back through the map space with N+1 marks:
    //   H_1, H_{b-1}, H_{c2}, H_{c3}, extras E.
    // The relation isolates the target as the d1 = 0 leading term on the
    // (01|23) side; the only other full-size term is the "growth" partner
    //   {c2+1, b-1} u (rest of the codims)
    // on the (02|13) side.  Choose the split and the c2 mark so that the
    // growth term vanishes (c2 = r), reduces at once (a divisor entry), or
    // is strictly smaller in sorted order; otherwise recurse into it with a
    // cycle guard - the layer of same-(d, n) multisets is finite, so the
    // in-progress set bounds that recursion.
    int best_split = -1, best_c2 = -1, best_tier = 5;
    for (int si = 0; si < n; ++si) {
        for (int ci = 0; ci < n; ++ci) {
            if (ci == si) continue;
            int tier = 4; // climb toward a vanishing growth term
            if (a[ci] == r) {
                tier = 0; // growth term vanishes
            } else {
                std::vector<int> grown = a;
                grown.erase(grown.begin() + std::max(si, ci));
                grown.erase(grown.begin() + std::min(si, ci));
                grown.push_back(a[ci] + 1);
                grown.push_back(a[si] - 1);
                std::sort(grown.begin(), grown.end(), std::greater<int>());
                if (grown.back() <= 1)
                    tier = 1; // partner reduces through the divisor axiom
                else if (std::lexicographical_compare(grown.begin(), grown.end(), a.begin(),
                                                      a.end()))
                    tier = 2;
                else if (big_in_progress().count(BigKey{r, d, grown}))
                    tier = 5; // would close a cycle; not admissible
            }
            if (tier < best_tier) {
                best_tier = tier;
                best_split = si;
                best_c2 = ci;
            }
        }
        if (best_tier == 0) break;
    }
    if (best_tier >= 5)
        throw internal_error("big_gw_projective: no admissible reconstruction step");
    int b = a[best_split];
    std::vector<int> rest = a;
    rest.erase(rest.begin() + best_split);
    int pick = best_c2 - (best_c2 > best_split ? 1 : 0);
    int c2 = rest[pick];
    std::vector<int> rest2 = rest;
    rest2.erase(rest2.begin() + pick);
    int c3 = rest2.front();
    std::vector<int> extras(rest2.begin() + 1, rest2.end());
    int ne = static_cast<int>(extras.size());
    int lead_e = r - b;

    ProgressGuard guard(key);

    __int128 total = 0;
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        std::vector<int> e1, e2;
        for (int k = 0; k < ne; ++k)
            ((mask >> k) & 1u ? e1 : e2).push_back(extras[k]);
        for (int d1 = 0; d1 <= d; ++d1) {
            int d2 = d - d1;
            for (int e = 0; e <= r; ++e) {
                // (02|13) side, added.
                std::vector<int> left = e1;
                left.push_back(1);
                left.push_back(c2);
                left.push_back(e);
                long long lv = big_rec(r, d1, std::move(left));
                if (lv != 0) {
                    std::vector<int> right = e2;
                    right.push_back(r - e);
                    right.push_back(b - 1);
                    right.push_back(c3);
                    total += static_cast<__int128>(lv) * big_rec(r, d2, std::move(right));
                }
                // (01|23) side, subtracted, except the leading term.
                if (mask == 0 && d1 == 0 && e == lead_e) continue;
                std::vector<int> left2 = e1;
                left2.push_back(1);
                left2.push_back(b - 1);
                left2.push_back(e);
                long long lv2 = big_rec(r, d1, std::move(left2));
                if (lv2 != 0) {
                    std::vector<int> right2 = e2;
                    right2.push_back(r - e);
                    right2.push_back(c2);
                    right2.push_back(c3);
                    total -= static_cast<__int128>(lv2) * big_rec(r, d2, std::move(right2));
                }
            }
        }
    }
    long long out = checked_ll(total, "big_gw_projective overflow");
    {
        std::lock_guard<std::mutex> lk(memo_mutex);
        big_memo().emplace(key, out);
    }
    return out;
}

} // namespace

long long big_gw_projective(int r, int degree, const std::vector<int>& codims) {
    if (r < 1) throw domain_error("big_gw_projective expects P^r with r >= 1");
    return big_rec(r, degree, codims);
}

} // namespace gw
