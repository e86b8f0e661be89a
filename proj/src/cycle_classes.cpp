#include "gwcycle/cycle_classes.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace gw {

std::vector<long long> ClassVector::as_integers() const {
    std::vector<long long> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (!c.is_integer())
            throw internal_error("class vector entry " + c.str() + " is not integral");
        out.push_back(c.as_integer());
    }
    return out;
}

std::string ClassVector::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    auto names = nlohmann::json::array();
    for (const auto& b : basis().basis) {
        std::string s = b.str(); // d{1,3} -> d13
        std::string flat = "d";
        for (char c : s)
            if (c >= '0' && c <= '9') flat += c;
        names.push_back(flat);
    }
    j["basis"] = names;
    auto cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(c.str());
    j["coeffs"] = cs;
    return j.dump();
}

std::string ClassVector::to_csv() const {
    std::ostringstream os;
    os << "basis,coeff\n";
    const auto& b = basis().basis;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::string s = b[k].str();
        std::string flat = "d";
        for (char c : s)
            if (c >= '0' && c <= '9') flat += c;
        os << flat << "," << coeffs[k].str() << "\n";
    }
    return os.str();
}

ClassVector ClassVector::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ClassVector out;
    out.n = j.at("n").get<int>();
    for (const auto& c : j.at("coeffs")) {
        std::string s = c.is_string() ? c.get<std::string>() : c.dump();
        auto slash = s.find('/');
        if (slash == std::string::npos)
            out.coeffs.emplace_back(std::stoll(s));
        else
            out.coeffs.emplace_back(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    if (out.coeffs.size() != nonadjacent_basis(out.n).basis.size())
        throw domain_error("class vector length does not match the basis");
    return out;
}

namespace {

// One admissible state of a leg: attaching label passed to the spine, leg
// degree, and the leg's codimension-0 number times the diagonal coefficient.
struct LegOption {
    QhElement spine_class;
    int degree;
    Rational weight;
};

int element_degree(const TargetSpace& X, const QhElement& e) { return e.degree(X); }

} // namespace

long long fcurve_degree(const GwSpec& spec, const FCurve& f) {
    const TargetSpace& X = spec.space;
    if (static_cast<int>(spec.insertions.size()) != f.n)
        throw domain_error("fcurve_degree: insertion count does not match the F-curve");
    for (const auto& e : spec.insertions)
        if (!e.is_homogeneous(X)) throw domain_error("insertions must be homogeneous");

    // Cycle condition for a divisor class; anything else pairs to zero.
    long long degsum = 0;
    for (const auto& e : spec.insertions) degsum += element_degree(X, e);
    if (degsum != 1 + static_cast<long long>(X.fano_degree()) * spec.degree + X.r) return 0;

    auto diag = diagonal(X);
    std::vector<QhElement> spine_fixed; // insertions sitting directly on the spine
    std::vector<std::vector<LegOption>> leg_options;

    for (MarkSet part : f.parts) {
        auto marks = markset_elems(part);
        if (marks.size() == 1) {
            spine_fixed.push_back(spec.insertions[marks.front() - 1]);
            continue;
        }
        std::vector<QhElement> leg_ins;
        int leg_degsum = 0;
        for (int m : marks) {
            leg_ins.push_back(spec.insertions[m - 1]);
            leg_degsum += element_degree(X, spec.insertions[m - 1]);
        }
        std::vector<LegOption> opts;
        for (int dj = 0; dj <= spec.degree; ++dj) {
            for (const auto& term : diag) {
                // Codimension-0 cycle condition on the leg.
                if (leg_degsum + term.left.codim(X) != X.fano_degree() * dj + X.r) continue;
                auto ins = leg_ins;
                ins.push_back(QhElement::term(term.left));
                Rational v = npoint_codim0(X, dj, ins);
                if (v.is_zero()) continue;
                opts.push_back({QhElement::term(term.right), dj, v * term.coeff});
            }
        }
        if (opts.empty()) return 0;
        leg_options.push_back(std::move(opts));
    }

    Rational total = 0;
    std::vector<const LegOption*> chosen(leg_options.size(), nullptr);
    std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t k, int used,
                                                              Rational w) {
        if (k == leg_options.size()) {
            int spine_d = spec.degree - used;
            if (spine_d < 0) return;
            std::vector<QhElement> spine = spine_fixed;
            for (const auto* o : chosen) spine.push_back(o->spine_class);
            if (spine.size() != 4) throw internal_error("spine slot count is not 4");
            total += w * Rational(fourpoint_divisor(X, spine_d, spine));
            return;
        }
        for (const auto& o : leg_options[k]) {
            if (used + o.degree > spec.degree) continue;
            chosen[k] = &o;
            rec(k + 1, used + o.degree, w * o.weight);
        }
    };
    rec(0, 0, Rational(1));

    if (!total.is_integer())
        throw internal_error("fcurve_degree produced a non-integral value " + total.str());
    return total.as_integer();
}

Rational pair_class_fcurve(const ClassVector& c, const FCurve& f) {
    const auto& sys = nonadjacent_basis(c.n);
    Rational total = 0;
    for (std::size_t k = 0; k < sys.basis.size(); ++k)
        total += c.coeffs[k] * Rational(fcurve_delta_pairing(f, sys.basis[k]));
    return total;
}

namespace {

template <typename Fn>
void run_indexed(int count, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    int workers = std::min(threads, count);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace

ClassVector divisor_class(const GwSpec& spec, int threads) {
    int n = static_cast<int>(spec.insertions.size());
    const auto& sys = nonadjacent_basis(n);
    ClassVector out;
    out.n = n;
    out.coeffs.assign(sys.basis.size(), Rational(0));
    run_indexed(static_cast<int>(sys.basis.size()), threads, [&](int k) {
        Rational c = 0;
        for (const auto& sf : sys.duals[k])
            c += Rational(sf.sign) * Rational(fcurve_degree(spec, sf.curve));
        out.coeffs[k] = c;
    });
    return out;
}

Rational stratum_degree(const GwSpec& spec, const StratumTree& tree) {
    const TargetSpace& X = spec.space;
    tree.validate();
    if (tree.n != static_cast<int>(spec.insertions.size()))
        throw domain_error("stratum_degree: insertion count does not match the tree");
    if (tree.dimension() != spec.codim)
        throw domain_error("stratum_degree: stratum dimension differs from the class codimension");
    for (const auto& e : spec.insertions)
        if (!e.is_homogeneous(X)) throw domain_error("insertions must be homogeneous");

    long long degsum = 0;
    for (const auto& e : spec.insertions) degsum += element_degree(X, e);
    if (degsum !=
        spec.codim + static_cast<long long>(X.fano_degree()) * spec.degree + X.r)
        return 0;

    int nv = tree.num_vertices();
    int ne = static_cast<int>(tree.edges.size());
    auto diag = diagonal(X);

    // Big invariants on a vertex with >= 5 slots need P^r and plain H-class
    // monomials; expand each vertex value recursively over its slots.
    auto vertex_value = [&](const std::vector<QhElement>& classes, int dv,
                            int cv) -> Rational {
        if (cv == 0) return npoint_codim0(X, dv, classes);
        if (cv == 1) return Rational(fourpoint_divisor(X, dv, classes));
        if (X.kind != SpaceKind::ProjSpace)
            throw domain_error("stratum vertices with 5+ slots need X = P^r");
        Rational total = 0;
        std::vector<int> codims(classes.size(), 0);
        std::function<void(std::size_t, int, Rational)> expand =
            [&](std::size_t k, int shift, Rational w) {
                if (k == classes.size()) {
                    total += w * Rational(big_gw_projective(X.r, dv - shift, codims));
                    return;
                }
                for (const auto& t : classes[k].terms()) {
                    codims[k] = t.cls.i;
                    expand(k + 1, shift + t.qpow, w * t.coeff);
                }
            };
        expand(0, 0, Rational(1));
        return total;
    };

    Rational total = 0;
    std::vector<int> label(ne, 0);
    std::function<void(int, Rational)> rec = [&](int ek, Rational w) {
        if (ek < ne) {
            for (int li = 0; li < static_cast<int>(diag.size()); ++li) {
                label[ek] = li;
                rec(ek + 1, w * diag[li].coeff);
            }
            return;
        }
        // Labels fixed: the lower-numbered endpoint receives the left class.
        std::vector<std::vector<QhElement>> classes(nv);
        for (int v = 0; v < nv; ++v)
            for (int m : markset_elems(tree.vertex_marks[v]))
                classes[v].push_back(spec.insertions[m - 1]);
        for (int e = 0; e < ne; ++e) {
            auto [a, b] = tree.edges[e];
            const auto& dt = diag[label[e]];
            classes[std::min(a, b)].push_back(QhElement::term(dt.left));
            classes[std::max(a, b)].push_back(QhElement::term(dt.right));
        }
        // Per-vertex degrees are pinned by the codimension conditions.
        int total_d = 0;
        std::vector<int> dv(nv, 0);
        for (int v = 0; v < nv; ++v) {
            int cv = tree.valence(v) - 3;
            long long s = 0;
            for (const auto& e : classes[v]) s += element_degree(X, e);
            long long num = s - cv - X.r;
            if (num < 0 || num % X.fano_degree() != 0) return;
            dv[v] = static_cast<int>(num / X.fano_degree());
            total_d += dv[v];
        }
        if (total_d != spec.degree) return;
        Rational prod = w;
        for (int v = 0; v < nv && !prod.is_zero(); ++v)
            prod *= vertex_value(classes[v], dv[v], tree.valence(v) - 3);
        total += prod;
    };
    rec(0, Rational(1));
    if (!total.is_integer())
        throw internal_error("stratum_degree produced a non-integral value " + total.str());
    return total;
}

ClassVector pushforward_divisor(const GwSpec& spec, int forget, int threads) {
    int n = static_cast<int>(spec.insertions.size());
    if (forget != n)
        throw domain_error("pushforward_divisor drops the last marking only");
    if (n - 1 != 5 && n - 1 != 6)
        throw domain_error("pushforward_divisor targets M_{0,5} or M_{0,6}");
    const auto& sys = nonadjacent_basis(n - 1);
    ClassVector out;
    out.n = n - 1;
    out.coeffs.assign(sys.basis.size(), Rational(0));
    run_indexed(static_cast<int>(sys.basis.size()), threads, [&](int k) {
        Rational c = 0;
        for (const auto& sf : sys.duals[k]) {
            Rational s = 0;
            for (const auto& tree : pullback_fcurve(sf.curve, n))
                s += stratum_degree(spec, tree);
            c += Rational(sf.sign) * s;
        }
        out.coeffs[k] = c;
    });
    return out;
}

} // namespace gw
