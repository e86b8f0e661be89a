#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gwcycle/cycle_classes.hpp"

using namespace gw;

namespace {

std::vector<QhElement> classes(const TargetSpace& X, const std::vector<int>& codims) {
    std::vector<QhElement> out;
    for (int c : codims) out.push_back(parse_class(X, "H" + std::to_string(c)));
    return out;
}

GwSpec spec_of(const TargetSpace& X, int d, const std::string& list, int codim) {
    return GwSpec{X, d, parse_class_list(X, list), codim};
}

} // namespace

TEST_CASE("f-curve degrees decompose through legs and spine") {
    // Odd quadric, insertions (H1, Hr^5), degree 4: the only live term on
    // F{1|2|3|4,5,6} is (1/2) I0_2{Hr,Hr,Hr,H0} I1_2{H1,Hr,Hr,Hr}.
    TargetSpace q5 = TargetSpace::quadric(5);
    GwSpec s = spec_of(q5, 4, "H1,H5,H5,H5,H5,H5", 1);
    long long leg = npoint_codim0_int(q5, 2, classes(q5, {5, 5, 5, 0}));
    long long spine = fourpoint_divisor(q5, 2, classes(q5, {1, 5, 5, 5}));
    CHECK(leg == 8);
    CHECK(spine == 16);
    CHECK(fcurve_degree(s, FCurve::parse("F{1|2|3|4,5,6}", 6)) == leg * spine / 2);
    // Contracted configurations from the same family.
    CHECK(fcurve_degree(s, FCurve::parse("F{1|4|2,3|5,6}", 6)) == 0);
}

TEST_CASE("even-quadric f-curve degree from the worked example") {
    TargetSpace q6 = TargetSpace::quadric(6);
    GwSpec s = spec_of(q6, 2, "H1,H6,Xi1,Xi1,Xi1,Xi1", 1);
    CHECK(fcurve_degree(s, FCurve::parse("F{3|4|5|1,2,6}", 6)) == 4);
    CHECK(fcurve_degree(s, FCurve::parse("F{1|2|3|4,5,6}", 6)) == 2);
    CHECK(fcurve_degree(s, FCurve::parse("F{1|4|2,3|5,6}", 6)) == 0);
}

TEST_CASE("cycle condition short-circuits") {
    TargetSpace q3 = TargetSpace::quadric(3);
    // Wrong total codimension: every pairing is zero by definition.
    GwSpec s = spec_of(q3, 0, "H0,H1,H1,H1,H1", 1);
    CHECK(fcurve_degree(s, FCurve::parse("F{1|2|3|4,5}", 5)) == 0);
}

TEST_CASE("symmetry transport under relabeling") {
    TargetSpace q5 = TargetSpace::quadric(5);
    GwSpec s = spec_of(q5, 4, "H2,H4,H5,H5,H5,H5", 1);
    // sigma = (1 2 3 4 5 6) -> (3 1 2 5 6 4)
    int sigma[7] = {0, 3, 1, 2, 5, 6, 4};
    GwSpec t = s;
    for (int i = 1; i <= 6; ++i) t.insertions[sigma[i] - 1] = s.insertions[i - 1];
    std::mt19937 rng(11);
    auto curves = all_fcurves(6);
    for (int trial = 0; trial < 12; ++trial) {
        const FCurve& f = curves[rng() % curves.size()];
        std::array<MarkSet, 4> mapped{};
        for (int p = 0; p < 4; ++p)
            for (int m : markset_elems(f.parts[p])) mapped[p] |= 1u << (sigma[m] - 1);
        FCurve g(6, mapped);
        CHECK(fcurve_degree(s, f) == fcurve_degree(t, g));
    }
}

TEST_CASE("divisor class against random Keel pairings") {
    TargetSpace q5 = TargetSpace::quadric(5);
    GwSpec s = spec_of(q5, 4, "H1,H5,H5,H5,H5,H5", 1);
    ClassVector c = divisor_class(s);
    std::mt19937 rng(23);
    auto curves = all_fcurves(6);
    for (int trial = 0; trial < 8; ++trial) {
        const FCurve& g = curves[rng() % curves.size()];
        CHECK(pair_class_fcurve(c, g) == Rational(fcurve_degree(s, g)));
    }
}

namespace {

// Independent route to the divisor class: solve the exact overdetermined
// system <class, F> = fcurve_degree(spec, F) over all F-curves, with the
// Keel pairing matrix in the nonadjacent basis.  Consistency of all 65
// equations and agreement with the dual-basis assembly pin the class.
ClassVector solve_class_from_all_pairings(const GwSpec& spec, int n) {
    const auto& sys = nonadjacent_basis(n);
    auto curves = all_fcurves(n);
    std::size_t rows = curves.size(), cols = sys.basis.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t g = 0; g < rows; ++g) {
        for (std::size_t k = 0; k < cols; ++k)
            m[g][k] = Rational(fcurve_delta_pairing(curves[g], sys.basis[k]));
        m[g][cols] = Rational(fcurve_degree(spec, curves[g]));
    }
    std::size_t row = 0;
    std::vector<int> pivot(cols, -1);
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& c : m[row]) c *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot[col] = static_cast<int>(row);
        ++row;
    }
    REQUIRE(row == cols); // full rank: the pairings determine the class
    for (std::size_t i = row; i < rows; ++i) REQUIRE(m[i][cols].is_zero()); // consistent
    ClassVector out;
    out.n = n;
    out.coeffs.assign(cols, Rational(0));
    for (std::size_t col = 0; col < cols; ++col) out.coeffs[col] = m[pivot[col]][cols];
    return out;
}

} // namespace

TEST_CASE("all 65 pairings determine the same class") {
    TargetSpace q6 = TargetSpace::quadric(6);
    GwSpec e1 = spec_of(q6, 2, "H1,H6,Xi1,Xi1,Xi1,Xi1", 1);
    CHECK(solve_class_from_all_pairings(e1, 6) == divisor_class(e1));

    TargetSpace q4 = TargetSpace::quadric(4);
    GwSpec e2 = spec_of(q4, 2, "H1,Xi1,Xi1,Xi1,Xi2,H4", 1);
    CHECK(solve_class_from_all_pairings(e2, 6) == divisor_class(e2));

    TargetSpace q5 = TargetSpace::quadric(5);
    GwSpec e3 = spec_of(q5, 4, "H2,H4,H5,H5,H5,H5", 1);
    CHECK(solve_class_from_all_pairings(e3, 6) == divisor_class(e3));
}

TEST_CASE("five-marking divisor class against random Keel pairings") {
    TargetSpace q3 = TargetSpace::quadric(3);
    GwSpec s = spec_of(q3, 2, "H3,H3,H2,H1,H1", 1);
    ClassVector c = divisor_class(s);
    CHECK(c.n == 5);
    std::mt19937 rng(41);
    auto curves = all_fcurves(5);
    for (int trial = 0; trial < 6; ++trial) {
        const FCurve& g = curves[rng() % curves.size()];
        CHECK(pair_class_fcurve(c, g) == Rational(fcurve_degree(s, g)));
    }
}

TEST_CASE("stratum degrees for the first pushforward example") {
    TargetSpace p3 = TargetSpace::proj(3);
    GwSpec z = spec_of(p3, 2, "H1,H2,H2,H2,H2,H2,H2", 2);
    auto a = pullback_fcurve(FCurve::parse("F{1|2|3|4,5,6}", 6), 7);
    CHECK(stratum_degree(z, a[0]) == Rational(2));
    CHECK(stratum_degree(z, a[1]) == Rational(0));
    CHECK(stratum_degree(z, a[2]) == Rational(2));
    auto b = pullback_fcurve(FCurve::parse("F{1|2|3,4|5,6}", 6), 7);
    for (const auto& t : b) CHECK(stratum_degree(z, t) == Rational(0));
}

TEST_CASE("codimension mismatch is rejected") {
    TargetSpace p3 = TargetSpace::proj(3);
    GwSpec z = spec_of(p3, 2, "H1,H2,H2,H2,H2,H2,H2", 1);
    auto a = pullback_fcurve(FCurve::parse("F{1|2|3|4,5,6}", 6), 7);
    CHECK_THROWS_AS(stratum_degree(z, a[0]), domain_error);
}

TEST_CASE("pushforward with a hyperplane at the forgotten point truncates") {
    TargetSpace p3 = TargetSpace::proj(3);
    // Class-level divisor axiom: dropping a marking that carries H1
    // multiplies the truncated class by (H1 . beta) = d.
    GwSpec z = spec_of(p3, 2, "H2,H2,H2,H2,H2,H2,H1", 2);
    ClassVector pushed = pushforward_divisor(z, 7);
    GwSpec trunc = spec_of(p3, 2, "H2,H2,H2,H2,H2,H2", 1);
    ClassVector direct = divisor_class(trunc);
    REQUIRE(pushed.coeffs.size() == direct.coeffs.size());
    for (std::size_t k = 0; k < pushed.coeffs.size(); ++k)
        CHECK(pushed.coeffs[k] == Rational(2) * direct.coeffs[k]);
}

TEST_CASE("pushforward class satisfies the projection formula") {
    // The assembled vector's Keel pairing with arbitrary F-curves must
    // reproduce Z . pi^*G directly.
    TargetSpace p3 = TargetSpace::proj(3);
    GwSpec z = spec_of(p3, 2, "H1,H2,H2,H2,H2,H2,H2", 2);
    ClassVector c = pushforward_divisor(z, 7);
    std::mt19937 rng(77);
    auto curves = all_fcurves(6);
    for (int trial = 0; trial < 10; ++trial) {
        const FCurve& g = curves[rng() % curves.size()];
        Rational direct = 0;
        for (const auto& t : pullback_fcurve(g, 7)) direct += stratum_degree(z, t);
        CHECK(pair_class_fcurve(c, g) == direct);
    }
}

TEST_CASE("pushforward to five markings") {
    TargetSpace p2 = TargetSpace::proj(2);
    // Same divisor-axiom identity through the M0,6 -> M0,5 route.
    GwSpec z = spec_of(p2, 2, "H2,H2,H2,H2,H1,H1", 2);
    ClassVector pushed = pushforward_divisor(z, 6);
    CHECK(pushed.n == 5);
    GwSpec trunc = spec_of(p2, 2, "H2,H2,H2,H2,H1", 1);
    ClassVector direct = divisor_class(trunc);
    for (std::size_t k = 0; k < pushed.coeffs.size(); ++k)
        CHECK(pushed.coeffs[k] == Rational(2) * direct.coeffs[k]);
}

TEST_CASE("class vector serialization round-trips") {
    TargetSpace q3 = TargetSpace::quadric(3);
    GwSpec s = spec_of(q3, 2, "H3,H3,H2,H1,H1", 1);
    ClassVector c = divisor_class(s);
    std::string j = c.to_json();
    ClassVector back = ClassVector::from_json(j);
    CHECK(back == c);
    CHECK(back.to_json() == j); // byte-stable under re-serialization
    CHECK(c.to_csv().find("d13,") != std::string::npos);
}

TEST_CASE("threaded evaluation matches sequential") {
    TargetSpace q5 = TargetSpace::quadric(5);
    GwSpec s = spec_of(q5, 4, "H2,H4,H5,H5,H5,H5", 1);
    CHECK(divisor_class(s, 4) == divisor_class(s, 1));
}
