#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "plumbing/semigroups.hpp"
#include "test_graphs.hpp"

using namespace plumbing;

namespace {

// independent oracle: Alexander polynomial of the (p,q) torus knot
std::vector<long long> torus_alex(long long p, long long q) {
    // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))
    std::vector<long long> num(static_cast<size_t>(p * q) + 2, 0);
    num[0] = 1;
    num[1] = -1;
    num[static_cast<size_t>(p * q)] -= 1;
    num[static_cast<size_t>(p * q) + 1] += 1;
    auto divide = [](std::vector<long long> n, long long d) {
        std::vector<long long> q(n.size() - static_cast<size_t>(d), 0);
        for (size_t i = n.size(); i-- > static_cast<size_t>(d);) {
            long long c = n[i];
            if (!c) continue;
            q[i - d] += c;
            n[i] -= c;
            n[i - d] += c;
        }
        for (long long i = 0; i < d; ++i) REQUIRE(n[static_cast<size_t>(i)] == 0);
        return q;
    };
    auto out = divide(divide(num, p), q);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Alexander polynomial of the (p2,a2)-cable of the (p1,a1) torus knot
std::vector<long long> cable_alex(long long p1, long long a1, long long p2, long long a2) {
    auto base = torus_alex(p1, a1);
    std::vector<long long> stretched(p2 * (base.size() - 1) + 1, 0);
    for (size_t i = 0; i < base.size(); ++i) stretched[p2 * i] = base[i];
    return poly_mul(stretched, torus_alex(p2, a2));
}

bool generated_by(long long x, const std::vector<long long>& gens) {
    std::vector<char> reach(static_cast<size_t>(x) + 1, 0);
    reach[0] = 1;
    for (long long v = 1; v <= x; ++v)
        for (long long g : gens)
            if (v >= g && reach[static_cast<size_t>(v - g)]) {
                reach[static_cast<size_t>(v)] = 1;
                break;
            }
    return reach[static_cast<size_t>(x)];
}

}  // namespace

TEST_CASE("Seifert Diophantine data of Sigma(2,3,5)") {
    SeifertSolution s = seifert_diophantine({2, 3, 5});
    CHECK(s.b0 == -2);
    CHECK(s.omegas == std::vector<long long>{1, 2, 4});
    CHECK_THROWS_AS(seifert_diophantine({2, 4, 5}), DomainError);
    CHECK_THROWS_AS(seifert_diophantine({1, 3, 5}), DomainError);
}

TEST_CASE("Sigma(2,3,5) semigroup equals <6,10,15> up to 100") {
    NumericalSemigroup sg = seifert_semigroup({2, 3, 5});
    CHECK(sg.contains(0));
    for (long long x = 0; x <= 100; ++x) CHECK(sg.contains(x) == generated_by(x, {6, 10, 15}));
    auto gens = sg.min_generators();
    CHECK(gens == std::vector<long long>{6, 10, 15});
}

TEST_CASE("Can-Karakurt window for small Seifert spheres") {
    // members below a1...ad (d - 2 - sum 1/a_i) lie in <prod/a_i>
    for (auto alphas : std::vector<std::vector<long long>>{{2, 3, 5}, {2, 3, 7}, {3, 4, 5}, {2, 3, 5, 7}}) {
        NumericalSemigroup sg = seifert_semigroup(alphas);
        long long prod = 1;
        for (long long a : alphas) prod *= a;
        Rational window(static_cast<long long>(alphas.size()) - 2);
        for (long long a : alphas) window -= Rational(1, a);
        window *= Rational(prod);
        std::vector<long long> gens;
        for (long long a : alphas) gens.push_back(prod / a);
        for (long long x = 0; Rational(x) <= window && x <= sg.bound; ++x)
            if (sg.contains(x)) CHECK(generated_by(x, gens));
    }
}

TEST_CASE("semigroup closure on sampled member pairs") {
    NumericalSemigroup sg = seifert_semigroup({2, 3, 7});
    std::vector<long long> members;
    for (long long x = 0; x <= sg.bound / 2; ++x)
        if (sg.contains(x)) members.push_back(x);
    for (size_t i = 0; i < members.size(); i += 3)
        for (size_t j = i; j < members.size(); j += 5) CHECK(sg.contains(members[i] + members[j]));
}

TEST_CASE("one linking pair (2,3): the trefoil invariants") {
    CurveInvariants ci = curve_from_pair(2, 3);
    CHECK(ci.omega_p == 1);
    CHECK(ci.omega_a == 1);
    CHECK(ci.delta == 1);
    CHECK(ci.sg.min_generators() == std::vector<long long>{2, 3});
    CHECK(ci.alexander == std::vector<long long>{1, -1, 1});  // t^2 - t + 1
    CHECK(ci.gap_list == std::vector<long long>{1});
}

TEST_CASE("l = 1 is never a member for pairs p, a >= 2") {
    for (auto [p, a] : std::vector<std::pair<long long, long long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 7}})
        CHECK_FALSE(curve_from_pair(p, a).sg.contains(1));
    CHECK_THROWS_AS(curve_from_pair(2, 4), DomainError);
}

TEST_CASE("torus knot pairs against the independent Alexander formula") {
    for (auto [p, a] : std::vector<std::pair<long long, long long>>{{2, 3}, {2, 5}, {3, 4}}) {
        CurveInvariants ci = curve_from_pair(p, a);
        CHECK(ci.alexander == torus_alex(p, a));
        CHECK(ci.delta == static_cast<long long>(ci.gap_list.size()));
        CHECK(ci.delta == (p - 1) * (a - 1) / 2);
        // -P_g(1) = delta and deg P_g = 2 delta - 1
        CHECK(static_cast<long long>(ci.gap_list.size()) == ci.delta);
        CHECK(ci.gap_list.back() == 2 * ci.delta - 1);
        // (1 - t) H_M(t) is a polynomial of degree 2 delta
        CHECK(static_cast<long long>(ci.alexander.size()) - 1 == 2 * ci.delta);
    }
}

TEST_CASE("curve graphs with one pair match the pair route") {
    struct Case {
        const char* text;
        long long p, a;
    };
    // minimal embedded resolution graphs of T(2,3), T(2,5), T(3,4)
    for (auto c : {Case{"vertex p -2\nvertex q -3\nvertex n -1\narrow n\nedge p n\nedge q n\n", 2, 3},
                   Case{"vertex p -2\nvertex q1 -3\nvertex q2 -2\nvertex n -1\narrow n\n"
                        "edge p n\nedge q1 n\nedge q2 q1\n",
                        2, 5},
                   Case{"vertex p1 -2\nvertex p2 -2\nvertex q -4\nvertex n -1\narrow n\n"
                        "edge p1 n\nedge p2 p1\nedge q n\n",
                        3, 4}}) {
        PlumbingGraph g = parse_plumbing(c.text);
        CHECK(intersection_data(g).det_gamma == BigInt(1));
        CurveInvariants via_graph = curve_from_graph(g);
        CurveInvariants via_pair = curve_from_pair(c.p, c.a);
        CHECK(via_graph.delta == via_pair.delta);
        CHECK(via_graph.alexander == via_pair.alexander);
        CHECK(via_graph.sg.min_generators() == via_pair.sg.min_generators());
        CHECK(via_graph.alexander == torus_alex(c.p, c.a));
    }
}

TEST_CASE("two linking pairs: Hilbert basis and cable Alexander polynomial") {
    struct Case {
        const char* text;
        long long p1, a1, p2, a2;
    };
    // (2,13)- and (2,15)-cables of the trefoil
    for (auto c : {Case{"vertex p -2\nvertex q -3\nvertex n1 -3\nvertex n2 -1\nvertex r -2\narrow n2\n"
                        "edge p n1\nedge q n1\nedge n1 n2\nedge r n2\n",
                        2, 3, 2, 13},
                   Case{"vertex p -2\nvertex q -3\nvertex n1 -2\nvertex n2 -1\nvertex r -2\nvertex w -3\n"
                        "arrow n2\nedge p n1\nedge q n1\nedge n1 w\nedge w n2\nedge r n2\n",
                        2, 3, 2, 15}}) {
        PlumbingGraph g = parse_plumbing(c.text);
        CHECK(intersection_data(g).det_gamma == BigInt(1));
        CurveInvariants ci = curve_from_graph(g);
        // Hilbert basis {p1 p2, a1 p2, a2}
        std::vector<long long> expect = {c.p1 * c.p2, c.a1 * c.p2, c.a2};
        std::sort(expect.begin(), expect.end());
        CHECK(ci.sg.min_generators() == expect);
        CHECK(ci.alexander == cable_alex(c.p1, c.a1, c.p2, c.a2));
        CHECK(static_cast<long long>(ci.gap_list.size()) == ci.delta);
        CHECK(ci.gap_list.back() == 2 * ci.delta - 1);
    }
}

TEST_CASE("arrow placement errors") {
    // no arrow
    CHECK_THROWS_AS(curve_from_graph(parse_plumbing("vertex a -2\n")), DomainError);
    // arrow away from the unique -1 vertex
    CHECK_THROWS_AS(curve_from_graph(parse_plumbing(
                        "vertex p -2\nvertex q -3\nvertex n -1\narrow p\nedge p n\nedge q n\n")),
                    DomainError);
    // two arrows
    CHECK_THROWS_AS(curve_from_graph(parse_plumbing(
                        "vertex p -2\nvertex q -3\nvertex n -1\narrow n\narrow n\nedge p n\nedge q n\n")),
                    DomainError);
}
