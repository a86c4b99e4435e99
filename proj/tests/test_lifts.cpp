#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "plumbing/lifts.hpp"
#include "test_graphs.hpp"

using namespace plumbing;

namespace {

IVec unit_estar(const Model& m, const std::string& id) {
    IVec e(m.g.n(), BigInt(0));
    e[m.g.index_of.at(id)] = BigInt(1);
    return e;
}

IVec random_estar(const Model& m, std::mt19937_64& rng) {
    IVec e(m.g.n());
    for (int v = 0; v < m.g.n(); ++v) e[v] = BigInt(static_cast<long long>(rng() % 9) - 4);
    return e;
}

}  // namespace

TEST_CASE("reduced transform is the identity on already-reduced vectors") {
    Model m = testgraphs::model_from(testgraphs::gamma_h9_text);
    IVec a_coords = unit_estar(m, "v12");
    a_coords[m.g.index_of.at("v32")] = BigInt(1);
    ReducedLift a = reduced_transform(m, a_coords);
    for (const auto& v : a.a_node) CHECK(v.is_zero());
    for (const auto& v : a.a_conn) CHECK(v.is_zero());
    for (size_t li = 0; li < m.legs.size(); ++li) {
        const std::string id = m.g.ids[m.legs[li].end];
        if (id == "v12" || id == "v32") CHECK(a.a_end[li].is_one());
        else CHECK(a.a_end[li].is_zero());
    }
    CHECK(lift_estar(m, a) == a_coords);
}

TEST_CASE("gamma_h9 projection: c_a = (18, 6, 10)") {
    Model m = testgraphs::model_from(testgraphs::gamma_h9_text);
    IVec a_coords = unit_estar(m, "v12");
    a_coords[m.g.index_of.at("v32")] = BigInt(1);
    ReducedLift a = reduced_transform(m, a_coords);
    REQUIRE(a.c.size() == 3);
    CHECK(a.c[0] == Rational(18));
    CHECK(a.c[1] == Rational(6));
    CHECK(a.c[2] == Rational(10));
    // c_a = pi_N(E*_{n1})/3 + pi_N(E*_{n3})/3
    RVec expect(3);
    for (int i = 0; i < 3; ++i) expect[i] = (m.pi_estar(0)[i] + m.pi_estar(2)[i]) / Rational(3);
    CHECK(a.c == expect);
}

TEST_CASE("reduced transform preserves class and node projection") {
    std::mt19937_64 rng(42);
    for (const char* text : {testgraphs::gamma_ex_text, testgraphs::gamma_h9_text, testgraphs::rnd1_text,
                             testgraphs::rnd2_text, testgraphs::rnd3_text}) {
        Model m = testgraphs::model_from(text);
        for (int it = 0; it < 100; ++it) {
            IVec l = random_estar(m, rng);
            ReducedLift a = reduced_transform(m, l);
            CHECK(m.H->class_of(l) == lift_class(m, a));
            RVec e_coords = estar_to_e(m.lat, l);
            for (int i = 0; i < m.num_nodes(); ++i) CHECK(e_coords[m.cls.nodes[i]] == a.c[i]);
        }
    }
}

TEST_CASE("affine lattice membership: reference checks") {
    Model ex = testgraphs::model_from(testgraphs::gamma_ex_text);
    ReducedLift zero = canonical_lift(ex, ex.H->zero());
    CHECK(affine_lattice_member(ex, zero, IVec{BigInt(0), BigInt(0), BigInt(0)}));
    CHECK(affine_lattice_member(ex, zero, IVec{BigInt(12), BigInt(6), BigInt(7)}));
    CHECK_FALSE(affine_lattice_member(ex, zero, IVec{BigInt(1), BigInt(0), BigInt(0)}));

    Model h9 = testgraphs::model_from(testgraphs::gamma_h9_text);
    IVec a_coords = unit_estar(h9, "v12");
    a_coords[h9.g.index_of.at("v32")] = BigInt(1);
    ReducedLift a = reduced_transform(h9, a_coords);
    CHECK(affine_lattice_member(h9, a, IVec{BigInt(-1), BigInt(1), BigInt(-1)}));
    CHECK(affine_lattice_member(h9, a, IVec{BigInt(-14), BigInt(-4), BigInt(-8)}));
}

TEST_CASE("canonical lift: zero class and unit-box projections") {
    for (const char* text : {testgraphs::gamma_ex_text, testgraphs::gamma_h9_text, testgraphs::rnd1_text,
                             testgraphs::rnd2_text, testgraphs::rnd3_text, testgraphs::star29_text}) {
        Model m = testgraphs::model_from(text);
        ReducedLift zero = canonical_lift(m, m.H->zero());
        for (const auto& v : zero.a_node) CHECK(v.is_zero());
        for (const auto& v : zero.a_end) CHECK(v.is_zero());
        for (const auto& v : zero.a_conn) CHECK(v.is_zero());
        for (const auto& h : m.H->all_classes()) {
            ReducedLift a = canonical_lift(m, h);
            CHECK(lift_class(m, a) == h);
            for (const auto& c : a.c) {
                CHECK(c.sign() >= 0);
                CHECK(c < Rational(1));
            }
        }
    }
}

TEST_CASE("two lifts of one class: the relation system solves constructively") {
    // eliminate the auxiliary integers and verify the node relation exactly
    std::mt19937_64 rng(99);
    for (const char* text : {testgraphs::gamma_ex_text, testgraphs::gamma_h9_text, testgraphs::rnd2_text,
                             testgraphs::rnd3_text}) {
        Model m = testgraphs::model_from(text);
        for (int it = 0; it < 40; ++it) {
            IVec l1 = random_estar(m, rng);
            ReducedLift a = reduced_transform(m, l1);
            IVec l2 = l1;
            for (int v = 0; v < m.g.n(); ++v) {
                long long t = static_cast<long long>(rng() % 5) - 2;
                for (int w = 0; w < m.g.n(); ++w) l2[w] -= BigInt(t) * m.lat.I.at(w, v);
            }
            ReducedLift x = reduced_transform(m, l2);
            const int nn = m.num_nodes();
            // node components of the solution: c_x = c_a + ell
            IVec ell_n(nn);
            for (int i = 0; i < nn; ++i) {
                Rational d = x.c[i] - a.c[i];
                REQUIRE(d.is_integer());
                ell_n[i] = d.num();
            }
            // end components
            IVec ell_u(m.legs.size());
            for (size_t li = 0; li < m.legs.size(); ++li) {
                const auto& leg = m.legs[li];
                BigInt num = a.a_end[li] - x.a_end[li] - leg.omega * ell_n[leg.node_pos];
                REQUIRE(BigInt::fmod(num, leg.alpha).is_zero());
                ell_u[li] = BigInt::divexact(num, leg.alpha);
            }
            // chain components
            IVec ell_c(m.chains.size());
            for (size_t ci = 0; ci < m.chains.size(); ++ci) {
                const auto& ch = m.chains[ci];
                const auto& p = m.cls.pairs[ch.pair_index];
                BigInt num = a.a_conn[ci] - x.a_conn[ci] - ell_n[p.lo] - ch.omega_hi_lo * ell_n[p.hi];
                REQUIRE(BigInt::fmod(num, ch.alpha).is_zero());
                ell_c[ci] = BigInt::divexact(num, ch.alpha);
            }
            // the node relation must now close exactly
            for (int n = 0; n < nn; ++n) {
                BigInt rhs(0);
                for (int li : m.legs_at[n]) rhs += ell_u[li];
                rhs -= BigInt(m.g.euler[m.cls.nodes[n]]) * ell_n[n];
                for (int ci : m.pairs_at_hi[n]) rhs += ell_c[ci];
                for (int ci : m.pairs_at_lo[n]) {
                    const auto& ch = m.chains[ci];
                    const auto& p = m.cls.pairs[ch.pair_index];
                    rhs += ch.omega_lo_hi * ell_c[ci] + ch.tau * ell_n[p.hi];
                }
                CHECK(x.a_node[n] - a.a_node[n] == rhs);
            }
        }
    }
}

TEST_CASE("two lifts of one class: shifted lattices agree") {
    std::mt19937_64 rng(7);
    for (const char* text : {testgraphs::gamma_h9_text, testgraphs::rnd1_text, testgraphs::rnd3_text}) {
        Model m = testgraphs::model_from(text);
        for (int it = 0; it < 50; ++it) {
            IVec l1 = random_estar(m, rng);
            ReducedLift a = reduced_transform(m, l1);
            // second lift of the same class: shift by a random element of L
            IVec l2 = l1;
            for (int v = 0; v < m.g.n(); ++v) {
                long long t = static_cast<long long>(rng() % 3) - 1;
                for (int w = 0; w < m.g.n(); ++w) l2[w] -= BigInt(t) * m.lat.I.at(w, v);
            }
            ReducedLift x = reduced_transform(m, l2);
            CHECK(lift_class(m, a) == lift_class(m, x));
            IVec shift(m.num_nodes());
            for (int i = 0; i < m.num_nodes(); ++i) {
                Rational d = x.c[i] - a.c[i];
                REQUIRE(d.is_integer());
                shift[i] = d.num();
            }
            for (int jt = 0; jt < 20; ++jt) {
                IVec ell(m.num_nodes());
                for (int i = 0; i < m.num_nodes(); ++i)
                    ell[i] = BigInt(static_cast<long long>(rng() % 41) - 20);
                IVec moved(m.num_nodes());
                for (int i = 0; i < m.num_nodes(); ++i) moved[i] = ell[i] - shift[i];
                CHECK(affine_lattice_member(m, a, ell) == affine_lattice_member(m, x, moved));
            }
        }
    }
}
