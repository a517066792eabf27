#include "exring/ideal.hpp"
#include "exring/poly_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <chrono>
#include <map>
#include <random>
#include <set>

using namespace exring;

namespace {

// Generator f_{pqr}^{abc} summed over all six orderings of (a, b, c),
// accumulated in a map keyed by the row-major exponent vector.
std::map<std::vector<int>, int> generator_oracle(int k, int n, std::array<int, 3> rows, std::array<int, 3> cols) {
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::map<std::vector<int>, int> out;
    for (const auto& s : perms) {
        std::vector<int> e(static_cast<std::size_t>(k * n), 0);
        for (int t = 0; t < 3; ++t) e[static_cast<std::size_t>((rows[t] - 1) * n + cols[s[t]] - 1)] += 1;
        out[e] += 1;
    }
    return out;
}

std::map<std::vector<int>, int> as_map(const Polynomial& p) {
    std::map<std::vector<int>, int> out;
    for (const auto& t : p.terms()) {
        REQUIRE(t.coeff.get_den() == 1);
        std::vector<int> e(t.monomial.entries().begin(), t.monomial.entries().end());
        out[e] = static_cast<int>(t.coeff.get_num().get_si());
    }
    return out;
}

oracle::Grid to_grid(const ExponentMatrix& m) {
    oracle::Grid g;
    for (const auto& r : m.to_rows()) g.emplace_back(r.begin(), r.end());
    return g;
}

Polynomial P(const char* text) { return parse_polynomial(text, 2, 2); }

}  // namespace

TEST_SUITE("ideal") {
    TEST_CASE("generators of I_{4,2} with their integer coefficients") {
        IdealPresentation pres = generators(4, 2);
        REQUIRE(pres.generators.size() == 16);
        int monomial = 0, binomial = 0;
        for (const auto& g : pres.generators) {
            if (g.poly.size() == 1) ++monomial;
            if (g.poly.size() == 2) ++binomial;
        }
        CHECK(monomial == 12);
        CHECK(binomial == 4);

        auto find = [&](std::array<int, 3> r, std::array<int, 3> c) {
            for (const auto& g : pres.generators)
                if (g.label.rows == r && g.label.cols == c) return g.poly;
            FAIL("missing generator");
            return Polynomial();
        };
        CHECK(find({1, 1, 2}, {1, 1, 2}) == P("2*X[1,1]^2*X[2,2] + 4*X[1,1]*X[1,2]*X[2,1]"));
        CHECK(find({1, 2, 2}, {1, 2, 2}) == P("2*X[1,1]*X[2,2]^2 + 4*X[1,2]*X[2,1]*X[2,2]"));
        CHECK(find({1, 1, 2}, {1, 2, 2}) == P("4*X[1,1]*X[1,2]*X[2,2] + 2*X[1,2]^2*X[2,1]"));
        CHECK(find({1, 2, 2}, {1, 1, 2}) == P("4*X[1,1]*X[2,1]*X[2,2] + 2*X[1,2]*X[2,1]^2"));
        CHECK(find({1, 1, 1}, {1, 1, 1}) == P("6*X[1,1]^3"));
        CHECK(find({1, 1, 1}, {1, 1, 2}) == P("6*X[1,1]^2*X[1,2]"));
        CHECK(find({1, 2, 2}, {2, 2, 2}) == P("6*X[1,2]*X[2,2]^2"));

        // leading terms of the four binomials
        CHECK(find({1, 1, 2}, {1, 1, 2}).leading_term().monomial == ExponentMatrix{{2, 0}, {0, 1}});
        CHECK(find({1, 1, 2}, {1, 2, 2}).leading_term().monomial == ExponentMatrix{{1, 1}, {0, 1}});
        CHECK(find({1, 2, 2}, {1, 1, 2}).leading_term().monomial == ExponentMatrix{{1, 0}, {1, 1}});
        CHECK(find({1, 2, 2}, {1, 2, 2}).leading_term().monomial == ExponentMatrix{{1, 0}, {0, 2}});
        CHECK(to_string(pres.generators.front().label) == "f_{1,1,1}^{1,1,1}");
    }

    TEST_CASE("generators agree with the six-permutation sum") {
        for (int m = 1; m <= 6; ++m) {
            for (int k = 1; k <= m; ++k) {
                IdealPresentation pres = generators(m, k);
                const int n = m - k;
                // one generator per pair of 3-multisets of rows and of columns
                CHECK(pres.generators.size() == static_cast<std::size_t>(oracle::binom(k + 2, 3) * oracle::binom(n + 2, 3)));
                for (const auto& g : pres.generators) {
                    CHECK(as_map(g.poly) == generator_oracle(k, n, g.label.rows, g.label.cols));
                    Rational sum = 0;
                    for (const auto& t : g.poly.terms()) sum += t.coeff;
                    CHECK(sum == 6);
                    std::set<std::size_t> allowed{1, 2, 3, 6};
                    CHECK(allowed.count(g.poly.size()) == 1);
                    CHECK(g.poly.is_homogeneous());
                    CHECK(g.poly.total_degree() == 3);
                }
                for (std::size_t i = 1; i < pres.generators.size(); ++i)
                    CHECK(pres.generators[i - 1].label < pres.generators[i].label);
            }
        }
    }

    TEST_CASE("k = m has no generators") {
        CHECK(generators(3, 3).generators.empty());
        CHECK_THROWS_AS(generators(3, 4), std::invalid_argument);
        CHECK_THROWS_AS(generators(3, 0), std::invalid_argument);
        BuchbergerReport r = buchberger_verify(3, 3);
        CHECK(r.all_reduced);
        CHECK(r.pairs_total == 0);
    }

    TEST_CASE("leading monomials are the degree-3 monomials of width 3") {
        for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}, {5, 1}}) {
            const int n = m - k;
            std::set<oracle::Grid> expected;
            for (const auto& g : oracle::all_grids(k, n, 3)) {
                int deg = 0;
                for (const auto& r : g)
                    for (int v : r) deg += v;
                if (deg == 3 && oracle::chain_width(g) == 3) expected.insert(g);
            }
            std::set<oracle::Grid> got;
            for (const auto& e : leading_monomial_set(m, k)) got.insert(to_grid(e));
            CHECK(got == expected);
        }
    }

    TEST_CASE("normal form of X11^2 X22 in S_{4,2}") {
        // 2 X11^2 X22 + 4 X11 X12 X21 lies in the ideal
        CHECK(quotient_normal_form(P("X[1,1]^2*X[2,2]"), 4, 2) == P("-2*X[1,1]*X[1,2]*X[2,1]"));
        CHECK(quotient_normal_form(P("X[1,1]^3"), 4, 2).is_zero());
        CHECK(quotient_normal_form(P("X[1,2]^2*X[2,1]^2"), 4, 2) == P("X[1,2]^2*X[2,1]^2"));
        CHECK_THROWS_AS(quotient_normal_form(parse_polynomial("X[1,1]", 1, 3), 4, 2), DimensionMismatch);
    }

    TEST_CASE("ideal members reduce to zero and normal forms are idempotent") {
        std::mt19937 rng(2024);
        for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}}) {
            ExcitationRing ring(m, k);
            const auto& gens = ring.presentation().generators;
            const int rows = k, cols = m - k;
            std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
            std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2);
            auto random_poly = [&](int terms) {
                std::vector<Term> ts;
                for (int t = 0; t < terms; ++t) {
                    ExponentMatrix e(rows, cols);
                    for (std::size_t v = 0; v < e.size(); ++v)
                        e[v] = static_cast<ExponentMatrix::value_type>(expo(rng) * (expo(rng) == 0));
                    ts.push_back({coeff(rng), e});
                }
                return Polynomial::from_terms(rows, cols, ts);
            };
            for (int trial = 0; trial < 15; ++trial) {
                Polynomial member(rows, cols);
                for (int i = 0; i < 3; ++i) member = member + random_poly(3) * gens[pick(rng)].poly;
                CHECK(ring.normal_form(member).is_zero());

                Polynomial p = random_poly(5);
                Polynomial nf = ring.normal_form(p);
                CHECK(ring.normal_form(nf) == nf);
                CHECK(ring.normal_form(p + member) == nf);
                for (const auto& t : nf.terms())
                    for (const auto& g : gens) CHECK_FALSE(g.poly.leading_term().monomial.divides(t.monomial));
            }
        }
    }
}

TEST_SUITE("groebner") {
    TEST_CASE("pair counts for I_{4,2}") {
        BuchbergerReport r = buchberger_verify(4, 2);
        CHECK(r.generator_count == 16);
        CHECK(r.pairs_total == 120);
        CHECK(r.coprime_skipped + r.checked == r.pairs_total);
        CHECK(r.all_reduced);
        CHECK(r.failures.empty());
    }

    TEST_CASE("coprime pairs counted from lead supports") {
        for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}}) {
            IdealPresentation pres = generators(m, k);
            std::vector<std::set<std::pair<int, int>>> supports;
            for (const auto& g : pres.generators) {
                std::set<std::pair<int, int>> s;
                for (int t = 0; t < 3; ++t) s.insert({g.label.rows[t], g.label.cols[t]});
                supports.push_back(s);
            }
            std::size_t coprime = 0;
            for (std::size_t i = 0; i < supports.size(); ++i)
                for (std::size_t j = i + 1; j < supports.size(); ++j) {
                    bool disjoint = true;
                    for (const auto& v : supports[i]) disjoint = disjoint && !supports[j].count(v);
                    coprime += disjoint;
                }
            BuchbergerReport r = buchberger_verify(m, k);
            CHECK(r.coprime_skipped == coprime);
        }
    }

    TEST_CASE("every m <= 6 and every k: Groebner basis within 10 s") {
        for (int m = 1; m <= 6; ++m) {
            for (int k = 1; k <= m; ++k) {
                auto t0 = std::chrono::steady_clock::now();
                BuchbergerReport r = buchberger_verify(m, k);
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                CAPTURE(m);
                CAPTURE(k);
                CHECK(r.all_reduced);
                CHECK(secs <= 10.0);
            }
        }
    }

    TEST_CASE("a non-basis leaves a nonzero S-remainder") {
        // S(f, g) = X21 f - X22 g = -X12 X21^2, which no lead divides
        Polynomial f = P("X[1,1]*X[2,2] - X[1,2]*X[2,1]");
        Polynomial g = P("X[1,1]*X[2,1]");
        Polynomial s = s_polynomial(f, g);
        CHECK_FALSE(normal_form(s, {f, g}).is_zero());
    }

    TEST_CASE("progress callback reaches the total") {
        std::size_t last = 0, total = 0;
        buchberger_verify(5, 2, [&](std::size_t done, std::size_t t) {
            CHECK(done >= last);
            last = done;
            total = t;
        });
        CHECK(last == total);
        CHECK(total == 40 * 39 / 2);  // 4 row multisets x 10 column multisets
    }
}
