#include "exring/enumeration.hpp"
#include "exring/ideal.hpp"
#include "exring/stdmono.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace exring;

namespace {

ExponentMatrix from_grid(const oracle::Grid& g, int cols) {
    std::vector<ExponentMatrix::value_type> e;
    for (const auto& r : g)
        for (int v : r) e.push_back(static_cast<ExponentMatrix::value_type>(v));
    return ExponentMatrix(static_cast<int>(g.size()), cols, e);
}

oracle::Grid to_grid(const ExponentMatrix& m) {
    oracle::Grid g;
    for (const auto& r : m.to_rows()) g.emplace_back(r.begin(), r.end());
    return g;
}

}  // namespace

TEST_SUITE("width") {
    TEST_CASE("all-ones 2x2 has width 3") {
        ExponentMatrix m{{1, 1}, {1, 1}};
        CHECK(oracle::chain_width(to_grid(m)) == 3);
        CHECK(width(m).width == 3);
        CHECK(longest_weak_column_ascent(m) == 3);
        CHECK_FALSE(is_standard(m));
    }

    TEST_CASE("small cases by hand") {
        CHECK(width(ExponentMatrix{{0, 2}, {2, 0}}).width == 2);
        CHECK(width(ExponentMatrix{{2, 0}, {0, 1}}).width == 3);
        CHECK(width(ExponentMatrix{{0, 0}, {0, 0}}).width == 0);
        CHECK(width(ExponentMatrix{{0, 1, 0}, {1, 0, 5}}).width == 6);
        CHECK(width(ExponentMatrix(2, 0)).width == 0);
    }

    TEST_CASE("width matches the chain search on every small matrix") {
        struct Dims {
            int rows, cols, max_entry;
        };
        for (auto d : {Dims{2, 2, 2}, Dims{2, 3, 2}, Dims{3, 2, 2}, Dims{3, 3, 1}, Dims{1, 4, 3}, Dims{4, 1, 3}}) {
            for (const auto& g : oracle::all_grids(d.rows, d.cols, d.max_entry)) {
                ExponentMatrix m = from_grid(g, d.cols);
                WidthReport r = width(m);
                int expected = oracle::chain_width(g);
                CHECK(r.width == static_cast<std::uint64_t>(expected));
                CHECK(longest_weak_column_ascent(m) == static_cast<std::uint64_t>(expected));
                // witness is a weak chain of nonzero cells carrying the width
                std::uint64_t sum = 0;
                for (std::size_t t = 0; t < r.witness.size(); ++t) {
                    auto [i, j] = r.witness[t];
                    CHECK(m.at(i, j) > 0);
                    sum += m.at(i, j);
                    if (t > 0) {
                        CHECK(i >= r.witness[t - 1].first);
                        CHECK(j >= r.witness[t - 1].second);
                        CHECK(r.witness[t] != r.witness[t - 1]);
                    }
                }
                CHECK(sum == r.width);
            }
        }
    }

    TEST_CASE("width, triple ascents and normal forms agree (entries <= 3, up to 3x3)") {
        for (int rows = 1; rows <= 3; ++rows) {
            for (int cols = 1; cols <= 3; ++cols) {
                ExcitationRing ring(rows + cols, rows);
                for (const auto& g : oracle::all_grids(rows, cols, 3)) {
                    ExponentMatrix m = from_grid(g, cols);
                    bool by_width = width(m).width <= 2;
                    bool by_word = !oracle::has_triple_ascent(oracle::column_word(g));
                    Polynomial mono = Polynomial::monomial(m);
                    bool by_nf = ring.normal_form(mono) == mono;
                    CHECK(by_width == by_word);
                    CHECK(by_width == by_nf);
                    CHECK(has_no_triple_ascent(m) == by_word);
                }
            }
        }
    }
}

TEST_SUITE("standard monomials") {
    TEST_CASE("S_{4,2} has the expected 20 matrices") {
        auto mats = enumerate_standard(4, 2);
        REQUIRE(mats.size() == 20);

        // degree 0 and 1: the constant and the four variables
        std::set<oracle::Grid> low{{{0, 0}, {0, 0}}, {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}};
        std::set<oracle::Grid> deg2{{{2, 0}, {0, 0}}, {{0, 2}, {0, 0}}, {{0, 0}, {2, 0}}, {{0, 0}, {0, 2}},
                                    {{1, 1}, {0, 0}}, {{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}},
                                    {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}};
        std::set<oracle::Grid> deg3{{{1, 1}, {1, 0}}, {{0, 2}, {1, 0}}, {{0, 1}, {2, 0}}, {{0, 1}, {1, 1}}};
        std::set<oracle::Grid> deg4{{{0, 2}, {2, 0}}};

        std::map<std::uint64_t, std::set<oracle::Grid>> got;
        for (const auto& m : mats) got[m.degree()].insert(to_grid(m));
        std::set<oracle::Grid> got_low = got[0];
        got_low.insert(got[1].begin(), got[1].end());
        CHECK(got_low == low);
        CHECK(got[2] == deg2);
        CHECK(got[3] == deg3);
        CHECK(got[4] == deg4);
        CHECK(hilbert_function(4, 2) == std::vector<std::uint64_t>{1, 4, 10, 4, 1});
    }

    TEST_CASE("output order is degree, then lex-largest first") {
        const std::vector<oracle::Grid> golden{
            {{0, 0}, {0, 0}},
            {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}},
            {{2, 0}, {0, 0}}, {{1, 1}, {0, 0}}, {{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}, {{0, 2}, {0, 0}},
            {{0, 1}, {1, 0}}, {{0, 1}, {0, 1}}, {{0, 0}, {2, 0}}, {{0, 0}, {1, 1}}, {{0, 0}, {0, 2}},
            {{1, 1}, {1, 0}}, {{0, 2}, {1, 0}}, {{0, 1}, {2, 0}}, {{0, 1}, {1, 1}},
            {{0, 2}, {2, 0}},
        };
        std::vector<oracle::Grid> got;
        for (const auto& m : enumerate_standard(4, 2)) got.push_back(to_grid(m));
        CHECK(got == golden);
    }

    TEST_CASE("S_{5,2} has 50 standard monomials") {
        CHECK(enumerate_standard(5, 2).size() == 50);
        CHECK(enumerate_standard(5, 3).size() == 50);
    }

    TEST_CASE("enumeration equals the brute-force filter") {
        for (int m = 2; m <= 6; ++m) {
            for (int k = 1; k < m; ++k) {
                const int n = m - k;
                if (k * n > 9) continue;
                std::set<oracle::Grid> expected;
                for (const auto& g : oracle::all_grids(k, n, 2))
                    if (oracle::chain_width(g) <= 2) expected.insert(g);
                std::set<oracle::Grid> got;
                for (const auto& e : enumerate_standard(m, k)) got.insert(to_grid(e));
                CHECK(got == expected);
            }
        }
    }

    TEST_CASE("transpose is a bijection onto S_{m,m-k}") {
        for (int m = 2; m <= 7; ++m) {
            for (int k = 1; k < m; ++k) {
                std::set<oracle::Grid> a, b;
                for (const auto& e : enumerate_standard(m, k)) a.insert(to_grid(e.transpose()));
                for (const auto& e : enumerate_standard(m, m - k)) b.insert(to_grid(e));
                CHECK(a == b);
            }
        }
    }

    TEST_CASE("entries are at most 2 and the top degree is 2 min(k, m-k)") {
        for (int m = 1; m <= 7; ++m) {
            for (int k = 1; k <= m; ++k) {
                auto mats = enumerate_standard(m, k);
                std::uint64_t top = 0;
                for (const auto& e : mats) {
                    for (auto v : e.entries()) CHECK(v <= 2);
                    top = std::max(top, e.degree());
                }
                CHECK(top == static_cast<std::uint64_t>(2 * std::min(k, m - k)));
                auto h = hilbert_function(m, k);
                std::uint64_t total = 0;
                for (auto x : h) total += x;
                CHECK(total == mats.size());
            }
        }
    }

    TEST_CASE("k = m gives the scalars") {
        auto mats = enumerate_standard(4, 4);
        REQUIRE(mats.size() == 1);
        CHECK(mats[0].rows() == 4);
        CHECK(mats[0].cols() == 0);
        CHECK_THROWS_AS(enumerate_standard(3, 0), std::invalid_argument);
        CHECK_THROWS_AS(enumerate_standard(3, 4), std::invalid_argument);
    }

    TEST_CASE("counts agree with Narayana numbers") {
        for (int m = 1; m <= 7; ++m)
            for (int k = 1; k <= m; ++k)
                CHECK(BigInt(std::to_string(enumerate_standard(m, k).size())) == narayana(m + 1, k + 1));
    }
}
