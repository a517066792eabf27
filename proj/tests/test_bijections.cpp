#include "exring/dyck.hpp"
#include "exring/enumeration.hpp"
#include "exring/json_io.hpp"
#include "exring/plane_partition.hpp"
#include "exring/stdmono.hpp"
#include "exring/tableaux.hpp"

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

const SSYT kP({{1, 1, 2, 4, 4}, {2, 3}, {3}}, 4);
const SSYT kQ({{1, 2, 2, 3, 4}, {2, 3}, {4}}, 4);
const oracle::Grid kB{{5, 4, 3, 1}, {3, 2, 2, 1}, {3, 2, 1, 0}, {2, 1, 1, 0}};

// B^w straight from the up/down description: scan the word, skip the first
// letter, the last letter and both letters of each "du", and tally the rest.
oracle::Grid dyck_oracle(const std::string& w, int m, int k) {
    std::vector<bool> skip(w.size(), false);
    skip.front() = skip.back() = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 'd' && w[i + 1] == 'u') skip[i] = skip[i + 1] = true;
    std::vector<int> up, down;
    int u = 0, d = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i] == 'd' && w[i + 1] == 'u') {
            up.push_back(u);
            down.push_back(d);
        }
        if (skip[i]) continue;
        (w[i] == 'u' ? u : d) += 1;
    }
    oracle::Grid b(k, std::vector<int>(m - k, 0));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= m - k; ++j)
            b[i - 1][j - 1] = down[k - i] >= j ? 2 : (up[k - i] >= j ? 1 : 0);
    return b;
}

}  // namespace

TEST_SUITE("tableaux") {
    TEST_CASE("partitions") {
        Partition p({4, 2, 1, 0});
        CHECK(p.length() == 3);
        CHECK(p.size() == 7);
        CHECK(p.conjugate() == Partition({3, 2, 1, 1}));
        CHECK(p.part(5) == 0);
        CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
        CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    }

    TEST_CASE("semistandard validation") {
        CHECK_NOTHROW(SSYT({{1, 1, 2, 4}, {2, 3}, {5}}, 5));
        CHECK_THROWS_AS(SSYT({{1, 1, 2, 4}, {2, 3}, {5}}, 4), std::invalid_argument);
        CHECK_THROWS_AS(SSYT({{1, 1}, {1}}, 3), std::invalid_argument);
        CHECK_THROWS_AS(SSYT({{2, 1}}, 3), std::invalid_argument);
        CHECK_THROWS_AS(SSYT({{1}, {2, 3}}, 3), std::invalid_argument);
        CHECK(SSYT({{1, 1, 2, 4}, {2, 3}, {5}}, 5).shape() == Partition({4, 2, 1}));
    }

    TEST_CASE("Gelfand-Tsetlin chains of the worked pair") {
        GTPattern gp = ssyt_to_gt(kP, 4);
        CHECK(gp.levels() == std::vector<std::vector<int>>{{2}, {3, 1}, {3, 2, 1}, {5, 2, 1, 0}});
        GTPattern gq = ssyt_to_gt(kQ, 4);
        CHECK(gq.levels() == std::vector<std::vector<int>>{{1}, {3, 1}, {4, 2, 0}, {5, 2, 1, 0}});
        CHECK(gt_to_ssyt(gp) == kP);
        CHECK(gt_to_ssyt(gq) == kQ);
        CHECK_THROWS_AS(ssyt_to_gt(kP, 3), std::invalid_argument);
        CHECK_THROWS_AS(GTPattern({{1}, {3, 2}}), std::invalid_argument);  // 1 does not interlace 3 >= . >= 2
    }

    TEST_CASE("GT patterns round trip on every small tableau") {
        for (const auto& shape : oracle::partitions_in_box(3, 3))
            for (const auto& t : oracle::all_ssyt(shape, 4)) {
                SSYT s(t, 4);
                CHECK(gt_to_ssyt(ssyt_to_gt(s, 4)) == s);
            }
    }

    TEST_CASE("RSK by hand") {
        // biword (1,1) (1,3) (1,3) (2,2): insert 1 3 3, then 2 bumps a 3
        TableauPair t = rsk(ExponentMatrix{{1, 0, 2}, {0, 1, 0}});
        CHECK(t.insertion.rows() == std::vector<std::vector<int>>{{1, 2, 3}, {3}});
        CHECK(t.recording.rows() == std::vector<std::vector<int>>{{1, 1, 1}, {2}});
        CHECK(t.insertion.content_bound() == 3);
        CHECK(t.recording.content_bound() == 2);
        CHECK(rsk(ExponentMatrix(0, 3)).insertion.empty());
    }

    TEST_CASE("RSK round trip on all 3x3 matrices with entries <= 2") {
        for (const auto& g : oracle::all_grids(3, 3, 2)) {
            ExponentMatrix m = from_grid(g, 3);
            TableauPair t = rsk(m);
            CHECK(rsk_inverse(t.insertion, t.recording) == m);
            CHECK(t.insertion.shape().size() == static_cast<int>(m.degree()));
            CHECK(t.insertion.shape() == t.recording.shape());
        }
    }

    TEST_CASE("inverse RSK round trip on all pairs of shape inside 3x3 with content 3") {
        std::size_t pairs = 0;
        for (const auto& shape : oracle::partitions_in_box(3, 3)) {
            auto tabs = oracle::all_ssyt(shape, 3);
            for (const auto& p : tabs)
                for (const auto& q : tabs) {
                    SSYT P(p, 3), Q(q, 3);
                    ExponentMatrix m = rsk_inverse(P, Q);
                    CHECK(m.rows() == 3);
                    CHECK(m.cols() == 3);
                    CHECK(rsk(m) == TableauPair{P, Q});
                    ++pairs;
                }
        }
        // RSK is a bijection onto 3x3 matrices of width <= 3
        std::size_t matrices = 0;
        for (const auto& g : oracle::all_grids(3, 3, 3))
            if (oracle::chain_width(g) <= 3) ++matrices;
        CHECK(pairs == matrices);
    }

    TEST_CASE("first row length equals width on all 2x2 matrices with entries <= 2") {
        int checked = 0;
        for (const auto& g : oracle::all_grids(2, 2, 2)) {
            TableauPair t = rsk(from_grid(g, 2));
            CHECK(t.insertion.shape().columns() == oracle::chain_width(g));
            ++checked;
        }
        CHECK(checked == 81);
        for (const auto& g : oracle::all_grids(2, 3, 3)) CHECK(rsk(from_grid(g, 3)).insertion.shape().columns() == oracle::chain_width(g));
    }

    TEST_CASE("shape mismatch is rejected") {
        CHECK_THROWS_AS(rsk_inverse(SSYT({{1, 2}}, 2), SSYT({{1}, {2}}, 2)), std::invalid_argument);
    }
}

TEST_SUITE("plane partitions") {
    TEST_CASE("validation") {
        CHECK_NOTHROW(PlanePartition::from_rows(kB, 5));
        CHECK_THROWS_AS(PlanePartition::from_rows(kB, 4), std::invalid_argument);
        CHECK_THROWS_AS(PlanePartition::from_rows({{1, 2}}, 2), std::invalid_argument);
        CHECK_THROWS_AS(PlanePartition::from_rows({{1, 1}, {2, 0}}, 2), std::invalid_argument);
        CHECK_THROWS_AS(PlanePartition::from_rows({{1, 1}, {1}}, 2), std::invalid_argument);
    }

    TEST_CASE("the worked tableau pair gives the worked plane partition") {
        PlanePartition b = tableaux_to_pp(kP, kQ, 4, 4);
        CHECK(b.to_rows() == kB);
        CHECK(b.bound() == 5);  // P and Q have five columns
        PPTableaux back = pp_to_tableaux(b);
        CHECK(back.p == kP);
        CHECK(back.q == kQ);

        // through a matrix: the recording tableau takes the role of P
        ExponentMatrix m = rsk_inverse(kQ, kP);
        CHECK(matrix_to_pp(m).to_rows() == kB);
        CHECK(pp_to_matrix(PlanePartition::from_rows(kB, 5)) == m);
    }

    TEST_CASE("tableaux_to_pp rejects inconsistent input") {
        CHECK_THROWS_AS(tableaux_to_pp(SSYT({{1, 1}}, 2), SSYT({{1}, {2}}, 2), 2, 2), std::invalid_argument);
        // three rows cannot fit a 2 x 3 plane partition's diagonal
        CHECK_THROWS_AS(tableaux_to_pp(SSYT({{1}, {2}, {3}}, 3), SSYT({{1}, {2}, {3}}, 3), 2, 3), std::invalid_argument);
    }

    TEST_CASE("plane partitions round trip through matrices") {
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 3; ++b)
                for (const auto& B : enumerate_pp(a, b, 3)) {
                    ExponentMatrix m = pp_to_matrix(B);
                    CHECK(m.rows() == a);
                    CHECK(m.cols() == b);
                    PlanePartition again = matrix_to_pp(m);
                    CHECK(again.entries() == B.entries());
                    CHECK(again.bound() == B.max_entry());
                    CHECK(width(m).width == static_cast<std::uint64_t>(B.max_entry()));
                }
    }

    TEST_CASE("matrix -> plane partition -> matrix on all 3x3 matrices with entries <= 1") {
        for (const auto& g : oracle::all_grids(3, 3, 1)) {
            ExponentMatrix m = from_grid(g, 3);
            PlanePartition b = matrix_to_pp(m);
            CHECK(pp_to_matrix(b) == m);
            CHECK(b.bound() == oracle::chain_width(g));
        }
    }

    TEST_CASE("transposition commutes with the bijection") {
        for (const auto& g : oracle::all_grids(2, 3, 2)) {
            ExponentMatrix m = from_grid(g, 3);
            CHECK(matrix_to_pp(matrix_transpose(m)) == transpose(matrix_to_pp(m)));
        }
        for (auto [m, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}})
            for (const auto& e : enumerate_standard(m, k))
                CHECK(matrix_to_pp(e.transpose()) == transpose(matrix_to_pp(e)));
    }
}

TEST_SUITE("dyck") {
    TEST_CASE("validation") {
        CHECK(is_dyck_word("uudd"));
        CHECK(is_dyck_word(""));
        CHECK_FALSE(is_dyck_word("udd"));
        CHECK_FALSE(is_dyck_word("duud"));
        CHECK_FALSE(is_dyck_word("uxdd"));
        CHECK_THROWS_AS(DyckWord("du"), std::invalid_argument);
        CHECK(DyckWord("uduudd").valley_count() == 1);
    }

    TEST_CASE("statistics of uuduudddud") {
        DyckWord w("uuduudddud");
        DyckStats s = dyck_stats(w);
        CHECK(s.valleys == std::vector<int>{2, 7});
        CHECK(s.central == std::vector<int>{1, 4, 5, 6});
        CHECK(s.up == std::vector<int>{1, 2, 2});
        CHECK(s.down == std::vector<int>{0, 2, 2});
    }

    TEST_CASE("uuduudddud maps to [[2,2],[1,0]]") {
        PlanePartition b = dyck_to_pp(DyckWord("uuduudddud"), 4, 2);
        CHECK(b.to_rows() == oracle::Grid{{2, 2}, {1, 0}});
        CHECK(b.bound() == 2);
        CHECK(pp_to_dyck(b, 4, 2).str() == "uuduudddud");
        CHECK(dyck_from_counts({1, 2}, {0, 2}, 4, 2).str() == "uuduudddud");
    }

    TEST_CASE("wrong length or valley count is rejected") {
        CHECK_THROWS_AS(dyck_to_pp(DyckWord("uuduudddud"), 5, 2), std::invalid_argument);
        CHECK_THROWS_AS(dyck_to_pp(DyckWord("uuduudddud"), 4, 1), std::invalid_argument);
        CHECK_THROWS_AS(pp_to_dyck(PlanePartition::from_rows({{3, 0}, {0, 0}}, 3), 4, 2), std::invalid_argument);
        CHECK_THROWS_AS(pp_to_dyck(PlanePartition::from_rows({{2, 0}, {0, 0}}, 2), 5, 2), std::invalid_argument);
    }

    TEST_CASE("every word of D(m+1,k+1): statistics, oracle and round trips") {
        for (int m = 1; m <= 7; ++m) {
            for (int k = 0; k <= m; ++k) {
                std::set<std::vector<int>> images;
                auto words = dyck_set(m + 1, k + 1);
                for (const auto& w : words) {
                    DyckStats s = dyck_stats(w);
                    REQUIRE(s.up.size() == static_cast<std::size_t>(k + 1));
                    for (int i = 0; i <= k; ++i) {
                        CHECK(s.up[i] >= s.down[i]);
                        if (i > 0) {
                            CHECK(s.up[i] >= s.up[i - 1]);
                            CHECK(s.down[i] >= s.down[i - 1]);
                        }
                    }
                    CHECK(s.up.back() == m - k);
                    CHECK(s.down.back() == m - k);
                    std::vector<int> a(s.up.begin(), s.up.end() - 1), b(s.down.begin(), s.down.end() - 1);
                    CHECK(dyck_from_counts(a, b, m, k) == w);

                    PlanePartition B = dyck_to_pp(w, m, k);
                    if (k > 0 && k < m) CHECK(B.to_rows() == dyck_oracle(w.str(), m, k));
                    CHECK(pp_to_dyck(B, m, k) == w);
                    images.insert(B.entries());
                }
                CHECK(images.size() == words.size());
                auto all = enumerate_pp(k, m - k, 2);
                CHECK(all.size() == words.size());
                for (const auto& B : all) CHECK(dyck_to_pp(pp_to_dyck(B, m, k), m, k).entries() == B.entries());
            }
        }
    }
}

TEST_SUITE("chain") {
    TEST_CASE("standard matrix -> tableaux -> plane partition -> Dyck word, m <= 7") {
        for (int m = 1; m <= 7; ++m) {
            for (int k = 1; k <= m; ++k) {
                std::set<std::string> words;
                auto mats = enumerate_standard(m, k);
                for (const auto& M : mats) {
                    TableauPair t = rsk(M);
                    CHECK(rsk_inverse(t.insertion, t.recording) == M);
                    PlanePartition B = matrix_to_pp(M);
                    CHECK(B.entries() == tableaux_to_pp(t.recording, t.insertion, k, m - k).entries());
                    CHECK(pp_to_matrix(B) == M);
                    DyckWord w = pp_to_dyck(B, m, k);
                    CHECK(dyck_to_pp(w, m, k).entries() == B.entries());
                    words.insert(w.str());
                }
                std::set<std::string> expected;
                for (const auto& w : dyck_set(m + 1, k + 1)) expected.insert(w.str());
                CHECK(words.size() == mats.size());
                CHECK(words == expected);
            }
        }
    }
}

TEST_SUITE("json encodings") {
    TEST_CASE("tableaux, plane partitions and words") {
        CHECK(ssyt_to_json(kP) == nlohmann::json::parse("[[1,1,2,4,4],[2,3],[3]]"));
        CHECK(ssyt_from_json(ssyt_to_json(kP), 4) == kP);
        PlanePartition b = PlanePartition::from_rows(kB, 5);
        CHECK(pp_to_json(b) == nlohmann::json::parse(R"({"entries":[[5,4,3,1],[3,2,2,1],[3,2,1,0],[2,1,1,0]],"bound":5})"));
        CHECK(pp_from_json(pp_to_json(b)) == b);
        CHECK(pp_from_json(nlohmann::json::parse("[[2,1],[1,0]]")).bound() == 2);
        CHECK(dyck_from_json(dyck_to_json(DyckWord("uudd"))).str() == "uudd");
        CHECK_THROWS_AS(dyck_from_json(nlohmann::json(3)), std::invalid_argument);
        CHECK_THROWS_AS(ssyt_from_json(nlohmann::json::parse("[[2,1]]"), 3), std::invalid_argument);
    }
}
