#include "exring/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace exring {

namespace {

void check_mk(int m, int k) {
    if (k < 1 || k > m)
        throw std::invalid_argument("require 1 <= k <= m, got m=" + std::to_string(m) +
                                    " k=" + std::to_string(k));
}

std::vector<std::array<int, 3>> sorted_triples(int n) {
    std::vector<std::array<int, 3>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            for (int c = b; c <= n; ++c) out.push_back({a, b, c});
    return out;
}

}  // namespace

std::string to_string(const GeneratorLabel& l) {
    auto tri = [](const std::array<int, 3>& t) {
        return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
    };
    return "f_{" + tri(l.rows) + "}^{" + tri(l.cols) + "}";
}

std::vector<Polynomial> IdealPresentation::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.poly);
    return out;
}

Polynomial generalized_permanent(int rows, int cols, const std::array<int, 3>& row_idx,
                                 const std::array<int, 3>& col_idx) {
    std::array<int, 3> sigma{0, 1, 2};
    std::vector<Term> terms;
    do {
        ExponentMatrix e(rows, cols);
        for (int t = 0; t < 3; ++t) {
            int i = row_idx[t];
            int j = col_idx[sigma[t]];
            e.set(i, j, e.at(i, j) + 1);
        }
        terms.push_back({1, std::move(e)});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return Polynomial::from_terms(rows, cols, std::move(terms));
}

IdealPresentation generators(int m, int k) {
    check_mk(m, k);
    IdealPresentation pres{m, k, {}};
    const int n = m - k;
    if (n == 0) return pres;
    for (const auto& r : sorted_triples(k))
        for (const auto& c : sorted_triples(n))
            pres.generators.push_back({{r, c}, generalized_permanent(k, n, r, c)});
    return pres;
}

std::vector<ExponentMatrix> leading_monomial_set(int m, int k) {
    std::vector<ExponentMatrix> out;
    for (const auto& g : generators(m, k).generators) out.push_back(g.poly.leading_term().monomial);
    std::sort(out.begin(), out.end(), [](const ExponentMatrix& a, const ExponentMatrix& b) {
        return compare_monomials_lex(a, b) == std::strong_ordering::greater;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BuchbergerReport buchberger_verify(int m, int k, const ProgressFn& progress) {
    IdealPresentation pres = generators(m, k);
    Reducer reducer(pres.polynomials());
    const auto& gens = pres.generators;

    BuchbergerReport rep;
    rep.m = m;
    rep.k = k;
    rep.generator_count = gens.size();
    const std::size_t n = gens.size();
    rep.pairs_total = n < 2 ? 0 : n * (n - 1) / 2;

    std::size_t done = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const ExponentMatrix& li = gens[i].poly.leading_term().monomial;
        for (std::size_t j = i + 1; j < n; ++j) {
            ++done;
            if (li.coprime(gens[j].poly.leading_term().monomial)) {
                ++rep.coprime_skipped;
                continue;
            }
            ++rep.checked;
            Polynomial r = reducer.reduce(s_polynomial(gens[i].poly, gens[j].poly));
            if (!r.is_zero()) {
                rep.all_reduced = false;
                rep.failures.push_back({gens[i].label, gens[j].label, std::move(r)});
            }
        }
        if (progress) progress(done, rep.pairs_total);
    }
    return rep;
}

ExcitationRing::ExcitationRing(int m, int k)
    : presentation_(generators(m, k)), reducer_(presentation_.polynomials()) {}

Polynomial ExcitationRing::normal_form(const Polynomial& p) const {
    if (p.rows() != presentation_.rows() || p.cols() != presentation_.cols())
        throw DimensionMismatch("polynomial is not over the " + std::to_string(presentation_.rows()) +
                                "x" + std::to_string(presentation_.cols()) + " variables");
    return reducer_.reduce(p);
}

Polynomial quotient_normal_form(const Polynomial& p, int m, int k) {
    return ExcitationRing(m, k).normal_form(p);
}

}  // namespace exring
