#pragma once

#include "exring/polynomial.hpp"

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace exring {

/// Row multiset {p <= q <= r} from [k] and column multiset {a <= b <= c}
/// from [m-k] indexing one cubic generator.
struct GeneratorLabel {
    std::array<int, 3> rows{};
    std::array<int, 3> cols{};

    auto operator<=>(const GeneratorLabel&) const = default;
};

std::string to_string(const GeneratorLabel& l);

struct Generator {
    GeneratorLabel label;
    Polynomial poly;
};

/// The generating set of I_{m,k} in label order.
struct IdealPresentation {
    int m = 0;
    int k = 0;
    std::vector<Generator> generators;

    [[nodiscard]] int rows() const { return k; }
    [[nodiscard]] int cols() const { return m - k; }
    [[nodiscard]] std::vector<Polynomial> polynomials() const;
};

/// sum over all sigma in S_3 of X_{r0,c[s0]} X_{r1,c[s1]} X_{r2,c[s2]}.
/// Labels need not be sorted; the result only depends on the multiset of
/// (row, col) pairings up to simultaneous permutation.
Polynomial generalized_permanent(int rows, int cols, const std::array<int, 3>& row_idx,
                                 const std::array<int, 3>& col_idx);

/// Requires 1 <= k <= m. For k = m there are no variables and no generators.
IdealPresentation generators(int m, int k);

/// Distinct leading monomials of the generators, lex-largest first.
std::vector<ExponentMatrix> leading_monomial_set(int m, int k);

struct PairFailure {
    GeneratorLabel first;
    GeneratorLabel second;
    Polynomial remainder;
};

struct BuchbergerReport {
    int m = 0;
    int k = 0;
    std::size_t generator_count = 0;
    std::size_t pairs_total = 0;
    std::size_t coprime_skipped = 0;
    std::size_t checked = 0;
    bool all_reduced = true;
    std::vector<PairFailure> failures;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// Buchberger's criterion over all unordered generator pairs, in label order.
/// Pairs with coprime leading monomials are counted and skipped.
BuchbergerReport buchberger_verify(int m, int k, const ProgressFn& progress = {});

/// S_{m,k} = C[X]/I_{m,k} with normal forms computed against the generators.
class ExcitationRing {
public:
    ExcitationRing(int m, int k);

    [[nodiscard]] int m() const { return presentation_.m; }
    [[nodiscard]] int k() const { return presentation_.k; }
    [[nodiscard]] const IdealPresentation& presentation() const { return presentation_; }
    [[nodiscard]] const Reducer& reducer() const { return reducer_; }

    /// Throws DimensionMismatch if p is not over the k x (m-k) variables.
    [[nodiscard]] Polynomial normal_form(const Polynomial& p) const;

private:
    IdealPresentation presentation_;
    Reducer reducer_;
};

Polynomial quotient_normal_form(const Polynomial& p, int m, int k);

}  // namespace exring
