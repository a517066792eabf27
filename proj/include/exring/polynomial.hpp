#pragma once

#include "exring/exponent_matrix.hpp"
#include "exring/rational.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace exring {

struct Term {
    Rational coeff;
    ExponentMatrix monomial;

    bool operator==(const Term&) const = default;
};

/// Polynomial in the variables X_{i,j} of a rows x cols matrix, with exact
/// rational coefficients. Terms are kept sorted lex-largest first with no
/// zero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() = default;
    /// The zero polynomial.
    Polynomial(int rows, int cols);

    /// Sorts, merges like terms and drops zeros.
    static Polynomial from_terms(int rows, int cols, std::vector<Term> terms);
    static Polynomial constant(int rows, int cols, const Rational& c);
    static Polynomial monomial(const ExponentMatrix& exp, const Rational& c = 1);
    static Polynomial variable(const VarIndex& v);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    /// Lex-largest term. Throws std::domain_error on the zero polynomial.
    [[nodiscard]] const Term& leading_term() const;
    [[nodiscard]] std::uint64_t total_degree() const;
    [[nodiscard]] bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    [[nodiscard]] Polynomial scale(const Rational& c) const;
    /// this * c * X^shift
    [[nodiscard]] Polynomial mul_term(const Rational& c, const ExponentMatrix& shift) const;

    bool operator==(const Polynomial& o) const = default;

private:
    void check_dims(const Polynomial& o) const;
    void check_dims(const ExponentMatrix& m) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Term> terms_;

    friend class Reducer;
};

/// S(f,g) = (L/lt(f)) f - (L/lt(g)) g with L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct Division {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division against a fixed ordered list of divisors.
///
/// Each step rewrites the lex-largest monomial of the running polynomial
/// that some divisor's leading monomial divides, using the earliest such
/// divisor in list order. Divisor lookup is indexed on leading monomials, so
/// a reducer built once can be reused across many inputs.
class Reducer {
public:
    explicit Reducer(std::vector<Polynomial> divisors);

    [[nodiscard]] const std::vector<Polynomial>& divisors() const { return divisors_; }

    /// Index of the first divisor whose leading monomial divides `m`.
    [[nodiscard]] std::optional<std::size_t> find_divisor(const ExponentMatrix& m) const;

    [[nodiscard]] Polynomial reduce(const Polynomial& p) const;
    /// Remainder plus quotients with p = sum q_i g_i + r.
    [[nodiscard]] Division divide(const Polynomial& p) const;

private:
    Polynomial run(const Polynomial& p, std::vector<Polynomial>* quotients) const;
    std::optional<std::size_t> scan(const ExponentMatrix& m) const;

    std::vector<Polynomial> divisors_;
    std::vector<ExponentMatrix> leads_;
    std::vector<Rational> lead_coeffs_;
    std::unordered_map<ExponentMatrix, std::size_t, ExponentMatrixHash> first_with_lead_;
    std::vector<std::uint64_t> lead_degrees_;  // sorted, distinct
    int rows_ = 0;
    int cols_ = 0;
};

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors);
Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors);

}  // namespace exring
