#include "exring/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>

namespace exring {

namespace {

bool greater_term(const Term& a, const Term& b) {
    return compare_monomials_lex(a.monomial, b.monomial) == std::strong_ordering::greater;
}

// out = a + factor * (b shifted by `shift`), for descending term lists.
std::vector<Term> merge_add(std::span<const Term> a, std::span<const Term> b,
                            const Rational& factor, const ExponentMatrix* shift) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    ExponentMatrix shifted;
    auto b_mono = [&](std::size_t idx) -> const ExponentMatrix& {
        if (!shift) return b[idx].monomial;
        shifted = b[idx].monomial * *shift;
        return shifted;
    };
    while (i < a.size() && j < b.size()) {
        const ExponentMatrix& bm = b_mono(j);
        auto c = compare_monomials_lex(a[i].monomial, bm);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back({factor * b[j].coeff, bm});
            ++j;
        } else {
            Rational s = a[i].coeff + factor * b[j].coeff;
            if (s != 0) out.push_back({std::move(s), a[i].monomial});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({factor * b[j].coeff, b_mono(j)});
    return out;
}

}  // namespace

Polynomial::Polynomial(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative polynomial dimension");
}

Polynomial Polynomial::from_terms(int rows, int cols, std::vector<Term> terms) {
    Polynomial p(rows, cols);
    for (auto& t : terms) {
        p.check_dims(t.monomial);
        t.coeff.canonicalize();  // callers may build mpq values from raw numerator/denominator pairs
    }
    std::sort(terms.begin(), terms.end(), greater_term);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Polynomial Polynomial::constant(int rows, int cols, const Rational& c) {
    Polynomial p(rows, cols);
    Rational v = c;
    v.canonicalize();
    if (v != 0) p.terms_.push_back({v, ExponentMatrix(rows, cols)});
    return p;
}

Polynomial Polynomial::monomial(const ExponentMatrix& exp, const Rational& c) {
    Polynomial p(exp.rows(), exp.cols());
    Rational v = c;
    v.canonicalize();
    if (v != 0) p.terms_.push_back({v, exp});
    return p;
}

Polynomial Polynomial::variable(const VarIndex& v) {
    ExponentMatrix e(v.rows, v.cols);
    e.set(v.row, v.col, 1);
    return monomial(e);
}

void Polynomial::check_dims(const Polynomial& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("polynomials over different variable matrices");
}

void Polynomial::check_dims(const ExponentMatrix& m) const {
    if (rows_ != m.rows() || cols_ != m.cols())
        throw DimensionMismatch("monomial does not match polynomial dimensions");
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto d = terms_.front().monomial.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.monomial.degree() == d; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dims(o);
    Polynomial r(rows_, cols_);
    r.terms_ = merge_add(terms_, o.terms_, 1, nullptr);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_dims(o);
    Polynomial r(rows_, cols_);
    r.terms_ = merge_add(terms_, o.terms_, -1, nullptr);
    return r;
}

Polynomial Polynomial::operator-() const { return scale(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dims(o);
    Polynomial r(rows_, cols_);
    for (const auto& t : terms_) {
        Polynomial part(rows_, cols_);
        part.terms_ = merge_add({}, o.terms_, t.coeff, &t.monomial);
        r.terms_ = merge_add(r.terms_, part.terms_, 1, nullptr);
    }
    return r;
}

Polynomial Polynomial::scale(const Rational& c) const {
    Polynomial r(rows_, cols_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const ExponentMatrix& shift) const {
    check_dims(shift);
    Polynomial r(rows_, cols_);
    if (c == 0) return r;
    r.terms_ = merge_add({}, terms_, c, &shift);
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("S-polynomial of zero");
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DimensionMismatch("S-polynomial across dimensions");
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    ExponentMatrix l = lf.monomial.lcm(lg.monomial);
    Rational inv_f = 1 / lf.coeff;
    Rational inv_g = 1 / lg.coeff;
    return f.mul_term(inv_f, lf.monomial.quotient_of(l)) -
           g.mul_term(inv_g, lg.monomial.quotient_of(l));
}

Reducer::Reducer(std::vector<Polynomial> divisors) : divisors_(std::move(divisors)) {
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
        const auto& g = divisors_[i];
        if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");
        if (i == 0) {
            rows_ = g.rows();
            cols_ = g.cols();
        } else if (g.rows() != rows_ || g.cols() != cols_) {
            throw DimensionMismatch("divisors over different variable matrices");
        }
        leads_.push_back(g.leading_term().monomial);
        lead_coeffs_.push_back(g.leading_term().coeff);
        first_with_lead_.emplace(leads_.back(), i);
        lead_degrees_.push_back(leads_.back().degree());
    }
    std::sort(lead_degrees_.begin(), lead_degrees_.end());
    lead_degrees_.erase(std::unique(lead_degrees_.begin(), lead_degrees_.end()), lead_degrees_.end());
}

std::optional<std::size_t> Reducer::scan(const ExponentMatrix& m) const {
    for (std::size_t i = 0; i < leads_.size(); ++i)
        if (leads_[i].divides(m)) return i;
    return std::nullopt;
}

std::optional<std::size_t> Reducer::find_divisor(const ExponentMatrix& m) const {
    if (leads_.empty()) return std::nullopt;
    if (m.rows() != rows_ || m.cols() != cols_)
        throw DimensionMismatch("monomial does not match divisor dimensions");

    // Enumerate sub-monomials of m with a degree some leading monomial has,
    // unless that is more work than a linear scan.
    std::vector<std::size_t> support;
    double work = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] != 0) {
            support.push_back(i);
            work *= static_cast<double>(m[i]) + 1;
        }
    }
    if (work > 4.0 * static_cast<double>(first_with_lead_.size()) + 16) return scan(m);

    const std::uint64_t max_deg = lead_degrees_.back();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    ExponentMatrix cand(m.rows(), m.cols());
    auto visit = [&](auto&& self, std::size_t pos, std::uint64_t deg) -> void {
        if (pos == support.size()) {
            if (std::binary_search(lead_degrees_.begin(), lead_degrees_.end(), deg)) {
                auto it = first_with_lead_.find(cand);
                if (it != first_with_lead_.end()) best = std::min(best, it->second);
            }
            return;
        }
        std::size_t at = support[pos];
        for (ExponentMatrix::value_type e = 0; e <= m[at] && deg + e <= max_deg; ++e) {
            cand[at] = e;
            self(self, pos + 1, deg + e);
        }
        cand[at] = 0;
    };
    visit(visit, 0, 0);
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

Polynomial Reducer::run(const Polynomial& p, std::vector<Polynomial>* quotients) const {
    if (!divisors_.empty() && (p.rows() != rows_ || p.cols() != cols_))
        throw DimensionMismatch("polynomial does not match divisor dimensions");
    if (quotients) quotients->assign(divisors_.size(), Polynomial(p.rows(), p.cols()));

    Polynomial rem(p.rows(), p.cols());
    std::vector<Term> h = p.terms();
    std::size_t head = 0;
    while (head < h.size()) {
        const Term& lt = h[head];
        auto idx = find_divisor(lt.monomial);
        if (!idx) {
            rem.terms_.push_back(lt);
            ++head;
            continue;
        }
        const Polynomial& g = divisors_[*idx];
        Rational factor = lt.coeff / lead_coeffs_[*idx];
        ExponentMatrix shift = leads_[*idx].quotient_of(lt.monomial);
        if (quotients) (*quotients)[*idx].terms_.push_back({factor, shift});
        // h <- h - factor * shift * g; the leading terms cancel exactly.
        h = merge_add(std::span<const Term>(h).subspan(head + 1),
                      std::span<const Term>(g.terms()).subspan(1), -factor, &shift);
        head = 0;
    }
    return rem;
}

Polynomial Reducer::reduce(const Polynomial& p) const { return run(p, nullptr); }

Division Reducer::divide(const Polynomial& p) const {
    Division d;
    d.remainder = run(p, &d.quotients);
    return d;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    return Reducer(divisors).reduce(p);
}

Division divide(const Polynomial& p, const std::vector<Polynomial>& divisors) {
    return Reducer(divisors).divide(p);
}

}  // namespace exring
