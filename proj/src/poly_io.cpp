#include "exring/poly_io.hpp"

#include <cctype>
#include <stdexcept>

namespace exring {

namespace {

std::string format_monomial(const ExponentMatrix& m) {
    std::string s;
    for (int i = 1; i <= m.rows(); ++i) {
        for (int j = 1; j <= m.cols(); ++j) {
            auto e = m.at(i, j);
            if (e == 0) continue;
            if (!s.empty()) s += "*";
            s += "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
            if (e > 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

class Parser {
public:
    Parser(std::string text, int rows, int cols) : s_(std::move(text)), rows_(rows), cols_(cols) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty input");
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            Term t = term();
            if (negative) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negative = c == '-';
            ++pos_;
        }
        return Polynomial::from_terms(rows_, cols_, std::move(terms));
    }

private:
    Term term() {
        Term t{1, ExponentMatrix(rows_, cols_)};
        bool first = true;
        while (true) {
            skip_ws();
            if (!first && (at_end() || peek() != '*')) break;
            if (!first) ++pos_;
            first = false;
            skip_ws();
            if (at_end()) fail("unexpected end of term");
            if (peek() == 'X') {
                ++pos_;
                expect('[');
                int i = static_cast<int>(number());
                expect(',');
                int j = static_cast<int>(number());
                expect(']');
                unsigned long e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    e = number();
                }
                if (i < 1 || i > rows_ || j < 1 || j > cols_) fail("variable index out of range");
                t.monomial.set(i, j, t.monomial.at(i, j) + static_cast<ExponentMatrix::value_type>(e));
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string lit = raw_digits();
                t.coeff *= parse_rational(digits_from(lit));
            } else {
                fail("unexpected character");
            }
        }
        return t;
    }

    // Numerator already consumed; pick up an optional "/den".
    std::string digits_from(const std::string& num) {
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            return num + "/" + raw_digits();
        }
        return num;
    }

    std::string raw_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    unsigned long number() {
        skip_ws();
        std::string d = raw_digits();
        if (d.size() > 18) fail("integer literal too long");
        return std::stoul(d);
    }

    void expect(char c) {
        skip_ws();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[nodiscard]] bool at_end() const { return pos_ >= s_.size(); }
    [[nodiscard]] char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                    ": " + what);
    }

    std::string s_;
    std::size_t pos_ = 0;
    int rows_;
    int cols_;
};

}  // namespace

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        std::string mono = format_monomial(t.monomial);
        if (mono.empty()) {
            out += c.get_str();
        } else if (c == 1) {
            out += mono;
        } else {
            out += c.get_str() + "*" + mono;
        }
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, int rows, int cols) {
    std::string s(text);
    const std::string minus = "\xE2\x88\x92";
    for (auto at = s.find(minus); at != std::string::npos; at = s.find(minus, at))
        s.replace(at, minus.size(), "-");
    return Parser(std::move(s), rows, cols).parse();
}

nlohmann::json matrix_to_json(const ExponentMatrix& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m.to_rows()) j.push_back(row);
    return j;
}

ExponentMatrix matrix_from_json(const nlohmann::json& j, int cols_hint) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
    std::vector<std::vector<ExponentMatrix::value_type>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be an array");
        std::vector<ExponentMatrix::value_type> row;
        for (const auto& v : r) {
            if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
                throw std::invalid_argument("matrix entries must be nonnegative integers");
            row.push_back(v.get<ExponentMatrix::value_type>());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) return {0, cols_hint < 0 ? 0 : cols_hint};
    return ExponentMatrix::from_rows(rows);
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms())
        terms.push_back({{"coeff", to_fraction_string(t.coeff)}, {"exp", matrix_to_json(t.monomial)}});
    return {{"dims", {p.rows(), p.cols()}}, {"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    const auto& dims = j.at("dims");
    int rows = dims.at(0).get<int>();
    int cols = dims.at(1).get<int>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
        ExponentMatrix e = matrix_from_json(t.at("exp"), cols);
        if (e.rows() != rows || e.cols() != cols)
            throw DimensionMismatch("term exponent does not match dims");
        terms.push_back({parse_rational(t.at("coeff").get<std::string>()), std::move(e)});
    }
    return Polynomial::from_terms(rows, cols, std::move(terms));
}

}  // namespace exring
