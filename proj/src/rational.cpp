#include "exring/rational.hpp"

#include <stdexcept>

namespace exring {

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.front() == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational: " + std::string(text));
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(BigInt(num), d);
    q.canonicalize();
    return q;
}

}  // namespace exring
