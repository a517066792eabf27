#include "exring/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace exring {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact division in closed-form count");
    return q;
}

void check_budget(const BigInt& count, std::uint64_t budget, const std::string& what) {
    if (count > BigInt(std::to_string(budget)))
        throw BudgetExceeded(what + " would produce " + count.get_str() + " objects (budget " +
                             std::to_string(budget) + "; raise with EXC_BUDGET)");
}

}  // namespace

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt narayana(long n, long r) {
    if (n < 1 || r < 1 || r > n) return 0;
    return exact_div(binomial(n, r) * binomial(n, r - 1), n);
}

BigInt catalan(long n) {
    if (n < 0) return 0;
    return exact_div(binomial(2 * n, n), n + 1);
}

BigInt macmahon_count(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box dimensions must be nonnegative");
    BigInt num = 1;
    BigInt den = 1;
    for (long i = 1; i <= c; ++i) {
        const long top = a + b + i - 1;
        num *= binomial(top, a + i - 1) * binomial(top, b + i - 1);
        den *= binomial(top, a) * binomial(b + i - 1, b);
    }
    return exact_div(num, den);
}

std::vector<PlanePartition> enumerate_pp(int a, int b, int c, std::uint64_t budget) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("box dimensions must be nonnegative");
    check_budget(macmahon_count(a, b, c), budget, "enumerate_pp");
    std::vector<PlanePartition> out;
    std::vector<int> cur(static_cast<std::size_t>(a) * b, 0);
    const std::size_t cells = cur.size();
    auto fill = [&](auto&& self, std::size_t pos) -> void {
        if (pos == cells) {
            out.emplace_back(a, b, cur, c);
            return;
        }
        const int i = static_cast<int>(pos) / b;
        const int j = static_cast<int>(pos) % b;
        int hi = c;
        if (i > 0) hi = std::min(hi, cur[pos - static_cast<std::size_t>(b)]);
        if (j > 0) hi = std::min(hi, cur[pos - 1]);
        for (int v = 0; v <= hi; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
        cur[pos] = 0;
    };
    fill(fill, 0);
    return out;
}

std::vector<DyckWord> enumerate_dyck(int n, int valleys, std::uint64_t budget) {
    if (n < 0 || valleys < 0) throw std::invalid_argument("negative Dyck parameters");
    std::vector<DyckWord> out;
    if (n == 0) {
        if (valleys == 0) out.emplace_back("");
        return out;
    }
    check_budget(narayana(n, valleys + 1), budget, "enumerate_dyck");
    std::string w;
    w.reserve(static_cast<std::size_t>(2 * n));
    auto build = [&](auto&& self, int ups, int downs, int seen) -> void {
        if (seen > valleys) return;
        if (ups == n && downs == n) {
            if (seen == valleys) out.emplace_back(w);
            return;
        }
        if (downs < ups) {
            w.push_back('d');
            self(self, ups, downs + 1, seen);
            w.pop_back();
        }
        if (ups < n) {
            int add = (!w.empty() && w.back() == 'd') ? 1 : 0;
            w.push_back('u');
            self(self, ups + 1, downs, seen + add);
            w.pop_back();
        }
    };
    build(build, 0, 0, 0);
    return out;
}

std::vector<DyckWord> dyck_set(int n, int r) {
    if (r < 1) return {};
    return enumerate_dyck(n, r - 1);
}

}  // namespace exring
