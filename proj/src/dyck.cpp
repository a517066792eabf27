#include "exring/dyck.hpp"

#include <stdexcept>

namespace exring {

bool is_dyck_word(std::string_view letters) {
    if (letters.size() % 2 != 0) return false;
    long height = 0;
    for (char c : letters) {
        if (c == 'u') {
            ++height;
        } else if (c == 'd') {
            if (--height < 0) return false;
        } else {
            return false;
        }
    }
    return height == 0;
}

DyckWord::DyckWord(std::string letters) : letters_(std::move(letters)) {
    if (!is_dyck_word(letters_)) throw std::invalid_argument("not a Dyck word: " + letters_);
}

int DyckWord::valley_count() const {
    int v = 0;
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
        if (letters_[i] == 'd' && letters_[i + 1] == 'u') ++v;
    return v;
}

DyckStats dyck_stats(const DyckWord& w) {
    const std::string& s = w.str();
    const int n = static_cast<int>(s.size());
    DyckStats st;
    std::vector<bool> in_valley(s.size(), false);
    for (int i = 0; i + 1 < n; ++i) {
        if (s[i] == 'd' && s[i + 1] == 'u') {
            st.valleys.push_back(i);
            in_valley[i] = in_valley[i + 1] = true;
        }
    }
    for (int i = 1; i + 1 < n; ++i)
        if (!in_valley[i]) st.central.push_back(i);

    std::size_t c = 0;
    int ups = 0;
    int downs = 0;
    auto count_until = [&](int limit) {
        for (; c < st.central.size() && st.central[c] < limit; ++c)
            (s[st.central[c]] == 'u' ? ups : downs)++;
    };
    for (int v : st.valleys) {
        count_until(v);
        st.up.push_back(ups);
        st.down.push_back(downs);
    }
    count_until(n);
    st.up.push_back(ups);
    st.down.push_back(downs);
    return st;
}

PlanePartition dyck_to_pp(const DyckWord& w, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("require 0 <= k <= m");
    if (w.length() != static_cast<std::size_t>(2 * m + 2))
        throw std::invalid_argument("Dyck word length must be 2m+2 = " + std::to_string(2 * m + 2));
    DyckStats st = dyck_stats(w);
    if (static_cast<int>(st.valleys.size()) != k)
        throw std::invalid_argument("Dyck word must have exactly k = " + std::to_string(k) + " valleys");
    const int n = m - k;
    std::vector<int> e(static_cast<std::size_t>(k) * n, 0);
    for (int i = 1; i <= k; ++i) {
        // up_{k+1-i} and down_{k+1-i}, stored 0-based.
        const int up = st.up[static_cast<std::size_t>(k - i)];
        const int down = st.down[static_cast<std::size_t>(k - i)];
        for (int j = 1; j <= n; ++j) {
            int v = down >= j ? 2 : (up >= j ? 1 : 0);
            e[static_cast<std::size_t>((i - 1) * n + (j - 1))] = v;
        }
    }
    return {k, n, std::move(e), 2};
}

DyckWord dyck_from_counts(const std::vector<int>& up, const std::vector<int>& down, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("require 0 <= k <= m");
    if (up.size() != static_cast<std::size_t>(k) || down.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("count sequences must have length k");
    const int n = m - k;
    std::string w = "u";
    int prev_up = 0;
    int prev_down = 0;
    for (int i = 0; i <= k; ++i) {
        int a = i < k ? up[static_cast<std::size_t>(i)] : n;
        int b = i < k ? down[static_cast<std::size_t>(i)] : n;
        if (a < prev_up || b < prev_down || a < b || a > n)
            throw std::invalid_argument("count sequences violate monotonicity or ballot bounds");
        w.append(static_cast<std::size_t>(a - prev_up), 'u');
        w.append(static_cast<std::size_t>(b - prev_down), 'd');
        if (i < k) w += "du";
        prev_up = a;
        prev_down = b;
    }
    w += "d";
    return DyckWord(std::move(w));
}

DyckWord pp_to_dyck(const PlanePartition& bpp, int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("require 0 <= k <= m");
    const int n = m - k;
    if (bpp.rows() != k || bpp.cols() != n)
        throw std::invalid_argument("plane partition must be " + std::to_string(k) + "x" + std::to_string(n));
    if (bpp.max_entry() > 2) throw std::invalid_argument("plane partition entry exceeds 2");

    // twos[i]: largest column holding a 2 (c_i); nonzero[i]: number of
    // nonzero entries (c'_i). Rows are weakly decreasing so both are counts.
    std::vector<int> twos(static_cast<std::size_t>(k), 0);
    std::vector<int> nonzero(static_cast<std::size_t>(k), 0);
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (bpp.at(i, j) == 2) twos[static_cast<std::size_t>(i - 1)] = j;
            if (bpp.at(i, j) > 0) nonzero[static_cast<std::size_t>(i - 1)] = j;
        }
    }
    std::vector<int> up(static_cast<std::size_t>(k));
    std::vector<int> down(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        up[static_cast<std::size_t>(i - 1)] = nonzero[static_cast<std::size_t>(k - i)];
        down[static_cast<std::size_t>(i - 1)] = twos[static_cast<std::size_t>(k - i)];
    }
    return dyck_from_counts(up, down, m, k);
}

}  // namespace exring
