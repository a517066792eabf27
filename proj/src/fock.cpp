#include "exring/fock.hpp"

#include "exring/enumeration.hpp"
#include "exring/ideal.hpp"
#include "exring/stdmono.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace exring {

namespace {

std::uint64_t bit(int index) { return std::uint64_t{1} << index; }

std::uint64_t below(int index) { return bit(index) - 1; }

int parity_sign(std::uint64_t mask) { return std::popcount(mask) % 2 == 0 ? 1 : -1; }

void check_m(int m) {
    if (m < 0 || m > kMaxOrbitals)
        throw std::invalid_argument("number of spatial orbitals must be in [0," +
                                    std::to_string(kMaxOrbitals) + "]");
}

void check_orbital(const SpinOrbital& o, int m) {
    if (o.position < 1 || o.position > m)
        throw std::invalid_argument("orbital position " + std::to_string(o.position) + " outside [1," +
                                    std::to_string(m) + "]");
}

void check_mk(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("require 0 <= k <= m");
}

std::string orbital_name(int index) {
    SpinOrbital o = SpinOrbital::from_index(index);
    return std::to_string(o.position) + (o.spin == Spin::up ? "u" : "d");
}

}  // namespace

SpinOrbital SpinOrbital::from_index(int index) {
    if (index < 0) throw std::invalid_argument("negative orbital index");
    return {index / 2 + 1, index % 2 == 1 ? Spin::up : Spin::down};
}

SlaterBasisVector SlaterBasisVector::from_orbitals(const std::vector<SpinOrbital>& orbitals) {
    std::uint64_t mask = 0;
    int prev = -1;
    for (const auto& o : orbitals) {
        if (o.position < 1 || o.position > kMaxOrbitals) throw std::invalid_argument("orbital position out of range");
        int idx = o.index();
        if (idx <= prev) throw std::invalid_argument("orbitals must be strictly increasing");
        prev = idx;
        mask |= bit(idx);
    }
    return SlaterBasisVector(mask);
}

int SlaterBasisVector::degree() const { return std::popcount(mask_); }

std::vector<SpinOrbital> SlaterBasisVector::orbitals() const {
    std::vector<SpinOrbital> out;
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(SpinOrbital::from_index(std::countr_zero(m)));
    return out;
}

StateVector::StateVector(int m, int d) : m_(m), d_(d) { check_m(m); }

StateVector StateVector::basis(int m, const SlaterBasisVector& e, const Rational& c) {
    StateVector v(m, e.degree());
    if (e.mask() >> (2 * m)) throw std::invalid_argument("basis vector uses orbitals beyond m");
    v.add(e.mask(), c);
    return v;
}

Rational StateVector::coefficient(const SlaterBasisVector& e) const {
    auto it = amps_.find(e.mask());
    return it == amps_.end() ? Rational(0) : it->second;
}

void StateVector::add(std::uint64_t mask, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = amps_.try_emplace(mask, 0);
    it->second += c;
    if (it->second == 0) amps_.erase(it);
}

StateVector StateVector::operator+(const StateVector& o) const {
    if (m_ != o.m_ || d_ != o.d_) throw std::invalid_argument("states from different Fock spaces");
    StateVector r = *this;
    for (const auto& [mask, c] : o.amps_) r.add(mask, c);
    return r;
}

StateVector StateVector::operator-(const StateVector& o) const { return *this + o.scale(-1); }

StateVector StateVector::scale(const Rational& c) const {
    StateVector r(m_, d_);
    if (c == 0) return r;
    for (const auto& [mask, v] : amps_) r.amps_.emplace(mask, v * c);
    return r;
}

LinearOperator::LinearOperator(int m, int in_degree, int out_degree) : m_(m), in_(in_degree), out_(out_degree) {
    check_m(m);
}

LinearOperator LinearOperator::identity(int m, int d) {
    LinearOperator id(m, d, d);
    for (const auto& e : slater_basis(m, d)) id.add_entry(e.mask(), e.mask(), 1);
    return id;
}

std::size_t LinearOperator::nonzeros() const {
    std::size_t n = 0;
    for (const auto& [in, col] : cols_) n += col.size();
    return n;
}

void LinearOperator::add_entry(std::uint64_t out_mask, std::uint64_t in_mask, const Rational& c) {
    if (c == 0) return;
    auto& col = cols_[in_mask];
    auto [it, inserted] = col.try_emplace(out_mask, 0);
    it->second += c;
    if (it->second == 0) col.erase(it);
    if (col.empty()) cols_.erase(in_mask);
}

StateVector LinearOperator::apply(const StateVector& v) const {
    if (v.m() != m_ || v.d() != in_) throw std::invalid_argument("state does not lie in the operator domain");
    StateVector r(m_, out_);
    for (const auto& [in_mask, c] : v.amplitudes()) {
        auto col = cols_.find(in_mask);
        if (col == cols_.end()) continue;
        for (const auto& [out_mask, a] : col->second) r.add(out_mask, a * c);
    }
    return r;
}

LinearOperator LinearOperator::operator+(const LinearOperator& o) const {
    if (m_ != o.m_ || in_ != o.in_ || out_ != o.out_) throw std::invalid_argument("operator shapes differ");
    LinearOperator r = *this;
    for (const auto& [in_mask, col] : o.cols_)
        for (const auto& [out_mask, c] : col) r.add_entry(out_mask, in_mask, c);
    return r;
}

LinearOperator LinearOperator::operator-(const LinearOperator& o) const { return *this + o.scale(-1); }

LinearOperator LinearOperator::operator*(const LinearOperator& o) const {
    if (m_ != o.m_ || in_ != o.out_) throw std::invalid_argument("operators are not composable");
    LinearOperator r(m_, o.in_, out_);
    for (const auto& [in_mask, col] : o.cols_) {
        for (const auto& [mid, c] : col) {
            auto next = cols_.find(mid);
            if (next == cols_.end()) continue;
            for (const auto& [out_mask, a] : next->second) r.add_entry(out_mask, in_mask, a * c);
        }
    }
    return r;
}

LinearOperator LinearOperator::scale(const Rational& c) const {
    LinearOperator r(m_, in_, out_);
    if (c == 0) return r;
    r.cols_ = cols_;
    for (auto& [in_mask, col] : r.cols_)
        for (auto& [out_mask, v] : col) v *= c;
    return r;
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) { return a * b - b * a; }

LinearOperator anticommutator(const LinearOperator& a, const LinearOperator& b) { return a * b + b * a; }

void check_fock_budget(int m, int d, std::uint64_t budget) {
    check_m(m);
    BigInt size = binomial(2 * m, d);
    if (size > BigInt(std::to_string(budget)))
        throw BudgetExceeded("H_{" + std::to_string(m) + "," + std::to_string(d) + "} has " + size.get_str() +
                             " basis vectors (budget " + std::to_string(budget) + "; raise with EXC_BUDGET)");
}

std::vector<SlaterBasisVector> slater_basis(int m, int d) {
    check_fock_budget(m, d);
    std::vector<SlaterBasisVector> out;
    const int n = 2 * m;
    if (d < 0 || d > n) return out;
    auto choose = [&](auto&& self, int start, int left, std::uint64_t mask) -> void {
        if (left == 0) {
            out.emplace_back(mask);
            return;
        }
        for (int o = start; o <= n - left; ++o) self(self, o + 1, left - 1, mask | bit(o));
    };
    choose(choose, 0, d, 0);
    return out;
}

LinearOperator creation(const SpinOrbital& b, int m, int d) {
    check_orbital(b, m);
    LinearOperator op(m, d, d + 1);
    const int idx = b.index();
    for (const auto& e : slater_basis(m, d)) {
        if (e.contains(b)) continue;
        op.add_entry(e.mask() | bit(idx), e.mask(), parity_sign(e.mask() & below(idx)));
    }
    return op;
}

LinearOperator annihilation(const SpinOrbital& i, int m, int d) {
    check_orbital(i, m);
    LinearOperator op(m, d, d - 1);
    const int idx = i.index();
    for (const auto& e : slater_basis(m, d)) {
        if (!e.contains(i)) continue;
        op.add_entry(e.mask() ^ bit(idx), e.mask(), parity_sign(e.mask() & below(idx)));
    }
    return op;
}

std::string to_string(Sl2Generator g) {
    switch (g) {
        case Sl2Generator::S_plus: return "S+";
        case Sl2Generator::S_minus: return "S-";
        case Sl2Generator::S_z: return "Sz";
    }
    return "?";
}

namespace {

struct SpinImage {
    int coeff;
    Spin spin;
};

// g e_alpha in the {e_up, e_down} basis, with e_up = e_1 and e_down = -e_2.
std::vector<SpinImage> spin_action(Sl2Generator g, Spin alpha) {
    int g11 = 0, g12 = 0, g21 = 0, g22 = 0;
    switch (g) {
        case Sl2Generator::S_plus: g12 = 1; break;
        case Sl2Generator::S_minus: g21 = 1; break;
        case Sl2Generator::S_z: g11 = 1; g22 = -1; break;
    }
    // g e_1 = g11 e_1 + g21 e_2 = g11 e_up - g21 e_down
    // g(-e_2) = -g12 e_1 - g22 e_2 = -g12 e_up + g22 e_down
    int to_up = alpha == Spin::up ? g11 : -g12;
    int to_down = alpha == Spin::up ? -g21 : g22;
    std::vector<SpinImage> out;
    if (to_up != 0) out.push_back({to_up, Spin::up});
    if (to_down != 0) out.push_back({to_down, Spin::down});
    return out;
}

// Sign of the permutation sorting `seq` (distinct entries).
int sort_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t a = 0; a < seq.size(); ++a)
        for (std::size_t b = a + 1; b < seq.size(); ++b)
            if (seq[a] > seq[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

LinearOperator sl2_action(Sl2Generator g, int m, int d) {
    LinearOperator op(m, d, d);
    for (const auto& e : slater_basis(m, d)) {
        std::vector<int> seq;
        for (const auto& o : e.orbitals()) seq.push_back(o.index());
        for (std::size_t j = 0; j < seq.size(); ++j) {
            SpinOrbital o = SpinOrbital::from_index(seq[j]);
            for (const auto& img : spin_action(g, o.spin)) {
                SpinOrbital repl{o.position, img.spin};
                int r = repl.index();
                if (r != seq[j] && (e.mask() & bit(r))) continue;  // repeated factor
                std::vector<int> wedge = seq;
                wedge[j] = r;
                std::uint64_t out = (e.mask() & ~bit(seq[j])) | bit(r);
                op.add_entry(out, e.mask(), img.coeff * sort_sign(wedge));
            }
        }
    }
    return op;
}

std::map<std::uint64_t, std::size_t> slater_index(int m, int d) {
    std::map<std::uint64_t, std::size_t> idx;
    auto basis = slater_basis(m, d);
    for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].mask(), i);
    return idx;
}

namespace {

SparseRow to_row(const StateVector& v, const std::map<std::uint64_t, std::size_t>& index) {
    SparseRow row;
    for (const auto& [mask, c] : v.amplitudes()) row.emplace(index.at(mask), c);
    return row;
}

}  // namespace

std::vector<StateVector> invariant_subspace(int m, int d) {
    auto basis = slater_basis(m, d);
    auto index = slater_index(m, d);
    SparseEchelon ech(basis.size());
    for (auto g : {Sl2Generator::S_plus, Sl2Generator::S_minus, Sl2Generator::S_z}) {
        std::map<std::uint64_t, SparseRow> rows;
        LinearOperator op = sl2_action(g, m, d);
        for (const auto& [in_mask, col] : op.columns())
            for (const auto& [out_mask, c] : col) rows[out_mask].emplace(index.at(in_mask), c);
        for (auto& [out_mask, row] : rows) ech.add_row(std::move(row));
    }
    std::vector<StateVector> out;
    for (const auto& kv : ech.kernel_basis()) {
        StateVector v(m, d);
        for (const auto& [col, c] : kv) v.add(basis[col].mask(), c);
        out.push_back(std::move(v));
    }
    return out;
}

LinearOperator excitation_operator(int i, int j, int m, int k) {
    check_mk(m, k);
    if (i < 1 || i > k || j < 1 || j > m - k)
        throw std::invalid_argument("excitation index (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") outside [1," + std::to_string(k) + "]x[1," + std::to_string(m - k) + "]");
    const int d = 2 * k;
    LinearOperator x(m, d, d);
    for (Spin s : {Spin::down, Spin::up})
        x = x + creation({j + k, s}, m, d - 1) * annihilation({i, s}, m, d);
    return x;
}

StateVector reference_state(int m, int k) {
    check_mk(m, k);
    check_fock_budget(m, 2 * k);
    return StateVector::basis(m, SlaterBasisVector(below(2 * k)));
}

StateVector apply_excitation_monomial(const ExponentMatrix& monomial, int m, int k) {
    check_mk(m, k);
    if (monomial.rows() != k || monomial.cols() != m - k)
        throw DimensionMismatch("monomial is not over the " + std::to_string(k) + "x" + std::to_string(m - k) +
                                " excitation variables");
    StateVector v = reference_state(m, k);
    for (int i = 1; i <= k && !v.is_zero(); ++i) {
        for (int j = 1; j <= m - k; ++j) {
            auto e = monomial.at(i, j);
            if (e == 0) continue;
            LinearOperator x = excitation_operator(i, j, m, k);
            for (ExponentMatrix::value_type t = 0; t < e && !v.is_zero(); ++t) v = x.apply(v);
        }
    }
    return v;
}

CubicRelationReport verify_cubic_relations(int m, int k) {
    IdealPresentation pres = generators(m, k);
    const int d = 2 * k;
    check_fock_budget(m, d);
    const int cols = m - k;
    std::vector<LinearOperator> xs;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= cols; ++j) xs.push_back(excitation_operator(i, j, m, k));

    CubicRelationReport rep{m, k, pres.generators.size(), {}};
    for (const auto& gen : pres.generators) {
        LinearOperator total(m, d, d);
        for (const auto& term : gen.poly.terms()) {
            LinearOperator prod = LinearOperator::identity(m, d);
            for (std::size_t v = 0; v < term.monomial.size(); ++v)
                for (ExponentMatrix::value_type e = 0; e < term.monomial[v]; ++e) prod = xs[v] * prod;
            total = total + prod.scale(term.coeff);
        }
        if (!total.is_zero()) rep.failures.push_back(to_string(gen.label));
    }
    return rep;
}

IdentityReport verify_anticommutation(int m) {
    check_m(m);
    IdentityReport rep;
    const int n = 2 * m;
    for (int d = 0; d <= n; ++d) {
        std::vector<LinearOperator> ann_d, ann_up, cre_d, cre_down;
        for (int x = 0; x < n; ++x) {
            SpinOrbital o = SpinOrbital::from_index(x);
            ann_d.push_back(annihilation(o, m, d));        // d -> d-1
            ann_up.push_back(annihilation(o, m, d + 1));   // d+1 -> d
            cre_d.push_back(creation(o, m, d));            // d -> d+1
            cre_down.push_back(creation(o, m, d - 1));     // d-1 -> d
        }
        LinearOperator id = LinearOperator::identity(m, d);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                auto label = [&](const char* kind) {
                    return std::string(kind) + "(" + orbital_name(x) + "," + orbital_name(y) + ") at d=" +
                           std::to_string(d);
                };
                // {a_x, a_y}: d -> d-2
                if (d >= 2) {
                    LinearOperator lhs = annihilation(SpinOrbital::from_index(x), m, d - 1) * ann_d[y] +
                                         annihilation(SpinOrbital::from_index(y), m, d - 1) * ann_d[x];
                    ++rep.checked;
                    if (!lhs.is_zero()) rep.failures.push_back(label("{a,a}"));
                }
                // {a+_x, a+_y}: d -> d+2
                if (d + 2 <= n) {
                    LinearOperator lhs = creation(SpinOrbital::from_index(x), m, d + 1) * cre_d[y] +
                                         creation(SpinOrbital::from_index(y), m, d + 1) * cre_d[x];
                    ++rep.checked;
                    if (!lhs.is_zero()) rep.failures.push_back(label("{a+,a+}"));
                }
                // {a+_x, a_y} = delta_xy on H_{m,d}
                LinearOperator lhs = cre_down[x] * ann_d[y] + ann_up[y] * cre_d[x];
                ++rep.checked;
                bool ok = x == y ? lhs == id : lhs.is_zero();
                if (!ok) rep.failures.push_back(label("{a+,a}"));
            }
        }
    }
    return rep;
}

IdentityReport verify_sl2_relations(int m, int d) {
    LinearOperator sp = sl2_action(Sl2Generator::S_plus, m, d);
    LinearOperator sm = sl2_action(Sl2Generator::S_minus, m, d);
    LinearOperator sz = sl2_action(Sl2Generator::S_z, m, d);
    IdentityReport rep;
    auto check = [&](bool ok, const char* what) {
        ++rep.checked;
        if (!ok) rep.failures.push_back(what);
    };
    check(commutator(sz, sp) == sp.scale(2), "[Sz,S+] = 2S+");
    check(commutator(sz, sm) == sm.scale(-2), "[Sz,S-] = -2S-");
    check(commutator(sp, sm) == sz, "[S+,S-] = Sz");
    return rep;
}

IdentityReport verify_excitation_commutators(int m, int k) {
    check_mk(m, k);
    const int d = 2 * k;
    check_fock_budget(m, d);
    const int cols = m - k;
    std::vector<LinearOperator> xs;
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= cols; ++j) {
            xs.push_back(excitation_operator(i, j, m, k));
            names.push_back("X[" + std::to_string(i) + "," + std::to_string(j) + "]");
        }
    }
    IdentityReport rep;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = a + 1; b < xs.size(); ++b) {
            ++rep.checked;
            if (!commutator(xs[a], xs[b]).is_zero())
                rep.failures.push_back("[" + names[a] + "," + names[b] + "]");
        }
    }
    for (auto g : {Sl2Generator::S_plus, Sl2Generator::S_minus, Sl2Generator::S_z}) {
        LinearOperator s = sl2_action(g, m, d);
        for (std::size_t a = 0; a < xs.size(); ++a) {
            ++rep.checked;
            if (!commutator(s, xs[a]).is_zero()) rep.failures.push_back("[" + to_string(g) + "," + names[a] + "]");
        }
    }
    return rep;
}

ExcitationBasisReport analyze_excitation_basis(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("require 1 <= k <= m");
    const int d = 2 * k;
    check_fock_budget(m, d);
    ExcitationBasisReport rep;
    rep.monomials = enumerate_standard(m, k);
    for (const auto& mono : rep.monomials) rep.vectors.push_back(apply_excitation_monomial(mono, m, k));

    std::vector<LinearOperator> sl2;
    for (auto g : {Sl2Generator::S_plus, Sl2Generator::S_minus, Sl2Generator::S_z}) sl2.push_back(sl2_action(g, m, d));
    for (const auto& v : rep.vectors)
        for (const auto& s : sl2)
            if (!s.apply(v).is_zero()) rep.all_invariant = false;

    auto index = slater_index(m, d);
    SparseEchelon ech(index.size());
    for (const auto& v : rep.vectors) ech.add_row(to_row(v, index));
    rep.rank = ech.rank();
    auto kernel = invariant_subspace(m, d);
    rep.invariant_dimension = kernel.size();
    for (const auto& v : kernel) ech.add_row(to_row(v, index));
    rep.joint_rank = ech.rank();
    return rep;
}

std::vector<StateVector> excitation_basis(int m, int k) {
    ExcitationBasisReport rep = analyze_excitation_basis(m, k);
    if (!rep.is_basis())
        throw std::logic_error("excitation vectors are not a basis of the invariant subspace (rank " +
                               std::to_string(rep.rank) + ", invariant dimension " +
                               std::to_string(rep.invariant_dimension) + ")");
    return std::move(rep.vectors);
}

SlaterBasisVector particle_hole(const SlaterBasisVector& e, int m) {
    check_m(m);
    const std::uint64_t full = m == kMaxOrbitals ? ~std::uint64_t{0} : bit(2 * m) - 1;
    if (e.mask() & ~full) throw std::invalid_argument("basis vector uses orbitals beyond m");
    return SlaterBasisVector(e.mask() ^ full);
}

std::vector<std::size_t> particle_hole(int m, int d) {
    auto target = slater_index(m, 2 * m - d);
    std::vector<std::size_t> out;
    for (const auto& e : slater_basis(m, d)) out.push_back(target.at(particle_hole(e, m).mask()));
    return out;
}

std::vector<SlaterBasisVector> support(const std::vector<StateVector>& space) {
    std::map<std::uint64_t, bool, SlaterLess> seen;
    for (const auto& v : space)
        for (const auto& [mask, c] : v.amplitudes()) seen.emplace(mask, true);
    std::vector<SlaterBasisVector> out;
    for (const auto& [mask, flag] : seen) out.emplace_back(mask);
    return out;
}

}  // namespace exring
