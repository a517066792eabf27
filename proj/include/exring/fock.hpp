#pragma once

#include "exring/budget.hpp"
#include "exring/exponent_matrix.hpp"
#include "exring/linalg.hpp"
#include "exring/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace exring {

enum class Spin { down, up };

/// Spin orbital e_{i,alpha}. The global order is
/// (1,down) < (1,up) < (2,down) < (2,up) < ... and fixes every wedge sign.
struct SpinOrbital {
    int position = 1;  // 1-based spatial orbital
    Spin spin = Spin::down;

    /// 0-based rank in the global order.
    [[nodiscard]] int index() const { return 2 * (position - 1) + (spin == Spin::up ? 1 : 0); }
    static SpinOrbital from_index(int index);

    auto operator<=>(const SpinOrbital& o) const { return index() <=> o.index(); }
    bool operator==(const SpinOrbital& o) const { return index() == o.index(); }
};

/// Largest supported number of spatial orbitals (orbitals are bits of a
/// 64-bit mask).
inline constexpr int kMaxOrbitals = 32;

/// Wedge of distinct spin orbitals in increasing global order, stored as a
/// bitmask over orbital indices.
class SlaterBasisVector {
public:
    SlaterBasisVector() = default;
    explicit SlaterBasisVector(std::uint64_t mask) : mask_(mask) {}
    /// Throws std::invalid_argument unless the list is strictly increasing.
    static SlaterBasisVector from_orbitals(const std::vector<SpinOrbital>& orbitals);

    [[nodiscard]] std::uint64_t mask() const { return mask_; }
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool contains(const SpinOrbital& o) const { return (mask_ >> o.index()) & 1u; }
    [[nodiscard]] std::vector<SpinOrbital> orbitals() const;

    bool operator==(const SlaterBasisVector&) const = default;

private:
    std::uint64_t mask_ = 0;
};

/// Lexicographic order on the sorted orbital lists of equal-degree wedges.
struct SlaterLess {
    bool operator()(std::uint64_t a, std::uint64_t b) const {
        if (a == b) return false;
        std::uint64_t diff = a ^ b;
        return (a & (diff & (~diff + 1))) != 0;
    }
};

using Amplitudes = std::map<std::uint64_t, Rational, SlaterLess>;

/// Sparse vector in H_{m,d} = wedge^d (C^m (x) C^2).
class StateVector {
public:
    StateVector() = default;
    StateVector(int m, int d);
    static StateVector basis(int m, const SlaterBasisVector& e, const Rational& c = 1);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const Amplitudes& amplitudes() const { return amps_; }
    [[nodiscard]] bool is_zero() const { return amps_.empty(); }
    [[nodiscard]] Rational coefficient(const SlaterBasisVector& e) const;

    /// Adds c to the coefficient of e, dropping it if it becomes zero.
    void add(std::uint64_t mask, const Rational& c);

    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    [[nodiscard]] StateVector scale(const Rational& c) const;

    bool operator==(const StateVector&) const = default;

private:
    int m_ = 0;
    int d_ = 0;
    Amplitudes amps_;
};

/// Sparse exact matrix from H_{m,in_degree} to H_{m,out_degree}, stored by
/// column (input basis vector -> image).
class LinearOperator {
public:
    LinearOperator() = default;
    LinearOperator(int m, int in_degree, int out_degree);
    static LinearOperator identity(int m, int d);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int in_degree() const { return in_; }
    [[nodiscard]] int out_degree() const { return out_; }
    [[nodiscard]] const std::map<std::uint64_t, Amplitudes, SlaterLess>& columns() const { return cols_; }
    [[nodiscard]] bool is_zero() const { return cols_.empty(); }
    [[nodiscard]] std::size_t nonzeros() const;

    void add_entry(std::uint64_t out_mask, std::uint64_t in_mask, const Rational& c);
    [[nodiscard]] StateVector apply(const StateVector& v) const;

    LinearOperator operator+(const LinearOperator& o) const;
    LinearOperator operator-(const LinearOperator& o) const;
    /// Composition: (*this) after o.
    LinearOperator operator*(const LinearOperator& o) const;
    [[nodiscard]] LinearOperator scale(const Rational& c) const;

    bool operator==(const LinearOperator&) const = default;

private:
    int m_ = 0;
    int in_ = 0;
    int out_ = 0;
    std::map<std::uint64_t, Amplitudes, SlaterLess> cols_;
};

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);
LinearOperator anticommutator(const LinearOperator& a, const LinearOperator& b);

/// Throws BudgetExceeded if C(2m, d) is over `budget`, std::invalid_argument
/// for an invalid (m, d).
void check_fock_budget(int m, int d, std::uint64_t budget = budget_from_env(kDefaultFockBudget));

/// All C(2m, d) wedges, lexicographic on their sorted orbital lists.
std::vector<SlaterBasisVector> slater_basis(int m, int d);

/// psi -> e_b wedge psi, from H_{m,d} to H_{m,d+1}.
LinearOperator creation(const SpinOrbital& b, int m, int d);
/// psi -> e_i contracted into psi, from H_{m,d} to H_{m,d-1}.
LinearOperator annihilation(const SpinOrbital& i, int m, int d);

enum class Sl2Generator { S_plus, S_minus, S_z };
std::string to_string(Sl2Generator g);

/// Leibniz-rule action on H_{m,d} induced by the 2x2 matrices
/// S+ = [[0,1],[0,0]], S- = [[0,0],[1,0]], Sz = [[1,0],[0,-1]] acting on the
/// spin space with e_up = e_1 and e_down = -e_2.
LinearOperator sl2_action(Sl2Generator g, int m, int d);

/// Exact basis of the common kernel of S+, S-, Sz on H_{m,d}, as the
/// reduced-echelon kernel basis of the stacked matrix.
std::vector<StateVector> invariant_subspace(int m, int d);

/// X_{i,j} = a+_{(j+k),down} a_{i,down} + a+_{(j+k),up} a_{i,up} on H_{m,2k}.
LinearOperator excitation_operator(int i, int j, int m, int k);

/// e_{1,down} ^ e_{1,up} ^ ... ^ e_{k,down} ^ e_{k,up}.
StateVector reference_state(int m, int k);

/// (prod X_{i,j}^{M_{i,j}}) applied to the reference state of H_{m,2k}.
StateVector apply_excitation_monomial(const ExponentMatrix& monomial, int m, int k);

struct CubicRelationReport {
    int m = 0;
    int k = 0;
    std::size_t relations = 0;
    std::vector<std::string> failures;  // generator labels whose operator is nonzero
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Evaluates every generator f of I_{m,k} at the excitation operators and
/// checks f(X) = 0 as a matrix on H_{m,2k}.
CubicRelationReport verify_cubic_relations(int m, int k);

struct IdentityReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// {a_x, a_y} = 0, {a+_x, a+_y} = 0 and {a+_x, a_y} = delta_{xy} on every
/// degree of the exterior algebra over m spatial orbitals.
IdentityReport verify_anticommutation(int m);

/// [Sz, S+] = 2 S+, [Sz, S-] = -2 S-, [S+, S-] = Sz on H_{m,d}.
IdentityReport verify_sl2_relations(int m, int d);

/// [X_{i,j}, X_{i',j'}] = 0 and [g, X_{i,j}] = 0 for g in sl2, on H_{m,2k}.
IdentityReport verify_excitation_commutators(int m, int k);

struct ExcitationBasisReport {
    std::vector<ExponentMatrix> monomials;  // standard monomials of S_{m,k}
    std::vector<StateVector> vectors;       // monomial(X) applied to the reference state
    std::size_t invariant_dimension = 0;
    std::size_t rank = 0;                   // rank of `vectors`
    std::size_t joint_rank = 0;             // rank of vectors together with the kernel basis
    bool all_invariant = true;
    [[nodiscard]] bool is_basis() const {
        return all_invariant && rank == vectors.size() && rank == invariant_dimension &&
               joint_rank == invariant_dimension;
    }
};

/// Builds the vectors for every standard monomial and checks that they are
/// invariant, independent and span the invariant subspace of H_{m,2k}.
ExcitationBasisReport analyze_excitation_basis(int m, int k);

/// The vectors of analyze_excitation_basis. Throws std::logic_error if they
/// fail to be an invariant basis.
std::vector<StateVector> excitation_basis(int m, int k);

/// Complement of the up-set and the down-set separately, i.e. the complement
/// of the whole orbital set.
SlaterBasisVector particle_hole(const SlaterBasisVector& e, int m);

/// Index map slater_basis(m, d) -> slater_basis(m, 2m - d).
std::vector<std::size_t> particle_hole(int m, int d);

/// Basis vectors carrying a nonzero coefficient in some vector of `space`,
/// in Slater order.
std::vector<SlaterBasisVector> support(const std::vector<StateVector>& space);

/// Position of each basis vector of H_{m,d}, for packing states into rows.
std::map<std::uint64_t, std::size_t> slater_index(int m, int d);

}  // namespace exring
