#pragma once

#include <memory>

#include "negk/chartab.hpp"
#include "negk/rank.hpp"
#include "negk/subgroup.hpp"

namespace negk {

struct UnsupportedGroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (H, K) with K normal in H, H/K cyclic, H normal in N_G(K), H/K maximal
// abelian in N_G(K)/K, and orthogonal G-conjugates of the epsilon idempotent.
struct StrongShodaPair {
    std::vector<int> h;
    std::vector<int> k;
    long quotient_order = 1;   // [H : K]
    int generator = 0;         // element of H whose coset generates H/K
    int rc_index = -1;         // rational character class it induces to
};

enum class Provenance { StrongShoda, BrauerWitt2, QuaternionShortcut };

// Crossed product Q(zeta_k) * W with root-of-unity cocycle. Roots of unity
// +-zeta_k^j are tracked as exponents modulo root_modulus (= lcm(2, k) style:
// k for even k, 2k for odd k).
struct CyclotomicAlgebra {
    long conductor = 1;                  // k
    long root_modulus = 2;               // K
    std::vector<long> w;                 // acting residues, sorted subgroup of (Z/k)^x
    std::vector<long> action;            // action[i] = w[i] (galois exponent), kept explicit
    std::vector<std::vector<long>> tau;  // tau[i][j]: cocycle exponent mod root_modulus
    long matrix_size = 1;                // [G : N]

    int w_index(long t) const;
    long w_mul(long a, long b) const { return (a * b) % conductor; }
};

inline constexpr long kInfinitePlace = -1;

struct SchurData {
    std::vector<std::pair<long, long>> local;  // (place, index); place -1 is infinity
    long global = 1;
    bool parity_only = false;  // true for brauer-witt-2 provenance (2-parts contractual)

    long index_at(long place) const;
};

struct SimpleComponentDesc {
    int rc_index = -1;
    long degree = 1;
    long orbit_size = 1;          // = [center : Q]
    long center_conductor = 1;    // center = fixed field of `center_fix` in Q(zeta_conductor)
    std::vector<long> center_fix; // = alg.w for strong Shoda provenance
    Provenance provenance = Provenance::StrongShoda;
    CyclotomicAlgebra alg;        // meaningful for strong-shoda provenance
    int fs = 0;                   // Frobenius-Schur indicator of the class
    SchurData bw_data;            // transported indices when provenance is BrauerWitt2
};

struct ComponentReport {
    SimpleComponentDesc desc;
    SchurData sd;
    bool contributes = false;
};

struct SOfGroupResult {
    long s = 0;
    std::vector<ComponentReport> components;  // one per rational character class
};

struct KMinusOneResult {
    long r = 0;
    long s = 0;
    RankBreakdown rank;
    std::vector<ComponentReport> components;
};

// Shared per-group context so the table, subgroup lattice and components are
// computed once.
class SchurEngine {
public:
    explicit SchurEngine(FiniteGroup g);

    const FiniteGroup& group() const { return g_; }
    const CharacterTable& table();
    const std::vector<RationalCharClass>& rational_classes();
    const std::vector<std::vector<int>>& subgroups();

    // Strong Shoda pair matched to the class, if the class is strongly monomial.
    const StrongShodaPair* shoda_pair_for(int rc_index);
    SimpleComponentDesc component_for_class(int rc_index);
    SchurData local_indices(const SimpleComponentDesc& comp);
    // 2-elementary descent: parity-exact component data for classes without a
    // strong Shoda pair (and fallback for unsupported local shapes).
    SimpleComponentDesc brauer_witt_2_reduction(int rc_index);
    SOfGroupResult s_of_group();
    KMinusOneResult k_minus_one();

private:
    FiniteGroup g_;
    std::unique_ptr<CharacterTable> table_;
    std::unique_ptr<std::vector<RationalCharClass>> rcs_;
    std::unique_ptr<std::vector<std::vector<int>>> subgroups_;
    std::vector<std::unique_ptr<StrongShodaPair>> pair_cache_;
    std::vector<char> pair_tried_;
    std::vector<std::unique_ptr<SimpleComponentDesc>> comp_cache_;

    SimpleComponentDesc build_strong_shoda_component(int rc_index, const StrongShodaPair& p);
    friend std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup&);
};

// Convenience entry points (each builds a fresh engine).
std::vector<StrongShodaPair> strong_shoda_pairs(const FiniteGroup& g);
long schur_index(const SchurData& sd);
bool contributes_to_s(const SchurData& sd, const std::vector<long>& primes);
SOfGroupResult s_of_group(const FiniteGroup& g);
KMinusOneResult k_minus_one(const FiniteGroup& g);

// Local index of the quaternion algebra (a, b / Q) at a finite prime or the
// infinite place; cross-validation path for quadratic cyclic components.
long quaternion_local_index(long a, long b, long place);

// Local Schur index of a root-of-unity crossed product at a finite prime,
// via the Artin symbol of the norm of the cocycle data (cyclic case) or a
// commuting cyclic splitting (rank 2/3 decomposition groups).
long local_index_of_algebra(const CyclotomicAlgebra& alg, long p);
// Index at a real place of the center (1 if the center is complex).
long infinite_index_of_algebra(const CyclotomicAlgebra& alg);

std::string components_tsv(SchurEngine& eng);
std::string k_minus_one_pretty(const KMinusOneResult& k);

}  // namespace negk
