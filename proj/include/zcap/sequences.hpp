#pragma once

#include "zcap/algebra.hpp"
#include "zcap/gbf.hpp"

#include <array>
#include <optional>
#include <utility>

namespace zcap {

/// Unimodular sequence: entry k is xi_M^{exponents[k]}.
struct RootVector
{
    int modulus = 2;
    ExponentVector exponents;

    RootVector() = default;
    RootVector(int modulus, ExponentVector exponents);
    RootVector(int modulus, std::initializer_list<int> exponents);

    Eigen::Index size() const noexcept { return exponents.size(); }
    friend bool operator==(const RootVector& a, const RootVector& b)
    {
        return a.modulus == b.modulus && a.exponents == b.exponents;
    }
};

using RootVectorPair = std::pair<RootVector, RootVector>;

/// xi_q^e == xi_M^{e M / q}; M must be a multiple of q.
RootVector lift(const ZqVector& v, int modulus);
RootVector lift(const ZqVector& v);
/// Re-expresses a root vector over a multiple of its modulus.
RootVector lift(const RootVector& v, int modulus);

/// Aperiodic cross-correlation sum_i A_{i+u} B_i^* (zero when |u| >= L).
CycSum accf(const RootVector& a, const RootVector& b, long long shift);
inline CycSum aacf(const RootVector& a, long long shift) { return accf(a, a, shift); }
/// rho(A;u) + rho(B;u).
CycSum aacf_sum(const RootVector& a, const RootVector& b, long long shift);

enum class Transform { reverse, conjugate, negate, reverse_conjugate };

/// negate maps xi^a to -xi^a = xi^{a+M/2}; an odd modulus is first lifted to 2M.
RootVector transform(const RootVector& a, Transform kind);

struct ZcpCertificate
{
    int length = 0;
    /// Largest Z with rho(A;u)+rho(B;u) exactly zero for all 0 < u < Z.
    int width = 0;
    std::int64_t peak = 0;
    std::optional<int> claimed;
    bool verified = false;

    bool is_gcp() const noexcept { return width == length; }
};

/// Measures the ZCZ width by scanning u = 1, 2, ... up to the first nonzero sum.
ZcpCertificate max_zcz(const RootVector& a, const RootVector& b);

/// Checks the (L, Z)-ZCP property for a claimed width.
ZcpCertificate zcp_check(const RootVector& a, const RootVector& b, int claimed_width);

/// Canonical mate (reverse-conjugate D, -reverse-conjugate C).
RootVectorPair mate_of(const RootVector& c, const RootVector& d);

/// rho(A,A1;u) + rho(B,B1;u) == 0 exactly for every |u| < Z.
bool mate_check(const RootVectorPair& pair, const RootVectorPair& mate, int width);

enum class Lemma4Block { a, minus_a, c, minus_c };

/// Block layout of the 14-block extension; B/D follow the same layout in T.
const std::array<Lemma4Block, 14>& lemma4_pattern();

/// Concatenates a GCP (A, B) of length L and its mate (C, D) into a (14L, 12L)-ZCP.
/// Throws std::invalid_argument when (A, B) is not a GCP.
RootVectorPair lemma4_extend(const RootVector& a, const RootVector& b);

/// Same, with an explicit block layout (used to re-derive the frozen pattern).
RootVectorPair concatenate_blocks(const RootVector& a, const RootVector& b, std::span<const Lemma4Block> layout);

} // namespace zcap
