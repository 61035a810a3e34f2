#pragma once

#include "zcap/arrays.hpp"

#include <optional>

namespace zcap {

/// Claimed input widths and self-verification switches for the combiners.
/// Unset widths are measured from the inputs.
struct CombineOptions
{
    std::optional<int> z1;
    std::optional<int> z2;
    /// Reject inputs that do not meet the claimed widths.
    bool check_inputs = true;
    /// Re-verify the output ZCAP at (z1, z2); throws VerificationError on failure.
    bool verify = true;
};

/// Combines a binary (L1,Z1)-ZCP (A,B) with an (L2,Z2)-ZCP (C,D) into an
/// ((L1,L2),(Z1,Z2))-ZCAP:
///
///   S(i,g) = A_i C_g            if A_i == B_i, else A_i conj(D_{L2-1-g})
///   T(i,g) = A_i D_g            if A_i == B_i, else -A_i conj(C_{L2-1-g})
///
/// A and B must have modulus 2. The output modulus is lcm(2, modulus of C).
RootArrayPair theorem1_combine(const RootVector& a, const RootVector& b, const RootVector& c, const RootVector& d,
                               const CombineOptions& options = {});

/// Z_q form of theorem1_combine for binary (a,b) and q-ary (c,d), q even:
///
///   s(i,g) = c_g - (rev(d)_g + c_g)(a_i xor b_i) + (q/2) a_i
///   t(i,g) = d_g - (rev(c)_g + d_g + q/2)(a_i xor b_i) + (q/2) a_i
std::pair<Zq2DArray, Zq2DArray> corollary1_combine(const ZqVector& a, const ZqVector& b, const ZqVector& c,
                                                   const ZqVector& d, const CombineOptions& options = {});

struct Lemma5Params
{
    int q = 2;
    /// GDJ pair (c,d) has length 2^n over g_1..g_n.
    int n = 1;
    /// Binary pair (a,b) is built over i_1..i_m.
    int m = 3;
    int t_prime = 2;
    /// Exponent v in the length 2^(m-1) + sum d_alpha 2^(alpha-1) + 2^v.
    int v_exp = 0;
    Permutation pi1;
    Permutation pi2;
    /// p_0..p_m in Z_2; empty means all zero.
    std::vector<int> p;
    /// v_0..v_n in Z_q; empty means all zero.
    std::vector<int> v;
    /// d_{t'+1}..d_{m-1} in Z_2; empty means all zero.
    std::vector<int> d;
    bool verify = true;
};

std::int64_t lemma5_length(const Lemma5Params& params);
int lemma5_width(const Lemma5Params& params);

/// The truncated binary pair (a, a + i_pi1(1)).
std::pair<ZqVector, ZqVector> lemma5_base_pair(const Lemma5Params& params);

/// First pi1 (lexicographic) for which the base pair reaches the claimed width.
std::optional<Permutation> lemma5_find_pi1(const Lemma5Params& params);

/// 2^n x L array pair with rectangular zone (2^n, 2^(t'-1) + 2^v). Throws
/// VerificationError when the base pair misses its claimed width.
std::pair<Zq2DArray, Zq2DArray> lemma5_construct(const Lemma5Params& params);

/// Binary (14, 12)-ZCP from the two 4-variable Boolean functions.
std::pair<ZqVector, ZqVector> lemma6_base();

struct Theorem2Params
{
    int q = 2;
    int m = 2;
    /// Row/column split, 0 <= n <= m.
    int n = 0;
    Permutation pi;
    /// v_0..v_m in Z_q; empty means all zero.
    std::vector<int> v;
    bool verify = true;
};

/// The 2-D generalized Boolean function over x_1..x_4, y_1..y_m whose array
/// is the first output of theorem2_direct.
Gbf theorem2_function(const Theorem2Params& params);

/// (14*2^n) x 2^(m-n) array pair with zone (12*2^n, 2^(m-n)); zcz ratio 6/7.
std::pair<Zq2DArray, Zq2DArray> theorem2_direct(const Theorem2Params& params);

} // namespace zcap
