#pragma once

#include <Eigen/Core>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zcap {

/// Dense exponent storage. Entries are residues; their meaning (Z_q value or
/// exponent of an M-th root of unity) is fixed by the owning type.
using ExponentVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;
using ExponentMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 1-based permutation of {1..m}, written the way pi is written by hand.
using Permutation = std::vector<int>;

/// Raised when a construction's output fails its own correlation check.
class VerificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input (ANF text, sequence files).
class ParseError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

inline int mod(long long a, int m)
{
    const auto r = static_cast<int>(a % m);
    return r < 0 ? r + m : r;
}

/// Throws std::invalid_argument unless pi is a bijection of {1..m}.
void require_permutation(std::span<const int> pi, int m, const char* what);

/// Throws std::invalid_argument unless q is even and at least 2.
void require_even_modulus(int q, const char* what);

Permutation identity_permutation(int m);

} // namespace zcap
