#include "zcap/types.hpp"

#include <numeric>

namespace zcap {

void require_permutation(std::span<const int> pi, int m, const char* what)
{
    if (static_cast<int>(pi.size()) != m)
        throw std::invalid_argument(std::string(what) + ": permutation must have " + std::to_string(m) + " entries");
    std::vector<bool> seen(m + 1, false);
    for (int p : pi) {
        if (p < 1 || p > m || seen[p])
            throw std::invalid_argument(std::string(what) + ": not a permutation of {1.." + std::to_string(m) + "}");
        seen[p] = true;
    }
}

void require_even_modulus(int q, const char* what)
{
    if (q < 2 || q % 2 != 0)
        throw std::invalid_argument(std::string(what) + ": q must be even and >= 2, got " + std::to_string(q));
}

Permutation identity_permutation(int m)
{
    Permutation pi(m);
    std::iota(pi.begin(), pi.end(), 1);
    return pi;
}

} // namespace zcap
