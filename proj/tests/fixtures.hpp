#pragma once

// Reference matrices for known constructions. Complex entries
// are stored as exponents of j = xi_4: 1 -> 0, j -> 1, -1 -> 2, -j -> 3.

#include "zcap/arrays.hpp"

namespace fixtures {

using zcap::ExponentMatrix;
using zcap::ExponentVector;

inline ExponentVector vec(std::initializer_list<int> v)
{
    return Eigen::Map<const ExponentVector>(v.begin(), static_cast<Eigen::Index>(v.size()));
}

inline zcap::RootVector from_signs(std::initializer_list<int> signs)
{
    ExponentVector e(static_cast<Eigen::Index>(signs.size()));
    Eigen::Index k = 0;
    for (int s : signs)
        e(k++) = s < 0 ? 1 : 0;
    return zcap::RootVector(2, e);
}

inline ExponentMatrix matrix(Eigen::Index rows, Eigen::Index cols, std::initializer_list<int> values)
{
    return Eigen::Map<const ExponentMatrix>(values.begin(), rows, cols);
}

// f = x1x2 + x1y1 + y3 with q = 2, n = 2, m = 3.
inline ExponentMatrix example1()
{
    return matrix(4, 8, {0, 1, 0, 1, 0, 1, 0, 1, //
                         0, 1, 0, 1, 0, 1, 0, 1, //
                         0, 1, 0, 1, 1, 0, 1, 0, //
                         1, 0, 1, 0, 0, 1, 0, 1});
}

inline zcap::RootVector example2_a() { return from_signs({-1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1}); }
inline zcap::RootVector example2_b() { return from_signs({-1, 1, 1, 1, 1, -1, -1, -1, 1, -1, -1, -1}); }
inline zcap::RootVector example2_c() { return zcap::RootVector(4, {0, 0, 1, 3}); }
inline zcap::RootVector example2_d() { return zcap::RootVector(4, {0, 0, 3, 1}); }

// Transposed S and T (4 x 12) over M = 4.
inline ExponentMatrix example2_s_transposed()
{
    return matrix(4, 12, {2, 0, 1, 1, 0, 2, 3, 3, 0, 2, 3, 3, //
                          2, 0, 3, 3, 0, 2, 1, 1, 0, 2, 1, 1, //
                          3, 1, 2, 2, 1, 3, 0, 0, 1, 3, 0, 0, //
                          1, 3, 2, 2, 3, 1, 0, 0, 3, 1, 0, 0});
}

inline ExponentMatrix example2_t_transposed()
{
    return matrix(4, 12, {2, 0, 1, 1, 0, 2, 3, 3, 0, 2, 3, 3, //
                          2, 0, 3, 3, 0, 2, 1, 1, 0, 2, 1, 1, //
                          1, 3, 0, 0, 3, 1, 2, 2, 3, 1, 2, 2, //
                          3, 1, 0, 0, 1, 3, 2, 2, 1, 3, 2, 2});
}

inline zcap::ZqVector example3_a() { return zcap::ZqVector(2, {1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0}); }
inline zcap::ZqVector example3_b() { return zcap::ZqVector(2, {1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1}); }
inline zcap::ZqVector example3_c() { return zcap::ZqVector(4, {0, 0, 1, 3}); }
inline zcap::ZqVector example3_d() { return zcap::ZqVector(4, {0, 0, 3, 1}); }

// The quaternary s^T and t^T coincide with example2_s_transposed and example2_t_transposed.
inline ExponentMatrix example3_s_transposed() { return example2_s_transposed(); }
inline ExponentMatrix example3_t_transposed() { return example2_t_transposed(); }

// Transposed f and t (4 x 14), q = 2.
inline ExponentMatrix example4_f_transposed()
{
    return matrix(4, 14, {0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, //
                          0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, //
                          0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, //
                          1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1});
}

inline ExponentMatrix example4_t_transposed()
{
    return matrix(4, 14, {0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, //
                          0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, //
                          1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, //
                          0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0});
}

} // namespace fixtures
