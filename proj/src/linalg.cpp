#include "fspg/linalg.hpp"

#include <cassert>
#include <cmath>

namespace fspg {

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    KahanSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
    return s.value();
}

double norm2_sq(std::span<const double> a) { return dot(a, a); }

double norm2(std::span<const double> a) { return std::sqrt(norm2_sq(a)); }

double norm2_sq_diff(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    KahanSum s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s.add(d * d);
    }
    return s.value();
}

void scale(Vec& a, double s) {
    for (double& x : a) x *= s;
}

Vec matvec(const RowMatrix& a, std::span<const double> x) {
    assert(x.size() == a.cols);
    Vec y(a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) y[i] = dot(a.row(i), x);
    return y;
}

Vec matvec_transposed(const RowMatrix& a, std::span<const double> x) {
    assert(x.size() == a.rows);
    KahanVec acc(a.cols);
    for (std::size_t i = 0; i < a.rows; ++i) acc.add_scaled(a.row(i), x[i]);
    return acc.value();
}

}  // namespace fspg
