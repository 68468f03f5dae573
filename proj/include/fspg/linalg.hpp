#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fspg {

using Vec = std::vector<double>;

// Compensated (Kahan) accumulator. Used everywhere client contributions are
// summed so that a pooled dataset and the same data split across clients
// produce sums that agree to ~1 ulp regardless of the partition.
class KahanSum {
public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Vector-valued Kahan accumulator.
class KahanVec {
public:
    explicit KahanVec(std::size_t n) : sum_(n, 0.0), comp_(n, 0.0) {}
    void add_scaled(std::span<const double> x, double a) {
        for (std::size_t i = 0; i < sum_.size(); ++i) {
            double y = a * x[i] - comp_[i];
            double t = sum_[i] + y;
            comp_[i] = (t - sum_[i]) - y;
            sum_[i] = t;
        }
    }
    void add(std::span<const double> x) { add_scaled(x, 1.0); }
    const Vec& value() const { return sum_; }
    std::size_t size() const { return sum_.size(); }

private:
    Vec sum_;
    Vec comp_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double norm2_sq(std::span<const double> a);
double norm2_sq_diff(std::span<const double> a, std::span<const double> b);
void scale(Vec& a, double s);

// Dense row-major matrix, rows = samples.
struct RowMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vec data;  // rows*cols, row-major

    std::span<const double> row(std::size_t i) const {
        return {data.data() + i * cols, cols};
    }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// y = A x
Vec matvec(const RowMatrix& a, std::span<const double> x);
// y = A^T x
Vec matvec_transposed(const RowMatrix& a, std::span<const double> x);

}  // namespace fspg
