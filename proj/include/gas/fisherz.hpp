#pragma once

#include <Eigen/Dense>

#include "gas/citest.hpp"

namespace gas {

/// Gaussian conditional-independence tester: partial correlation with
/// Fisher's z-transform at significance level alpha.
///
/// The partial correlation of (u, v) given the conditioning set is read
/// off the inverse of the covariance submatrix over those variables; the
/// statistic sqrt(n - |cond| - 3) * |atanh(r)| is compared against the
/// two-sided normal quantile.
class FisherZTester : public CiTester {
  public:
    /// data holds one sample per row, one variable per column; columns are
    /// indexed by NodeId.
    FisherZTester(const Eigen::MatrixXd& data, double alpha);

    double alpha() const { return alpha_; }
    long long sample_count() const { return n_; }
    int variable_count() const { return static_cast<int>(covariance_.rows()); }

  protected:
    bool evaluate(const CiQuery& query) override;

  private:
    Eigen::MatrixXd covariance_;
    long long n_ = 0;
    double alpha_ = 0.0;
    double threshold_ = 0.0;
};

/// Two-sided normal quantile used by the tester, exposed for tests.
double normal_quantile(double probability);

}  // namespace gas
