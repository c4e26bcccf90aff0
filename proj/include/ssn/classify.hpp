#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace ssn {

struct FeatureMatrix {
    Eigen::MatrixXd x;           // rows = samples, cols = descriptor dims
    std::vector<int> labels;     // per-row class in [0, class_count)
    std::vector<std::string> ids;
    int class_count = 0;
};

// Gaussian LDA with a pooled within-class covariance. The covariance is
// shrunk toward a scaled identity, S <- (1-gamma)S + gamma*trace(S)/dim*I,
// so descriptors longer than the training set stay tractable.
struct LdaModel {
    Eigen::MatrixXd means;      // class_count x dim
    Eigen::MatrixXd scatter;    // regularized pooled covariance, dim x dim
    Eigen::VectorXd log_priors; // empirical class frequencies
    Eigen::MatrixXd coef;       // class_count x dim, rows = scatter^-1 * mean_c
    Eigen::VectorXd intercept;  // class_count
    double gamma = 1e-4;
};

constexpr double kDefaultShrinkage = 1e-4;

LdaModel lda_fit(const FeatureMatrix& data, double gamma = kDefaultShrinkage);

Eigen::VectorXd lda_scores(const LdaModel& model, const Eigen::VectorXd& x);

// Argmax of the discriminant scores; ties break toward the lowest class index.
int lda_predict(const LdaModel& model, const Eigen::VectorXd& x);

struct LoocvResult {
    double accuracy = 0.0;           // percent correct in [0,100]
    std::vector<int> predicted;      // per-sample prediction
};

// Exact leave-one-out protocol: one full refit per sample. Folds run in
// parallel across `jobs` workers; results do not depend on the worker count.
LoocvResult loocv(const FeatureMatrix& data, double gamma = kDefaultShrinkage,
                  int jobs = 0);

double loocv_accuracy(const FeatureMatrix& data,
                      double gamma = kDefaultShrinkage, int jobs = 0);

struct ColorSpaceBenchRow {
    std::string space;
    double accuracy;
};

struct ColorSpaceBenchReport {
    std::vector<ColorSpaceBenchRow> rows;
    double mean = 0.0;
    double stdev = 0.0; // population standard deviation across spaces
};

} // namespace ssn
