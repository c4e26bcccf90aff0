#include "ssn/classify.hpp"

#include "ssn/error.hpp"
#include "ssn/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace ssn {

namespace {

std::vector<std::vector<int>> rows_by_class(const FeatureMatrix& data) {
    if (data.class_count < 2)
        throw Error(ErrorCategory::Dataset, "classification needs >= 2 classes");
    if (data.x.rows() != static_cast<Eigen::Index>(data.labels.size()))
        throw Error(ErrorCategory::Internal, "labels/rows mismatch");
    if (!data.x.allFinite())
        throw Error(ErrorCategory::Numeric, "feature matrix contains NaN/Inf");

    std::vector<std::vector<int>> by_class(data.class_count);
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
        const int label = data.labels[i];
        if (label < 0 || label >= data.class_count)
            throw Error(ErrorCategory::Dataset, "label out of range");
        by_class[label].push_back(static_cast<int>(i));
    }
    return by_class;
}

// Full fit over all rows except `exclude` (pass -1 to keep everything).
// Class statistics are accumulated in class order so leave-one-out folds are
// bit-identical to fitting the reduced matrix directly.
LdaModel fit_excluding(const FeatureMatrix& data,
                       const std::vector<std::vector<int>>& by_class,
                       int exclude, double gamma) {
    const Eigen::Index dim = data.x.cols();
    const int k = data.class_count;

    LdaModel model;
    model.gamma = gamma;
    model.means = Eigen::MatrixXd::Zero(k, dim);
    model.log_priors = Eigen::VectorXd::Zero(k);

    Eigen::Index n_train = 0;
    std::vector<int> counts(k, 0);
    for (int c = 0; c < k; ++c) {
        for (const int row : by_class[c]) {
            if (row == exclude)
                continue;
            model.means.row(c) += data.x.row(row);
            ++counts[c];
        }
        if (counts[c] == 0)
            throw Error(ErrorCategory::Dataset,
                        "class without training samples: " + std::to_string(c));
        model.means.row(c) /= static_cast<double>(counts[c]);
        n_train += counts[c];
    }

    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(dim, dim);
    for (int c = 0; c < k; ++c) {
        for (const int row : by_class[c]) {
            if (row == exclude)
                continue;
            const Eigen::VectorXd centered =
                data.x.row(row).transpose() - model.means.row(c).transpose();
            scatter.selfadjointView<Eigen::Lower>().rankUpdate(centered, 1.0);
        }
    }
    scatter = scatter.selfadjointView<Eigen::Lower>();
    const Eigen::Index dof = std::max<Eigen::Index>(n_train - k, 1);
    scatter /= static_cast<double>(dof);

    // Shrinkage toward the average-variance identity. A zero-trace scatter
    // (constant features within every class) degenerates to nearest-mean.
    double t = scatter.trace() / static_cast<double>(dim);
    if (!(t > 0.0))
        t = 1.0;
    scatter *= (1.0 - gamma);
    scatter.diagonal().array() += gamma * t;
    model.scatter = scatter;

    Eigen::LLT<Eigen::MatrixXd> llt(scatter);
    if (llt.info() != Eigen::Success)
        throw Error(ErrorCategory::Numeric,
                    "pooled scatter is singular after regularization (gamma=" +
                        std::to_string(gamma) + ")");

    model.coef = llt.solve(model.means.transpose()).transpose();
    model.intercept = Eigen::VectorXd::Zero(k);
    for (int c = 0; c < k; ++c) {
        model.intercept(c) =
            -0.5 * model.coef.row(c).dot(model.means.row(c)) +
            std::log(static_cast<double>(counts[c]) / static_cast<double>(n_train));
        model.log_priors(c) =
            std::log(static_cast<double>(counts[c]) / static_cast<double>(n_train));
    }
    return model;
}

} // namespace

LdaModel lda_fit(const FeatureMatrix& data, double gamma) {
    return fit_excluding(data, rows_by_class(data), -1, gamma);
}

Eigen::VectorXd lda_scores(const LdaModel& model, const Eigen::VectorXd& x) {
    return model.coef * x + model.intercept;
}

int lda_predict(const LdaModel& model, const Eigen::VectorXd& x) {
    const Eigen::VectorXd scores = lda_scores(model, x);
    int best = 0;
    for (int c = 1; c < scores.size(); ++c)
        if (scores(c) > scores(best))
            best = c;
    return best;
}

LoocvResult loocv(const FeatureMatrix& data, double gamma, int jobs) {
    const auto by_class = rows_by_class(data);
    for (int c = 0; c < data.class_count; ++c)
        if (by_class[c].size() < 2)
            throw Error(ErrorCategory::Dataset,
                        "leave-one-out needs >= 2 samples per class; class '" +
                            std::to_string(c) + "' has " +
                            std::to_string(by_class[c].size()));

    const std::size_t n = data.labels.size();
    LoocvResult result;
    result.predicted.assign(n, -1);

    parallel_for(n, jobs, [&](std::size_t fold) {
        const LdaModel model =
            fit_excluding(data, by_class, static_cast<int>(fold), gamma);
        result.predicted[fold] =
            lda_predict(model, data.x.row(static_cast<Eigen::Index>(fold)).transpose());
    });

    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (result.predicted[i] == data.labels[i])
            ++correct;
    result.accuracy = 100.0 * static_cast<double>(correct) / static_cast<double>(n);
    return result;
}

double loocv_accuracy(const FeatureMatrix& data, double gamma, int jobs) {
    return loocv(data, gamma, jobs).accuracy;
}

} // namespace ssn
