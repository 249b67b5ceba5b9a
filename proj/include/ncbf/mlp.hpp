#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncbf/errors.hpp"

namespace ncbf {

enum class Activation : std::uint8_t { linear = 0, relu = 1 };
enum class LossKind : std::uint8_t { circular_mae = 0, rmse = 1 };

// Fully connected network. Weight matrix l is [dims[l+1] x dims[l]] row-major
// (one contiguous row per output neuron). Hidden layers use ReLU, the output
// layer is linear. Parameters are stored in T; products are accumulated in
// 64-bit either way. T = float is the training/storage type, T = double
// exists for finite-difference gradient verification.
template <typename T>
struct Net {
    std::vector<int> dims;
    std::vector<std::vector<T>> weights;
    std::vector<std::vector<T>> biases;
    std::vector<Activation> activations;  // one per affine layer

    std::size_t layer_count() const { return weights.size(); }
    int input_width() const { return dims.front(); }
    int output_width() const { return dims.back(); }
    std::size_t parameter_count() const;
};

using MlpModel = Net<float>;

struct TrainConfig {
    int epochs = 200;
    int batch_size = 1000;
    double learning_rate = 1e-3;
    double decay = 0.97;  // per-epoch multiplier
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t seed = 0;
    LossKind loss = LossKind::circular_mae;

    void validate() const {
        if (epochs < 1) throw ConfigError("TrainConfig: epochs must be >= 1");
        if (batch_size < 1) throw ConfigError("TrainConfig: batch_size must be >= 1");
        if (!(decay > 0.0 && decay <= 1.0))
            throw ConfigError("TrainConfig: decay must lie in (0, 1]");
        if (!(learning_rate >= 0.0))
            throw ConfigError("TrainConfig: learning_rate must be >= 0");
    }
};

struct TrainReport {
    std::vector<double> train_loss;  // one per epoch (mean of minibatch losses)
    std::vector<double> test_loss;   // one per epoch (full test set)
    double wall_seconds = 0.0;

    double final_train_loss() const { return train_loss.back(); }
    double final_test_loss() const { return test_loss.back(); }
};

// Row-major sample matrix: count x width, contiguous.
template <typename T>
struct SampleView {
    const T* data = nullptr;
    std::size_t count = 0;
    std::size_t width = 0;

    const T* row(std::size_t i) const { return data + i * width; }
};

// Glorot-uniform weights (+-sqrt(6/(fan_in+fan_out))), zero biases.
template <typename T>
Net<T> init_net(const std::vector<int>& dims, std::uint64_t seed);

MlpModel init_model(const std::vector<int>& dims, std::uint64_t seed);

// Batched forward pass; output is count x dims.back() row-major.
template <typename T>
std::vector<T> forward(const Net<T>& net, SampleView<T> batch);

// Circular mean absolute error: mean_n min(|delta|, 2pi - |delta|) with the
// difference reduced mod 2pi first.
double cmae(const std::vector<double>& pred, const std::vector<double>& target);
double cmae(const float* pred, const float* target, std::size_t n);

double rmse(const std::vector<double>& pred, const std::vector<double>& target);
double rmse(const float* pred, const float* target, std::size_t n);

// Mean loss over a batch plus d(loss)/d(pred); the circular branch gradient
// follows whichever term attains the min (non-wrapped branch on exact ties).
template <typename T>
double batch_loss_and_grad(LossKind kind, const T* pred, const T* target,
                           std::size_t count, std::size_t width, T* grad);

template <typename T>
double batch_loss(LossKind kind, const Net<T>& net, SampleView<T> inputs,
                  SampleView<T> targets, std::size_t eval_batch = 1024);

// Mini-batch Adam with per-epoch exponential learning-rate decay
// (lr_e = lr0 * decay^e) and a seeded reshuffle every epoch. Throws NonFinite
// when a batch loss stops being finite.
template <typename T>
TrainReport train(Net<T>& net, SampleView<T> train_inputs, SampleView<T> train_targets,
                  SampleView<T> test_inputs, SampleView<T> test_targets,
                  const TrainConfig& config);

// One backward pass on a batch; parameter gradients land in grad_w/grad_b
// (same shapes as weights/biases). Returns the batch loss. Exposed for the
// finite-difference checks.
template <typename T>
double loss_and_param_grad(Net<T>& net, LossKind kind, SampleView<T> inputs,
                           SampleView<T> targets,
                           std::vector<std::vector<double>>& grad_w,
                           std::vector<std::vector<double>>& grad_b);

// "MLPW" container, little-endian, f32 parameters.
void save_model(const std::string& path, const MlpModel& model);
MlpModel load_model(const std::string& path);

Net<double> widen(const MlpModel& model);

}  // namespace ncbf
