#pragma once

// Dense column-major tensors with a reverse-mode tape over the small closed
// set of operations the policy network uses, plus Adam.
//
// Tensors are two-dimensional (rows x cols); a vector is a single column or
// row. Values are doubles.

#include <Eigen/Core>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace meshrl::ad {

using Matrix = Eigen::MatrixXd;

enum class TensorErrorKind { ShapeMismatch, NotScalar, NoTape };

const char* to_string(TensorErrorKind kind);

class TensorError : public std::runtime_error {
public:
    TensorError(TensorErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }
    TensorErrorKind kind() const noexcept { return kind_; }

private:
    TensorErrorKind kind_;
};

// A persistent value such as a weight. grad is sized on first accumulation.
struct Tensor {
    Matrix value;
    bool requires_grad = false;
    Matrix grad;

    Tensor() = default;
    explicit Tensor(Matrix v, bool requires_grad = false)
        : value(std::move(v)), requires_grad(requires_grad)
    {
    }

    int rows() const { return static_cast<int>(value.rows()); }
    int cols() const { return static_cast<int>(value.cols()); }
    std::vector<int> shape() const { return {rows(), cols()}; }
    void zero_grad() { grad.setZero(value.rows(), value.cols()); }
};

class Tape;

// Handle to a value recorded on a tape.
class Var {
public:
    Var() = default;
    Var(Tape* tape, int id) : tape_(tape), id_(id) {}

    const Matrix& value() const;
    int rows() const { return static_cast<int>(value().rows()); }
    int cols() const { return static_cast<int>(value().cols()); }
    Tape* tape() const { return tape_; }
    int id() const { return id_; }

private:
    Tape* tape_ = nullptr;
    int id_ = -1;
};

class Tape {
public:
    Var constant(Matrix value);
    // Reads t.value; backward accumulates into t.grad when t.requires_grad.
    Var param(Tensor& t);

    // Accumulates d loss / d param into every participating parameter, then
    // clears the tape. loss must be 1 x 1.
    void backward(Var loss);

    int size() const { return static_cast<int>(nodes_.size()); }
    void clear() { nodes_.clear(); }

    // Used by the operations below.
    struct Node {
        Matrix value;
        Matrix grad;
        bool needs_grad = false;
        Tensor* sink = nullptr;
        std::function<void(Tape&, const Node&)> back;
    };
    Var record(Matrix value, bool needs_grad, std::function<void(Tape&, const Node&)> back);
    Node& node(int id) { return nodes_[id]; }
    const Node& node(int id) const { return nodes_[id]; }
    // Adds g into the gradient of id when that node needs one.
    void accumulate(int id, const Matrix& g);

private:
    std::vector<Node> nodes_;
};

// Column-major reinterpretation; element order is preserved.
Var reshape(Var x, int rows, int cols);
// Output column j = x column idx[j].
Var gather_cols(Var x, const std::vector<int>& idx);
// Output row i = x row idx[i].
Var gather_rows(Var x, const std::vector<int>& idx);
// Stack vertically (rows) or side by side (cols).
Var concat_rows(const std::vector<Var>& parts);
Var concat_cols(const std::vector<Var>& parts);
Var matmul(Var a, Var b);
// Same shapes, or b a single column added to every column of a.
Var add(Var a, Var b);
Var scale(Var x, double s);
Var relu(Var x);
// Per column: normalize over rows, then gain * xhat + bias (gain, bias: rows x 1).
Var layer_norm(Var x, Var gain, Var bias, double eps = 1e-5);
// Softmax across each row of x + mask; -infinity in mask gives probability 0.
Var softmax_rows(Var x, const Matrix& mask);
Var log(Var x);
Var sum(Var x);
Var mean(Var x);

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    int step = 0;
    std::vector<Matrix> m;
    std::vector<Matrix> v;
};

// Bias-corrected Adam on each parameter from its grad. Empty grads count as zero.
void adam_step(std::span<Tensor* const> params, AdamState& state, const AdamConfig& cfg);

} // namespace meshrl::ad
