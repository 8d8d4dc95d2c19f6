#pragma once

#include <cstddef>
#include <vector>

namespace spx {

// Soft shrinkage on a stacked gradient field (planes layout: component k of
// row i lives at v[k*rows + i]).
enum class ShrinkMode { Anisotropic, Isotropic };
std::vector<double> prox_shrink(std::vector<double> v, double step, ShrinkMode mode,
                                int comps = 2);

// prox_{step*h}(v) for the named penalties/indicators.
struct ProxOperator {
    enum class Kind { Zero, L1, L21, SqL2, Nonneg, Box01 };
    Kind kind = Kind::Zero;
    double weight = 1.0;  // h = weight * base penalty
    int comps = 1;        // L21 row grouping (planes layout)

    void evaluate_inplace(std::vector<double>& v, double step) const;
    std::vector<double> evaluate(std::vector<double> v, double step) const {
        evaluate_inplace(v, step);
        return v;
    }
};

// In-place prox building blocks.
namespace proxops {
void shrink_l1(std::vector<double>& v, double thresh);
void shrink_l21(std::vector<double>& v, int comps, double thresh);
void clamp_nonneg(std::vector<double>& v);
void clamp_box01(std::vector<double>& v);

// Conjugate proxes used by the dual updates of the engine.
// G = 1/2 ||q - y||^2  ->  prox_{sG*}(v) = (v - s y) / (1 + s)
void conj_data_l2(std::vector<double>& v, double sigma, const std::vector<double>& y);
// G = w ||q||_1        ->  clamp to [-w, w]
void conj_l1(std::vector<double>& v, double w);
// G = w ||q||_{2,1}    ->  per-row projection onto the radius-w ball
void conj_l21(std::vector<double>& v, int comps, double w);
// G = indicator(q >= 0) -> prox_{sG*}(v) = min(v, 0)
void conj_nonneg(std::vector<double>& v);
}  // namespace proxops

}  // namespace spx
