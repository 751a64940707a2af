#pragma once

#include <optional>
#include <variant>

#include "pathft/pathspace.hpp"

namespace pathft {

// Functional representations.
//
// Dense:   one value per path, indexed by rank.
// Product: f(a) = Π_k sites[k][digit_k + period/2]; transforms, inner
//          products and evaluation factorize per site, so this form works on
//          spaces far beyond the enumeration guard.
// Builtin: closed-form functionals evaluated on demand.
enum class BuiltinName { One, Delta, DeltaPow, Chirp, Gaussian, ShiftedGaussian };

struct DenseRepr {
    std::vector<Complex> values;
};

struct ProductRepr {
    std::vector<std::vector<Complex>> sites;  // sites() vectors of length period()
};

struct BuiltinRepr {
    BuiltinName name{BuiltinName::One};
    double power{1.0};                  // exponent for DeltaPow
    std::vector<i64> shift_digits{};    // b digits for ShiftedGaussian
};

struct Functional {
    PathSpace space;
    std::variant<DenseRepr, ProductRepr, BuiltinRepr> repr;

    bool is_dense() const { return std::holds_alternative<DenseRepr>(repr); }
    bool is_product() const { return std::holds_alternative<ProductRepr>(repr); }
    bool is_builtin() const { return std::holds_alternative<BuiltinRepr>(repr); }

    const DenseRepr& dense() const { return std::get<DenseRepr>(repr); }
    const ProductRepr& product() const { return std::get<ProductRepr>(repr); }
    const BuiltinRepr& builtin() const { return std::get<BuiltinRepr>(repr); }

    // Pointwise evaluation, any representation.
    Complex operator()(const PathFunction& a) const;
};

// Normalization ε₀: type I Hp^(-H²), type II H^(-H²/2)·Hp^(-H²).
// Equivalently |X|^(-1/2) in both variants.
double eps0(const PathSpace& space);

// Per-site transform scale ω = ε₀^(1/H²): 1/Hp (type I), 1/(√H·Hp) (type II).
double site_scale(const PathSpace& space);

Functional one2(const PathSpace& space);
Functional delta2(const PathSpace& space);                  // 1/ε₀ at the zero path
Functional delta_pow2(const PathSpace& space, double l);    // (1/ε₀)^l at the zero path
Functional make_dense(const PathSpace& space, std::vector<Complex> values);
Functional make_product(const PathSpace& space, std::vector<std::vector<Complex>> sites);
Functional shifted_gaussian2(const PathSpace& space, const PathFunction& b);

struct TransformOptions {
    // Dense enumeration refusal threshold for |X|.
    i64 guard = 1'000'000;
    // Dense evaluation route. Auto: direct sum for |X| <= 4096, axis-factored
    // tensor evaluation above. Both compute the same sum.
    enum class Strategy { Auto, DirectSum, AxisFactored };
    Strategy strategy = Strategy::Auto;
    // Worker threads for the O(|X|²) kernels; 0 = hardware concurrency.
    // Summation order per output is fixed, so results do not depend on this.
    int threads = 0;
};

// Functional Fourier transform
//   (Ff)(b)  = Σ_a ε₀ exp(-2πi·pairing(a,b)) f(a)
//   (F̄f)(b) = Σ_a ε₀ exp(+2πi·pairing(a,b)) f(a)
// Product input stays product (independent per-site transforms); dense and
// builtin inputs return a dense result and respect opts.guard.
Functional forward2(const Functional& f, const TransformOptions& opts = {});
Functional inverse2(const Functional& f, const TransformOptions& opts = {});

// (f∗g)(a) = Σ_{a′} ε₀ f(a-a′) g(a′) over the group (X, path_add). Dense.
Functional convolve2(const Functional& f, const Functional& g,
                     const TransformOptions& opts = {});

// (f,g) = Σ_b ε₀ conj(f(b)) g(b). Product×product factorizes per site and
// ignores the guard; other representations enumerate.
Complex inner2(const Functional& f, const Functional& g, const TransformOptions& opts = {});

// Pointwise product (dense result).
Functional pointwise2(const Functional& f, const Functional& g,
                      const TransformOptions& opts = {});

// f(-a) with wrap (dense result).
Functional reflect2(const Functional& f, const TransformOptions& opts = {});

// Materialize any representation as dense (guarded).
Functional to_dense(const Functional& f, i64 guard = 1'000'000);

// Divided differences along direction ε′b with increment ε′ = 1/Hp:
//   (D₊f)(a) = (f(a+ε′b) - f(a))/ε′,  (D₋f)(a) = (f(a) - f(a-ε′b))/ε′.
Functional diff_plus(const Functional& f, const IntegerPath& b,
                     const TransformOptions& opts = {});
Functional diff_minus(const Functional& f, const IntegerPath& b,
                      const TransformOptions& opts = {});

// Transform eigenfactor of the divided difference:
//   λ_b(a)  = (exp(+2πi ε′⟨a,b⟩) - 1)/ε′   (sign = +1)
//   λ̄_b(a) = (exp(-2πi ε′⟨a,b⟩) - 1)/ε′   (sign = -1)
// where ⟨a,b⟩ is the variant's bilinear pairing with b's raw digits.
Complex lambda_factor(const PathFunction& a, const IntegerPath& b, int sign);

// Both sides of the mixed transform identity on a type-II space with a
// separable kernel f(c,b) = u(c)·v(b):
//   lhs(d) = F_a(Σ_b ε₀ u(a-b) v(b) g(b))(d)
//   rhs(d) = {F_b(F_c(u(c)v(b))(d)) ∗ F_b g}(d) = (Fu)(d)·((Fv)∗(Fg))(d)
struct MixedPair2 {
    Functional lhs;
    Functional rhs;
};

MixedPair2 mixed_transform2(const Functional& u, const Functional& v, const Functional& g,
                            const TransformOptions& opts = {});

}  // namespace pathft
