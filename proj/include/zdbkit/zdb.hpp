#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdbkit/field.hpp"

namespace zdbkit {

/// Finite abelian group serving as the codomain of a ZDB function. Elements
/// carry dense indices 0..size-1 with a fixed zero index, so value tables can
/// be plain int32 arrays.
class Codomain {
public:
    enum class Kind { BaseField, Tuple, IntegersMod };

    /// GF(q) inside the given field; indices follow the field's base-element
    /// order (index 0 is zero).
    static Codomain base_field(const FieldTable& field);
    /// GF(q)^v with index sum_j idx_j * q^j (component 0 least significant);
    /// index 0 is the all-zero tuple.
    static Codomain tuple(const FieldTable& field, int v);
    /// Z_modulus under addition.
    static Codomain integers_mod(std::int64_t modulus);

    Kind kind() const { return kind_; }
    std::int64_t size() const { return size_; }
    int zero_index() const { return 0; }
    int v() const { return v_; }
    const FieldTable* field() const { return field_; }

    /// Index of element_i - element_j.
    int sub(int i, int j) const;
    /// Base-field element for a BaseField codomain.
    Fe element(int i) const;
    /// Components of a Tuple codomain index.
    std::vector<Fe> tuple_element(int i) const;
    /// Printable label (encodings for field elements, plain index otherwise).
    std::string label(int i) const;
    /// Discrete-log style label used by the text exports (-1 for zero).
    std::string log_label(int i) const;

    bool same_alphabet(const Codomain& other) const;

private:
    Kind kind_ = Kind::IntegersMod;
    std::int64_t size_ = 0;
    int v_ = 1;
    const FieldTable* field_ = nullptr;
    std::vector<std::int32_t> sub_table_; // dense table when small enough
};

/// Total map from Z_n to a codomain, stored as a table of codomain indices.
struct ZdbFunction {
    std::int64_t n = 0;
    Codomain codomain;
    std::vector<std::int32_t> values;
    bool onto = false;          ///< whether every codomain value is attained
    std::string provenance;     ///< construction recipe (JSON) or description

    std::int64_t ell() const { return codomain.size(); }
};

/// Full table N_b(a) = |{t : f(t+a) - f(t) = b}| for a in [1, n), b indexed
/// by codomain index. lambda is set when the N_0 column is constant.
struct DifferenceSpectrum {
    std::int64_t n = 0;
    std::int64_t ell = 0;
    int zero_index = 0;
    std::vector<std::int64_t> counts; // (a-1)*ell + b
    std::optional<std::int64_t> lambda;

    std::int64_t at(std::int64_t a, std::int64_t b) const { return counts[(a - 1) * ell + b]; }
};

DifferenceSpectrum difference_spectrum(const ZdbFunction& f, int threads = 0);

/// Just the zero-difference column N_0(a) for a in [1, n).
std::vector<std::int64_t> zero_difference_counts(const ZdbFunction& f, int threads = 0);

/// |{t : f(t+a) == g(t)}| for every a in [0, n); f and g share n and alphabet.
std::vector<std::int64_t> cross_zero_counts(const ZdbFunction& f, const ZdbFunction& g,
                                            int threads = 0);

/// The multiplicative-group presentation of a spectrum: identical table with
/// rows indexed by delta = theta^(r*a); when include_zero_point is set the
/// domain is extended by the zero element (which contributes one coincidence
/// to every N_0 row).
DifferenceSpectrum multiplicative_spectrum(const ZdbFunction& f, bool include_zero_point,
                                           int threads = 0);

struct ZdbCheck {
    std::optional<std::int64_t> lambda;
    std::int64_t witness_shift = -1;   ///< shift whose count deviates
    std::int64_t witness_count = -1;
    std::int64_t reference_shift = -1; ///< shift it was compared against
    std::int64_t reference_count = -1;

    bool ok() const { return lambda.has_value(); }
};

/// Decides zero-difference balance by exhaustive counting.
ZdbCheck is_zdb(const ZdbFunction& f, int threads = 0);

struct SumIdentities {
    std::int64_t sum_tau = 0;
    std::int64_t sum_tau_sq = 0;
    bool pass = false;
};

/// Checks sum(tau_i) = n and sum(tau_i^2) = n + lambda*(n-1) over the
/// preimage sizes tau_i of a verified (n, ell, lambda) function.
SumIdentities sum_identities_check(const ZdbFunction& f, std::int64_t lambda);

struct LambdaBound {
    std::int64_t bound = 0;       ///< ceil((n-eps)(n+eps-ell) / (ell(n-1)))
    bool exact = false;           ///< bound attained only with the balanced profile
    std::int64_t k = 0, eps = 0;  ///< equality forces tau = k (ell-eps times), k+1 (eps times)
};

LambdaBound lambda_lower_bound(std::int64_t n, std::int64_t ell);

enum class PreimageCase { General, PerfectNonlinear, DifferenceBalanced };

struct PreimageBounds {
    double lo = 0, hi = 0;
    PreimageCase special = PreimageCase::General;
};

/// Interval [ (n - sqrt(D))/ell, (n + sqrt(D))/ell ] containing every
/// preimage size, D = (n + l*n - l)*ell^2 - (n^2 + n + l*n - l)*ell + n^2
/// with l = lambda. Throws PreconditionError when D < 0.
PreimageBounds preimage_size_bounds(std::int64_t n, std::int64_t ell, std::int64_t lambda);

/// Partition of Z_n into blocks with a common internal-difference count.
struct PdfFamily {
    std::int64_t n = 0;
    std::vector<std::vector<std::int64_t>> blocks;
    std::vector<std::int64_t> block_sizes;
    std::optional<std::int64_t> lambda;
};

/// Blocks are the preimage sets of f (one per codomain value, possibly empty).
PdfFamily to_pdf(const ZdbFunction& f);

struct PdfCheck {
    std::optional<std::int64_t> lambda;
    std::int64_t witness_g = -1;
    std::int64_t witness_count = -1;
    std::int64_t reference_count = -1;

    bool ok() const { return lambda.has_value(); }
};

/// Exhaustively counts internal differences per nonzero g and checks
/// constancy. Throws PreconditionError when the blocks do not partition Z_n.
PdfCheck verify_pdf(const PdfFamily& pdf);

} // namespace zdbkit
