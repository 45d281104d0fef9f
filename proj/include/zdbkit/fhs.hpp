#pragma once

#include <cstdint>
#include <vector>

#include "zdbkit/cyclotomy.hpp"
#include "zdbkit/zdb.hpp"

namespace zdbkit {

/// Frequency-hopping sequence: length n over an alphabet of size ell.
struct FhSequence {
    std::int64_t n = 0;
    Codomain alphabet;
    std::vector<std::int32_t> symbols;
};

struct FhSet {
    std::vector<FhSequence> seqs;
};

/// H_{X,Y}(t) = |{i : x_i == y_{i+t}}|, indices mod n.
std::int64_t hamming_correlation(const FhSequence& x, const FhSequence& y, std::int64_t t);

/// max over t in [1, n) of the autocorrelation.
std::int64_t h_max(const FhSequence& x);

/// max over auto (t != 0) and cross (all t, including 0) correlations.
std::int64_t m_max(const FhSet& set);

std::int64_t lempel_greenberger_bound(std::int64_t n, std::int64_t ell);

struct PengFan {
    std::int64_t bound1 = 0; ///< ceil((nN - ell) n / ((nN - 1) ell))
    std::int64_t bound2 = 0; ///< ceil((2InN - (I+1)I ell) / ((nN - 1) N)), I = floor(nN/ell)
    std::int64_t I = 0;
};

PengFan peng_fan_bounds(std::int64_t n, std::int64_t N, std::int64_t ell);

struct FhsReport {
    FhSet set;
    std::int64_t lambda = 0;             ///< common zero-difference parameter
    std::int64_t M = 0;                  ///< recomputed via correlations; equals lambda
    std::vector<std::int64_t> per_seq_h; ///< H(s_i)
    bool per_seq_optimal = false;        ///< every H(s_i) meets the single-sequence bound
    bool set_optimal = false;            ///< M meets max of the two set bounds
    PengFan pf;
    std::int64_t lg_bound = 0;
};

/// Reads a verified uniform ZDB set as an FH sequence set, recomputes all
/// correlations and attaches both optimality verdicts. Throws
/// PreconditionError when the set is not uniform (including the t = 0 cross
/// counts, which are verified rather than assumed).
FhsReport zdb_set_to_fhs(const std::vector<ZdbFunction>& set, int threads = 0);

/// Linear-complexity report. minimal_poly holds c_0..c_L with c_0 = 1 for the
/// recurrence sum_j c_j s_{i-j} = 0; index_set_size is the number of nonzero
/// coefficients in the character expansion (equal to lc).
struct LcReport {
    std::int64_t lc = 0;
    std::vector<Fe> minimal_poly;
    std::int64_t index_set_size = 0;
};

/// LFSR synthesis over the base field; runs on two periods of the input and
/// replays the recurrence before returning. Sequence symbols must lie in the
/// base field of `field`.
LcReport berlekamp_massey(const FieldTable& field, const std::vector<Fe>& seq);

/// Character-expansion method for sequences of period q^m - 1: computes the
/// coefficients c_i of s_t = sum_i c_i theta^(i*t) by the inverse finite-field
/// DFT (c_i = -sum_t s_t theta^(-i*t); the group order is -1 mod p), counts
/// the nonzero ones and rebuilds the minimal polynomial in the same
/// convention as berlekamp_massey. Validates by re-synthesis.
LcReport expansion_lc(const FieldTable& field, const std::vector<Fe>& seq);

/// Coefficients a_0..a_{e-1} with sum_i a_i w^(i*j) = values[j] for
/// w = theta^((q^m-1)/e), i.e. the polynomial sum_i a_i x^(i*(q^m-1)/e)
/// restricted to {theta^t : t = j mod e} evaluates to values[j]. Requires
/// e | q^m - 1 and e not divisible by the characteristic. The defining
/// identity is replayed on every residue before returning.
std::vector<Fe> cyclotomic_mapping_poly(const FieldTable& field, std::int64_t e,
                                        const std::vector<Fe>& values);

/// Residue-indexed multiplier values of a weight vector: entry j is the
/// weight selected on {t = j mod l}; feeds cyclotomic_mapping_poly.
std::vector<Fe> weights_by_residue(const CosetSystem& cosets, const std::vector<Fe>& d);

struct LcBoundsReport {
    std::vector<std::int64_t> lcs;
    bool all_in_range = false;  ///< m <= lc <= l*m for every sequence
    bool lower_attained = false;
    bool upper_attained = false;
};

/// Checks m <= lc(s_i) <= l*m for every member of a scalar-valued set, with
/// both engines required to agree on every sequence.
LcBoundsReport lc_bounds_check(const FieldTable& field, const std::vector<ZdbFunction>& set,
                               std::int64_t l);

} // namespace zdbkit
