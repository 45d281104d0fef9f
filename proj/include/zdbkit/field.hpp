#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdbkit/errors.hpp"

namespace zdbkit {

/// Element of a tabulated finite field, held in discrete-log form.
/// lg == -1 encodes the zero element; otherwise 0 <= lg < p^s - 1 and the
/// element is theta^lg for the field's primitive element theta.
struct Fe {
    std::int32_t lg = -1;
    bool is_zero() const { return lg < 0; }
    friend bool operator==(const Fe&, const Fe&) = default;
};

/// Description of GF(p^s) together with the distinguished base field
/// GF(q) = GF(p^k), k | s.  modulus holds c0..cs of a monic irreducible
/// polynomial over GF(p), low coefficient first.
struct FieldSpec {
    std::int64_t p = 0;
    int s = 0;
    int k = 0;
    std::vector<int> modulus;
};

/// Fully tabulated GF(p^s) = GF(q^m) with q = p^k, m = s/k.
///
/// Elements are integers encoding coefficient vectors base p ("encodings"),
/// or Fe values in discrete-log form. The table stores exp (log -> encoding),
/// log (encoding -> log), and the trace to GF(q) of every element. theta is
/// a fixed primitive element: the root of the modulus when that root is
/// primitive, otherwise the primitive element with the smallest encoding.
/// Immutable after construction; safe to share across threads.
class FieldTable {
public:
    static constexpr std::int64_t kDefaultSizeCap = std::int64_t(1) << 24;

    std::int64_t p() const { return spec_.p; }
    int s() const { return spec_.s; }
    int k() const { return spec_.k; }
    int m() const { return m_; }
    std::int64_t q() const { return q_; }            ///< base field size p^k
    std::int64_t size() const { return size_; }      ///< p^s
    std::int64_t order() const { return order_; }    ///< p^s - 1
    const FieldSpec& spec() const { return spec_; }
    /// true when theta is the residue of x modulo the modulus.
    bool theta_is_modulus_root() const { return theta_is_root_; }

    Fe zero() const { return Fe{}; }
    Fe one() const { return Fe{0}; }
    Fe theta() const { return Fe{static_cast<std::int32_t>(order_ > 1 ? 1 : 0)}; }
    /// alpha = theta^((q^m-1)/(q-1)), a primitive element of GF(q).
    std::int64_t alpha_log() const { return alpha_log_; }
    Fe alpha() const { return from_log(alpha_log_); }

    Fe from_log(std::int64_t lg) const;          ///< reduces lg mod p^s - 1
    Fe from_encoding(std::int64_t enc) const;
    std::int64_t encoding(Fe x) const { return x.is_zero() ? 0 : exp_[x.lg]; }

    Fe mul(Fe x, Fe y) const;
    Fe inv(Fe x) const;                          ///< throws on zero
    Fe neg(Fe x) const;
    Fe add(Fe x, Fe y) const;
    Fe sub(Fe x, Fe y) const;
    Fe pow(Fe x, std::int64_t e) const;          ///< 0^0 = 1; negative e inverts
    Fe frobenius_q(Fe x) const;                  ///< x -> x^q

    /// Trace to the base field: x + x^q + ... + x^(q^(m-1)), tabulated.
    Fe trace(Fe x) const;

    bool in_base(Fe x) const;
    std::int64_t base_size() const { return q_; }
    /// Dense index of a base-field element (elements ordered by encoding;
    /// index 0 is zero). Throws if x is not in GF(q).
    int base_index(Fe x) const;
    Fe base_element(int idx) const;

    std::string to_string(Fe x) const;

    FieldTable(const FieldTable&) = delete;
    FieldTable& operator=(const FieldTable&) = delete;
    FieldTable(FieldTable&&) = default;
    FieldTable& operator=(FieldTable&&) = default;

private:
    FieldTable() = default;
    friend FieldTable build_field(std::int64_t, int, int,
                                  const std::optional<std::vector<int>>&, std::int64_t);

    FieldSpec spec_;
    int m_ = 0;
    std::int64_t q_ = 0, size_ = 0, order_ = 0, alpha_log_ = 0;
    bool theta_is_root_ = false;
    std::vector<std::int32_t> exp_;        // log -> encoding
    std::vector<std::int32_t> log_;        // encoding -> log, -1 for zero
    std::vector<std::int32_t> trace_enc_;  // log -> encoding of trace
    std::vector<std::int32_t> base_elems_; // sorted encodings of GF(q)
    std::vector<std::int32_t> base_idx_;   // encoding -> base index, -1 if absent

    std::int64_t add_enc(std::int64_t a, std::int64_t b) const;
    std::int64_t neg_enc(std::int64_t a) const;
};

/// Builds GF(p^s) with base degree k. If modulus is omitted, the
/// lexicographically smallest monic irreducible of degree s over GF(p) is
/// used (deterministic). A supplied modulus must be monic irreducible of
/// degree s. Throws PreconditionError on non-prime p, k not dividing s,
/// a reducible modulus, or p^s exceeding size_cap.
FieldTable build_field(std::int64_t p, int s, int k,
                       const std::optional<std::vector<int>>& modulus = std::nullopt,
                       std::int64_t size_cap = FieldTable::kDefaultSizeCap);

} // namespace zdbkit
