#pragma once

#include <ostream>
#include <string>

#include "zdbkit/cwc.hpp"
#include "zdbkit/cyclotomy.hpp"
#include "zdbkit/fhs.hpp"
#include "zdbkit/zdb.hpp"

namespace zdbkit::io {

/// {p, s, k, modulus:[c0..cs], primitive_log_base_check: bool} — the flag
/// records whether theta is the root of the supplied modulus.
void write_field_spec_json(std::ostream& os, const FieldTable& field);

/// {e, l, r, alpha_log, classes:[{d_index, c_index, member_logs_count}]}
void write_coset_json(std::ostream& os, const CosetSystem& cosets);

/// CSV: one row per shift a, one column per codomain value b.
void write_spectrum_csv(std::ostream& os, const DifferenceSpectrum& spec, const Codomain& codomain);

/// {n, lambda, blocks:[[...]]}
void write_pdf_json(std::ostream& os, const PdfFamily& pdf);

/// One sequence per line; symbols as discrete logs for field alphabets
/// ("-" marks zero), tuple indices otherwise.
void write_fhs_txt(std::ostream& os, const FhSet& set);

/// CSV of H_{i,j}(t) for all ordered pairs and shifts.
void write_correlation_csv(std::ostream& os, const FhSet& set);

/// {lc, minimal_poly:[...logs...], index_set_size}
void write_lc_json(std::ostream& os, const LcReport& report, const FieldTable& field);

/// One codeword per row, symbols as base-field logs ("-" for zero; tuples
/// of logs for vector alphabets).
void write_cwc_csv(std::ostream& os, const ConstantWeightCode& code, const Codomain& alphabet);

/// {n, N, d, w, ell, fvs_bound_num, fvs_bound_den, optimal}
void write_cwc_report_json(std::ostream& os, const ConstantWeightCode& code, const FvsResult& fvs);

} // namespace zdbkit::io
