#include "zdbkit/io.hpp"

#include <json.hpp>

namespace zdbkit::io {

using nlohmann::json;

void write_field_spec_json(std::ostream& os, const FieldTable& field) {
    const FieldSpec& s = field.spec();
    json j{{"p", s.p},
           {"s", s.s},
           {"k", s.k},
           {"modulus", s.modulus},
           {"primitive_log_base_check", field.theta_is_modulus_root()}};
    os << j.dump(2) << "\n";
}

void write_coset_json(std::ostream& os, const CosetSystem& cosets) {
    json classes = json::array();
    for (std::int64_t d = 0; d < cosets.r(); ++d)
        for (std::int64_t c = 0; c < cosets.l(); ++c)
            classes.push_back(json{{"d_index", d}, {"c_index", c},
                                   {"member_logs_count", cosets.c0_size()}});
    json j{{"e", cosets.e()},
           {"l", cosets.l()},
           {"r", cosets.r()},
           {"alpha_log", cosets.alpha_log()},
           {"classes", classes}};
    os << j.dump(2) << "\n";
}

void write_spectrum_csv(std::ostream& os, const DifferenceSpectrum& spec,
                        const Codomain& codomain) {
    os << "a";
    for (std::int64_t b = 0; b < spec.ell; ++b) os << ",b=" << codomain.label(static_cast<int>(b));
    os << "\n";
    for (std::int64_t a = 1; a < spec.n; ++a) {
        os << a;
        for (std::int64_t b = 0; b < spec.ell; ++b) os << "," << spec.at(a, b);
        os << "\n";
    }
}

void write_pdf_json(std::ostream& os, const PdfFamily& pdf) {
    json blocks = json::array();
    for (const auto& b : pdf.blocks) blocks.push_back(b);
    json j{{"n", pdf.n}, {"blocks", blocks}};
    if (pdf.lambda) j["lambda"] = *pdf.lambda;
    os << j.dump(2) << "\n";
}

void write_fhs_txt(std::ostream& os, const FhSet& set) {
    for (const auto& seq : set.seqs) {
        for (std::int64_t t = 0; t < seq.n; ++t) {
            if (t) os << " ";
            os << seq.alphabet.log_label(seq.symbols[static_cast<std::size_t>(t)]);
        }
        os << "\n";
    }
}

void write_correlation_csv(std::ostream& os, const FhSet& set) {
    os << "i,j,t,H\n";
    for (std::size_t i = 0; i < set.seqs.size(); ++i)
        for (std::size_t j = 0; j < set.seqs.size(); ++j)
            for (std::int64_t t = 0; t < set.seqs[i].n; ++t)
                os << i << "," << j << "," << t << ","
                   << hamming_correlation(set.seqs[i], set.seqs[j], t) << "\n";
}

void write_lc_json(std::ostream& os, const LcReport& report, const FieldTable&) {
    json poly = json::array();
    for (const Fe& c : report.minimal_poly) poly.push_back(static_cast<std::int64_t>(c.lg));
    json j{{"lc", report.lc}, {"minimal_poly", poly}, {"index_set_size", report.index_set_size}};
    os << j.dump(2) << "\n";
}

void write_cwc_csv(std::ostream& os, const ConstantWeightCode& code, const Codomain& alphabet) {
    for (const auto& row : code.codewords) {
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (t) os << ",";
            os << alphabet.log_label(row[t]);
        }
        os << "\n";
    }
}

void write_cwc_report_json(std::ostream& os, const ConstantWeightCode& code, const FvsResult& fvs) {
    json j{{"n", code.n},       {"N", code.N},
           {"d", code.d},       {"w", code.w},
           {"ell", code.ell},   {"fvs_applicable", fvs.applicable},
           {"fvs_bound_num", fvs.applicable ? fvs.bound.num : 0},
           {"fvs_bound_den", fvs.applicable ? fvs.bound.den : 1},
           {"optimal", fvs.optimal}};
    os << j.dump(2) << "\n";
}

} // namespace zdbkit::io
