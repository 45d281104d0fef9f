#include "zdbkit/zdb.hpp"

#include <algorithm>
#include <cmath>

#include "zdbkit/errors.hpp"
#include "zdbkit/kernels.hpp"
#include "zdbkit/parallel.hpp"

namespace zdbkit {

namespace {
constexpr std::int64_t kSubTableCap = 2048; // precompute ell x ell below this
}

Codomain Codomain::base_field(const FieldTable& field) {
    Codomain c;
    c.kind_ = Kind::BaseField;
    c.field_ = &field;
    c.size_ = field.base_size();
    c.v_ = 1;
    if (c.size_ <= kSubTableCap) {
        c.sub_table_.resize(static_cast<std::size_t>(c.size_ * c.size_));
        for (std::int64_t i = 0; i < c.size_; ++i)
            for (std::int64_t j = 0; j < c.size_; ++j)
                c.sub_table_[static_cast<std::size_t>(i * c.size_ + j)] =
                    field.base_index(field.sub(field.base_element(static_cast<int>(i)),
                                               field.base_element(static_cast<int>(j))));
    }
    return c;
}

Codomain Codomain::tuple(const FieldTable& field, int v) {
    if (v < 1) throw PreconditionError("Codomain::tuple: v must be positive");
    Codomain c;
    c.kind_ = Kind::Tuple;
    c.field_ = &field;
    c.v_ = v;
    std::int64_t sz = 1;
    for (int i = 0; i < v; ++i) {
        sz *= field.base_size();
        if (sz > (std::int64_t(1) << 30))
            throw PreconditionError("Codomain::tuple: q^v too large");
    }
    c.size_ = sz;
    return c;
}

Codomain Codomain::integers_mod(std::int64_t modulus) {
    if (modulus < 1) throw PreconditionError("Codomain::integers_mod: modulus must be positive");
    Codomain c;
    c.kind_ = Kind::IntegersMod;
    c.size_ = modulus;
    return c;
}

int Codomain::sub(int i, int j) const {
    switch (kind_) {
        case Kind::BaseField: {
            if (!sub_table_.empty()) return sub_table_[static_cast<std::size_t>(i) * size_ + j];
            return field_->base_index(field_->sub(field_->base_element(i), field_->base_element(j)));
        }
        case Kind::Tuple: {
            const std::int64_t q = field_->base_size();
            std::int64_t a = i, b = j, out = 0, mult = 1;
            for (int comp = 0; comp < v_; ++comp) {
                int ci = static_cast<int>(a % q), cj = static_cast<int>(b % q);
                out += field_->base_index(field_->sub(field_->base_element(ci),
                                                      field_->base_element(cj))) * mult;
                a /= q;
                b /= q;
                mult *= q;
            }
            return static_cast<int>(out);
        }
        case Kind::IntegersMod: {
            std::int64_t d = (static_cast<std::int64_t>(i) - j) % size_;
            if (d < 0) d += size_;
            return static_cast<int>(d);
        }
    }
    return 0;
}

Fe Codomain::element(int i) const {
    if (kind_ != Kind::BaseField) throw PreconditionError("element: not a base-field codomain");
    return field_->base_element(i);
}

std::vector<Fe> Codomain::tuple_element(int i) const {
    if (kind_ == Kind::BaseField) return {field_->base_element(i)};
    if (kind_ != Kind::Tuple) throw PreconditionError("tuple_element: not a field codomain");
    std::vector<Fe> out;
    out.reserve(static_cast<std::size_t>(v_));
    const std::int64_t q = field_->base_size();
    std::int64_t a = i;
    for (int comp = 0; comp < v_; ++comp) {
        out.push_back(field_->base_element(static_cast<int>(a % q)));
        a /= q;
    }
    return out;
}

std::string Codomain::label(int i) const {
    switch (kind_) {
        case Kind::BaseField:
            return std::to_string(field_->encoding(field_->base_element(i)));
        case Kind::Tuple: {
            std::string out = "(";
            const std::int64_t q = field_->base_size();
            std::int64_t a = i;
            for (int comp = 0; comp < v_; ++comp) {
                if (comp) out += "|";
                out += std::to_string(field_->encoding(field_->base_element(static_cast<int>(a % q))));
                a /= q;
            }
            return out + ")";
        }
        case Kind::IntegersMod:
            return std::to_string(i);
    }
    return {};
}

std::string Codomain::log_label(int i) const {
    if (kind_ == Kind::BaseField) {
        Fe x = field_->base_element(i);
        return x.is_zero() ? "-" : std::to_string(x.lg);
    }
    if (kind_ == Kind::Tuple) {
        std::string out = "(";
        const std::int64_t q = field_->base_size();
        std::int64_t a = i;
        for (int comp = 0; comp < v_; ++comp) {
            if (comp) out += "|";
            Fe x = field_->base_element(static_cast<int>(a % q));
            out += x.is_zero() ? "-" : std::to_string(x.lg);
            a /= q;
        }
        return out + ")";
    }
    return std::to_string(i);
}

bool Codomain::same_alphabet(const Codomain& other) const {
    return kind_ == other.kind_ && size_ == other.size_ && v_ == other.v_ && field_ == other.field_;
}

std::vector<std::int64_t> zero_difference_counts(const ZdbFunction& f, int threads) {
    const std::int64_t n = f.n;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n > 0 ? n - 1 : 0), 0);
    const std::int32_t* v = f.values.data();
    parallel_for(1, n, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t a = lo; a < hi; ++a)
            counts[static_cast<std::size_t>(a - 1)] =
                kernels::match_count_cyclic(v, v, static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(a));
    });
    return counts;
}

std::vector<std::int64_t> cross_zero_counts(const ZdbFunction& f, const ZdbFunction& g,
                                            int threads) {
    if (f.n != g.n || !f.codomain.same_alphabet(g.codomain))
        throw PreconditionError("cross_zero_counts: length/alphabet mismatch");
    const std::int64_t n = f.n;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    const std::int32_t* vf = f.values.data();
    const std::int32_t* vg = g.values.data();
    parallel_for(0, n, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t a = lo; a < hi; ++a)
            counts[static_cast<std::size_t>(a)] =
                kernels::match_count_cyclic(vg, vf, static_cast<std::size_t>(n),
                                            static_cast<std::size_t>(a));
    });
    return counts;
}

DifferenceSpectrum difference_spectrum(const ZdbFunction& f, int threads) {
    DifferenceSpectrum spec;
    spec.n = f.n;
    spec.ell = f.ell();
    spec.zero_index = f.codomain.zero_index();
    if (f.n <= 1) return spec;
    spec.counts.assign(static_cast<std::size_t>((f.n - 1) * spec.ell), 0);
    const std::int64_t n = f.n;
    parallel_for(1, n, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t a = lo; a < hi; ++a) {
            std::int64_t* row = spec.counts.data() + (a - 1) * spec.ell;
            for (std::int64_t t = 0; t < n; ++t) {
                int b = f.codomain.sub(f.values[static_cast<std::size_t>((t + a) % n)],
                                       f.values[static_cast<std::size_t>(t)]);
                ++row[b];
            }
        }
    });
    for (std::int64_t a = 1; a < n; ++a) {
        std::int64_t sum = 0;
        for (std::int64_t b = 0; b < spec.ell; ++b) sum += spec.at(a, b);
        if (sum != n) throw std::logic_error("difference_spectrum: row sum != n");
    }
    bool constant = true;
    for (std::int64_t a = 2; a < n && constant; ++a)
        constant = spec.at(a, spec.zero_index) == spec.at(1, spec.zero_index);
    if (constant && n > 1) spec.lambda = spec.at(1, spec.zero_index);
    return spec;
}

DifferenceSpectrum multiplicative_spectrum(const ZdbFunction& f, bool include_zero_point,
                                           int threads) {
    DifferenceSpectrum spec = difference_spectrum(f, threads);
    if (include_zero_point) {
        // The extended domain point 0 has f(delta*0) - f(0) = 0 for every
        // shift, adding one coincidence to each zero column.
        for (std::int64_t a = 1; a < spec.n; ++a)
            ++spec.counts[static_cast<std::size_t>((a - 1) * spec.ell + spec.zero_index)];
        if (spec.lambda) spec.lambda = *spec.lambda + 1;
    }
    return spec;
}

ZdbCheck is_zdb(const ZdbFunction& f, int threads) {
    ZdbCheck out;
    auto counts = zero_difference_counts(f, threads);
    if (counts.empty()) {
        out.lambda = 0;
        return out;
    }
    for (std::size_t i = 1; i < counts.size(); ++i) {
        if (counts[i] != counts[0]) {
            out.witness_shift = static_cast<std::int64_t>(i) + 1;
            out.witness_count = counts[i];
            out.reference_shift = 1;
            out.reference_count = counts[0];
            return out;
        }
    }
    out.lambda = counts[0];
    return out;
}

SumIdentities sum_identities_check(const ZdbFunction& f, std::int64_t lambda) {
    std::vector<std::int64_t> tau(static_cast<std::size_t>(f.ell()), 0);
    for (std::int32_t v : f.values) ++tau[static_cast<std::size_t>(v)];
    SumIdentities out;
    for (std::int64_t t : tau) {
        out.sum_tau += t;
        out.sum_tau_sq += t * t;
    }
    out.pass = out.sum_tau == f.n && out.sum_tau_sq == f.n + lambda * (f.n - 1);
    return out;
}

LambdaBound lambda_lower_bound(std::int64_t n, std::int64_t ell) {
    if (ell < 1 || n < ell) throw PreconditionError("lambda_lower_bound: need 1 <= ell <= n");
    LambdaBound out;
    out.eps = n % ell;
    out.k = n / ell;
    if (n == 1) return out;
    const std::int64_t num = (n - out.eps) * (n + out.eps - ell);
    const std::int64_t den = ell * (n - 1);
    out.bound = (num + den - 1) / den;
    out.exact = num % den == 0;
    return out;
}

PreimageBounds preimage_size_bounds(std::int64_t n, std::int64_t ell, std::int64_t lambda) {
    PreimageBounds out;
    const __int128 l = lambda;
    const __int128 delta =
        (n + l * n - l) * ell * ell - ((__int128)n * n + n + l * n - l) * ell + (__int128)n * n;
    if (delta < 0)
        throw PreconditionError("preimage_size_bounds: negative discriminant, parameters inconsistent");
    const double sq = std::sqrt(static_cast<double>(delta));
    out.lo = (static_cast<double>(n) - sq) / static_cast<double>(ell);
    out.hi = (static_cast<double>(n) + sq) / static_cast<double>(ell);
    if (lambda * ell == n)
        out.special = PreimageCase::PerfectNonlinear;
    else if ((n + 1) % ell == 0 && lambda == (n + 1) / ell - 1)
        out.special = PreimageCase::DifferenceBalanced;
    return out;
}

PdfFamily to_pdf(const ZdbFunction& f) {
    PdfFamily pdf;
    pdf.n = f.n;
    pdf.blocks.assign(static_cast<std::size_t>(f.ell()), {});
    for (std::int64_t t = 0; t < f.n; ++t)
        pdf.blocks[static_cast<std::size_t>(f.values[static_cast<std::size_t>(t)])].push_back(t);
    for (const auto& b : pdf.blocks) pdf.block_sizes.push_back(static_cast<std::int64_t>(b.size()));
    return pdf;
}

PdfCheck verify_pdf(const PdfFamily& pdf) {
    std::vector<char> seen(static_cast<std::size_t>(pdf.n), 0);
    std::int64_t covered = 0;
    for (const auto& block : pdf.blocks) {
        for (std::int64_t x : block) {
            if (x < 0 || x >= pdf.n)
                throw PreconditionError("verify_pdf: block element out of range");
            if (seen[static_cast<std::size_t>(x)])
                throw PreconditionError("verify_pdf: blocks overlap at " + std::to_string(x));
            seen[static_cast<std::size_t>(x)] = 1;
            ++covered;
        }
    }
    if (covered != pdf.n)
        throw PreconditionError("verify_pdf: blocks cover " + std::to_string(covered) +
                                " of " + std::to_string(pdf.n) + " elements");

    std::vector<std::int64_t> diff(static_cast<std::size_t>(pdf.n), 0);
    for (const auto& block : pdf.blocks) {
        for (std::int64_t x : block) {
            for (std::int64_t y : block) {
                if (x == y) continue;
                std::int64_t g = (x - y) % pdf.n;
                if (g < 0) g += pdf.n;
                ++diff[static_cast<std::size_t>(g)];
            }
        }
    }
    PdfCheck out;
    if (pdf.n <= 1) {
        out.lambda = 0;
        return out;
    }
    for (std::int64_t g = 2; g < pdf.n; ++g) {
        if (diff[static_cast<std::size_t>(g)] != diff[1]) {
            out.witness_g = g;
            out.witness_count = diff[static_cast<std::size_t>(g)];
            out.reference_count = diff[1];
            return out;
        }
    }
    out.lambda = diff[1];
    return out;
}

} // namespace zdbkit
