#include "stf/stats.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace stf {

void MomentAccumulator::merge(const MomentAccumulator& o) {
    if (o.bins() != bins())
        throw std::invalid_argument("MomentAccumulator::merge: bin counts differ");
    count += o.count;
    zero_count += o.zero_count;
    for (int k = 0; k <= kMaxMoment; ++k) power_sum[(size_t)k].merge(o.power_sum[(size_t)k]);
    for (size_t b = 0; b < hist.size(); ++b) hist[b] += o.hist[b];
}

const char* split_field_name(SplitField f) {
    switch (f) {
    case SplitField::Q: return "q";
    case SplitField::QiSqrt2C4: return "qi-sqrt2-c4";
    case SplitField::QiSqrt3C3: return "qi-sqrt3-c3";
    case SplitField::Qi4rtMinus3: return "qi-4rt-minus3";
    }
    return "?";
}

bool SplitFilter::pass(const PrimeField& F) const {
    if (modulus > 1) {
        u64 r = F.p % modulus;
        bool ok = false;
        for (u64 a : residues)
            if (a == r) { ok = true; break; }
        if (!ok) return false;
    }
    for (const auto& c : conds) {
        u64 num = mod_signed(c.num, F.p);
        u64 den = (u64)c.den % F.p;
        if (num == 0 || den == 0) return false; // p meets the base: not split
        if (!kth_power_residue(mul_mod(num, inv_mod(den, F), F.p), c.k, F)) return false;
    }
    return true;
}

SplitFilter split_filter_for(SplitField field, const CurveFamily& fam) {
    switch (field) {
    case SplitField::Q:
        return SplitFilter{1, {0}, {}};
    case SplitField::QiSqrt2C4:
        return SplitFilter{8, {1}, {{fam.c_num, fam.c_den, 4}}};
    case SplitField::QiSqrt3C3:
        return SplitFilter{12, {1}, {{fam.c_num, fam.c_den, 3}}};
    case SplitField::Qi4rtMinus3:
        return SplitFilter{4, {1}, {{-3, 1, 4}}};
    }
    throw std::invalid_argument("split_filter_for: unknown field");
}

void emit_csv(const ScanReport& rep, const std::string& stem) {
    const auto& acc = rep.acc;
    {
        std::ofstream out(stem + ".moments.csv");
        if (!out) throw std::runtime_error("emit_csv: cannot open " + stem + ".moments.csv");
        out << "n,Mn\n";
        for (int k = 1; k <= MomentAccumulator::kMaxMoment; ++k) {
            out << k << ",";
            if (acc.count) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.12g", acc.moment(k));
                out << buf;
            }
            out << "\n";
        }
        if (!acc.count) out << "# empty report: no primes scanned\n";
    }
    {
        std::ofstream out(stem + ".hist.csv");
        if (!out) throw std::runtime_error("emit_csv: cannot open " + stem + ".hist.csv");
        out << "bin_lo,bin_hi,count,density\n";
        double width = (MomentAccumulator::kHi - MomentAccumulator::kLo) / acc.bins();
        for (int b = 0; b < acc.bins(); ++b) {
            double lo = MomentAccumulator::kLo + width * b;
            double hi = lo + width;
            u64 cnt = acc.hist[(size_t)b];
            double dens = acc.count ? (double)cnt / ((double)acc.count * width) : 0.0;
            char buf[160];
            std::snprintf(buf, sizeof buf, "%.6f,%.6f,%llu,%.12g\n", lo, hi,
                          (unsigned long long)cnt, dens);
            out << buf;
        }
    }
}

} // namespace stf
