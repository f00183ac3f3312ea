#pragma once

#include "stf/hasse_witt.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace stf {

// Neumaier-compensated sum; value() = s + carry. Merging adds the partial's
// main sum through the compensated path and carries the low bits along, so
// any fixed merge order reproduces bit-identical doubles.
struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    void merge(const Kahan& o) {
        add(o.s);
        c += o.c;
    }
    double value() const { return s + c; }
};

struct MomentAccumulator {
    static constexpr int kMaxMoment = 10;
    static constexpr double kLo = -6.0, kHi = 6.0;

    u64 count = 0;
    u64 zero_count = 0;
    std::array<Kahan, kMaxMoment + 1> power_sum; // power_sum[k] = sum a1^k
    std::vector<u64> hist;

    explicit MomentAccumulator(int bins = 120) : hist((size_t)bins, 0) {}

    int bins() const { return (int)hist.size(); }

    void add(double a1, bool exact_zero) {
        ++count;
        if (exact_zero) ++zero_count;
        double x = 1.0;
        for (int k = 0; k <= kMaxMoment; ++k) {
            power_sum[k].add(x);
            x *= a1;
        }
        int b = (int)((a1 - kLo) / (kHi - kLo) * bins());
        if (b < 0) b = 0;
        if (b >= bins()) b = bins() - 1;
        ++hist[(size_t)b];
    }

    void merge(const MomentAccumulator& o); // requires equal bin count

    double moment(int k) const { return count ? power_sum[(size_t)k].value() / (double)count : 0.0; }
    double zero_fraction() const { return count ? (double)zero_count / (double)count : 0.0; }
};

// Number fields whose complete splitting selects the Frobenius classes the
// trace statistics get filtered by: the trivial field, the two per-family
// splitting fields, and the identity-component field of the second family
// at c = 1.
enum class SplitField { Q, QiSqrt2C4, QiSqrt3C3, Qi4rtMinus3 };

const char* split_field_name(SplitField f);

struct PowerCondition {
    i64 num, den; // base as a rational, evaluated mod p
    u64 k;
};

// Complete-splitting test as a congruence class list plus k-th power
// residue conditions.
struct SplitFilter {
    u64 modulus = 1;
    std::vector<u64> residues;
    std::vector<PowerCondition> conds;
    bool pass(const PrimeField& F) const;
};

SplitFilter split_filter_for(SplitField field, const CurveFamily& fam);

struct ScanReport {
    std::string family;
    i64 c_num = 1, c_den = 1;
    u64 limit = 0;
    std::string filter;
    MomentAccumulator acc{120};
};

// Writes <stem>.moments.csv (n,Mn for n=1..10) and <stem>.hist.csv
// (bin_lo,bin_hi,count,density with density = count/(total*width)).
// An empty report writes blank moment values plus a warning row.
void emit_csv(const ScanReport& rep, const std::string& stem);

} // namespace stf
