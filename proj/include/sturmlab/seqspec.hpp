#pragma once

// The driving sequence s = (s_k)_{k>=1} of positive integers, given as an
// explicit prefix plus an optional periodic tail, and everything indexed by
// it: t_k = s_0+...+s_k (s_0 = -1), the function psi, the continuants p_k
// and their shifted variants q_k^(i).

#include <stdexcept>
#include <vector>

#include "sturmlab/numeric.hpp"

namespace sturmlab {

class SeqSpec {
  public:
    SeqSpec() = default;

    /// prefix holds s_1..s_m; period, when nonempty, continues forever.
    SeqSpec(std::vector<long> prefix, std::vector<long> period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {
        for (long v : prefix_)
            if (v < 1) throw std::invalid_argument("SeqSpec: entries must be >= 1");
        for (long v : period_)
            if (v < 1) throw std::invalid_argument("SeqSpec: entries must be >= 1");
    }

    static SeqSpec constant(long v) { return SeqSpec({}, {v}); }
    static SeqSpec periodic(std::vector<long> period) { return SeqSpec({}, std::move(period)); }
    static SeqSpec finite(std::vector<long> prefix) { return SeqSpec(std::move(prefix), {}); }

    bool is_finite() const { return period_.empty(); }
    const std::vector<long>& prefix() const { return prefix_; }
    const std::vector<long>& period() const { return period_; }

    /// Largest defined index for a finite spec.
    long max_index() const {
        return is_finite() ? static_cast<long>(prefix_.size()) : -1;
    }

    /// s_k for k >= 1.
    long s(long k) const {
        if (k < 1) throw std::out_of_range("SeqSpec::s: k must be >= 1");
        if (k <= static_cast<long>(prefix_.size())) return prefix_[static_cast<size_t>(k - 1)];
        if (period_.empty())
            throw std::out_of_range("SeqSpec::s: index beyond finite spec");
        long off = k - 1 - static_cast<long>(prefix_.size());
        return period_[static_cast<size_t>(off % static_cast<long>(period_.size()))];
    }

    /// t_k = s_0 + s_1 + ... + s_k with s_0 = -1; t_0 = -1.
    long t(long k) const {
        if (k < 0) throw std::out_of_range("SeqSpec::t: k must be >= 0");
        long acc = -1;
        for (long j = 1; j <= k; ++j) acc += s(j);
        return acc;
    }

    /// The unique (k, ell) with i = t_k + ell, k >= 0, 0 <= ell < s_{k+1}.
    /// Defined for every i >= -1.
    std::pair<long, long> block(long i) const {
        if (i < -1) throw std::out_of_range("SeqSpec::block: i must be >= -1");
        long k = 0, tk = -1;
        while (true) {
            long tn = tk + s(k + 1);
            if (tn > i) return {k, i - tk};
            tk = tn;
            ++k;
        }
    }

    /// True iff i = t_k for some k >= 1.
    bool is_t(long i) const {
        if (i < t(1)) return false;
        auto [k, ell] = block(i);
        return ell == 0;
    }

    /// psi(i) = t_{k-1} - 1 when i = t_k (k >= 1), else i - 1.
    long psi(long i) const {
        if (i < 0) throw std::out_of_range("SeqSpec::psi: i must be >= 0");
        auto [k, ell] = block(i);
        if (ell == 0 && k >= 1) return t(k - 1) - 1;
        return i - 1;
    }

    /// p_{-1}..p_{k_max} with (p_{-1}, p_0) = (0, 1), p_{k+1} = s_{k+1} p_k + p_{k-1}.
    std::vector<Int> p_seq(long k_max) const {
        if (k_max < -1) throw std::invalid_argument("p_seq: k_max must be >= -1");
        std::vector<Int> p;
        p.reserve(static_cast<size_t>(k_max) + 2);
        p.emplace_back(0);
        if (k_max >= 0) p.emplace_back(1);
        for (long k = 0; k < k_max; ++k) p.push_back(Int(s(k + 1)) * p.back() + p[p.size() - 2]);
        return p;
    }

    Int p(long k) const {
        auto v = p_seq(k);
        return v.back();
    }

    /// q_k^(i): 0 for k < i, 1 for k = i, then q_k = s_k q_{k-1} + q_{k-2}.
    Int q_shift(long i, long k) const {
        if (i < 0) throw std::invalid_argument("q_shift: i must be >= 0");
        if (k < i) return 0;
        Int prev = 0, cur = 1;  // q_{i-1}, q_i
        for (long j = i + 1; j <= k; ++j) {
            Int next = Int(s(j)) * cur + prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }

    bool operator==(const SeqSpec&) const = default;

  private:
    std::vector<long> prefix_;
    std::vector<long> period_;
};

}  // namespace sturmlab
