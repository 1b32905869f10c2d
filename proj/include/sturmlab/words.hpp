#pragma once

// Words over a two-letter alphabet {a, b} of distinct positive integers,
// stored run-length compressed (|w_k| grows like p_k). Provides the
// Sturmian recurrence w_{k+1} = w_k^{s_{k+1}} w_{k-1}, the palindromic
// prefix ladder, and the continued-fraction morphism Phi.

#include <stdexcept>
#include <utility>
#include <vector>

#include "sturmlab/mat2.hpp"
#include "sturmlab/seqspec.hpp"

namespace sturmlab {

class Word {
  public:
    Word() = default;

    static Word letter(long value, long count = 1) {
        if (value < 1) throw std::invalid_argument("Word: letter values must be >= 1");
        if (count < 0) throw std::invalid_argument("Word: negative run length");
        Word w;
        if (count > 0) w.runs_.emplace_back(value, count);
        w.size_ = count;
        return w;
    }

    long size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const std::vector<std::pair<long, long>>& runs() const { return runs_; }

    Word operator+(const Word& o) const {
        Word w = *this;
        for (const auto& r : o.runs_) w.push_run(r.first, r.second);
        return w;
    }

    Word power(long e) const {
        if (e < 0) throw std::invalid_argument("Word::power: negative exponent");
        Word w;
        for (long j = 0; j < e; ++j) w = w + *this;
        return w;
    }

    long letter_at(long idx) const {
        if (idx < 0 || idx >= size_) throw std::out_of_range("Word::letter_at");
        for (const auto& r : runs_) {
            if (idx < r.second) return r.first;
            idx -= r.second;
        }
        throw std::logic_error("Word: corrupt run table");
    }

    Word prefix(long len) const {
        if (len < 0 || len > size_) throw std::out_of_range("Word::prefix");
        Word w;
        for (const auto& r : runs_) {
            if (len == 0) break;
            long take = std::min(len, r.second);
            w.push_run(r.first, take);
            len -= take;
        }
        return w;
    }

    Word reversed() const {
        Word w;
        for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) w.push_run(it->first, it->second);
        return w;
    }

    bool is_palindrome() const { return *this == reversed(); }

    bool is_prefix_of(const Word& w) const {
        return size_ <= w.size_ && w.prefix(size_) == *this;
    }

    /// this^{-1} * w, defined when this is a prefix of w.
    Word quotient_of(const Word& w) const {
        if (!is_prefix_of(w)) throw std::domain_error("Word: prefix quotient undefined");
        Word tail;
        long skip = size_;
        for (const auto& r : w.runs_) {
            if (skip >= r.second) {
                skip -= r.second;
            } else {
                tail.push_run(r.first, r.second - skip);
                skip = 0;
            }
        }
        return tail;
    }

    std::vector<long> expand() const {
        std::vector<long> out;
        out.reserve(static_cast<size_t>(size_));
        for (const auto& r : runs_)
            for (long j = 0; j < r.second; ++j) out.push_back(r.first);
        return out;
    }

    bool operator==(const Word&) const = default;

  private:
    void push_run(long value, long count) {
        if (count == 0) return;
        if (!runs_.empty() && runs_.back().first == value)
            runs_.back().second += count;
        else
            runs_.emplace_back(value, count);
        size_ += count;
    }

    std::vector<std::pair<long, long>> runs_;
    long size_ = 0;
};

/// w_0 = b, w_1 = b^{s_1-1} a, w_{k+1} = w_k^{s_{k+1}} w_{k-1}.
inline Word sturmian_word(const SeqSpec& s, long a, long b, long k) {
    if (a == b) throw std::invalid_argument("sturmian_word: letters must differ");
    if (k < 0) throw std::invalid_argument("sturmian_word: k must be >= 0");
    Word w0 = Word::letter(b);
    if (k == 0) return w0;
    Word w1 = Word::letter(b, s.s(1) - 1) + Word::letter(a);
    for (long j = 1; j < k; ++j) {
        Word next = w1.power(s.s(j + 1)) + w0;
        w0 = std::move(w1);
        w1 = std::move(next);
    }
    return w1;
}

/// Palindromic prefixes pi_0, pi_1, ... of the infinite word, ordered by
/// increasing length: pi_i = b^i for 0 <= i < t_1, and
/// pi_{t_k+ell} = (w_k^{ell+1} w_{k-1})' (last two letters dropped) after.
/// The recurrence pi_{i+1} = pi_i (pi_{psi(i)}^{-1} pi_i) holds whenever
/// psi(i) >= 0.
inline std::vector<Word> palindromic_prefixes(const SeqSpec& s, long a, long b, long count) {
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(count));
    if (count <= 0) return out;
    long t1 = s.t(1);
    // Deep enough master word; every pi_i is one of its prefixes.
    auto [k_last, ell_last] = s.block(count - 1);
    Word master = sturmian_word(s, a, b, k_last + 2);
    std::vector<Int> p = s.p_seq(k_last + 2);
    for (long i = 0; i < count; ++i) {
        if (i < t1) {
            out.push_back(Word::letter(b, i));
            continue;
        }
        auto [k, ell] = s.block(i);
        // |pi_i| = (ell+1) p_k + p_{k-1} - 2
        Int len = Int(ell + 1) * p[static_cast<size_t>(k + 1)] + p[static_cast<size_t>(k)] - 2;
        out.push_back(master.prefix(len.get_si()));
    }
    return out;
}

/// Phi(letter v) = (v 1; 1 0); monoid morphism, empty word -> Id.
inline IntMat2 phi_morphism(const Word& w) {
    IntMat2 m = IntMat2::identity();
    for (const auto& r : w.runs())
        m = m * pow(IntMat2{Int(r.first), 1, 1, 0}, static_cast<unsigned long>(r.second));
    return m;
}

/// Matrix seed of the continued-fraction case: (Phi(w_0), Phi(w_1)) =
/// (Phi(b), Phi(b^{s_1-1} a)). The associated limit is xi_phi = [0; w_phi].
inline std::pair<IntMat2, IntMat2> cf_seed(const SeqSpec& s, long a, long b) {
    return {phi_morphism(sturmian_word(s, a, b, 0)), phi_morphism(sturmian_word(s, a, b, 1))};
}

}  // namespace sturmlab
