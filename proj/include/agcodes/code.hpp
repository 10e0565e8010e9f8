#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/linalg.hpp"

namespace agcodes {

/// A linear block code over F_q of length l = r * n: n evaluation points,
/// r coordinates per point (point-major, component-minor layout).  The
/// generator is kept in reduced row echelon form, so it doubles as a
/// canonical representative of the row space.
struct LinearCode {
    FieldRef F;
    int r = 1;       // coordinates per point
    int n = 0;       // number of points
    long k = 0;      // dimension
    FqMatrix gen;    // k x (r*n), rref, full row rank
    std::string label;

    int length() const { return r * n; }

    static LinearCode from_rows(FieldRef F, int r, int n, const FqMatrix& rows,
                                std::string label = "") {
        LinearCode c;
        c.F = std::move(F);
        c.r = r;
        c.n = n;
        c.gen = rows.row_basis();
        c.k = c.gen.rows();
        c.label = std::move(label);
        if (rows.cols() != r * n) throw std::invalid_argument("generator width is not r*n");
        return c;
    }
};

inline std::vector<int> encode(const LinearCode& C, const std::vector<int>& message) {
    if (long(message.size()) != C.k) throw std::invalid_argument("message length must equal k");
    std::vector<int> word(size_t(C.length()), 0);
    for (long i = 0; i < C.k; ++i) {
        int m = message[size_t(i)];
        if (m == 0) continue;
        for (int j = 0; j < C.length(); ++j)
            word[size_t(j)] = C.F->add(word[size_t(j)], C.F->mul(m, C.gen.at(int(i), j)));
    }
    return word;
}

inline long symbol_weight(const std::vector<int>& word) {
    long w = 0;
    for (int v : word)
        if (v != 0) ++w;
    return w;
}

inline long block_weight(const std::vector<int>& word, int r) {
    long w = 0;
    for (size_t b = 0; b * r < word.size(); ++b) {
        for (int j = 0; j < r; ++j)
            if (word[b * r + j] != 0) {
                ++w;
                break;
            }
    }
    return w;
}

/// Orthogonal complement under the standard coordinatewise pairing.
inline LinearCode dual_code(const LinearCode& C) {
    FqMatrix ns = C.gen.null_space();  // columns are dual codewords
    LinearCode d = LinearCode::from_rows(C.F, C.r, C.n, ns.transposed(),
                                         C.label.empty() ? "" : C.label + "-dual");
    return d;
}

struct DistanceResult {
    bool empty = false;   // k = 0: no nonzero codewords
    bool exact = false;
    long d_symbol = 0;    // exact d, or the best (smallest) weight found
    long d_block = 0;
    long lower_bound = 1;  // trusted lower bound when not exact
    std::vector<int> witness_message;
    std::vector<int> witness_codeword;
};

/// Exact minimum distance by full message enumeration when q^k fits the
/// budget; otherwise a randomized search reporting an interval
/// [lower_bound, best found].  Both the symbol metric (over F_q, length rn)
/// and the block metric (over F_q^r, length n) are computed in one pass, with
/// a witness codeword attaining the symbol minimum.
inline DistanceResult min_distance(const LinearCode& C, long budget = 10000000,
                                   long design_lower = 1) {
    DistanceResult res;
    res.lower_bound = std::max(1L, design_lower);
    if (C.k == 0) {
        res.empty = true;
        res.exact = true;
        return res;
    }
    const FieldRef& F = C.F;
    int q = F->size(), l = C.length(), k = int(C.k);
    double total = 1;
    for (int i = 0; i < k; ++i) total *= q;
    res.d_symbol = l + 1;
    res.d_block = C.n + 1;

    auto consider = [&](const std::vector<int>& msg, const std::vector<int>& cw) {
        long sw = symbol_weight(cw);
        if (sw == 0) return;  // zero word (zero message only; generator is full rank)
        long bw = block_weight(cw, C.r);
        if (sw < res.d_symbol) {
            res.d_symbol = sw;
            res.witness_message = msg;
            res.witness_codeword = cw;
        }
        if (bw < res.d_block) res.d_block = bw;
    };

    if (total <= double(budget)) {
        // depth-first over all messages; each level adds one precomputed
        // scaled generator row, so a node costs O(l)
        std::vector<std::vector<std::vector<int>>> scaled;
        scaled.resize(size_t(k));
        for (int i = 0; i < k; ++i) {
            scaled[size_t(i)].assign(size_t(q), std::vector<int>(size_t(l), 0));
            for (int v = 1; v < q; ++v)
                for (int j = 0; j < l; ++j)
                    scaled[size_t(i)][size_t(v)][size_t(j)] = F->mul(v, C.gen.at(i, j));
        }
        std::vector<int> msg(size_t(k), 0);
        std::vector<std::vector<int>> partial(size_t(k) + 1, std::vector<int>(size_t(l), 0));
        int depth = 0;
        while (true) {
            if (depth == k) {
                consider(msg, partial[size_t(k)]);
                // backtrack to the deepest level that can still advance
                while (depth > 0 && msg[size_t(depth - 1)] == q - 1) {
                    msg[size_t(depth - 1)] = 0;
                    --depth;
                }
                if (depth == 0) break;
                ++msg[size_t(depth - 1)];
                --depth;  // partial sums above this level are stale now
            }
            int i = depth;
            const std::vector<int>& add = scaled[size_t(i)][size_t(msg[size_t(i)])];
            if (msg[size_t(i)] == 0) {
                partial[size_t(i + 1)] = partial[size_t(i)];
            } else {
                for (int j = 0; j < l; ++j)
                    partial[size_t(i + 1)][size_t(j)] =
                        F->add(partial[size_t(i)][size_t(j)], add[size_t(j)]);
            }
            ++depth;
        }
        res.exact = true;
        return res;
    }

    // randomized search: budget samples, deterministic seed
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<int> msg(size_t(k), 0);
    long trials = std::max(1000L, budget / std::max(1L, C.k));
    for (long t = 0; t < trials; ++t) {
        bool nonzero = false;
        for (int i = 0; i < k; ++i) {
            msg[size_t(i)] = int(next() % (unsigned long long)(q));
            if (msg[size_t(i)] != 0) nonzero = true;
        }
        if (!nonzero) continue;
        consider(msg, encode(C, msg));
    }
    res.exact = false;
    return res;
}

struct ErasureDecodeResult {
    bool ok = false;
    std::vector<int> message;
    std::vector<int> codeword;
};

/// Recover the message from a codeword with known erased positions (marked
/// true in erased).  Succeeds iff the generator restricted to the surviving
/// columns still has rank k; in particular any d-1 erasures are recoverable.
/// Failure is a value, not an error.
inline ErasureDecodeResult erasure_decode(const LinearCode& C, const std::vector<int>& word,
                                          const std::vector<bool>& erased) {
    if (int(word.size()) != C.length() || int(erased.size()) != C.length())
        throw std::invalid_argument("word/erasure length must equal the code length");
    std::vector<int> keep;
    for (int j = 0; j < C.length(); ++j)
        if (!erased[size_t(j)]) keep.push_back(j);
    FqMatrix sub(C.F, int(C.k), int(keep.size()));
    std::vector<int> b(keep.size());
    for (size_t jj = 0; jj < keep.size(); ++jj) {
        for (long i = 0; i < C.k; ++i) sub.at(int(i), int(jj)) = C.gen.at(int(i), keep[jj]);
        b[jj] = word[size_t(keep[jj])];
    }
    ErasureDecodeResult out;
    std::vector<int> x = solve_left(sub, b);
    if (x.empty() && C.k > 0) return out;
    out.ok = true;
    out.message = x;
    out.codeword = encode(C, x);
    return out;
}

/// Plain-text export: header "q k l r n", then k rows of base-10 element
/// indices.
inline std::string generator_export(const LinearCode& C) {
    std::string s = std::to_string(C.F->size()) + " " + std::to_string(C.k) + " " +
                    std::to_string(C.length()) + " " + std::to_string(C.r) + " " +
                    std::to_string(C.n) + "\n";
    for (long i = 0; i < C.k; ++i) {
        for (int j = 0; j < C.length(); ++j) {
            if (j) s += " ";
            s += std::to_string(C.gen.at(int(i), j));
        }
        s += "\n";
    }
    return s;
}

}  // namespace agcodes
