#include "asa/snf.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace asa {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

class SnfWorker {
public:
    SnfWorker(const IntegerMatrix& m, SnfOptions options)
        : a_(m), options_(options) {
        if (options_.track_left)
            left_ = IntegerMatrix::identity(m.rows());
        if (options_.track_right) {
            right_ = IntegerMatrix::identity(m.cols());
            right_inv_ = IntegerMatrix::identity(m.cols());
        }
    }

    SnfResult run() {
        const std::size_t k = std::min(a_.rows(), a_.cols());
        for (std::size_t t = 0; t < k; ++t) {
            if (!reduce_block(t))
                break;
            if (a_(t, t) < 0)
                negate_row(t);
        }
        SnfResult out;
        out.diagonal.reserve(k);
        for (std::size_t t = 0; t < k; ++t)
            out.diagonal.push_back(a_(t, t));
        out.left_transform = std::move(left_);
        out.right_transform = std::move(right_);
        out.right_inverse = std::move(right_inv_);
        return out;
    }

private:
    // Returns false when the active block is entirely zero.
    bool reduce_block(std::size_t t) {
        while (true) {
            auto pivot = smallest_entry(t);
            if (!pivot)
                return false;
            swap_rows(t, pivot->row);
            swap_cols(t, pivot->col);

            bool clean = true;
            const BigInt p = a_(t, t);
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == 0)
                    continue;
                BigInt q = a_(i, t) / p;
                add_row_multiple(i, t, -q);
                if (a_(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == 0)
                    continue;
                BigInt q = a_(t, j) / p;
                add_col_multiple(j, t, -q);
                if (a_(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            if (auto bad = first_non_multiple(t)) {
                add_row_multiple(t, bad->row, 1);
                continue;
            }
            return true;
        }
    }

    std::optional<Position> smallest_entry(std::size_t t) const {
        std::optional<Position> best;
        BigInt best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const BigInt& v = a_(i, j);
                if (v == 0)
                    continue;
                BigInt av = abs(v);
                if (!best || av < best_abs) {
                    best = Position{i, j};
                    best_abs = std::move(av);
                    if (best_abs == 1)
                        return best;
                }
            }
        return best;
    }

    std::optional<Position> first_non_multiple(std::size_t t) const {
        const BigInt& p = a_(t, t);
        if (abs(p) == 1)
            return std::nullopt;
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (a_(i, j) % p != 0)
                    return Position{i, j};
        return std::nullopt;
    }

    void swap_rows(std::size_t x, std::size_t y) {
        a_.swap_rows(x, y);
        if (options_.track_left)
            left_.swap_rows(x, y);
    }

    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
        a_.add_row_multiple(dst, src, f);
        if (options_.track_left)
            left_.add_row_multiple(dst, src, f);
    }

    void negate_row(std::size_t r) {
        a_.negate_row(r);
        if (options_.track_left)
            left_.negate_row(r);
    }

    // Column operation A <- A E; right <- right E; right_inv <- E^-1 right_inv.
    void swap_cols(std::size_t x, std::size_t y) {
        a_.swap_cols(x, y);
        if (options_.track_right) {
            right_.swap_cols(x, y);
            right_inv_.swap_rows(x, y);
        }
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& f) {
        a_.add_col_multiple(dst, src, f);
        if (options_.track_right) {
            right_.add_col_multiple(dst, src, f);
            right_inv_.add_row_multiple(src, dst, -f);
        }
    }

    IntegerMatrix a_;
    SnfOptions options_;
    IntegerMatrix left_;
    IntegerMatrix right_;
    IntegerMatrix right_inv_;
};

} // namespace

std::size_t SnfResult::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const BigInt& d) { return d != 0; }));
}

SnfResult smith_normal_form(const IntegerMatrix& m, SnfOptions options) {
    return SnfWorker(m, options).run();
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
    SnfResult snf = smith_normal_form(m, {.track_left = false, .track_right = true});
    const std::size_t r = snf.rank();
    const std::size_t n = m.cols();
    IntegerMatrix basis(n, n - r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j)
            basis(i, j - r) = snf.right_transform(i, j);
    return basis;
}

} // namespace asa
