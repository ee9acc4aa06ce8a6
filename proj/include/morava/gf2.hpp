#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace morava {

// Dense GF(2) row vector.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t width) : width_(width), w_((width + 63) / 64, 0) {}

    std::size_t width() const { return width_; }
    bool any() const
    {
        for (auto x : w_)
            if (x)
                return true;
        return false;
    }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }
    void operator^=(const BitVec& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] ^= o.w_[i];
    }
    bool operator==(const BitVec& o) const { return width_ == o.width_ && w_ == o.w_; }

    // index of the lowest set bit, or width() if zero
    std::size_t first_set() const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return width_;
    }

private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-reduced span over GF(2), grown incrementally.
class Gf2Span {
public:
    explicit Gf2Span(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t dim() const { return rows_.size(); }

    // Reduce the row against the span; returns the remainder.
    BitVec reduce(BitVec row) const
    {
        for (const auto& r : rows_) {
            std::size_t p = r.first_set();
            if (p < width_ && row.get(p))
                row ^= r;
        }
        return row;
    }

    bool contains(const BitVec& row) const { return !reduce(row).any(); }

    // Returns true when the row enlarged the span.
    bool insert(BitVec row)
    {
        row = reduce(row);
        if (!row.any())
            return false;
        std::size_t p = row.first_set();
        for (auto& r : rows_)
            if (r.get(p))
                r ^= row;
        rows_.push_back(row);
        // keep rows ordered by pivot so the reduced form is canonical
        for (std::size_t i = rows_.size(); i > 1 && rows_[i - 1].first_set() < rows_[i - 2].first_set(); --i)
            std::swap(rows_[i - 1], rows_[i - 2]);
        return true;
    }

    const std::vector<BitVec>& rows() const { return rows_; }

    bool operator==(const Gf2Span& o) const { return width_ == o.width_ && rows_ == o.rows_; }

private:
    std::size_t width_;
    std::vector<BitVec> rows_; // reduced row-echelon, pivots increasing
};

// Kernel of the linear map sending domain basis vector i to images[i].
// Returns a basis of the kernel as domain-coordinate vectors.
std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t domain_dim);

} // namespace morava
