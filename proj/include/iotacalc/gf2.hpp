#pragma once

// Dense bit-packed linear algebra over the two-element field.  Everything in
// this library that has to be *decided* (homotopy existence, local-map
// feasibility, torsion membership) funnels into the incremental solver below.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace iotacalc {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool b) {
        uint64_t mask = 1ull << (i & 63);
        if (b)
            w_[static_cast<size_t>(i) >> 6] |= mask;
        else
            w_[static_cast<size_t>(i) >> 6] &= ~mask;
    }

    void flip(int i) { w_[static_cast<size_t>(i) >> 6] ^= 1ull << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    int lowest_set() const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return static_cast<int>(k * 64) + __builtin_ctzll(w_[k]);
        return -1;
    }

    int popcount() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Affine system A x = b over F2, consumed one equation at a time and kept in
// reduced row echelon form.  Contradictory equations are detected as soon as
// they are inserted, which is what makes infeasible searches cheap.
class LinearSystemF2 {
public:
    explicit LinearSystemF2(int nvars) : nvars_(nvars), pivot_row_(nvars, -1) {}

    int nvars() const { return nvars_; }
    bool feasible() const { return feasible_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // vars: column indices of the nonzero coefficients (duplicates cancel).
    bool add_equation(const std::vector<int>& vars, bool rhs) {
        if (!feasible_) return false;
        BitVec row(nvars_ + 1);
        for (int v : vars) row.flip(v);
        if (rhs) row.flip(nvars_);
        return insert_row(std::move(row));
    }

    bool add_equation_bits(BitVec row) {  // row has nvars_+1 bits, last = rhs
        if (!feasible_) return false;
        return insert_row(std::move(row));
    }

    // Particular solution with all free variables set to zero.
    std::optional<std::vector<uint8_t>> solve() const {
        if (!feasible_) return std::nullopt;
        std::vector<uint8_t> x(nvars_, 0);
        for (size_t r = 0; r < rows_.size(); ++r) x[pivot_col_[r]] = rows_[r].get(nvars_);
        return x;
    }

private:
    bool insert_row(BitVec row) {
        // Stored rows are fully reduced: each contains exactly one pivot
        // column, so clearing every pivot column present in the new row is a
        // single commuting pass.
        for (size_t r = 0; r < rows_.size(); ++r)
            if (row.get(pivot_col_[r])) row.xor_with(rows_[r]);
        int lead = row.lowest_set();
        if (lead < 0) return true;  // 0 = 0
        if (lead == nvars_) {       // 0 = 1
            feasible_ = false;
            return false;
        }
        for (size_t r = 0; r < rows_.size(); ++r)
            if (rows_[r].get(lead)) rows_[r].xor_with(row);
        pivot_row_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        pivot_col_.push_back(lead);
        return true;
    }

    int nvars_;
    bool feasible_ = true;
    std::vector<BitVec> rows_;
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_;
};

// Row space of F2 vectors with membership queries and, optionally, expression
// of a member as a combination of the inserted generators.
class RowSpaceF2 {
public:
    explicit RowSpaceF2(int ncols, bool track = false) : ncols_(ncols), track_(track) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    const std::vector<int>& leads() const { return leads_; }

    // Returns true if v was independent of the current span.
    bool insert(const BitVec& v) {
        BitVec r = v;
        BitVec c;
        if (track_) {
            grow_tags();
            c = BitVec(static_cast<int>(tag_cap_));
            c.set(ninserted_, true);
        }
        ++ninserted_;
        reduce(r, c);
        if (!r.any()) return false;
        int lead = r.lowest_set();
        for (size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].get(lead)) {
                rows_[i].xor_with(r);
                if (track_) tags_[i].xor_with(c);
            }
        rows_.push_back(std::move(r));
        leads_.push_back(lead);
        if (track_) tags_.push_back(std::move(c));
        return true;
    }

    bool contains(const BitVec& v) const {
        BitVec r = v;
        BitVec dummy(0);
        reduce(r, dummy);
        return !r.any();
    }

    // Residual of v after reduction against the span.
    BitVec reduce_copy(const BitVec& v) const {
        BitVec r = v;
        BitVec dummy(0);
        reduce(r, dummy);
        return r;
    }

    // Expression of v over the *inserted* vectors (independent ones only were
    // kept, but tags record the full history).  nullopt when v is outside.
    std::optional<std::vector<int>> express(const BitVec& v) const {
        if (!track_) throw std::logic_error("RowSpaceF2: expression tracking disabled");
        BitVec r = v;
        BitVec c(static_cast<int>(tag_cap_));
        reduce(r, c);
        if (r.any()) return std::nullopt;
        std::vector<int> idx;
        for (int i = 0; i < ninserted_; ++i)
            if (c.get(i)) idx.push_back(i);
        return idx;
    }

private:
    void reduce(BitVec& r, BitVec& c) const {
        for (size_t i = 0; i < rows_.size(); ++i)
            if (r.get(leads_[i])) {
                r.xor_with(rows_[i]);
                if (track_ && c.size() > 0) c.xor_with(tags_[i]);
            }
    }

    void grow_tags() {
        if (ninserted_ < static_cast<int>(tag_cap_)) return;
        size_t ncap = tag_cap_ ? tag_cap_ * 2 : 64;
        for (auto& t : tags_) {
            BitVec nt(static_cast<int>(ncap));
            for (int i = 0; i < static_cast<int>(tag_cap_); ++i)
                if (t.get(i)) nt.set(i, true);
            t = std::move(nt);
        }
        tag_cap_ = ncap;
    }

    int ncols_;
    bool track_;
    int ninserted_ = 0;
    size_t tag_cap_ = 0;
    std::vector<BitVec> rows_;
    std::vector<int> leads_;
    std::vector<BitVec> tags_;
};

// Basis of the kernel of the linear map whose i-th row is the image of basis
// vector i (rows have `ncols` bits).
inline std::vector<BitVec> kernel_basis(const std::vector<BitVec>& rows, int ncols) {
    int n = static_cast<int>(rows.size());
    // Eliminate on the transpose: combine domain vectors, tracked in tags.
    RowSpaceF2 space(ncols, true);
    std::vector<BitVec> kernel;
    for (int i = 0; i < n; ++i) {
        BitVec r = rows[i];
        if (!space.insert(r)) {
            auto expr = space.express(r);
            BitVec comb(n);
            comb.set(i, true);
            if (expr)
                for (int j : *expr) comb.flip(j);
            kernel.push_back(std::move(comb));
        }
    }
    return kernel;
}

}  // namespace iotacalc
