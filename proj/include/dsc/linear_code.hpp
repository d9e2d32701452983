#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsc/field.hpp"

namespace dsc {

struct StandardForm;

// Dense matrix over GF(q), entries stored as field logs, row-major.
class LinearCodeMatrix {
public:
    LinearCodeMatrix() = default;
    LinearCodeMatrix(FieldPtr f, int rows, int cols);
    LinearCodeMatrix(FieldPtr f, int rows, int cols, std::vector<int> logs);

    const FieldPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, int log) { a_[static_cast<std::size_t>(r) * cols_ + c] = log; }
    FieldElement element(int r, int c) const { return {f_.get(), at(r, c)}; }
    std::vector<int> row(int r) const;
    const std::vector<int>& data() const { return a_; }
    bool operator==(const LinearCodeMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    void append_row(const std::vector<int>& row);
    LinearCodeMatrix select_columns(const std::vector<int>& cols) const;
    LinearCodeMatrix column_range(int first, int count) const;
    // Same rows, this matrix's columns followed by o's.
    LinearCodeMatrix hconcat(const LinearCodeMatrix& o) const;
    LinearCodeMatrix vconcat(const LinearCodeMatrix& o) const;
    LinearCodeMatrix transpose() const;

    // Reduced row echelon form with zero rows removed; pivots receive the pivot columns.
    LinearCodeMatrix rref(std::vector<int>* pivots = nullptr) const;
    int rank() const;
    // Basis of {y : G y^T = 0}, one vector per row.
    LinearCodeMatrix nullspace() const;
    bool in_row_space(const std::vector<int>& v) const;
    // message * G, message given as logs of length rows().
    std::vector<int> encode(const std::vector<int>& message) const;

    StandardForm standard_form() const;

    std::string str() const;

private:
    FieldPtr f_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> a_;
};

struct StandardForm {
    LinearCodeMatrix matrix;  // [I_k | A] in permuted column order
    std::vector<int> perm;    // perm[j] = original column now at position j
    int rank = 0;
};

int hamming_weight(const std::vector<int>& logs);
// Standard inner product of two log vectors.
int dot(const GaloisField& f, const std::vector<int>& a, const std::vector<int>& b);

struct Fixture {
    LinearCodeMatrix matrix;
    std::optional<int> expect_rank;
    std::optional<int> expect_d;
    std::string label;
};

// Header line: q=<p^m> rows=<k> cols=<n> modulus=[c0,...,cm] with optional
// expect_rank=, expect_d=, label= keys; then one comma-separated row per
// line. Lines starting with '#' are comments.
Fixture parse_fixture(std::string_view text);
Fixture read_fixture(const std::string& path);
std::string write_fixture(const LinearCodeMatrix& m, const std::string& label = {},
                          std::optional<int> expect_rank = std::nullopt,
                          std::optional<int> expect_d = std::nullopt);

}  // namespace dsc
