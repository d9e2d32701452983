#include "dsc/linear_code.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dsc/error.hpp"

namespace dsc {

LinearCodeMatrix::LinearCodeMatrix(FieldPtr f, int rows, int cols)
    : f_(std::move(f)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, GaloisField::ZERO) {}

LinearCodeMatrix::LinearCodeMatrix(FieldPtr f, int rows, int cols, std::vector<int> logs)
    : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::move(logs)) {
    if (a_.size() != static_cast<std::size_t>(rows) * cols)
        throw StructuralError("matrix data size does not match its shape");
}

std::vector<int> LinearCodeMatrix::row(int r) const {
    auto b = a_.begin() + static_cast<std::ptrdiff_t>(r) * cols_;
    return {b, b + cols_};
}

void LinearCodeMatrix::append_row(const std::vector<int>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_) throw StructuralError("row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

LinearCodeMatrix LinearCodeMatrix::select_columns(const std::vector<int>& cols) const {
    LinearCodeMatrix out(f_, rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, static_cast<int>(j), at(r, cols[j]));
    return out;
}

LinearCodeMatrix LinearCodeMatrix::column_range(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw StructuralError("column range out of bounds");
    std::vector<int> cols(count);
    for (int j = 0; j < count; ++j) cols[j] = first + j;
    return select_columns(cols);
}

LinearCodeMatrix LinearCodeMatrix::hconcat(const LinearCodeMatrix& o) const {
    if (rows_ != o.rows_) throw StructuralError("hconcat row count mismatch");
    LinearCodeMatrix out(f_, rows_, cols_ + o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
        for (int c = 0; c < o.cols_; ++c) out.set(r, cols_ + c, o.at(r, c));
    }
    return out;
}

LinearCodeMatrix LinearCodeMatrix::vconcat(const LinearCodeMatrix& o) const {
    if (cols_ != o.cols_) throw StructuralError("vconcat column count mismatch");
    std::vector<int> d = a_;
    d.insert(d.end(), o.a_.begin(), o.a_.end());
    return LinearCodeMatrix(f_ ? f_ : o.f_, rows_ + o.rows_, cols_, std::move(d));
}

LinearCodeMatrix LinearCodeMatrix::transpose() const {
    LinearCodeMatrix out(f_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    return out;
}

LinearCodeMatrix LinearCodeMatrix::rref(std::vector<int>* pivots) const {
    const auto& F = *f_;
    std::vector<int> m = a_;
    auto A = [&](int r, int c) -> int& { return m[static_cast<std::size_t>(r) * cols_ + c]; };
    std::vector<int> piv;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int sel = -1;
        for (int r = rank; r < rows_; ++r)
            if (A(r, c) >= 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != rank)
            for (int j = 0; j < cols_; ++j) std::swap(A(sel, j), A(rank, j));
        int iv = F.inv(A(rank, c));
        for (int j = 0; j < cols_; ++j) A(rank, j) = F.mul(A(rank, j), iv);
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || A(r, c) < 0) continue;
            int factor = F.neg(A(r, c));
            for (int j = 0; j < cols_; ++j)
                if (A(rank, j) >= 0) A(r, j) = F.add(A(r, j), F.mul(factor, A(rank, j)));
        }
        piv.push_back(c);
        ++rank;
    }
    m.resize(static_cast<std::size_t>(rank) * cols_);
    if (pivots) *pivots = piv;
    return LinearCodeMatrix(f_, rank, cols_, std::move(m));
}

int LinearCodeMatrix::rank() const { return rref().rows(); }

LinearCodeMatrix LinearCodeMatrix::nullspace() const {
    std::vector<int> piv;
    LinearCodeMatrix R = rref(&piv);
    std::vector<char> is_piv(cols_, 0);
    for (int c : piv) is_piv[c] = 1;
    LinearCodeMatrix out(f_, 0, cols_);
    for (int free = 0; free < cols_; ++free) {
        if (is_piv[free]) continue;
        std::vector<int> v(cols_, GaloisField::ZERO);
        v[free] = 0;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f_->neg(R.at(static_cast<int>(i), free));
        out.append_row(v);
    }
    return out;
}

bool LinearCodeMatrix::in_row_space(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw StructuralError("vector width mismatch");
    std::vector<int> piv;
    LinearCodeMatrix R = rref(&piv);
    std::vector<int> w = v;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        int c = w[piv[i]];
        if (c < 0) continue;
        int factor = f_->neg(c);
        for (int j = 0; j < cols_; ++j) w[j] = f_->add(w[j], f_->mul(factor, R.at(static_cast<int>(i), j)));
    }
    for (int x : w)
        if (x >= 0) return false;
    return true;
}

std::vector<int> LinearCodeMatrix::encode(const std::vector<int>& message) const {
    if (static_cast<int>(message.size()) != rows_) throw StructuralError("message length mismatch");
    std::vector<int> out(cols_, GaloisField::ZERO);
    for (int r = 0; r < rows_; ++r) {
        if (message[r] < 0) continue;
        for (int c = 0; c < cols_; ++c) out[c] = f_->add(out[c], f_->mul(message[r], at(r, c)));
    }
    return out;
}

StandardForm LinearCodeMatrix::standard_form() const {
    std::vector<int> piv;
    LinearCodeMatrix R = rref(&piv);
    std::vector<int> perm = piv;
    std::vector<char> used(cols_, 0);
    for (int c : piv) used[c] = 1;
    for (int c = 0; c < cols_; ++c)
        if (!used[c]) perm.push_back(c);
    return {R.select_columns(perm), perm, R.rows()};
}

std::string LinearCodeMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << f_->format(at(r, c));
        os << '\n';
    }
    return os.str();
}

int hamming_weight(const std::vector<int>& logs) {
    int w = 0;
    for (int x : logs) w += x >= 0;
    return w;
}

int dot(const GaloisField& f, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw StructuralError("inner product of vectors of different length");
    int acc = GaloisField::ZERO;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

int to_int(const std::string& key, const std::string& v) {
    int x = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), x);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
        throw ParseError("fixture header: " + key + " must be an integer");
    return x;
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::map<std::string, std::string> header;
    bool have_header = false;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(t);
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) throw ParseError("fixture header token without '=': " + tok);
                std::string key = tok.substr(0, eq);
                if (header.count(key)) throw ParseError("fixture header repeats key " + key);
                header[key] = tok.substr(eq + 1);
            }
            have_header = true;
            continue;
        }
        rows.push_back(t);
    }
    if (!have_header) throw ParseError("fixture has no header line");
    for (const auto& [k, v] : header) {
        if (k != "q" && k != "rows" && k != "cols" && k != "modulus" && k != "expect_rank" &&
            k != "expect_d" && k != "label")
            throw ParseError("unknown fixture header key " + k);
    }
    for (const char* need : {"q", "rows", "cols"})
        if (!header.count(need)) throw ParseError(std::string("fixture header lacks ") + need);
    int q = to_int("q", header["q"]);
    int nrows = to_int("rows", header["rows"]);
    int ncols = to_int("cols", header["cols"]);
    FieldPtr f;
    if (header.count("modulus")) {
        std::string ms = header["modulus"];
        if (ms.size() < 2 || ms.front() != '[' || ms.back() != ']') throw ParseError("modulus must be [c0,...,cm]");
        std::vector<int> mod;
        std::istringstream mss(ms.substr(1, ms.size() - 2));
        std::string part;
        while (std::getline(mss, part, ',')) mod.push_back(to_int("modulus", trim(part)));
        int p = 0;
        for (int d = 2; d <= q; ++d)
            if (q % d == 0) {
                p = d;
                break;
            }
        if (p == 0) throw ParseError("bad field order in fixture");
        int m = static_cast<int>(mod.size()) - 1;
        long long check = 1;
        for (int i = 0; i < m; ++i) check *= p;
        if (check != q) throw ParseError("modulus degree does not match q");
        f = GaloisField::make(p, m, mod);
    } else {
        f = GaloisField::from_order(q);
    }
    if (static_cast<int>(rows.size()) != nrows)
        throw ParseError("fixture declares " + std::to_string(nrows) + " rows but has " +
                         std::to_string(rows.size()));
    LinearCodeMatrix m(f, nrows, ncols);
    for (int r = 0; r < nrows; ++r) {
        std::istringstream rs(rows[r]);
        std::string tok;
        int c = 0;
        while (std::getline(rs, tok, ',')) {
            if (c >= ncols) throw ParseError("fixture row " + std::to_string(r + 1) + " is too long");
            m.set(r, c++, f->parse(trim(tok)));
        }
        if (c != ncols) throw ParseError("fixture row " + std::to_string(r + 1) + " is too short");
    }
    Fixture fx{m, std::nullopt, std::nullopt, header.count("label") ? header["label"] : ""};
    if (header.count("expect_rank")) fx.expect_rank = to_int("expect_rank", header["expect_rank"]);
    if (header.count("expect_d")) fx.expect_d = to_int("expect_d", header["expect_d"]);
    return fx;
}

Fixture read_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open fixture " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str());
}

std::string write_fixture(const LinearCodeMatrix& m, const std::string& label,
                          std::optional<int> expect_rank, std::optional<int> expect_d) {
    std::ostringstream os;
    os << "q=" << m.field()->q() << " rows=" << m.rows() << " cols=" << m.cols()
       << " modulus=" << m.field()->modulus_string();
    if (expect_rank) os << " expect_rank=" << *expect_rank;
    if (expect_d) os << " expect_d=" << *expect_d;
    if (!label.empty()) os << " label=" << label;
    os << '\n' << m.str();
    return os.str();
}

}  // namespace dsc
