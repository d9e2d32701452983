#include <doctest.h>

#include "dsc/config.hpp"
#include "dsc/construction.hpp"
#include "dsc/error.hpp"

using namespace dsc;

namespace {

std::string data(const std::string& rel) { return std::string(DSC_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("construction reproduces the printed G' matrices") {
    for (int e : {1, 2}) {
        CAPTURE(e);
        JobConfig job = load_job(data("configs/example" + std::to_string(e) + ".json"));
        DoubleCodeSpec c = normalize_l(job.code());
        LinearCodeMatrix gp = build_construction(construction_input(c, job.gray_matrix()), c.r, c.s);
        Fixture fx = read_fixture(data("fixtures/example" + std::to_string(e) + "_Gprime.txt"));
        CHECK(gp.rows() == fx.matrix.rows());
        CHECK(gp.rref() == fx.matrix.rref());
    }
}

TEST_CASE("printed G matrices are the Gray image with coordinates grouped per block") {
    for (int e : {1, 2}) {
        JobConfig job = load_job(data("configs/example" + std::to_string(e) + ".json"));
        DoubleCodeSpec c = normalize_l(job.code());
        LinearCodeMatrix g = gray_generator(c, job.gray_matrix());
        std::vector<int> perm;
        for (int j = 0; j < c.r; ++j) perm.push_back(2 * j);
        for (int j = 0; j < c.r; ++j) perm.push_back(2 * j + 1);
        for (int j = 0; j < c.s; ++j) perm.push_back(2 * c.r + 2 * j);
        for (int j = 0; j < c.s; ++j) perm.push_back(2 * c.r + 2 * j + 1);
        Fixture fx = read_fixture(data("fixtures/example" + std::to_string(e) + "_G.txt"));
        CHECK(g.select_columns(perm).rref() == fx.matrix.rref());
    }
}

TEST_CASE("block shapes") {
    FieldPtr f = GaloisField::from_order(4);
    LinearCodeMatrix G(f, 2, 4, {0, 1, -1, 0, 1, -1, 0, 2});
    LinearCodeMatrix LH3(f, 1, 10, std::vector<int>(10, 0));
    LinearCodeMatrix out = build_construction({G, LH3}, 2, 3);
    CHECK(out.rows() == 3);
    CHECK(out.cols() == 10);
    CHECK(out.column_range(4, 4).row(0) == G.row(0));
    CHECK(out.column_range(4, 4).row(1) == G.row(1));
    CHECK(out.column_range(8, 2) == LinearCodeMatrix(f, 2, 2).vconcat(LinearCodeMatrix(f, 1, 2, {0, 0})));

    LinearCodeMatrix LH1(f, 1, 6, std::vector<int>(6, 0));
    out = build_construction({G, LH1}, 2, 1);
    CHECK(out.cols() == 6);
    CHECK(out.column_range(4, 2).row(0) == G.column_range(0, 2).row(0));

    LinearCodeMatrix LH2(f, 1, 8, std::vector<int>(8, 0));
    out = build_construction({G, LH2}, 2, 2);
    CHECK(out.column_range(0, 4).row(1) == G.row(1));
    CHECK(out.column_range(4, 4).row(0) == G.row(0));

    CHECK_THROWS_AS(build_construction({G, LH2}, 2, 3), StructuralError);
    CHECK_THROWS_AS(build_construction({G, LH2}, 3, 1), StructuralError);
}

TEST_CASE("construction input dimensions") {
    JobConfig job = load_job(data("configs/example2.json"));
    DoubleCodeSpec c = normalize_l(job.code());
    ConstructionInput inp = construction_input(c, job.gray_matrix());
    CHECK(inp.G.rows() == 8);
    CHECK(inp.G.cols() == 16);
    CHECK(inp.LH.rows() == 12);
    CHECK(inp.LH.cols() == 32);
}

TEST_CASE("zero code construction is empty") {
    FieldPtr f = GaloisField::from_order(9);
    ConstructionReport r = evaluate_construction(DoubleCodeSpec::zero_code(f, 1, 4, 2), default_n(f));
    CHECK(r.empty);
    CHECK(r.n == 12);
    CHECK(r.rows == 0);
}
