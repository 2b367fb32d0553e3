#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulerkind/euler.hpp"
#include "eulerkind/table.hpp"

using namespace eulerkind;

namespace {

NumberTable small_second_kind() {
    EulerTableSpec spec;
    spec.kind = EulerTableSpec::Kind::Second;
    spec.n_max = 4;
    spec.k_max = 3;
    return euler_table(spec);
}

} // namespace

TEST_CASE("csv layout and negative-order column labels") {
    const auto t = small_second_kind();
    const std::string csv = t.to_csv();
    CHECK(csv ==
          "n\\k,0,-1,-2,-3\n"
          "0,1,1,1,1\n"
          "1,0,0,0,0\n"
          "2,0,1,2,3\n"
          "3,0,0,0,0\n"
          "4,0,1,8,21\n");
}

TEST_CASE("csv emission is byte-stable") {
    const auto t = small_second_kind();
    CHECK(t.to_csv() == t.to_csv());
    CHECK(t.to_json() == t.to_json());
}

TEST_CASE("json round trip preserves every cell") {
    const auto t = small_second_kind();
    const auto back = NumberTable::from_json(t.to_json());
    CHECK(back.family == t.family);
    CHECK(back.params == t.params);
    CHECK(back.n_min == t.n_min);
    CHECK(back.n_max == t.n_max);
    CHECK(back.k_min == t.k_min);
    CHECK(back.k_max == t.k_max);
    REQUIRE(back.cells.size() == t.cells.size());
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
        REQUIRE(back.cells[i].size() == t.cells[i].size());
        for (std::size_t j = 0; j < t.cells[i].size(); ++j) CHECK(back.cells[i][j] == t.cells[i][j]);
    }
}

TEST_CASE("out-of-range access throws") {
    const auto t = small_second_kind();
    CHECK_THROWS_AS(t.at(5, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(t.at(0, 4), IndexOutOfRangeError);
}
