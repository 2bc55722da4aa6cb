#include "eqlines/analysis.hpp"
#include "eqlines/bounds.hpp"
#include "eqlines/reference.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace eqlines;

namespace {

ReferenceTable shipped(const char* name) { return load_reference(default_data_dir() / name); }

}  // namespace

TEST_CASE("parser accepts the schema and rejects malformed rows") {
    std::istringstream good("# comment\nn,alpha,value,kind,source\n401,1/23,1654.1,upper,table3\n14,,28,lower,table1\n");
    ReferenceTable t = parse_reference(good, "inline");
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].value == Rational(16541, 10));
    CHECK(*t.rows[0].alpha == Rational(1, 23));
    CHECK_FALSE(t.rows[1].alpha.has_value());
    CHECK(t.rows[1].kind == RefKind::lower);

    std::istringstream no_header("401,1/5,17734,upper,table3\n");
    CHECK_THROWS(parse_reference(no_header, "x"));
    std::istringstream bad_kind("n,alpha,value,kind,source\n401,1/5,17734,maybe,table3\n");
    CHECK_THROWS(parse_reference(bad_kind, "x"));
    std::istringstream bad_fraction("n,alpha,value,kind,source\n401,1/x,17734,upper,table3\n");
    CHECK_THROWS(parse_reference(bad_fraction, "x"));
    std::istringstream short_row("n,alpha,value,kind,source\n401,1/5,17734\n");
    CHECK_THROWS(parse_reference(short_row, "x"));
}

TEST_CASE("closed-form rows are self-checked on load") {
    std::istringstream wrong_value("n,alpha,value,kind,source\n23,1/5,277,upper,table2\n");
    CHECK_THROWS(parse_reference(wrong_value, "t2"));
    std::istringstream wrong_end("n,alpha,value,kind,source\n24,1/5,276,upper,table2\n");
    CHECK_THROWS(parse_reference(wrong_end, "t2"));
}

TEST_CASE("closed-form table recomputes with zero diffs") {
    auto entries = table2_entries(shipped("table2.csv"));
    REQUIRE(entries.size() == 6);
    for (const auto& e : entries) {
        auto r = main_theorem_range(e.a);
        CHECK(r.value == e.value);
        CHECK(r.lo == e.lo);
        CHECK(r.hi == e.hi);
    }
}

TEST_CASE("flat columns of the high-dimension table") {
    ReferenceTable t = shipped("table3.csv");
    CHECK(t.rows.size() == 19 * 12);
    struct Col { long long a, value; };
    for (auto c : {Col{13, 14028}, Col{15, 24976}, Col{17, 41328}, Col{19, 64620}}) {
        auto range = main_theorem_range(c.a);
        for (long long n = 401; n <= 417; ++n) {
            if (n < range.lo || n > range.hi) continue;
            auto v = t.find(n, Rational(1, c.a));
            REQUIRE(v.has_value());
            CHECK(*v == c.value);
            CHECK(main_theorem_bound(c.a, n) == c.value);
        }
    }
    CHECK(*t.find(419, Rational(1, 9)) == 88808);
    CHECK(*t.find(401, Rational(1, 23)) == Rational(16541, 10));
}

TEST_CASE("M-bound table") {
    auto m = m_bound_map(shipped("m_bounds.csv"));
    for (long long n = 2; n <= 419; ++n) CHECK(m.count(n) == 1);
    for (long long n = 23; n <= 41; ++n) CHECK(m[n] == 276);
    CHECK(m[14] == 29);
    CHECK(m[42] == 288);
    CHECK(m[43] == 344);
    // King-Tang range rebuilt from the two formulas.
    const std::set<long long> case_a{44, 45, 46, 76, 77, 78, 117, 118, 166, 222, 286, 358};
    for (long long n = 44; n <= 400; ++n) {
        long long k = 1;
        while ((2 * k + 3) * (2 * k + 3) - 2 <= n) ++k;
        long long want;
        if (case_a.count(n)) {
            want = (Rational(4 * n * (k + 1) * (k + 2)) / Rational((2 * k + 3) * (2 * k + 3) - n)).floor().get_si();
        } else {
            long long nk = (2 * k + 1) * (2 * k + 1) - 2;
            want = nk * (nk + 1) / 2;
        }
        CAPTURE(n);
        CHECK(m[n] == want);
    }
    // 401..419 are the row maxima of the high-dimension table.
    ReferenceTable t3 = shipped("table3.csv");
    for (long long n = 401; n <= 419; ++n) {
        Rational mx;
        for (const auto& r : t3.rows)
            if (r.n == n) mx = std::max(mx, r.value);
        CHECK(m[n] == mx.floor().get_si());
    }
    CHECK(m[419] == 88808);
    CHECK(m[419] > gerzon_bound(418));
}

TEST_CASE("known two-distance values") {
    ReferenceTable g = shipped("known_g.csv");
    CHECK(g.find(22, std::nullopt) == Rational(275));
    CHECK(g.find(6, std::nullopt) == Rational(27));
    CHECK(g.find(23, std::nullopt) == Rational(276));
}

TEST_CASE("csv writer round trip") {
    ReferenceTable t = shipped("table1.csv");
    std::ostringstream out;
    write_reference_csv(out, t.rows);
    std::istringstream in(out.str());
    ReferenceTable back = parse_reference(in, "roundtrip");
    REQUIRE(back.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(back.rows[i].n == t.rows[i].n);
        CHECK(back.rows[i].value == t.rows[i].value);
        CHECK(back.rows[i].kind == t.rows[i].kind);
    }
}
