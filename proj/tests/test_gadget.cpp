#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutstack/defect.hpp"
#include "cutstack/errors.hpp"
#include "cutstack/gadget_json.hpp"
#include "cutstack/gadget_ops.hpp"
#include "cutstack/rng.hpp"

using namespace cutstack;

namespace {

Column make_column(std::vector<std::pair<Rat, Rat>> iv) {
    Column c;
    for (auto& [lo, hi] : iv) c.levels.emplace_back(lo, hi);
    return c;
}

// the fixed two-column test gadget: heights 3 and 1, measures 7/8 and 1/8
Gadget test_gadget_d() {
    Gadget g;
    g.columns.push_back(make_column({{Rat(0), Rat(7, 24)},
                                     {Rat(7, 24), Rat(14, 24)},
                                     {Rat(14, 24), Rat(21, 24)}}));
    g.columns.push_back(make_column({{Rat(21, 24), Rat(1)}}));
    g.check_invariants();
    return g;
}

} // namespace

TEST_CASE("cut_gadget: identity, halves, thirds") {
    Gadget g;
    g.columns.push_back(make_column({{Rat(0), Rat(3, 8)}}));

    SUBCASE("probs=[1] returns the same intervals") {
        auto copies = cut_gadget(g, {Rat(1)});
        CHECK(copies.size() == 1);
        CHECK(copies[0].columns[0].levels[0] == g.columns[0].levels[0]);
    }
    SUBCASE("three equal thirds partition the support") {
        auto copies = cut_gadget(g, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
        CHECK(copies.size() == 3);
        for (auto& c : copies) CHECK(c.columns[0].width() == Rat(1, 8));
        CHECK(copies[0].columns[0].levels[0].lo == Rat(0));
        CHECK(copies[0].columns[0].levels[0].hi == Rat(1, 8));
        CHECK(copies[2].columns[0].levels[0].hi == Rat(3, 8));
        Rat total = copies[0].support_measure() + copies[1].support_measure() +
                    copies[2].support_measure();
        CHECK(total == g.support_measure());
    }
    SUBCASE("distribution not summing to one is rejected") {
        CHECK_THROWS_AS(cut_gadget(g, {Rat(1, 2), Rat(1, 3)}), invalid_distribution_error);
        CHECK_THROWS_AS(cut_gadget(g, {Rat(1, 2), Rat(-1, 2), Rat(1)}),
                        invalid_distribution_error);
    }
}

TEST_CASE("stack_columns: heights add, widths must match, supports must be disjoint") {
    Column a = make_column({{Rat(0), Rat(1, 8)}, {Rat(1, 8), Rat(2, 8)}});
    Column b = make_column({{Rat(2, 8), Rat(3, 8)}, {Rat(3, 8), Rat(4, 8)}, {Rat(4, 8), Rat(5, 8)}});
    Column s = stack_columns(a, b);
    CHECK(s.height() == 5);
    CHECK(s.levels[2] == b.levels[0]);

    Column w = make_column({{Rat(6, 8), Rat(6, 8) + Rat(1, 16)}});
    CHECK_THROWS_AS(stack_columns(a, w), incompatible_columns_error);
    Column o = make_column({{Rat(1, 8), Rat(2, 8)}});
    CHECK_THROWS_AS(stack_columns(a, o), incompatible_columns_error);
}

TEST_CASE("stack_gadgets: single columns concatenate, counts multiply") {
    SUBCASE("1x1: heights add") {
        Gadget u, l;
        u.columns.push_back(make_column({{Rat(0), Rat(1, 4)}, {Rat(1, 4), Rat(1, 2)}}));
        l.columns.push_back(make_column({{Rat(1, 2), Rat(3, 4)}, {Rat(3, 4), Rat(7, 8)},
                                         {Rat(7, 8), Rat(1)}}));
        Gadget s = stack_gadgets(u, l);
        CHECK(s.num_columns() == 1);
        CHECK(s.columns[0].height() == 5);
        CHECK(s.support_measure() == u.support_measure() + l.support_measure());
    }
    SUBCASE("two-column gadget stacked with its own copy: 4 columns, heights {4,5,5,6}") {
        // heights 2 and 3, equal widths 1/16; the disjoint copy sits at +5/16
        Gadget u;
        u.columns.push_back(make_column({{Rat(0, 16), Rat(1, 16)}, {Rat(1, 16), Rat(2, 16)}}));
        u.columns.push_back(make_column(
            {{Rat(2, 16), Rat(3, 16)}, {Rat(3, 16), Rat(4, 16)}, {Rat(4, 16), Rat(5, 16)}}));
        Gadget l;
        for (const auto& c : u.columns) {
            Column shifted;
            for (const auto& iv : c.levels)
                shifted.levels.emplace_back(iv.lo + Rat(5, 16), iv.hi + Rat(5, 16));
            l.columns.push_back(shifted);
        }
        Gadget s = stack_gadgets(u, l);
        CHECK(s.num_columns() == 4);
        std::vector<long> heights;
        for (const auto& c : s.columns) heights.push_back(c.height());
        std::sort(heights.begin(), heights.end());
        CHECK(heights == std::vector<long>{4, 5, 5, 6});
        for (const auto& c : s.columns) CHECK(c.width() == Rat(1, 32));
        CHECK(s.support_measure() == u.support_measure() + l.support_measure());
    }
    SUBCASE("column count law 2x3 = 6") {
        Gadget u;
        u.columns.push_back(make_column({{Rat(0, 8), Rat(1, 8)}}));
        u.columns.push_back(make_column({{Rat(1, 8), Rat(2, 8)}}));
        Gadget l;
        l.columns.push_back(make_column({{Rat(4, 8), Rat(4, 8) + Rat(1, 12)}}));
        l.columns.push_back(make_column({{Rat(5, 8), Rat(5, 8) + Rat(1, 24)}}));
        l.columns.push_back(make_column({{Rat(6, 8), Rat(6, 8) + Rat(1, 8)}}));
        Gadget s = stack_gadgets(u, l);
        CHECK(s.num_columns() == 6);
    }
    SUBCASE("width mismatch rejected") {
        Gadget u, l;
        u.columns.push_back(make_column({{Rat(0), Rat(1, 4)}}));
        l.columns.push_back(make_column({{Rat(1, 2), Rat(5, 8)}}));
        CHECK_THROWS_AS(stack_gadgets(u, l), incompatible_gadgets_error);
    }
}

TEST_CASE("m_fold_independent basics") {
    Gadget g;
    g.columns.push_back(make_column({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}}));

    SUBCASE("m=1 is the identity on interval sets") {
        Gadget one = m_fold_independent(g, 1);
        REQUIRE(one.num_columns() == 1);
        CHECK(one.columns[0].levels == g.columns[0].levels);
    }
    SUBCASE("single column height 2, m=3: one column of height 6") {
        Gadget three = m_fold_independent(g, 3);
        CHECK(three.num_columns() == 1);
        CHECK(three.columns[0].height() == 6);
        CHECK(three.support_measure() == Rat(1));
        CHECK(three.columns[0].width() == Rat(1, 6));
    }
}

TEST_CASE("well-distribution defect: exact values on the test gadget") {
    Gadget g = test_gadget_d();
    auto cls = classes_of(g);

    // full-support single column: defect 0
    Gadget full;
    full.columns.push_back(make_column({{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(1)}}));
    Gadget st = m_fold_independent(full, 4);
    CHECK(well_distribution_defect(full, st) == Rat(0));

    // frozen exact values computed from the slot-count reduction
    CHECK(mfold_defect_exact(cls, 1) == Rat(7, 16));
    CHECK(mfold_defect_exact(cls, 2) == Rat(49, 160));
    CHECK(mfold_defect_exact(cls, 4) == Rat(3087, 16000));
    CHECK(mfold_defect_exact(cls, 16) < Rat(1, 10));
    CHECK(mfold_defect_exact(cls, 12) > Rat(1, 10));

    // provenance route agrees with the closed form
    for (long m : {1L, 2L, 3L, 4L, 6L}) {
        Gadget up = m_fold_independent(g, m);
        CHECK(well_distribution_defect(g, up) == mfold_defect_exact(cls, m));
    }

    // certified enclosure brackets the exact value
    for (long m : {2L, 8L, 32L}) {
        Rat exact = mfold_defect_exact(cls, m);
        IReal enc = mfold_defect_enclosure(cls, m, 192);
        CHECK(enc.contains(exact));
    }

    // erased provenance cannot be evaluated
    Gadget up = m_fold_independent(g, 2).without_provenance();
    CHECK_THROWS_AS(well_distribution_defect(g, up), cannot_evaluate_error);
}

TEST_CASE("defect of a distribution against a gadget stack of measure 1") {
    // single column of support measure 1: any stack of it has defect 0
    Gadget full;
    full.columns.push_back(make_column({{Rat(0), Rat(1, 4)},
                                        {Rat(1, 4), Rat(1, 2)},
                                        {Rat(1, 2), Rat(3, 4)},
                                        {Rat(3, 4), Rat(1)}}));
    for (long m : {1L, 2L, 5L}) {
        Gadget st = m_fold_independent(full, m);
        CHECK(well_distribution_defect(full, st) == Rat(0));
    }
}

TEST_CASE("mfold class summaries match materialized gadgets") {
    Gadget g = test_gadget_d();
    auto cls = classes_of(g);
    for (long m : {2L, 3L, 4L}) {
        auto folded = mfold_classes(cls, m);
        REQUIRE(folded.has_value());
        Gadget up = m_fold_independent(g, m);
        auto direct = classes_of(up);
        REQUIRE(folded->size() == direct.size());
        CHECK(classes_width(*folded) == up.width());
        CHECK(classes_support(*folded) == up.support_measure());
        CHECK(classes_count(*folded) == BigInt(static_cast<long>(up.num_columns())));
    }
}

TEST_CASE("gadget json round-trip is lossless") {
    Gadget g = m_fold_independent(test_gadget_d(), 2);
    std::string doc = gadget_to_json(g, 2);
    Gadget back = gadget_from_json(doc);
    REQUIRE(back.num_columns() == g.num_columns());
    for (size_t i = 0; i < g.columns.size(); ++i) {
        CHECK(back.columns[i].levels == g.columns[i].levels);
        CHECK(back.columns[i].provenance == g.columns[i].provenance);
    }
    CHECK(gadget_to_json(back, 2) == doc);
    CHECK_THROWS_AS(gadget_from_json("{\"format\":\"other\"}"), invalid_parameter_error);
}

TEST_CASE("random op sequences preserve support exactly (small property sweep)") {
    for (int i = 0; i < 50; ++i) {
        SplitMix64 rng(1000 + i);
        Gadget g;
        g.columns.push_back(make_column({{Rat(0), Rat(1)}}));
        Rat support = 1;
        for (int d = 0; d < 6; ++d) {
            switch (rng.below(3)) {
                case 0: {
                    long a = 1 + static_cast<long>(rng.below(5));
                    long b = 1 + static_cast<long>(rng.below(5));
                    auto parts = cut_gadget(g, {Rat(a, a + b), Rat(b, a + b)});
                    g = gadget_union(parts[0], parts[1]);
                    break;
                }
                case 1: {
                    if (g.num_columns() * g.num_columns() > 400) break;
                    auto halves = cut_gadget(g, {Rat(1, 2), Rat(1, 2)});
                    g = stack_gadgets(halves[0], halves[1]);
                    break;
                }
                case 2: {
                    if (g.num_columns() * g.num_columns() > 400) break;
                    g = m_fold_independent(g, 2);
                    break;
                }
            }
            g.check_invariants();
            REQUIRE(g.support_measure() == support);
        }
    }
}
