#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "hooktab/crowding.hpp"
#include "hooktab/enumerate.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/uncrowding.hpp"

using namespace hooktab;
using fixtures::make_hvt;

TEST_CASE("crowding plan of the worked example") {
    auto plan = crowding_plan(fixtures::crowding_example_flagged());
    CHECK(plan.order == std::vector<Cell>{{1, 5}, {1, 4}, {3, 2}, {2, 3}});
    CHECK(plan.alphas == std::vector<int>{4, 3, 1, 1});
    CHECK(plan.destinations == std::vector<int>{1, 1, 1, 2});

    auto empty = crowding_plan(
        FlaggedTableau::empty(Partition({2, 1}), Orientation::ColumnFlagged));
    CHECK(empty.order.empty());

    // Single entry: order, alpha and destination read off directly.
    auto single = crowding_plan(FlaggedTableau::validate(
        Partition({2, 1}), Partition({3, 1}), Orientation::ColumnFlagged, {{Cell{1, 3}, 2}}));
    CHECK(single.order == std::vector<Cell>{{1, 3}});
    CHECK(single.alphas == std::vector<int>{2});
    CHECK(single.destinations == std::vector<int>{1});
}

TEST_CASE("crowding bump on the letter-keeping example") {
    auto [result, target] = crowd_bump(fixtures::social_distancing_T(), Cell{1, 2});
    CHECK(result == fixtures::social_distancing_T_result());
    CHECK(target == Cell{1, 1});
    CHECK(result.weight() == fixtures::social_distancing_T().weight());
}

TEST_CASE("crowding bump on the letter-losing example") {
    auto s = fixtures::social_distancing_S();
    auto [result, target] = crowd_bump(s, Cell{1, 2});
    CHECK(result == fixtures::social_distancing_S_result());
    CHECK(target == Cell{2, 1});
    CHECK(result.total_letters() == s.total_letters() - 1);
}

TEST_CASE("crowding bump corner case with empty arm and leg") {
    // Corner with a bare hook: the hook moves one column left, weight kept.
    auto t = make_hvt({{1, 1, 1, {}, {}}, {1, 2, 2, {}, {}}, {2, 1, 3, {}, {}}});
    auto [result, target] = crowd_bump(t, Cell{1, 2});
    CHECK(result == make_hvt({{1, 1, 1, {2}, {}}, {2, 1, 3, {}, {}}}));
    CHECK(target == Cell{1, 1});
    CHECK(weight_of(result.cells()) == weight_of(t.cells()));
}

TEST_CASE("crowding bump precondition violations") {
    // Two arm letters.
    auto two_arms = make_hvt({{1, 1, 1, {}, {}}, {1, 2, 1, {1, 1}, {}}});
    CHECK_THROWS_AS(crowd_bump(two_arms, Cell{1, 2}), PreconditionError);
    // Empty arm at a non-corner.
    auto tall = make_hvt({{1, 1, 1, {}, {}}, {1, 2, 1, {}, {}}, {2, 1, 2, {}, {}}, {2, 2, 2, {}, {}}});
    CHECK_THROWS_AS(crowd_bump(tall, Cell{1, 2}), PreconditionError);
    // First column has no column to the left.
    auto col1 = make_hvt({{1, 1, 1, {1}, {}}});
    CHECK_THROWS_AS(crowd_bump(col1, Cell{1, 1}), PreconditionError);
}

TEST_CASE("crowding map golden sequence") {
    auto s = fixtures::crowding_example_svt();
    auto f = fixtures::crowding_example_flagged();
    auto result = crowd(s, f, /*validate_intermediates=*/true);

    auto stages = fixtures::crowding_example_stages();
    REQUIRE(result.stages.size() == 5);
    CHECK(result.stages[0] == s);
    for (std::size_t k = 0; k < stages.size(); ++k) CHECK(result.stages[k + 1] == stages[k]);
    CHECK(result.T == stages.back());
    CHECK(result.T.shape() == Partition({3, 2, 1}));
    CHECK(result.T.arm_excess() == 4);

    REQUIRE(result.paths.size() == 4);
    CHECK(result.paths[0] == InsertionPath{{1, 5}, {1, 4}, {2, 3}, {2, 2}, {2, 1}});
    CHECK(result.paths[1] == InsertionPath{{1, 4}, {2, 3}, {2, 2}, {3, 1}});
    CHECK(result.paths[2] == InsertionPath{{3, 2}, {3, 1}});
    CHECK(result.paths[3] == InsertionPath{{2, 3}, {2, 2}});
}

TEST_CASE("crowding trivial case") {
    auto s = make_hvt({{1, 1, 1, {}, {2}}, {1, 2, 2, {}, {}}});
    auto f = FlaggedTableau::empty(s.shape(), Orientation::ColumnFlagged);
    auto result = crowd(s, f);
    CHECK(result.T == s);
    CHECK(k_lambda_member(s, f));
}

TEST_CASE("membership in the crowding domain") {
    CHECK(k_lambda_member(fixtures::crowding_example_svt(), fixtures::crowding_example_flagged()));
    // The social-distancing pair is rejected, and crowd reports where.
    CHECK_FALSE(k_lambda_member(fixtures::social_distancing_S(), fixtures::social_distancing_flagged()));
    try {
        crowd(fixtures::social_distancing_S(), fixtures::social_distancing_flagged());
        FAIL("expected NotInKLambdaError");
    } catch (const NotInKLambdaError& e) {
        CHECK(e.stage == 1);
        CHECK(e.step == 1);
    }
}

TEST_CASE("crowd rejects mismatched shapes") {
    auto s = fixtures::crowding_example_svt();
    auto wrong = FlaggedTableau::empty(Partition({2, 1}), Orientation::ColumnFlagged);
    CHECK_THROWS_AS(crowd(s, wrong), ShapeMismatchError);
}

TEST_CASE("round trip: crowd after uncrowd is the identity") {
    for (const auto& shape : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1}),
                              Partition({3})}) {
        for (int a = 0; a <= 2; ++a) {
            for (int l = 0; l + a <= 2; ++l) {
                for (const auto& t : enumerate_hvt(shape, 3, a, l)) {
                    auto u = uncrowd(t);
                    CHECK(k_lambda_member(u.P, u.Q));
                    auto back = crowd(u.P, u.Q);
                    CHECK(back.T == t);
                }
            }
        }
    }
}

TEST_CASE("round trip: uncrowd after crowd fixes every admitted pair") {
    for (const auto& lambda : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})}) {
        for (const auto& mu : Partition::all_containing(lambda, lambda.size() + 2)) {
            if (mu.length() != lambda.length()) continue;
            auto flagged = enumerate_flagged(lambda, mu, Orientation::ColumnFlagged);
            if (flagged.empty()) continue;
            int max_leg = 2 - (mu.size() - lambda.size());
            for (int l = 0; l <= max_leg; ++l) {
                for (const auto& s : enumerate_hvt(mu, 3, 0, l)) {
                    for (const auto& f : flagged) {
                        if (!k_lambda_member(s, f)) continue;
                        auto t = crowd(s, f);
                        auto u = uncrowd(t.T);
                        CHECK(u.P == s);
                        CHECK(u.Q == f);
                    }
                }
            }
        }
    }
}

TEST_CASE("uncrowding image is exactly the admitted set") {
    // For a fixed inner shape, the pairs produced by uncrowding coincide
    // with the pairs accepted by the membership test.
    Partition lambda({2, 1});
    std::set<std::pair<HookValuedTableau, FlaggedTableau>> image;
    for (int a = 0; a <= 2; ++a) {
        for (int l = 0; l + a <= 2; ++l) {
            for (const auto& t : enumerate_hvt(lambda, 3, a, l)) {
                auto u = uncrowd(t);
                image.insert({u.P, u.Q});
            }
        }
    }
    int admitted = 0;
    for (const auto& mu : Partition::all_containing(lambda, lambda.size() + 2)) {
        if (mu.length() != lambda.length()) continue;
        int max_leg = 2 - (mu.size() - lambda.size());
        for (int l = 0; l <= max_leg; ++l) {
            for (const auto& s : enumerate_hvt(mu, 3, 0, l)) {
                for (const auto& f : enumerate_flagged(lambda, mu, Orientation::ColumnFlagged)) {
                    bool member = k_lambda_member(s, f);
                    CHECK(member == (image.count({s, f}) > 0));
                    if (member) ++admitted;
                }
            }
        }
    }
    CHECK(admitted == static_cast<int>(image.size()));
}

TEST_CASE("trace mode records every bump snapshot") {
    auto r = crowd(fixtures::crowding_example_svt(), fixtures::crowding_example_flagged(), true);
    REQUIRE(r.trace.size() == 4);
    for (std::size_t j = 0; j < r.trace.size(); ++j) {
        CHECK(r.trace[j].size() == static_cast<std::size_t>(r.plan.alphas[j]) + 1);
        CHECK(r.trace[j].front() == r.stages[j]);
        CHECK(r.trace[j].back() == r.stages[j + 1]);
    }
    // Without trace mode the per-bump snapshots are skipped.
    CHECK(crowd(fixtures::crowding_example_svt(), fixtures::crowding_example_flagged()).trace.empty());
}

TEST_CASE("bump targets follow the rightmost-column, topmost-cell discipline") {
    // After each crowding bump, the target must be the topmost cell with
    // nonzero arm excess in the rightmost such column.
    for (const auto& lambda : {Partition({2}), Partition({2, 1})}) {
        for (const auto& mu : Partition::all_containing(lambda, lambda.size() + 2)) {
            if (mu.length() != lambda.length()) continue;
            for (const auto& s : enumerate_hvt(mu, 3, 0, 0)) {
                for (const auto& f : enumerate_flagged(lambda, mu, Orientation::ColumnFlagged)) {
                    if (!k_lambda_member(s, f)) continue;
                    auto r = crowd(s, f, true);
                    for (const auto& stage_snaps : r.trace) {
                        for (std::size_t snap = 1; snap < stage_snaps.size(); ++snap) {
                            const auto& h = stage_snaps[snap];
                            int col = 0, row = 0;
                            for (const auto& [cell, entry] : h.cells()) {
                                if (entry.arm_excess() == 0) continue;
                                if (cell.col > col) {
                                    col = cell.col;
                                    row = cell.row;
                                } else if (cell.col == col) {
                                    row = std::max(row, cell.row);
                                }
                            }
                            if (col == 0) continue;  // all excess consumed
                            // The bump that produced this snapshot ended at
                            // the recorded path cell.
                            std::size_t j = &stage_snaps - r.trace.data();
                            Cell target = r.paths[j][snap];
                            CHECK(target.col == col);
                            CHECK(target.row == row);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("equal-destination paths are weakly ordered on enumerated pairs") {
    for (const auto& lambda : {Partition({2}), Partition({1, 1})}) {
        for (const auto& mu : Partition::all_containing(lambda, lambda.size() + 2)) {
            if (mu.length() != lambda.length()) continue;
            for (const auto& s : enumerate_hvt(mu, 3, 0, 1)) {
                for (const auto& f : enumerate_flagged(lambda, mu, Orientation::ColumnFlagged)) {
                    if (!k_lambda_member(s, f)) continue;
                    auto r = crowd(s, f);
                    for (std::size_t j = 0; j + 1 < r.paths.size(); ++j) {
                        if (r.plan.destinations[j] != r.plan.destinations[j + 1]) continue;
                        for (const auto& cb : r.paths[j + 1]) {
                            for (const auto& ca : r.paths[j]) {
                                if (ca.col == cb.col) CHECK(cb.row >= ca.row);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("paths with equal destination stay weakly ordered") {
    // Later paths with the same destination column run weakly above
    // earlier ones, compared position by position from the right.
    auto s = fixtures::crowding_example_svt();
    auto f = fixtures::crowding_example_flagged();
    auto result = crowd(s, f);
    for (std::size_t j = 0; j + 1 < result.paths.size(); ++j) {
        if (result.plan.destinations[j] != result.plan.destinations[j + 1]) continue;
        const auto& a = result.paths[j];
        const auto& b = result.paths[j + 1];
        // Align by column: b's cell in column c sits weakly above a's.
        for (const auto& cb : b) {
            for (const auto& ca : a) {
                if (ca.col == cb.col) CHECK(cb.row >= ca.row);
            }
        }
    }
}
