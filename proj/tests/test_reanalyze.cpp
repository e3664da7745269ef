#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"
#include "rejodds/math/rng.hpp"
#include "rejodds/reanalyze.hpp"

using namespace rejodds;

TEST_CASE("parsing accepts every documented header layout") {
    {
        std::istringstream in("study_id,p_value\ns1,0.05\n");
        auto records = parse_study_csv(in);
        REQUIRE(records.size() == 1);
        CHECK(records[0].study_id == "s1");
        CHECK(records[0].p_value == 0.05);
        CHECK(!records[0].reported_bf.has_value());
        CHECK(!records[0].stopped);
    }
    {
        std::istringstream in("study_id,p_value,reported_bf\ns1,0.05,3.2\ns2,0.2,\n");
        auto records = parse_study_csv(in);
        REQUIRE(records.size() == 2);
        CHECK(*records[0].reported_bf == 3.2);
        CHECK(!records[1].reported_bf.has_value());
    }
    {
        std::istringstream in("study_id,p_value,stopped\ns1,0.01,true\ns2,0.01,false\n");
        auto records = parse_study_csv(in);
        CHECK(records[0].stopped);
        CHECK(!records[1].stopped);
    }
    {
        std::istringstream in("study_id,p_value,reported_bf,stopped\ns1,0.01,2.5,true\n");
        auto records = parse_study_csv(in);
        CHECK(records[0].stopped);
        CHECK(*records[0].reported_bf == 2.5);
    }
}

TEST_CASE("parse and validation errors cite line numbers") {
    {
        std::istringstream in("study_id,p_value\ns2,1.5\n");
        try {
            parse_study_csv(in);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(e.line == 2);
        }
    }
    {
        std::istringstream in("study_id,p_value\ns1,0.05\ns1,0.01\n");
        try {
            parse_study_csv(in);
            FAIL("expected a duplicate-id error");
        } catch (const ValidationError& e) {
            CHECK(e.line == 3);
        }
    }
    {
        std::istringstream in("study_id,p_value\ns1,zero\n");
        try {
            parse_study_csv(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    {
        std::istringstream in("p,study\na,b\n");
        CHECK_THROWS_AS(parse_study_csv(in), ParseError);
    }
    {
        std::istringstream in("study_id,p_value\ns1,0.05,9\n");
        CHECK_THROWS_AS(parse_study_csv(in), ParseError);
    }
    {
        std::istringstream in("study_id,p_value,stopped\ns1,0.05,yes\n");
        CHECK_THROWS_AS(parse_study_csv(in), ParseError);
    }
}

TEST_CASE("bound annotation per record") {
    std::vector<StudyRecord> records = {
        {"a", 0.01, {}, false},
        {"b", 0.5, {}, false},
        {"c", 0.05, 3.0, false},
        {"d", 0.05, 2.0, false},
        {"e", 0.001, {}, true},
    };
    auto annotated = annotate_bounds(records);
    REQUIRE(annotated.size() == 5);

    CHECK(*annotated[0].bound == doctest::Approx(7.9884006).epsilon(1e-7));
    CHECK(*annotated[0].reciprocal_bound == doctest::Approx(0.1251815).epsilon(1e-6));
    CHECK(annotated[0].flag == ConsistencyFlag::Ok);
    CHECK(*annotated[0].bound == *bf_bound(0.01));  // shared implementation, same bits

    CHECK(annotated[1].flag == ConsistencyFlag::BoundNa);
    CHECK(!annotated[1].bound.has_value());

    CHECK(annotated[2].flag == ConsistencyFlag::ExceedsBound);  // 3.0 > 2.456
    CHECK(annotated[3].flag == ConsistencyFlag::Ok);            // 2.0 <= 2.456

    CHECK(annotated[4].flag == ConsistencyFlag::StoppedNa);  // stopped: no bound even at p=0.001
    CHECK(!annotated[4].bound.has_value());

    for (const auto& a : annotated)
        CHECK((a.bound.has_value() == a.reciprocal_bound.has_value()));
}

TEST_CASE("round trip through emit is the identity on records") {
    // synthetic corpus with 6-significant-digit values
    std::vector<StudyRecord> records;
    math::RandomStream stream({4242, 0});
    for (int i = 0; i < 272; ++i) {
        StudyRecord rec;
        rec.study_id = "study_" + std::to_string(i);
        rec.p_value = std::stod(format_sig6(0.3 * stream.next_uniform() + 1e-6));
        if (i % 3 == 0) rec.reported_bf = std::stod(format_sig6(10.0 * stream.next_uniform() + 0.1));
        rec.stopped = i % 7 == 0;
        records.push_back(std::move(rec));
    }

    std::ostringstream emitted;
    write_study_csv(emitted, records);
    std::istringstream reread(emitted.str());
    auto parsed = parse_study_csv(reread);
    REQUIRE(parsed.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].study_id == records[i].study_id);
        CHECK(parsed[i].p_value == records[i].p_value);  // bit-exact
        CHECK(parsed[i].reported_bf == records[i].reported_bf);
        CHECK(parsed[i].stopped == records[i].stopped);
    }

    // parse -> emit -> parse is the identity on the emitted form too
    std::ostringstream emitted_again;
    write_study_csv(emitted_again, parsed);
    CHECK(emitted_again.str() == emitted.str());
}

TEST_CASE("annotated csv layout") {
    std::vector<StudyRecord> records = {{"s1", 0.01, {}, false}, {"s2", 0.5, 1.5, false}};
    std::ostringstream out;
    write_annotated_csv(out, annotate_bounds(records));
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "study_id,p_value,reported_bf,stopped,bf_bound,reciprocal_bound,flag");
    std::getline(lines, line);
    CHECK(line == "s1,0.01,,false,7.9884,0.125182,ok");
    std::getline(lines, line);
    CHECK(line == "s2,0.5,1.5,false,,,bound_na");
}

TEST_CASE("bound curve endpoints and monotonicity") {
    auto curve = emit_bound_curve(0.001, 1.0 / std::numbers::e, 3);
    REQUIRE(curve.size() == 3);
    CHECK(curve.front().bound == doctest::Approx(53.256004).epsilon(1e-6));
    CHECK(curve.back().bound == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& pt : curve)
        CHECK(pt.reciprocal == doctest::Approx(1.0 / pt.bound).epsilon(1e-15));

    auto narrow = emit_bound_curve(0.04, 0.05, 2);
    CHECK(narrow[0].bound > narrow[1].bound);            // bound rises as p falls
    CHECK(narrow[0].reciprocal < narrow[1].reciprocal);  // reciprocal falls as p falls

    CHECK_THROWS_AS(emit_bound_curve(0.04, 0.5, 10), DomainError);
    CHECK_THROWS_AS(emit_bound_curve(0.0, 0.05, 10), DomainError);
    CHECK_THROWS_AS(emit_bound_curve(0.001, 0.05, 1), DomainError);
}
