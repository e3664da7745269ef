#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rejodds {

// One published result: a p-value plus optional reported Bayes factor and a
// flag marking p-values computed under ignored optional stopping.
struct StudyRecord {
    std::string study_id;
    double p_value = 0.0;
    std::optional<double> reported_bf;
    bool stopped = false;
};

enum class ConsistencyFlag { Ok, ExceedsBound, BoundNa, StoppedNa };

struct AnnotatedRecord {
    StudyRecord record;
    std::optional<double> bound;
    std::optional<double> reciprocal_bound;
    ConsistencyFlag flag = ConsistencyFlag::Ok;
};

std::string flag_name(ConsistencyFlag flag);

// CSV input with header study_id,p_value[,reported_bf][,stopped]. Parse
// errors cite 1-based line numbers; duplicate ids and out-of-range p-values
// are validation errors.
std::vector<StudyRecord> parse_study_csv(std::istream& in);

// Bound annotation: p <= 1/e and not stopped gets the bound; stopped records
// get stopped_na (their p-value is not proper, so the bound does not apply).
std::vector<AnnotatedRecord> annotate_bounds(const std::vector<StudyRecord>& records);

// Emit records in the input schema (parse -> emit -> parse is the identity).
void write_study_csv(std::ostream& out, const std::vector<StudyRecord>& records);

// Input columns plus bf_bound,reciprocal_bound,flag; empty fields for absent
// values; numbers carry 6 significant digits.
void write_annotated_csv(std::ostream& out, const std::vector<AnnotatedRecord>& records);

struct BoundCurvePoint {
    double p = 0.0;
    double bound = 0.0;
    double reciprocal = 0.0;
};

// Log-spaced grid of bound values over [p_lo, p_hi], p_hi <= 1/e.
std::vector<BoundCurvePoint> emit_bound_curve(double p_lo, double p_hi, int points);

void write_bound_curve_csv(std::ostream& out, const std::vector<BoundCurvePoint>& curve);

// Shared 6-significant-digit number formatting for CSV output.
std::string format_sig6(double value);

}  // namespace rejodds
