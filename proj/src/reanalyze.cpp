#include "rejodds/reanalyze.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "rejodds/errors.hpp"
#include "rejodds/evidence.hpp"

namespace rejodds {

std::string format_sig6(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string flag_name(ConsistencyFlag flag) {
    switch (flag) {
        case ConsistencyFlag::Ok: return "ok";
        case ConsistencyFlag::ExceedsBound: return "exceeds_bound";
        case ConsistencyFlag::BoundNa: return "bound_na";
        case ConsistencyFlag::StoppedNa: return "stopped_na";
    }
    return "?";
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_field_double(const std::string& text, const char* what, long line_no) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw ParseError(std::string(what) + ": expected a number, got '" + text + "'", line_no);
    return value;
}

}  // namespace

std::vector<StudyRecord> parse_study_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input: missing header", 1);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv_line(line);
    bool has_bf = false;
    bool has_stopped = false;
    if (header.size() < 2 || header[0] != "study_id" || header[1] != "p_value")
        throw ParseError("header must start with study_id,p_value", 1);
    if (header.size() == 3 && header[2] == "reported_bf") {
        has_bf = true;
    } else if (header.size() == 3 && header[2] == "stopped") {
        has_stopped = true;
    } else if (header.size() == 4 && header[2] == "reported_bf" && header[3] == "stopped") {
        has_bf = true;
        has_stopped = true;
    } else if (header.size() != 2) {
        throw ParseError("unrecognized header columns after study_id,p_value", 1);
    }
    const std::size_t n_cols = header.size();

    std::vector<StudyRecord> records;
    std::unordered_set<std::string> seen;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != n_cols)
            throw ParseError("expected " + std::to_string(n_cols) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);

        StudyRecord rec;
        rec.study_id = fields[0];
        if (rec.study_id.empty()) throw ValidationError("study_id must be nonempty", line_no);
        if (!seen.insert(rec.study_id).second)
            throw ValidationError("duplicate study_id '" + rec.study_id + "'", line_no);

        rec.p_value = parse_field_double(fields[1], "p_value", line_no);
        if (!(rec.p_value > 0.0 && rec.p_value < 1.0))
            throw ValidationError("p_value must lie in (0,1)", line_no);

        std::size_t next = 2;
        if (has_bf) {
            const std::string& f = fields[next++];
            if (!f.empty()) {
                double bf = parse_field_double(f, "reported_bf", line_no);
                if (!(bf > 0.0)) throw ValidationError("reported_bf must be positive", line_no);
                rec.reported_bf = bf;
            }
        }
        if (has_stopped) {
            const std::string& f = fields[next];
            if (f == "true") {
                rec.stopped = true;
            } else if (f == "false" || f.empty()) {
                rec.stopped = false;
            } else {
                throw ParseError("stopped must be true or false, got '" + f + "'", line_no);
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<AnnotatedRecord> annotate_bounds(const std::vector<StudyRecord>& records) {
    std::vector<AnnotatedRecord> out;
    out.reserve(records.size());
    for (const auto& rec : records) {
        AnnotatedRecord a;
        a.record = rec;
        if (rec.stopped) {
            a.flag = ConsistencyFlag::StoppedNa;
        } else if (auto bound = bf_bound(rec.p_value); bound) {
            a.bound = *bound;
            a.reciprocal_bound = 1.0 / *bound;
            a.flag = rec.reported_bf && *rec.reported_bf > *bound ? ConsistencyFlag::ExceedsBound
                                                                  : ConsistencyFlag::Ok;
        } else {
            a.flag = ConsistencyFlag::BoundNa;
        }
        out.push_back(std::move(a));
    }
    return out;
}

void write_study_csv(std::ostream& out, const std::vector<StudyRecord>& records) {
    out << "study_id,p_value,reported_bf,stopped\n";
    for (const auto& rec : records) {
        out << rec.study_id << ',' << format_sig6(rec.p_value) << ',';
        if (rec.reported_bf) out << format_sig6(*rec.reported_bf);
        out << ',' << (rec.stopped ? "true" : "false") << '\n';
    }
}

void write_annotated_csv(std::ostream& out, const std::vector<AnnotatedRecord>& records) {
    out << "study_id,p_value,reported_bf,stopped,bf_bound,reciprocal_bound,flag\n";
    for (const auto& a : records) {
        out << a.record.study_id << ',' << format_sig6(a.record.p_value) << ',';
        if (a.record.reported_bf) out << format_sig6(*a.record.reported_bf);
        out << ',' << (a.record.stopped ? "true" : "false") << ',';
        if (a.bound) out << format_sig6(*a.bound);
        out << ',';
        if (a.reciprocal_bound) out << format_sig6(*a.reciprocal_bound);
        out << ',' << flag_name(a.flag) << '\n';
    }
}

std::vector<BoundCurvePoint> emit_bound_curve(double p_lo, double p_hi, int points) {
    constexpr double kInvE = 1.0 / std::numbers::e;
    if (!(p_lo > 0.0 && p_lo < p_hi && p_hi <= kInvE))
        throw DomainError("emit_bound_curve: need 0 < p_lo < p_hi <= 1/e");
    if (points < 2) throw DomainError("emit_bound_curve: points must be at least 2");

    std::vector<BoundCurvePoint> curve;
    curve.reserve(static_cast<std::size_t>(points));
    double log_lo = std::log(p_lo);
    double log_hi = std::log(p_hi);
    for (int i = 0; i < points; ++i) {
        double p = std::exp(log_lo + (log_hi - log_lo) * (static_cast<double>(i) / (points - 1)));
        double bound = *bf_bound(std::min(p, kInvE));
        curve.push_back({p, bound, 1.0 / bound});
    }
    return curve;
}

void write_bound_curve_csv(std::ostream& out, const std::vector<BoundCurvePoint>& curve) {
    out << "p,bf_bound,reciprocal_bound\n";
    for (const auto& pt : curve)
        out << format_sig6(pt.p) << ',' << format_sig6(pt.bound) << ',' << format_sig6(pt.reciprocal)
            << '\n';
}

}  // namespace rejodds
