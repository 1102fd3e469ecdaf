#include "expsieve/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace expsieve::report {

namespace {

const char* bool_str(bool b) { return b ? "1" : "0"; }

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text,
                                                     const std::string& expected_header,
                                                     const char* what) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != expected_header)
        throw validation_error(std::string(what) + ": unexpected CSV header");
    std::vector<std::vector<std::string>> rows;
    const std::size_t width = split(expected_header, ',').size();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (cells.size() != width)
            throw validation_error(std::string(what) + ": bad CSV row '" + line + "'");
        rows.push_back(std::move(cells));
    }
    return rows;
}

u64 parse_u64(const std::string& text) {
    std::size_t pos = 0;
    u64 v = std::stoull(text, &pos);
    if (pos != text.size()) throw validation_error("bad integer cell '" + text + "'");
    return v;
}

bool parse_bool(const std::string& text) {
    if (text == "1") return true;
    if (text == "0") return false;
    throw validation_error("bad boolean cell '" + text + "'");
}

// JSON is emitted by hand so field order and float formatting stay pinned.
class JsonWriter {
  public:
    void begin_object() {
        sep();
        out_ += '{';
        first_ = true;
    }
    void end_object() {
        out_ += '}';
        first_ = false;
    }
    void begin_array(const std::string& key) {
        field_key(key);
        out_ += '[';
        first_ = true;
    }
    void end_array() {
        out_ += ']';
        first_ = false;
    }
    void field(const std::string& key, const std::string& raw) {
        field_key(key);
        out_ += raw;
        first_ = false;
    }
    void element(const std::string& raw) {
        sep();
        out_ += raw;
    }
    void string_field(const std::string& key, const std::string& value) {
        field(key, quote(value));
    }
    const std::string& str() const { return out_; }

    static std::string quote(const std::string& s) {
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"' || ch == '\\') q += '\\';
            q += ch;
        }
        q += '"';
        return q;
    }

  private:
    void sep() {
        if (!first_) out_ += ',';
        first_ = false;
    }
    void field_key(const std::string& key) {
        sep();
        out_ += quote(key);
        out_ += ':';
        first_ = true;
    }
    std::string out_;
    bool first_ = true;
};

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    throw validation_error("format: expected csv|json, got '" + text + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

double parse_double(const std::string& text) {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw validation_error("bad real cell '" + text + "'");
    return v;
}

std::string census_csv(const std::vector<census::PrimeRecord>& records) {
    std::string out = "p,t_p,tau_pm1,in_E,in_Eprime\n";
    for (const auto& r : records) {
        out += std::to_string(r.p) + ',' + std::to_string(r.t_p) + ',' +
               std::to_string(r.tau_pm1) + ',' + bool_str(r.in_E) + ',' + bool_str(r.in_Eprime) +
               '\n';
    }
    return out;
}

std::string census_json(const std::vector<census::PrimeRecord>& records) {
    JsonWriter w;
    for (const auto& r : records) {
        w.begin_object();
        w.field("p", std::to_string(r.p));
        w.field("t_p", std::to_string(r.t_p));
        w.field("tau_pm1", std::to_string(r.tau_pm1));
        w.field("in_E", r.in_E ? "true" : "false");
        w.field("in_Eprime", r.in_Eprime ? "true" : "false");
        w.end_object();
    }
    return "[" + w.str() + "]\n";
}

std::vector<census::PrimeRecord> parse_census_csv(const std::string& text) {
    std::vector<census::PrimeRecord> records;
    for (const auto& cells : parse_csv_rows(text, "p,t_p,tau_pm1,in_E,in_Eprime", "census")) {
        census::PrimeRecord r;
        r.p = parse_u64(cells[0]);
        r.t_p = parse_u64(cells[1]);
        r.tau_pm1 = parse_u64(cells[2]);
        r.in_E = parse_bool(cells[3]);
        r.in_Eprime = parse_bool(cells[4]);
        records.push_back(r);
    }
    return records;
}

std::string scan_csv(const std::vector<expsum::SumScanResult>& results) {
    std::string out = "p,t_p,max_abs,argmax_a,exact,hbk,trivial_bound\n";
    for (const auto& r : results) {
        out += std::to_string(r.p) + ',' + std::to_string(r.t_p) + ',' + format_double(r.max_abs) +
               ',' + std::to_string(r.argmax_a) + ',' + bool_str(r.exact) + ',' +
               format_double(r.hbk) + ',' + format_double(r.trivial_bound) + '\n';
    }
    return out;
}

std::string scan_json(const std::vector<expsum::SumScanResult>& results) {
    JsonWriter w;
    for (const auto& r : results) {
        w.begin_object();
        w.field("p", std::to_string(r.p));
        w.field("t_p", std::to_string(r.t_p));
        w.field("max_abs", format_double(r.max_abs));
        w.field("argmax_a", std::to_string(r.argmax_a));
        w.field("exact", r.exact ? "true" : "false");
        w.string_field("strategy", r.strategy);
        w.field("hbk", format_double(r.hbk));
        w.field("trivial_bound", format_double(r.trivial_bound));
        w.end_object();
    }
    return "[" + w.str() + "]\n";
}

std::vector<expsum::SumScanResult> parse_scan_csv(const std::string& text) {
    std::vector<expsum::SumScanResult> results;
    for (const auto& cells :
         parse_csv_rows(text, "p,t_p,max_abs,argmax_a,exact,hbk,trivial_bound", "scan")) {
        expsum::SumScanResult r;
        r.p = parse_u64(cells[0]);
        r.t_p = parse_u64(cells[1]);
        r.max_abs = parse_double(cells[2]);
        r.argmax_a = parse_u64(cells[3]);
        r.exact = parse_bool(cells[4]);
        r.hbk = parse_double(cells[5]);
        r.trivial_bound = parse_double(cells[6]);
        results.push_back(r);
    }
    return results;
}

namespace {

double part_or_zero(const census::VerificationReport& rep, std::size_t i) {
    return i < rep.parts.size() ? rep.parts[i].second : 0.0;
}

}  // namespace

std::string verify_csv(const census::VerificationReport& rep) {
    std::string out = "lhs,rhs,ratio,term1,term2,term3,exact\n";
    out += format_double(rep.lhs) + ',' + format_double(rep.rhs) + ',' + format_double(rep.ratio) +
           ',' + format_double(part_or_zero(rep, 0)) + ',' + format_double(part_or_zero(rep, 1)) +
           ',' + format_double(part_or_zero(rep, 2)) + ',' + bool_str(rep.exact) + '\n';
    return out;
}

std::string verify_json(const census::VerificationReport& rep) {
    JsonWriter w;
    w.begin_object();
    w.field("lhs", format_double(rep.lhs));
    w.field("rhs", format_double(rep.rhs));
    w.field("ratio", format_double(rep.ratio));
    w.field("term1", format_double(part_or_zero(rep, 0)));
    w.field("term2", format_double(part_or_zero(rep, 1)));
    w.field("term3", format_double(part_or_zero(rep, 2)));
    w.field("exact", rep.exact ? "true" : "false");
    w.end_object();
    return w.str() + "\n";
}

census::VerificationReport parse_verify_csv(const std::string& text) {
    auto rows = parse_csv_rows(text, "lhs,rhs,ratio,term1,term2,term3,exact", "verify");
    if (rows.size() != 1) throw validation_error("verify: expected exactly one row");
    const auto& cells = rows[0];
    census::VerificationReport rep;
    rep.lhs = parse_double(cells[0]);
    rep.rhs = parse_double(cells[1]);
    rep.ratio = parse_double(cells[2]);
    rep.parts = {{"term1", parse_double(cells[3])},
                 {"term2", parse_double(cells[4])},
                 {"term3", parse_double(cells[5])}};
    rep.exact = parse_bool(cells[6]);
    return rep;
}

std::string pairs_csv(const pairs::OptimizeResult& result) {
    std::string out = "alpha,beta,f,provenance\n";
    for (const auto& [pair, value] : result.table) {
        out += pair.alpha.str() + ',' + pair.beta.str() + ',' + value.str() + ',' +
               pair.provenance + '\n';
    }
    return out;
}

std::string pairs_json(const pairs::OptimizeResult& result) {
    JsonWriter w;
    for (const auto& [pair, value] : result.table) {
        w.begin_object();
        w.string_field("alpha", pair.alpha.str());
        w.string_field("beta", pair.beta.str());
        w.string_field("f", value.str());
        w.string_field("provenance", pair.provenance);
        w.end_object();
    }
    return "[" + w.str() + "]\n";
}

std::string lsieve_csv(double lhs, double rhs, double K, double T) {
    std::string out = "lhs,rhs,ratio,K,T\n";
    const double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    out += format_double(lhs) + ',' + format_double(rhs) + ',' + format_double(ratio) + ',' +
           format_double(K) + ',' + format_double(T) + '\n';
    return out;
}

std::string lsieve_json(double lhs, double rhs, double K, double T) {
    JsonWriter w;
    w.begin_object();
    w.field("lhs", format_double(lhs));
    w.field("rhs", format_double(rhs));
    w.field("ratio", format_double(rhs > 0.0 ? lhs / rhs : 0.0));
    w.field("K", format_double(K));
    w.field("T", format_double(T));
    w.end_object();
    return w.str() + "\n";
}

std::string discrepancy_csv(std::size_t N, double star, double extreme, double et, u64 H) {
    std::string out = "N,star,extreme,erdos_turan,H\n";
    out += std::to_string(N) + ',' + format_double(star) + ',' + format_double(extreme) + ',' +
           format_double(et) + ',' + std::to_string(H) + '\n';
    return out;
}

std::string discrepancy_json(std::size_t N, double star, double extreme, double et, u64 H) {
    JsonWriter w;
    w.begin_object();
    w.field("N", std::to_string(N));
    w.field("star", format_double(star));
    w.field("extreme", format_double(extreme));
    w.field("erdos_turan", format_double(et));
    w.field("H", std::to_string(H));
    w.end_object();
    return w.str() + "\n";
}

std::string suggest_csv(const census::SuggestedParams& sp) {
    std::string out = "T,L,Delta\n";
    out += std::to_string(sp.T) + ',' + format_double(sp.L) + ',' + format_double(sp.Delta) + '\n';
    return out;
}

std::string suggest_json(const census::SuggestedParams& sp) {
    JsonWriter w;
    w.begin_object();
    w.field("T", std::to_string(sp.T));
    w.field("L", format_double(sp.L));
    w.field("Delta", format_double(sp.Delta));
    w.end_object();
    return w.str() + "\n";
}

std::string corollary_csv(const census::CorollaryResult& res) {
    std::string out = "threshold,violating,fraction,eprime_empty,exact\n";
    std::string joined;
    for (std::size_t i = 0; i < res.violating.size(); ++i) {
        if (i > 0) joined += ';';
        joined += std::to_string(res.violating[i]);
    }
    out += format_double(res.threshold) + ',' + joined + ',' + format_double(res.fraction) + ',' +
           bool_str(res.eprime_empty) + ',' + bool_str(res.exact) + '\n';
    return out;
}

std::string corollary_json(const census::CorollaryResult& res) {
    JsonWriter w;
    w.begin_object();
    w.field("threshold", format_double(res.threshold));
    w.begin_array("violating");
    for (u64 p : res.violating) w.element(std::to_string(p));
    w.end_array();
    w.field("fraction", format_double(res.fraction));
    w.field("eprime_empty", res.eprime_empty ? "true" : "false");
    w.field("exact", res.exact ? "true" : "false");
    w.end_object();
    return w.str() + "\n";
}

std::string erdos_murty_csv(const census::ErdosMurtyResult& res) {
    std::string out = "count,bound,ratio,divisibility_ok\n";
    out += std::to_string(res.count) + ',' + format_double(res.bound) + ',' +
           format_double(res.ratio) + ',' + bool_str(res.divisibility_ok) + '\n';
    return out;
}

std::string erdos_murty_json(const census::ErdosMurtyResult& res) {
    JsonWriter w;
    w.begin_object();
    w.field("count", std::to_string(res.count));
    w.field("bound", format_double(res.bound));
    w.field("ratio", format_double(res.ratio));
    w.field("divisibility_ok", res.divisibility_ok ? "true" : "false");
    w.end_object();
    return w.str() + "\n";
}

std::string titchmarsh_csv(double X, double ratio) {
    std::string out = "X,ratio\n";
    out += format_double(X) + ',' + format_double(ratio) + '\n';
    return out;
}

std::string titchmarsh_json(double X, double ratio) {
    JsonWriter w;
    w.begin_object();
    w.field("X", format_double(X));
    w.field("ratio", format_double(ratio));
    w.end_object();
    return w.str() + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw io_error("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace expsieve::report
