#include "dss/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dss {

namespace {

using nlohmann::json;

json parse_or_throw(std::string_view text, const char* what) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw std::invalid_argument(std::string(what) + ": malformed JSON");
    }
    return j;
}

} // namespace

DssState parse_state_json(std::string_view text) {
    const json j = parse_or_throw(text, "state");
    if (!j.is_object() || !j.contains("n") || !j.contains("p")) {
        throw std::invalid_argument("state: expected {\"n\": ..., \"p\": [...]}");
    }
    if (!j["n"].is_number_integer()) {
        throw std::invalid_argument("state: \"n\" must be an integer");
    }
    if (!j["p"].is_array()) {
        throw std::invalid_argument("state: \"p\" must be an array");
    }
    const int n = j["n"].get<int>();
    std::vector<double> p;
    p.reserve(j["p"].size());
    for (const auto& v : j["p"]) {
        if (!v.is_number()) {
            throw std::invalid_argument("state: probabilities must be numbers");
        }
        p.push_back(v.get<double>());
    }
    return DssState(n, std::move(p));
}

DssState read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string state_to_json(const DssState& s) {
    json j;
    j["n"] = s.n();
    j["p"] = s.probabilities();
    return j.dump();
}

void write_state_file(const std::string& path, const DssState& s) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << state_to_json(s) << "\n";
}

std::string matrix_to_json(const HermitianMatrix& h) {
    const int d = h.dim();
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < d; ++i) {
        json re_row = json::array();
        json im_row = json::array();
        for (int j = 0; j < d; ++j) {
            re_row.push_back(h(i, j).real());
            im_row.push_back(h(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    json j;
    j["dim"] = d;
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

HermitianMatrix parse_matrix_json(std::string_view text) {
    const json j = parse_or_throw(text, "matrix");
    if (!j.is_object() || !j.contains("dim") || !j.contains("re") ||
        !j.contains("im")) {
        throw std::invalid_argument(
            "matrix: expected {\"dim\": ..., \"re\": [[...]], \"im\": [[...]]}");
    }
    const int d = j["dim"].get<int>();
    if (d <= 0) throw std::invalid_argument("matrix: dim must be positive");
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (!re.is_array() || !im.is_array() ||
        re.size() != static_cast<std::size_t>(d) ||
        im.size() != static_cast<std::size_t>(d)) {
        throw std::invalid_argument("matrix: re/im must be dim x dim arrays");
    }
    cvector entries(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        const auto& re_row = re[static_cast<std::size_t>(i)];
        const auto& im_row = im[static_cast<std::size_t>(i)];
        if (re_row.size() != static_cast<std::size_t>(d) ||
            im_row.size() != static_cast<std::size_t>(d)) {
            throw std::invalid_argument("matrix: row length mismatch");
        }
        for (int k = 0; k < d; ++k) {
            entries[static_cast<std::size_t>(i) * d + k] =
                cdouble{re_row[static_cast<std::size_t>(k)].get<double>(),
                        im_row[static_cast<std::size_t>(k)].get<double>()};
        }
    }
    return HermitianMatrix::from_entries(d, std::move(entries));
}

std::string report_to_json(const NptReport& report) {
    json j;
    j["conds_pt"] = report.conds_pt;
    j["conds_closed"] = report.conds_closed;
    j["pt_eigenvalues"] = report.pt_eigenvalues;
    j["negative_count"] = report.negative_count;
    j["is_full_npt"] = report.is_full_npt;
    return j.dump();
}

std::string report_to_json(const BsaResult& result) {
    json j;
    j["lambda"] = result.lambda;
    j["x"] = result.x;
    j["y"] = result.y;
    j["bsa_diag"] = result.bsa_diag;
    j["remainder_diag"] = result.remainder_diag;
    j["weights_per_projector"] = result.weight_per_projector;
    return j.dump();
}

std::string report_to_json(const LemmaReport& report) {
    json j;
    j["quantity"] = report.quantity;
    j["expected"] = report.expected;
    j["deviation"] = report.deviation;
    j["passed"] = report.passed;
    return j.dump();
}

std::string report_to_json(const OracleReport& report) {
    json j;
    j["analytic"] = report.lambda_analytic;
    j["lower"] = report.lambda_lower;
    j["upper"] = report.lambda_upper;
    j["gap"] = report.gap;
    j["agrees"] = report.agrees;
    return j.dump();
}

} // namespace dss
