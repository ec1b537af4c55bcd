#include "hopf/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <ctime>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hopf {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string render_timeseries_csv(const std::vector<MonitorRecord>& records) {
    std::string out = kTimeseriesHeader;
    out += '\n';
    for (const MonitorRecord& r : records) {
        out += format_double(r.t);
        out += ',';
        out += format_double(r.volume);
        out += ',';
        out += format_double(r.volume_predicted);
        out += ',';
        out += format_double(r.max_trace_chi_omega);
        out += ',';
        out += format_double(r.min_metric_eigenvalue);
        out += ',';
        out += format_double(r.max_psi_dot);
        out += ',';
        out += format_double(r.max_abs_psi);
        out += ',';
        out += format_double(r.q_max);
        out += ',';
        out += format_double(r.loop_length_min);
        out += ',';
        out += format_double(r.loop_length_max);
        out += ',';
        out += format_double(r.c1_norm_phi);
        out += '\n';
    }
    return out;
}

std::string render_report_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "identity,samples,max_residual,tolerance,pass\n";
    for (const VerificationReport& r : reports) {
        out += r.identity;
        out += ',';
        out += std::to_string(r.samples);
        out += ',';
        out += format_double(r.max_residual);
        out += ',';
        out += format_double(r.tolerance);
        out += ',';
        out += r.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::string s((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
    return s;
}

void write_snapshot(const std::string& path, const Snapshot& snap) {
    if (snap.phi.size() !=
        static_cast<std::size_t>(snap.n_u) * static_cast<std::size_t>(snap.n_sigma))
        throw std::invalid_argument("snapshot: phi size does not match grid");
    nlohmann::json header{{"abs_alpha", snap.abs_alpha},
                          {"abs_beta", snap.abs_beta},
                          {"n_u", snap.n_u},
                          {"n_sigma", snap.n_sigma},
                          {"t", snap.t},
                          {"format", "float64-le-rowmajor"}};
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << header.dump() << '\n';
    f.write(reinterpret_cast<const char*>(snap.phi.data()),
            static_cast<std::streamsize>(snap.phi.size() * sizeof(double)));
    if (!f) throw std::runtime_error("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open snapshot: " + path);
    std::string line;
    if (!std::getline(f, line))
        throw std::runtime_error("snapshot missing JSON header: " + path);
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("snapshot header is not valid JSON: " +
                                 std::string(e.what()));
    }
    Snapshot snap;
    snap.abs_alpha = header.at("abs_alpha").get<double>();
    snap.abs_beta = header.at("abs_beta").get<double>();
    snap.n_u = header.at("n_u").get<int>();
    snap.n_sigma = header.at("n_sigma").get<int>();
    snap.t = header.at("t").get<double>();
    if (header.value("format", "") != std::string("float64-le-rowmajor"))
        throw std::runtime_error("snapshot has unknown payload format");
    const std::size_t n =
        static_cast<std::size_t>(snap.n_u) * static_cast<std::size_t>(snap.n_sigma);
    snap.phi.resize(n);
    f.read(reinterpret_cast<char*>(snap.phi.data()),
           static_cast<std::streamsize>(n * sizeof(double)));
    if (static_cast<std::size_t>(f.gcount()) != n * sizeof(double))
        throw std::runtime_error("snapshot payload truncated: " + path);
    return snap;
}

std::string utc_timestamp_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace hopf
