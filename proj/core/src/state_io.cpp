#include "noonsim/state_io.hpp"

#include <cerrno>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "noonsim/errors.hpp"

namespace noonsim {

namespace {

[[noreturn]] void fail(int line, const std::string& reason) {
    throw ParseError(line, reason);
}

bool parse_int(const std::string& tok, int& out) {
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0') return false;
    if (v < INT_MIN || v > INT_MAX) return false;
    out = static_cast<int>(v);
    return true;
}

bool parse_double(const std::string& tok, double& out) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (errno == ERANGE || end == tok.c_str() || *end != '\0') return false;
    out = v;
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) toks.push_back(tok);
    return toks;
}

}  // namespace

std::string fmt17(double x) {
    if (x == 0.0) return "0";  // normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

TwoModeNState parse_state_stream(std::istream& in) {
    int n = -1;
    ComplexMatrix rho;
    std::vector<std::vector<bool>> seen;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;

        if (n < 0) {
            if (toks[0] != "N") fail(line_no, "expected header 'N <int>' before entries");
            if (toks.size() != 2) fail(line_no, "header must be exactly 'N <int>'");
            if (!parse_int(toks[1], n) || n < 1) {
                fail(line_no, "invalid photon number '" + toks[1] + "'");
            }
            rho = ComplexMatrix(n + 1);
            seen.assign(n + 1, std::vector<bool>(n + 1, false));
            continue;
        }

        if (toks[0] == "N") fail(line_no, "duplicate header");
        if (toks[0] != "rho") fail(line_no, "unknown directive '" + toks[0] + "'");
        if (toks.size() != 5) fail(line_no, "expected 'rho <k> <m> <re> <im>'");

        int k = 0, m = 0;
        double re = 0.0, im = 0.0;
        if (!parse_int(toks[1], k)) fail(line_no, "invalid index '" + toks[1] + "'");
        if (!parse_int(toks[2], m)) fail(line_no, "invalid index '" + toks[2] + "'");
        if (!parse_double(toks[3], re)) fail(line_no, "invalid real part '" + toks[3] + "'");
        if (!parse_double(toks[4], im)) fail(line_no, "invalid imag part '" + toks[4] + "'");
        if (k < 0 || k > n || m < 0 || m > n) {
            fail(line_no, "index out of range for N=" + std::to_string(n));
        }
        if (k > m) fail(line_no, "lower-triangle entry; specify k <= m only");
        if (seen[k][m]) {
            fail(line_no, "duplicate entry rho " + std::to_string(k) + " " + std::to_string(m));
        }
        seen[k][m] = true;

        rho(k, m) = Complex{re, im};
        if (k != m) rho(m, k) = Complex{re, -im};
    }

    if (n < 0) fail(line_no + 1, "missing header 'N <int>'");
    return TwoModeNState(n, rho);  // throws ValidationFailed on bad input
}

TwoModeNState parse_state_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_state_stream(iss);
}

TwoModeNState parse_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open state file '" + path + "'");
    return parse_state_stream(in);
}

std::string serialize_state(const TwoModeNState& s) {
    const int n = s.n_total();
    std::ostringstream out;
    out << "N " << n << "\n";
    for (int k = 0; k <= n; ++k) {
        for (int m = k; m <= n; ++m) {
            const Complex v = s.rho()(k, m);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            out << "rho " << k << " " << m << " " << fmt17(v.real()) << " "
                << fmt17(v.imag()) << "\n";
        }
    }
    return out.str();
}

void write_state_file(const TwoModeNState& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << serialize_state(s);
    if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace noonsim
