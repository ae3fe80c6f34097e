#include "paramd/xyz_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "paramd/errors.hpp"

namespace paramd {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

double parse_real(const std::string& tok, int lineno) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0')
        throw ParseError("line " + std::to_string(lineno) + ": expected a number, got '" + tok +
                         "'");
    if (!std::isfinite(v))
        throw ParseError("line " + std::to_string(lineno) + ": non-finite value '" + tok + "'");
    return v;
}

}  // namespace

ParticleSystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path + " for reading");

    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) throw ParseError("line 1: empty file");
    long long n = 0;
    {
        char* end = nullptr;
        n = std::strtoll(line.c_str(), &end, 10);
        while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
        if (end == line.c_str() || *end != '\0' || n < 1)
            throw ParseError("line 1: expected a positive particle count, got '" + line + "'");
    }

    ++lineno;
    if (!std::getline(in, line)) throw ParseError("line 2: missing comment line");
    const auto comment = tokenize(line);
    if (comment.size() < 4 || comment[0] != "box")
        throw ParseError("line 2: expected 'box <x> <y> <z>' at the start of the comment");
    ParticleSystem s;
    s.box = {parse_real(comment[1], 2), parse_real(comment[2], 2), parse_real(comment[3], 2)};

    s.positions.reserve(n);
    for (long long i = 0; i < n; ++i) {
        ++lineno;
        if (!std::getline(in, line))
            throw ParseError("line " + std::to_string(lineno) + ": unexpected end of file (" +
                             std::to_string(i) + " of " + std::to_string(n) + " rows read)");
        const auto tok = tokenize(line);
        if (tok.size() != 9)
            throw ParseError("line " + std::to_string(lineno) + ": expected 9 fields, got " +
                             std::to_string(tok.size()));
        s.positions.push_back(
            {parse_real(tok[1], lineno), parse_real(tok[2], lineno), parse_real(tok[3], lineno)});
        s.charges.push_back(parse_real(tok[4], lineno));
        s.velocities.push_back(
            {parse_real(tok[5], lineno), parse_real(tok[6], lineno), parse_real(tok[7], lineno)});
        s.masses.push_back(parse_real(tok[8], lineno));
    }
    validate_system(s, true);
    return s;
}

namespace {

void write_frame_to(std::ofstream& out, const ParticleSystem& s, const std::string& extra) {
    out << s.size() << '\n';
    out << "box " << format_real(s.box.x) << ' ' << format_real(s.box.y) << ' '
        << format_real(s.box.z) << extra << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Vec3& p = s.positions[i];
        const Vec3& v = s.velocities[i];
        out << "X " << format_real(p.x) << ' ' << format_real(p.y) << ' ' << format_real(p.z)
            << ' ' << format_real(s.charges[i]) << ' ' << format_real(v.x) << ' '
            << format_real(v.y) << ' ' << format_real(v.z) << ' ' << format_real(s.masses[i])
            << '\n';
    }
}

}  // namespace

void save_system(const ParticleSystem& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    write_frame_to(out, s, "");
}

TrajectoryWriter::TrajectoryWriter(const std::string& path) : out_(path) {
    if (!out_) throw Error("cannot open " + path + " for writing");
}

void TrajectoryWriter::write_frame(const ParticleSystem& s, long long step, double time_fs) {
    write_frame_to(out_, s, " step=" + std::to_string(step) + " time=" + format_real(time_fs));
    out_.flush();
}

}  // namespace paramd
