#pragma once
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <string>

#include "paramd/errors.hpp"

namespace paramd {

inline std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) : out_(path) {
        if (!out_) throw Error("cannot open " + path + " for writing");
    }
    void row(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) out_ << ',';
            out_ << c;
            first = false;
        }
        out_ << '\n';
    }

  private:
    std::ofstream out_;
};

}  // namespace paramd
