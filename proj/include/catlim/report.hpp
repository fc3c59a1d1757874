#pragma once

#include <string>
#include <vector>

namespace catlim {

/// Line-oriented verification output: one PASS/FAIL entry per check.
struct CheckLine {
    bool pass = true;
    std::string text;
};

struct CheckReport {
    std::vector<CheckLine> lines;

    bool pass() const {
        for (const CheckLine& l : lines)
            if (!l.pass) return false;
        return true;
    }
    void add(bool ok, std::string text) { lines.push_back(CheckLine{ok, std::move(text)}); }
    std::string to_text() const {
        std::string out;
        for (const CheckLine& l : lines) {
            out += l.pass ? "PASS " : "FAIL ";
            out += l.text;
            out += '\n';
        }
        return out;
    }
};

}  // namespace catlim
