#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>

namespace nsest {

/// Deterministic CSV emission: fixed "%.12g" float formatting so identical
/// runs produce identical bytes. The optional timestamp comment line is the
/// only nondeterministic output and every command can suppress it.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, bool with_timestamp);

    void header(const std::string& line);

    void field(const std::string& s);
    void field(const char* s) { field(std::string(s)); }
    void field(double v);
    void field(std::uint64_t v);
    void field(int v);
    void end_row();

    static std::string format_double(double v);

private:
    std::ostream& out_;
    bool row_open_ = false;
};

} // namespace nsest
