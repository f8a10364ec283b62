#pragma once

// Deterministic machine-readable output: every floating-point value prints
// with 17 significant digits so emitted files round-trip bit-exactly and can
// be diffed across runs.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "core.hpp"

namespace dyonlab {

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string format_value(int v) { return std::to_string(v); }
inline std::string format_value(long v) { return std::to_string(v); }
inline std::string format_value(const std::string& v) { return v; }

// Minimal row-oriented CSV writer.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    template <class... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << format_value(cells), first = false), ...);
        out_ << '\n';
    }

  private:
    std::ostream& out_;
};

// Minimal JSON emitter for the fixed report shapes this tool produces.
// Handles nesting and comma placement; strings are escaped for the small
// character set that can actually appear (keys and diagnostic names).
class JsonWriter {
  public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array(const std::string& key) { item_key(key); open('['); }
    void begin_array() { next_item(); open('['); }
    void end_array() { close(']'); }
    void begin_object(const std::string& key) { item_key(key); open('{'); }
    void begin_object_item() { next_item(); open('{'); }

    template <class T>
    void field(const std::string& key, const T& value) {
        item_key(key);
        write_scalar(value);
    }

    template <class T>
    void element(const T& value) {
        next_item();
        write_scalar(value);
    }

    void finish() { out_ << '\n'; }

  private:
    void open(char ch) {
        out_ << ch;
        fresh_ = true;
    }
    void close(char ch) {
        out_ << ch;
        fresh_ = false;
    }
    void next_item() {
        if (!fresh_) out_ << ',';
        fresh_ = false;
    }
    void item_key(const std::string& key) {
        next_item();
        write_string(key);
        out_ << ':';
    }
    void write_scalar(double v) { out_ << format_value(v); }
    void write_scalar(int v) { out_ << v; }
    void write_scalar(long v) { out_ << v; }
    void write_scalar(std::size_t v) { out_ << v; }
    void write_scalar(bool v) { out_ << (v ? "true" : "false"); }
    void write_scalar(const char* v) { write_string(v); }
    void write_scalar(const std::string& v) { write_string(v); }
    void write_string(const std::string& s) {
        out_ << '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\t': out_ << "\\t"; break;
                default: out_ << ch;
            }
        }
        out_ << '"';
    }

    std::ostream& out_;
    bool fresh_ = true;
};

}  // namespace dyonlab
