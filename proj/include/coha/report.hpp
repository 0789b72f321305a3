#pragma once

// Machine-readable run reports.  Identical configuration (including seed)
// gives a byte-identical report apart from the timing block, which is kept in
// its own top-level key.

#include <coha/counting.hpp>
#include <coha/io.hpp>

#include <json.hpp>

#include <chrono>
#include <string>
#include <vector>

namespace coha {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "0.1.0";

class run_report {
public:
    explicit run_report(std::string command) {
        j_["schema_version"] = report_schema_version;
        j_["tool"] = "coha-workbench";
        j_["version"] = tool_version;
        j_["command"] = std::move(command);
        j_["config"] = json::object();
        j_["checks"] = json::array();
        start_ = std::chrono::steady_clock::now();
    }

    json& config() { return j_["config"]; }

    void add_check(const std::string& name, bool pass, const json& inputs = json::object(),
                   const json& witness = json()) {
        json rec;
        rec["name"] = name;
        rec["inputs"] = inputs;
        rec["status"] = pass ? "pass" : "fail";
        if (!pass && !witness.is_null()) rec["witness"] = witness;
        if (!pass) any_failed_ = true;
        j_["checks"].push_back(std::move(rec));
    }
    void add_error(const std::string& name, const std::string& message) {
        json rec;
        rec["name"] = name;
        rec["status"] = "error";
        rec["witness"] = message;
        any_failed_ = true;
        j_["checks"].push_back(std::move(rec));
    }
    void add_count_row(const count_row& r) {
        if (!j_.contains("counts")) j_["counts"] = json::array();
        json row;
        row["q"] = r.q;
        row["d"] = dim_vector_to_json(r.d);
        row["raw"] = r.raw.str();
        row["gl"] = r.gl.str();
        row["stack"] = rational_str(r.stack);
        j_["counts"].push_back(std::move(row));
    }
    void set(const std::string& key, json value) { j_[key] = std::move(value); }

    bool any_failed() const { return any_failed_; }

    json finalize() {
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
        j_["timing"] = {{"total_ms", elapsed.count()}};
        return j_;
    }

private:
    json j_;
    bool any_failed_ = false;
    std::chrono::steady_clock::time_point start_;
};

// count-report rows as JSON lines, e.g.
// {"q":2,"d":[2],"raw":"88","gl":"6","stack":"44/3"}
inline std::string count_row_jsonl(const count_row& r) {
    json row;
    row["q"] = r.q;
    row["d"] = dim_vector_to_json(r.d);
    row["raw"] = r.raw.str();
    row["gl"] = r.gl.str();
    row["stack"] = rational_str(r.stack);
    return row.dump();
}

}  // namespace coha
