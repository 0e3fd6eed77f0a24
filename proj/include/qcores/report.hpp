#pragma once

#include <chrono>
#include <map>
#include <string>

#include <json.hpp>

namespace qcores {

/*
 * Outcome of one identity verification run. Verifiers never abort on a
 * mismatch: they sweep their whole grade/case range and report the first
 * mismatch plus the total count. The canonical JSON form excludes timing so
 * that equal-seed runs are byte-identical; elapsed_ms is attached only on
 * request.
 */
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::string> params;  // alphabetical, deterministic
    bool pass = false;
    long long terms_enumerated = 0;
    long long mismatch_count = 0;
    std::string first_mismatch;      // grade tuple or case label; empty when pass
    std::string first_mismatch_lhs;  // canonical coefficient dump
    std::string first_mismatch_rhs;
    double elapsed_ms = 0.0;

    void note_mismatch(const std::string& where, const std::string& lhs, const std::string& rhs) {
        if (mismatch_count == 0) {
            first_mismatch = where;
            first_mismatch_lhs = lhs;
            first_mismatch_rhs = rhs;
        }
        ++mismatch_count;
    }
    void finalize() { pass = (mismatch_count == 0); }

    nlohmann::ordered_json to_json(bool with_timing = false) const {
        nlohmann::ordered_json j;
        j["identity"] = identity;
        j["params"] = params;
        j["status"] = pass ? "pass" : "fail";
        j["terms_enumerated"] = terms_enumerated;
        j["mismatch_count"] = mismatch_count;
        if (!pass) {
            j["first_mismatch"] = first_mismatch;
            j["first_mismatch_lhs"] = first_mismatch_lhs;
            j["first_mismatch_rhs"] = first_mismatch_rhs;
        }
        if (with_timing) j["elapsed_ms"] = elapsed_ms;
        return j;
    }

    std::string summary_line() const {
        std::string out = (pass ? "[PASS] " : "[FAIL] ") + identity;
        for (const auto& [k, v] : params) out += " " + k + "=" + v;
        if (!pass)
            out += "  (" + std::to_string(mismatch_count) + " mismatches, first at " +
                   first_mismatch + ")";
        return out;
    }
};

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qcores
