#pragma once

#include <string>
#include <vector>

#include "skewgb/text.hpp"

namespace skewgb {

/// Exit codes shared by run_command and the binary.
enum ExitCode : int {
    kOk = 0,
    kParseOrValidation = 1,
    kUnsupported = 2,
    kInternal = 3,
};

struct SessionConfig {
    std::string algebra;            // "preset:<name>(<args>)" or a file path
    std::vector<std::string> order; // variable names, most significant first; empty = spec order
    ModuleOrder module_order = ModuleOrder::TOPREV;
    bool basis_reversed = false;    // false: e1..em, true: em..e1
    int rank = 0;                   // 0 = infer from the inputs
    bool machine = false;
};

struct Record {
    std::string kind, name, value;
};

struct Report {
    int exit_code = kOk;
    std::vector<std::string> lines;   // text mode
    std::vector<Record> records;      // machine mode
};

/// Runs reduce/gbasis/member/syzygy over inline vector expressions or files
/// (one expression per line, # comments). Every printed claim is re-checked
/// through the arithmetic engine before the report is returned; a failed
/// check yields exit code 3.
Report run_command(const std::string& command, const SessionConfig& config,
                   const std::vector<std::string>& inputs);

}  // namespace skewgb
