#pragma once
// Batch driver behind affine_cli. Reports are byte-deterministic: KEY VALUE
// lines, "CHECK <name> PASS|FAIL" lines that decide the exit status, and
// "NOTE" lines for stated forms known to fail literally.

#include <iosfwd>
#include <string>

namespace affine {

struct RunConfig {
    std::string suite = "all";  // marks weyl char bgg twisted-bgg si-window clifford semiregular all
    std::string type = "A1";
    std::string matrixFile;
    std::string lambda = "L0";
    int N = 8;
    int maxlen = 3;
    int horizon = 6;
    int searchBound = 4;
    int n = 3;  // Clifford rank
    std::string algebraFile;
    std::string out;
};

/// Throws std::invalid_argument on a bad config.
void validate(const RunConfig& cfg);

/// Runs the suite and writes the report; returns 0 iff every CHECK passed.
int run(const RunConfig& cfg, std::ostream& os);

}  // namespace affine
