// Copyright 2026 The mjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <map>
#include <string>

#include "mjones/verify.hpp"

int main() {
    auto checks = mjones::run_verify();
    std::map<int, std::string> details;
    for (auto &c : checks) {
        auto &d = details[c.criterion];
        if (!d.empty()) d += "; ";
        d += (c.passed ? "" : "[failed] ") + c.name + ": " + c.detail;
    }
    int failed = 0;
    for (auto [crit, ok] : mjones::criterion_verdicts(checks)) {
        std::printf("criterion %d %s: %s\n", crit, ok ? "PASS" : "FAIL", details[crit].c_str());
        failed += !ok;
    }
    std::printf("%d of %zu criteria failed\n", failed, details.size());
    return failed ? 1 : 0;
}
