// Copyright 2026 The Walshpulse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walshpulse/records.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <tuple>

namespace walshpulse {

bool record_less(const ExperimentRecord &a, const ExperimentRecord &b) {
    return std::tie(a.experiment, a.n_qubits, a.alpha, a.trotter_order, a.tau_over_n, a.seed, a.metric) <
           std::tie(b.experiment, b.n_qubits, b.alpha, b.trotter_order, b.tau_over_n, b.seed, b.metric);
}

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void write_csv(std::ostream &out, const std::vector<ExperimentRecord> &records) {
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        out << r.experiment << ',' << r.n_qubits << ',' << format_double(r.alpha) << ',' << r.trotter_order << ','
            << format_double(r.tau_over_n) << ',' << r.seed << ',' << r.metric << ',' << format_double(r.value)
            << '\n';
    }
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)> &fn) {
    if (count == 0) {
        return;
    }
    std::size_t n_threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < count; i++) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::mutex mu;
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < n_threads; t++) {
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!first) {
                        first = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : threads) {
        th.join();
    }
    if (first) {
        std::rethrow_exception(first);
    }
}

int default_workers() {
    if (const char *env = std::getenv("WALSHC_WORKERS")) {
        int v = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) {
            return v;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace walshpulse
