#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "belsf/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = belsf::kDefaultSeed;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    else if (flag == "--jobs") jobs = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));
  }
  int failures = 0;
  for (const auto& c : belsf::verify::criteria()) {
    const auto r = belsf::verify::run(c, seed, jobs);
    std::printf("%s (%.3fs, limit %.0fs)\n", belsf::verify::format_line(r).c_str(), r.seconds, r.limit_seconds);
    if (r.checks_ok && !r.pass()) std::printf("      over time limit\n");
    std::fflush(stdout);
    failures += r.pass() ? 0 : 1;
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
