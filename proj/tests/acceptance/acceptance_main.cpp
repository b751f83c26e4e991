#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "pluricalc/parallel.hpp"
#include "pluricalc_cli/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"pluricalc acceptance suite", "pluricalc_acceptance"};
  pluricalc::cli::AcceptOptions o;
  std::vector<int> only;
  app.add_option("--only", only, "Criterion ids")->delimiter(',');
  app.add_option("--seed", o.seed, "Seed");
  app.add_option("--threads", o.threads, "Threads");
  app.add_flag("--mutate", o.mutate, "Perturb fixtures");
  CLI11_PARSE(app, argc, argv);
  o.only = std::set<int>(only.begin(), only.end());
  if (o.threads == 0) o.threads = pluricalc::default_thread_count();

  const auto results = pluricalc::cli::run_acceptance(o);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %02d %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str());
    for (const auto& d : r.details) std::printf("       %s\n", d.c_str());
    failed += r.pass ? 0 : 1;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
