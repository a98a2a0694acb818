#include <iostream>
#include <pthread.h>
#include <vector>

#include "cli.hpp"

namespace {

struct Job {
  const std::vector<std::string>* args;
  int status = 2;
};

void* invoke(void* raw) {
  Job* job = static_cast<Job*>(raw);
  job->status = iplogic::cli::run(*job->args, std::cout, std::cerr);
  return nullptr;
}

}  // namespace

// The proof search and the parser recurse once per connective; a dedicated
// 256 MiB stack keeps formulas nested tens of thousands deep in reach.
int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  Job job{&args};

  pthread_attr_t attr;
  pthread_t worker;
  if (pthread_attr_init(&attr) != 0 ||
      pthread_attr_setstacksize(&attr, 256u * 1024 * 1024) != 0 ||
      pthread_create(&worker, &attr, invoke, &job) != 0) {
    // Fall back to the default stack rather than failing outright.
    return iplogic::cli::run(args, std::cout, std::cerr);
  }
  pthread_join(worker, nullptr);
  pthread_attr_destroy(&attr);
  return job.status;
}
