#include "classlab/config.hpp"

#include <cstdlib>
#include <string>

#include "classlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace classlab {

namespace {

int g_jobs = 0;

std::uint64_t parse_env_number(const char* name, const char* value) {
  std::string text(value);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("environment variable ") + name + " is not a positive integer");
  return std::stoull(text);
}

}  // namespace

Limits& limits() {
  static Limits instance;
  return instance;
}

void load_limits_from_env() {
  if (const char* v = std::getenv("CLASSLAB_ENUM_CAP")) limits().enum_cap = parse_env_number("CLASSLAB_ENUM_CAP", v);
  if (const char* v = std::getenv("CLASSLAB_ISO_CAP")) limits().iso_cap = parse_env_number("CLASSLAB_ISO_CAP", v);
  if (const char* v = std::getenv("CLASSLAB_SUBGROUP_LIMIT"))
    limits().subgroup_limit = parse_env_number("CLASSLAB_SUBGROUP_LIMIT", v);
}

void set_jobs(int jobs) {
  g_jobs = jobs;
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif
}

int jobs() {
#ifdef _OPENMP
  return g_jobs > 0 ? g_jobs : omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace classlab
