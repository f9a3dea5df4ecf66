/* Copyright 2026-present the bitnic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bitnic/kernels.hpp"

#include <cstdlib>
#include <string>

#include "bitnic/error.hpp"

namespace bitnic::kernels {

void match_counts_scalar(const uint64_t*, size_t, const uint64_t*, size_t, uint32_t, uint32_t*);
void match_counts_swar64(const uint64_t*, size_t, const uint64_t*, size_t, uint32_t, uint32_t*);
void match_counts_popcnt(const uint64_t*, size_t, const uint64_t*, size_t, uint32_t, uint32_t*);
#if defined(__x86_64__) || defined(_M_X64)
void match_counts_avx2(const uint64_t*, size_t, const uint64_t*, size_t, uint32_t, uint32_t*);
#endif

namespace {

bool always() { return true; }

#if defined(__x86_64__) || defined(_M_X64)
bool has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

constexpr Kernel kKernels[] = {
#if defined(__x86_64__) || defined(_M_X64)
    {"avx2", has_avx2, match_counts_avx2},
#endif
    {"popcnt", always, match_counts_popcnt},
    {"swar64", always, match_counts_swar64},
    {"scalar", always, match_counts_scalar},
};

const Kernel& resolve_active() {
  if (const char* forced = std::getenv("BITNIC_KERNEL"); forced != nullptr && *forced != '\0') {
    const Kernel* k = find_kernel(forced);
    if (k == nullptr)
      throw ConfigError(std::string("BITNIC_KERNEL: unknown kernel '") + forced + "'");
    if (!k->available())
      throw ConfigError(std::string("BITNIC_KERNEL: kernel '") + forced +
                        "' not available on this CPU");
    return *k;
  }
  for (const Kernel& k : kKernels) {
    if (k.available()) return k;
  }
  return scalar_kernel();  // unreachable; scalar is always available
}

}  // namespace

std::span<const Kernel> all_kernels() { return kKernels; }

const Kernel& scalar_kernel() {
  for (const Kernel& k : kKernels) {
    if (std::string_view(k.name) == "scalar") return k;
  }
  throw InternalError("scalar kernel missing from registry");
}

const Kernel* find_kernel(std::string_view name) {
  for (const Kernel& k : kKernels) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

const Kernel& active_kernel() {
  static const Kernel& active = resolve_active();
  return active;
}

}  // namespace bitnic::kernels
