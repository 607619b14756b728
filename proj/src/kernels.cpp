#include "permcalc/kernels.hpp"

#include <cstdlib>

namespace permcalc::kernels {

namespace detail {

std::size_t scalar_count_fixed(const std::uint32_t* img, std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    count += (img[i] == static_cast<std::uint32_t>(i));
  return count;
}

std::size_t scalar_count_diff(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += (a[i] != b[i]);
  return count;
}

void scalar_compose_into(std::uint32_t* dst, const std::uint32_t* p,
                         const std::uint32_t* q, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = p[q[i]];
}

}  // namespace detail

namespace {

using CountFixedFn = std::size_t (*)(const std::uint32_t*, std::size_t);
using CountDiffFn = std::size_t (*)(const std::uint32_t*, const std::uint32_t*,
                                    std::size_t);
using ComposeFn = void (*)(std::uint32_t*, const std::uint32_t*,
                           const std::uint32_t*, std::size_t);

bool want_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  if (const char* force = std::getenv("PERMCALC_FORCE_SCALAR");
      force != nullptr && force[0] == '1')
    return false;
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

struct Dispatch {
  CountFixedFn count_fixed = detail::scalar_count_fixed;
  CountDiffFn count_diff = detail::scalar_count_diff;
  ComposeFn compose_into = detail::scalar_compose_into;
  bool avx2 = false;

  Dispatch() {
#if defined(__x86_64__) || defined(_M_X64)
    if (want_avx2()) {
      count_fixed = detail::avx2_count_fixed;
      count_diff = detail::avx2_count_diff;
      compose_into = detail::avx2_compose_into;
      avx2 = true;
    }
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

std::size_t count_fixed(std::span<const std::uint32_t> img) {
  return dispatch().count_fixed(img.data(), img.size());
}

std::size_t count_diff(std::span<const std::uint32_t> a,
                       std::span<const std::uint32_t> b) {
  return dispatch().count_diff(a.data(), b.data(), a.size());
}

void compose_into(std::span<std::uint32_t> dst,
                  std::span<const std::uint32_t> p,
                  std::span<const std::uint32_t> q) {
  dispatch().compose_into(dst.data(), p.data(), q.data(), dst.size());
}

bool dispatch_uses_avx2() { return dispatch().avx2; }

}  // namespace permcalc::kernels
