#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace permcalc::kernels {

// Flat counting/gather loops over 0-based image arrays. These back the
// large-n statistics paths (degrees up to 1e7, single pass); everything
// pointer-chasing (cycle walks) stays scalar elsewhere.
//
// Each kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant. The public entry points dispatch once at first use based
// on CPUID; setting PERMCALC_FORCE_SCALAR=1 in the environment pins the
// scalar path. Equivalence of the variants is enforced by tests.

/// Number of indices i with img[i] == i.
std::size_t count_fixed(std::span<const std::uint32_t> img);

/// Number of indices i with a[i] != b[i]. Sizes must match.
std::size_t count_diff(std::span<const std::uint32_t> a,
                       std::span<const std::uint32_t> b);

/// dst[i] = p[q[i]]. All spans have equal size; dst may not alias p or q.
void compose_into(std::span<std::uint32_t> dst,
                  std::span<const std::uint32_t> p,
                  std::span<const std::uint32_t> q);

/// True when the dispatched variants are the AVX2 ones.
bool dispatch_uses_avx2();

namespace detail {

std::size_t scalar_count_fixed(const std::uint32_t* img, std::size_t n);
std::size_t scalar_count_diff(const std::uint32_t* a, const std::uint32_t* b,
                              std::size_t n);
void scalar_compose_into(std::uint32_t* dst, const std::uint32_t* p,
                         const std::uint32_t* q, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
std::size_t avx2_count_fixed(const std::uint32_t* img, std::size_t n);
std::size_t avx2_count_diff(const std::uint32_t* a, const std::uint32_t* b,
                            std::size_t n);
void avx2_compose_into(std::uint32_t* dst, const std::uint32_t* p,
                       const std::uint32_t* q, std::size_t n);
#endif

}  // namespace detail

}  // namespace permcalc::kernels
